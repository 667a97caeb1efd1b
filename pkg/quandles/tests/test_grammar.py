from django.test import SimpleTestCase

from quandles.algebra.errors import TermSyntaxError
from quandles.algebra.free_group import IDENTITY, GeneratorSet
from quandles.algebra.grammar import names_in, parse_element_parts, parse_term, parse_word
from quandles.algebra.terms import Leaf, Node, Op, format_term

XYZ = GeneratorSet.of("x", "y", "z")
AB = GeneratorSet.of("a", "b")


class WordSyntaxTests(SimpleTestCase):
    def test_letters_and_inverses(self):
        self.assertEqual(parse_word("a b^-1 a", AB).letters, ((0, 1), (1, -1), (0, 1)))

    def test_identity_spellings(self):
        self.assertEqual(parse_word("", AB), IDENTITY)
        self.assertEqual(parse_word("1", AB), IDENTITY)
        self.assertEqual(parse_word("a a^-1", AB), IDENTITY)

    def test_unknown_generator_is_positioned(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_word("a c", AB)
        self.assertEqual(ctx.exception.column, 3)


class ElementSyntaxTests(SimpleTestCase):
    def test_bare_generator(self):
        self.assertEqual(parse_element_parts("b", AB), (1, IDENTITY))

    def test_generator_with_word(self):
        gen, word = parse_element_parts("a ^ b a^-1", AB)
        self.assertEqual(gen, 0)
        self.assertEqual(word.letters, ((1, 1), (0, -1)))

    def test_names_in_order_of_appearance(self):
        self.assertEqual(names_in("b ^ a b c", "element"), ["b", "a", "c"])


class TermSyntaxTests(SimpleTestCase):
    def test_leaf(self):
        self.assertEqual(parse_term("x", XYZ), Leaf(0))

    def test_single_node(self):
        self.assertEqual(parse_term("(x * y)", XYZ), Node(Op.STAR, Leaf(0), Leaf(1)))

    def test_nested(self):
        expected = Node(Op.STAR_INV, Node(Op.STAR, Leaf(0), Leaf(1)), Leaf(2))
        self.assertEqual(parse_term("((x * y) / z)", XYZ), expected)

    def test_format_reparses(self):
        t = parse_term("((x*y)/(z * x))", XYZ)
        self.assertEqual(format_term(t, XYZ), "((x * y) / (z * x))")
        self.assertEqual(parse_term(format_term(t, XYZ), XYZ), t)

    def test_errors(self):
        for text in ("(x y)", "(x * y", "x * y", "(x * w)", "()"):
            with self.subTest(text=text):
                with self.assertRaises(TermSyntaxError):
                    parse_term(text, XYZ)

    def test_missing_operator_reports_column(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_term("(x y)", XYZ)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 4))
