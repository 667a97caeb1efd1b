import random

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from quandles.algebra.errors import InvariantError, PreconditionError
from quandles.algebra.free_group import IDENTITY, GeneratorSet, GroupWord, conjugate, format_word, generator, reduce
from quandles.algebra.free_quandle import (
    FreeQuandleElement,
    RackElement,
    embed,
    enveloping_of_free,
    format_element,
    fq_equal,
    free_normal_form,
    free_rack_op,
    image_in_conj,
    normalize,
    parse_element,
    rack_op,
    rack_op_inv,
    separate,
)
from quandles.algebra.grammar import parse_term

AB = GeneratorSet.of("a", "b")
ABC = GeneratorSet.of("a", "b", "c")
a, b = generator(0), generator(1)


def fq(text, gens=AB):
    return parse_element(text, gens)


def random_rack_element(rng, rank=3, max_len=8):
    raw = [(rng.randrange(rank), rng.choice((1, -1))) for _ in range(rng.randrange(max_len + 1))]
    return RackElement(rng.randrange(rank), reduce(raw))


rack_elements = st.builds(
    lambda gen, raw: RackElement(gen, GroupWord(tuple(raw))),
    st.integers(min_value=0, max_value=2),
    st.lists(st.tuples(st.integers(min_value=0, max_value=2), st.sampled_from([1, -1])), max_size=8),
)
quandle_elements = rack_elements.map(normalize)


class NormalFormTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(normalize(RackElement(0, a * b)), FreeQuandleElement(0, b))
        self.assertEqual(normalize(RackElement(0, b * a)), FreeQuandleElement(0, b * a))
        self.assertEqual(normalize(RackElement(0, ~a * b)), FreeQuandleElement(0, b))

    def test_leading_own_generator_is_rejected(self):
        with self.assertRaises(InvariantError):
            FreeQuandleElement(0, a * b)

    @given(rack_elements)
    def test_normalize_is_idempotent_and_embed_invariant(self, e):
        n = normalize(e)
        self.assertEqual(normalize(RackElement(n.gen, n.word)), n)
        self.assertEqual(embed(n), embed(e))

    def test_text_round_trip(self):
        self.assertEqual(format_element(fq("a ^ a b"), AB), "a ^ b")
        self.assertEqual(format_element(fq("b"), AB), "b")
        self.assertEqual(fq("a ^ b a^-1").word, b * ~a)


class OperationTests(SimpleTestCase):
    def test_rack_op_examples(self):
        self.assertEqual(rack_op(fq("a"), fq("b")), fq("a ^ b"))
        self.assertEqual(rack_op(fq("a ^ b"), fq("a")), fq("a ^ b a"))
        self.assertEqual(rack_op_inv(fq("a ^ b"), fq("b")), fq("a"))

    def test_free_rack_keeps_leading_letters(self):
        self.assertEqual(free_rack_op(RackElement(0), RackElement(0)).word, a)

    @given(quandle_elements)
    def test_idempotence(self, x):
        self.assertEqual(rack_op(x, x), x)
        self.assertEqual(rack_op_inv(x, x), x)

    @settings(deadline=None)
    @given(quandle_elements, quandle_elements, quandle_elements)
    def test_axioms_through_embedding(self, x, y, z):
        self.assertEqual(rack_op_inv(rack_op(x, y), y), x)
        self.assertEqual(rack_op(rack_op_inv(x, y), y), x)
        lhs = rack_op(rack_op(x, y), z)
        rhs = rack_op(rack_op(x, z), rack_op(y, z))
        self.assertEqual(embed(lhs), embed(rhs))
        self.assertTrue(fq_equal(lhs, rhs))

    def test_embedding_examples(self):
        self.assertEqual(embed(fq("a")), a)
        self.assertEqual(embed(fq("a ^ b")), ~b * a * b)
        self.assertEqual(embed(RackElement(0, a * b)), ~b * a * b)
        self.assertEqual(format_word(embed(fq("a ^ b")), AB), "b^-1 a b")

    def test_fq_equal_examples(self):
        self.assertTrue(fq_equal(fq("a ^ a b"), fq("a ^ b")))
        self.assertFalse(fq_equal(fq("a"), fq("b")))
        self.assertFalse(fq_equal(fq("a ^ b"), fq("a ^ b^-1")))

    def test_homomorphism_law_on_random_elements(self):
        rng = random.Random(5)
        for _ in range(10_000):
            x, y = random_rack_element(rng), random_rack_element(rng)
            nx, ny = normalize(x), normalize(y)
            self.assertEqual(embed(rack_op(nx, ny)), conjugate(embed(nx), embed(ny)))
            self.assertEqual(fq_equal(nx, ny), embed(nx) == embed(ny))

    def test_free_normal_form_of_terms(self):
        gens = GeneratorSet.of("x", "y")
        self.assertEqual(free_normal_form(parse_term("(x * x)", gens)), FreeQuandleElement(0))
        self.assertEqual(free_normal_form(parse_term("((x * y) / y)", gens)), FreeQuandleElement(0))
        self.assertEqual(free_normal_form(parse_term("(x * y)", gens)), FreeQuandleElement(0, b))


class SeparationTests(SimpleTestCase):
    def test_distinct_generators(self):
        witness = separate(fq("a"), fq("b"))
        self.assertEqual(witness.degree, 3)
        self.assertNotEqual(*witness.images)

    def test_conjugate_versus_generator(self):
        witness = separate(fq("a ^ b"), fq("a"))
        self.assertEqual(witness.degree, 5)
        self.assertNotEqual(*witness.images)

    def test_equal_elements_are_rejected(self):
        with self.assertRaises(PreconditionError):
            separate(fq("a ^ a b"), fq("a ^ b"))

    def test_random_pairs(self):
        rng = random.Random(17)
        done = 0
        while done < 1000:
            e1, e2 = normalize(random_rack_element(rng)), normalize(random_rack_element(rng))
            if fq_equal(e1, e2):
                continue
            witness = separate(e1, e2, rank=3)
            g = reduce((~embed(e2) * embed(e1)).letters)
            self.assertEqual(witness.degree, len(g) + 1)
            self.assertNotEqual(witness.images[0], witness.images[1])
            done += 1

    def test_witness_respects_the_operation(self):
        rng = random.Random(23)
        for _ in range(50):
            e1, e2 = normalize(random_rack_element(rng)), normalize(random_rack_element(rng))
            if fq_equal(e1, e2):
                continue
            witness = separate(e1, e2, rank=3)

            def image(e):
                return image_in_conj(e, witness.assignment, witness.degree)

            for x, y in ((e1, e2), (e2, e1), (rack_op(e1, e2), e1), (e2, rack_op_inv(e1, e2))):
                self.assertEqual(image(rack_op(x, y)), ~image(y) * image(x) * image(y))


class EnvelopingTests(SimpleTestCase):
    def test_free_group_presentation(self):
        self.assertEqual(enveloping_of_free(GeneratorSet.of("a")).format(), "< a | >")
        self.assertEqual(enveloping_of_free(AB).relations, ())

    def test_empty_generating_set(self):
        with self.assertRaises(PreconditionError):
            enveloping_of_free(GeneratorSet(()))

    def test_identity_word_is_the_bare_generator(self):
        self.assertEqual(fq("a ^ 1"), FreeQuandleElement(0, IDENTITY))
        self.assertEqual(fq("c ^ a", ABC).gen, 2)
