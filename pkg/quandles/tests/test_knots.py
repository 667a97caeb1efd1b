from pathlib import Path

from django.test import SimpleTestCase

from quandles.algebra.errors import LinkNotSupportedError, MalformedInputError
from quandles.algebra.finite_group import symmetric_group
from quandles.algebra.finite_quandle import conj_quandle, dihedral_quandle, trivial_quandle
from quandles.algebra.knots import (
    BraidWord,
    CrossingList,
    braid_components,
    braid_presentation,
    coloring_invariant,
    crossing_presentation,
    distinguish,
    mirror,
    parse_braid,
    parse_crossing_list,
)

FIXTURES = Path(__file__).parent / "fixtures"

TREFOIL = parse_braid("strands=2 1 1 1")
UNKNOT = parse_braid("strands=2 1")
FIGURE_EIGHT = parse_braid("strands=3 1 -2 1 -2")
TREFOIL_CROSSINGS = parse_crossing_list((FIXTURES / "trefoil.cross").read_text())
KINK = parse_crossing_list((FIXTURES / "kink.cross").read_text())
R3, R5, R7 = dihedral_quandle(3), dihedral_quandle(5), dihedral_quandle(7)


class BraidParsingTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(TREFOIL, BraidWord(strands=2, letters=(1, 1, 1)))
        self.assertEqual(parse_braid("strands=3").letters, ())

    def test_errors(self):
        for text in ("", "2 1 1", "strands=x 1", "strands=2 a", "strands=2 2", "strands=2 0", "strands=0"):
            with self.subTest(text=text):
                with self.assertRaises(MalformedInputError):
                    parse_braid(text)

    def test_components(self):
        self.assertEqual(braid_components(TREFOIL), 1)
        self.assertEqual(braid_components(FIGURE_EIGHT), 1)
        self.assertEqual(braid_components(parse_braid("strands=2")), 2)
        self.assertEqual(braid_components(parse_braid("strands=2 1 1")), 2)
        self.assertEqual(braid_components(parse_braid("strands=1")), 1)

    def test_links_are_rejected(self):
        for text in ("strands=2", "strands=2 1 -1", "strands=3 1 1 2"):
            with self.subTest(text=text):
                with self.assertRaises(LinkNotSupportedError) as ctx:
                    braid_presentation(parse_braid(text))
                self.assertEqual(ctx.exception.components, 2)

    def test_trefoil_presentation_shape(self):
        P = braid_presentation(TREFOIL)
        self.assertEqual(P.generators.names, ("g1", "g2", "c1", "c2", "c3"))
        self.assertEqual(len(P.relations), 5)


class CrossingParsingTests(SimpleTestCase):
    def test_fixture(self):
        self.assertEqual(len(TREFOIL_CROSSINGS.crossings), 3)
        self.assertEqual(TREFOIL_CROSSINGS.arcs, ("a", "b", "c"))
        self.assertEqual(KINK.crossings[0].sign, "+")

    def test_empty_list_is_the_unknot(self):
        empty = parse_crossing_list("# nothing here\n")
        self.assertEqual(empty.arcs, ("a",))
        self.assertEqual(crossing_presentation(empty).relations, ())

    def test_line_numbers(self):
        cases = {
            "over=a in=b out=c sign=+\nover=a in=b": 2,
            "\nover=a in=a out=a sign=*": 2,
            "over=a in=a out=a sign=+ over=b": 1,
            "over=1a in=a out=a sign=+": 1,
            "over=a under=a out=a sign=+": 1,
        }
        for text, line in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(MalformedInputError) as ctx:
                    parse_crossing_list(text)
                self.assertEqual(ctx.exception.line, line)

    def test_bad_wiring(self):
        doubled_out = "over=a in=a out=b sign=+\nover=a in=b out=b sign=+"
        dangling = "over=a in=a out=b sign=+"
        for text in (doubled_out, dangling):
            with self.subTest(text=text):
                with self.assertRaises(MalformedInputError):
                    crossing_presentation(parse_crossing_list(text))

    def test_two_component_diagram(self):
        two_kinks = "over=a in=a out=a sign=+\nover=b in=b out=b sign=-"
        with self.assertRaises(LinkNotSupportedError) as ctx:
            crossing_presentation(parse_crossing_list(two_kinks))
        self.assertEqual(ctx.exception.components, 2)


class ColoringTests(SimpleTestCase):
    def test_trefoil(self):
        self.assertEqual(coloring_invariant(TREFOIL, R3), (9, True))
        self.assertEqual(coloring_invariant(TREFOIL, R5), (5, False))
        self.assertEqual(coloring_invariant(TREFOIL_CROSSINGS, R3), (9, True))

    def test_unknot_diagrams(self):
        for d in (UNKNOT, KINK, parse_braid("strands=1"), CrossingList()):
            with self.subTest(diagram=d):
                self.assertEqual(coloring_invariant(d, R3), (3, False))

    def test_figure_eight(self):
        self.assertEqual(coloring_invariant(FIGURE_EIGHT, R3).count, 3)
        self.assertEqual(coloring_invariant(FIGURE_EIGHT, R5).count, 25)

    def test_constant_colorings_always_exist(self):
        library = [R3, R5, trivial_quandle(2), conj_quandle(symmetric_group(3))]
        for d in (TREFOIL, FIGURE_EIGHT, TREFOIL_CROSSINGS, KINK):
            for F in library:
                result = coloring_invariant(d, F)
                self.assertGreaterEqual(result.count, F.order)
                self.assertEqual(result.non_constant, result.count > F.order)

    def test_two_encodings_agree(self):
        for F in (R3, R5, R7, conj_quandle(symmetric_group(3))):
            self.assertEqual(coloring_invariant(TREFOIL, F), coloring_invariant(TREFOIL_CROSSINGS, F))

    def test_mirror_keeps_counts(self):
        for d in (TREFOIL, FIGURE_EIGHT, TREFOIL_CROSSINGS):
            for F in (R3, R5):
                self.assertEqual(coloring_invariant(mirror(d), F), coloring_invariant(d, F))

    def test_mirror_is_an_involution(self):
        self.assertEqual(mirror(mirror(TREFOIL)), TREFOIL)
        self.assertEqual(mirror(mirror(TREFOIL_CROSSINGS)), TREFOIL_CROSSINGS)
        self.assertEqual(mirror(TREFOIL).letters, (-1, -1, -1))

    def test_thread_count_does_not_change_counts(self):
        self.assertEqual(coloring_invariant(FIGURE_EIGHT, R5, threads=4), coloring_invariant(FIGURE_EIGHT, R5))


class DistinguishTests(SimpleTestCase):
    def test_trefoil_and_unknot(self):
        found = distinguish(TREFOIL, UNKNOT, [R5, R3])
        self.assertEqual(found.quandle.label, "dihedral:3")
        self.assertEqual(found.counts, (9, 3))

    def test_trefoil_and_figure_eight_by_r5(self):
        found = distinguish(TREFOIL, FIGURE_EIGHT, [trivial_quandle(3), R5])
        self.assertEqual((found.quandle.label, found.counts), ("dihedral:5", (5, 25)))

    def test_trefoil_and_figure_eight_by_r3(self):
        found = distinguish(TREFOIL, FIGURE_EIGHT, [R3])
        self.assertEqual((found.quandle.label, found.counts), ("dihedral:3", (9, 3)))

    def test_two_unknot_braids_are_indistinguishable(self):
        self.assertIsNone(distinguish(UNKNOT, parse_braid("strands=1"), [R3, R5]))

    def test_same_knot_is_indistinguishable(self):
        self.assertIsNone(distinguish(TREFOIL, TREFOIL_CROSSINGS, [R3, R5, R7]))
        self.assertIsNone(distinguish(TREFOIL, UNKNOT, []))
