"""
Brute-force reference computations. These never call the backtracking
searches they are compared against.
"""

import itertools

from quandles.algebra.errors import QuandleAxiomError
from quandles.algebra.finite_quandle import verify_quandle
from quandles.algebra.terms import eval_term


def brute_force_homs(P, F):
    """Filter every assignment of the generators."""
    return [
        a
        for a in itertools.product(F.elements, repeat=P.rank)
        if all(eval_term(rel.lhs, F, a) == eval_term(rel.rhs, F, a) for rel in P.relations)
    ]


def brute_force_census_count(n):
    """Count index-fixing column tuples that pass the axiom check."""
    columns = [[p for p in itertools.permutations(range(n)) if p[y] == y] for y in range(n)]
    count = 0
    for cols in itertools.product(*columns):
        rows = [[cols[y][x] for y in range(n)] for x in range(n)]
        try:
            verify_quandle(rows)
        except QuandleAxiomError:
            continue
        count += 1
    return count


def compose(p, q):
    """Function composition p o q on image lists."""
    return [p[q[x]] for x in range(len(q))]
