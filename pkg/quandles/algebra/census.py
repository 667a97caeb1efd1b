"""
Exhaustive enumeration of labelled quandle tables of small order.

Column y of a quandle table is the inner map S_y, a permutation fixing y.
Columns are chosen in index order, and S_z S_y = S_{S_z(y)} S_z is checked
as soon as the three columns involved are known.
"""

import itertools
import logging
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from ..config.settings import CENSUS_MAX_ORDER
from .errors import CensusLimitError, MalformedInputError
from .finite_quandle import FiniteQuandle, verify_quandle

logger = logging.getLogger(__name__)

Column = Tuple[int, ...]


def _columns_fixing(n: int, y: int) -> List[Column]:
    return [p for p in itertools.permutations(range(n)) if p[y] == y]


def _consistent(cols: List[Column], k: int) -> bool:
    """Every distributivity constraint whose last column is column k."""
    for z in range(k + 1):
        S_z = cols[z]
        for y in range(k + 1):
            w = S_z[y]
            if max(y, z, w) != k:
                continue
            S_y, S_w = cols[y], cols[w]
            if any(S_z[S_y[x]] != S_w[S_z[x]] for x in range(len(S_z))):
                return False
    return True


def _tables_of_order(n: int) -> Iterator[Tuple[Column, ...]]:
    candidates = [_columns_fixing(n, y) for y in range(n)]
    cols: List[Column] = []

    def extend(k: int):
        if k == n:
            yield tuple(cols)
            return
        for column in candidates[k]:
            cols.append(column)
            if _consistent(cols, k):
                yield from extend(k + 1)
            cols.pop()

    yield from extend(0)


def quandle_census(max_order: int) -> Iterator[FiniteQuandle]:
    """Every labelled quandle table of order 1..max_order, order by order, in search order."""
    if max_order > CENSUS_MAX_ORDER:
        raise CensusLimitError(f"census order {max_order} exceeds the cap of {CENSUS_MAX_ORDER}")
    if max_order < 1:
        raise MalformedInputError(f"census order must be >= 1, got {max_order}")
    for n in range(1, max_order + 1):
        count = 0
        for cols in _tables_of_order(n):
            count += 1
            rows = [[cols[y][x] for y in range(n)] for x in range(n)]
            yield verify_quandle(rows, f"census:{n}#{count}")
        logger.debug("quandle_census: order %s has %s labelled tables", n, count)


def census_counts(max_order: int) -> Dict[int, int]:
    counts = Counter(Q.order for Q in quandle_census(max_order))
    return {n: counts[n] for n in range(1, max_order + 1)}
