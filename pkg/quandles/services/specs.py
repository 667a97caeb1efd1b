# quandles/services/specs.py
"""
Textual quandle and group specs used on the command line.

    dihedral:<n>  trivial:<n>  conj:<group>  core:<group>  table:<file>
    product:<spec>+<spec>+...  census:<max_order>

A <group> is a group table file, `cyclic:<n>` or `symmetric:<n>`. A library
is a comma-separated list of quandle specs.
"""

import logging
from typing import List

from ..algebra.census import quandle_census
from ..algebra.errors import MalformedInputError
from ..algebra.finite_group import FiniteGroup, cyclic_group, symmetric_group
from ..algebra.finite_quandle import (
    FiniteQuandle,
    conj_quandle,
    core_quandle,
    dihedral_quandle,
    product_quandle,
    trivial_quandle,
)
from .loaders import load_group, load_quandle

logger = logging.getLogger(__name__)


def _order(kind: str, arg: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise MalformedInputError(f"{kind}: expects an integer, got {arg!r}") from None


def resolve_group(text: str) -> FiniteGroup:
    kind, sep, arg = text.partition(":")
    if sep and kind == "cyclic":
        return cyclic_group(_order(kind, arg))
    if sep and kind == "symmetric":
        return symmetric_group(_order(kind, arg))
    return load_group(text)


def resolve_quandles(spec: str) -> List[FiniteQuandle]:
    """All quandles a spec stands for; only `census:` yields more than one."""
    spec = spec.strip()
    kind, sep, arg = spec.partition(":")
    if not sep or not arg:
        raise MalformedInputError(f"quandle spec {spec!r} must look like <kind>:<argument>")

    if kind == "dihedral":
        return [dihedral_quandle(_order(kind, arg))]
    if kind == "trivial":
        return [trivial_quandle(_order(kind, arg))]
    if kind == "conj":
        return [conj_quandle(resolve_group(arg), spec)]
    if kind == "core":
        return [core_quandle(resolve_group(arg), spec)]
    if kind == "table":
        return [load_quandle(arg, spec)]
    if kind == "product":
        factors = [resolve_quandle(part) for part in arg.split("+")]
        return [product_quandle(factors, spec)]
    if kind == "census":
        return list(quandle_census(_order(kind, arg)))
    raise MalformedInputError(f"unknown quandle spec kind {kind!r}")


def resolve_quandle(spec: str) -> FiniteQuandle:
    quandles = resolve_quandles(spec)
    if len(quandles) != 1:
        raise MalformedInputError(f"spec {spec!r} names {len(quandles)} quandles where one is needed")
    return quandles[0]


def resolve_library(text: str) -> List[FiniteQuandle]:
    """A comma-separated library; the empty string is the empty library."""
    library: List[FiniteQuandle] = []
    for spec in text.split(","):
        if spec.strip():
            library.extend(resolve_quandles(spec))
    logger.debug("resolved library %r to %s quandles", text, len(library))
    return library
