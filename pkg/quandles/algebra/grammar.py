"""
Text syntax for words, free-quandle elements and quandle terms.

    word     `a b^-1 a`   (empty or `1` is the identity)
    element  `a ^ b a^-1` (bare `a` is a^1)
    term     `((x * y) / z)`, fully parenthesized; `/` is *^{-1}
"""

from typing import List, Tuple

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from .errors import QuandleToolkitError, TermSyntaxError
from .free_group import GeneratorSet, GroupWord, letters_from_pairs
from .terms import Leaf, Node, Op, QuandleTerm

GRAMMAR = r"""
    term: NAME                  -> leaf
        | "(" term OP term ")"  -> node

    word: IDENTITY              -> identity_word
        | letter*               -> letters
    letter: NAME INVERSE?

    element: NAME (CARET word)?

    OP: "*" | "/"
    IDENTITY: "1"
    INVERSE: "^-1"
    CARET: "^"
    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""

_parser = Lark(GRAMMAR, start=["term", "word", "element"], parser="lalr", propagate_positions=True)

RawLetters = List[Tuple[str, int]]


class _Raw(Transformer):
    """Turns parse trees into plain names; generator resolution happens afterwards."""

    def identity_word(self, _):
        return []

    def letters(self, items):
        return list(items)

    def letter(self, items):
        name = items[0]
        return (name, -1 if len(items) > 1 else 1)

    def element(self, items):
        word = items[2] if len(items) > 2 else []
        return (items[0], word)


class _TermBuilder(Transformer):
    def __init__(self, gens: GeneratorSet):
        super().__init__()
        self.gens = gens

    def leaf(self, items):
        return Leaf(_resolve(self.gens, items[0]))

    def node(self, items):
        left, op, right = items
        return Node(Op(str(op)), left, right)


def _resolve(gens: GeneratorSet, token: Token) -> int:
    if str(token) not in gens.names:
        raise TermSyntaxError(f"unknown generator {str(token)!r}", token.line, token.column)
    return gens.index(str(token))


def _parse(text: str, start: str):
    try:
        return _parser.parse(text, start=start)
    except UnexpectedEOF as e:
        raise TermSyntaxError(f"unexpected end of {start} text; expected one of {sorted(e.expected)}") from None
    except UnexpectedToken as e:
        raise TermSyntaxError(
            f"unexpected {e.token!r} in {start}; expected one of {sorted(e.expected)}", e.line, e.column
        ) from None
    except UnexpectedCharacters as e:
        raise TermSyntaxError(f"unexpected character {text[e.pos_in_stream]!r} in {start}", e.line, e.column) from None
    except UnexpectedInput as e:
        raise TermSyntaxError(f"cannot parse {start}: {e}", e.line, e.column) from None


def _transform(transformer: Transformer, tree):
    try:
        return transformer.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, QuandleToolkitError):
            raise e.orig_exc from None
        raise


def names_in(text: str, start: str) -> List[str]:
    """Generator names in order of first appearance."""
    seen: List[str] = []
    for token in _parse(text, start).scan_values(lambda v: isinstance(v, Token) and v.type == "NAME"):
        if str(token) not in seen:
            seen.append(str(token))
    return seen


def _check_names(gens: GeneratorSet, tree):
    for token in tree.scan_values(lambda v: isinstance(v, Token) and v.type == "NAME"):
        _resolve(gens, token)


def parse_word(text: str, gens: GeneratorSet) -> GroupWord:
    tree = _parse(text, "word")
    _check_names(gens, tree)
    return letters_from_pairs(_transform(_Raw(), tree), gens)


def parse_element_parts(text: str, gens: GeneratorSet) -> Tuple[int, GroupWord]:
    """The (generator, word) pair of `a ^ w` text, with w not yet normalized."""
    tree = _parse(text, "element")
    _check_names(gens, tree)
    name, pairs = _transform(_Raw(), tree)
    return gens.index(str(name)), letters_from_pairs(pairs, gens)


def parse_term(text: str, gens: GeneratorSet) -> QuandleTerm:
    return _transform(_TermBuilder(gens), _parse(text, "term"))
