"""Thompson's group F as reduced tree pair diagrams.

A binary tree is ``None`` (a leaf) or a pair ``(left, right)`` (a caret).
Nested tuples are hashable and, for reduced diagrams, canonical, so they
double as keys for breadth-first search.

An element is a pair ``(neg, pos)`` of trees with the same number of
leaves.  For the product ``p * q`` both factors are refined until
``p.neg == q.pos`` and the result is ``(q.neg, p.pos)``.  Under this
convention ``x0`` has the right vine as negative tree and the left vine as
positive tree, and ``x_n^{x_i} = x_{n+1}`` for ``i < n`` with
``g^h = h^-1 g h``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .words import WordParseError, format_word, parse_f_word

Tree = Optional[tuple]
LEAF: Tree = None


class UnsupportedPairing(ValueError):
    pass


# ---------------------------------------------------------------- trees

def n_leaves(t: Tree) -> int:
    if t is None:
        return 1
    return n_leaves(t[0]) + n_leaves(t[1])


def n_carets(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + n_carets(t[0]) + n_carets(t[1])


def tree_str(t: Tree) -> str:
    """Parenthesised form: ``.`` for a leaf, ``(LR)`` for a caret."""
    if t is None:
        return "."
    return "(" + tree_str(t[0]) + tree_str(t[1]) + ")"


def _bits(t: Tree, out: list) -> None:
    if t is None:
        out.append("0")
    else:
        out.append("1")
        _bits(t[0], out)
        _bits(t[1], out)


def tree_code(*trees: Tree) -> int:
    """Preorder caret/leaf bits of the trees, concatenated, behind a sentinel 1.

    Preorder codes are prefix-free, so the code of a pair is injective.
    """
    out = ["1"]
    for t in trees:
        _bits(t, out)
    return int("".join(out), 2)


def decode_trees(code: int) -> List[Tree]:
    bits = bin(code)[3:]
    pos = 0

    def node() -> Tree:
        nonlocal pos
        b = bits[pos]
        pos += 1
        if b == "0":
            return None
        left = node()
        return (left, node())

    out = []
    while pos < len(bits):
        out.append(node())
    return out


def parse_tree(s: str) -> Tree:
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"truncated tree string {s!r}")
        ch = s[pos]
        pos += 1
        if ch == ".":
            return None
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} in tree string {s!r}")
        left = node()
        right = node()
        if pos >= len(s) or s[pos] != ")":
            raise ValueError(f"expected ')' in tree string {s!r}")
        pos += 1
        return (left, right)

    t = node()
    if pos != len(s):
        raise ValueError(f"trailing characters in tree string {s!r}")
    return t


def right_vine(k: int) -> Tree:
    t = None
    for _ in range(k):
        t = (None, t)
    return t


def left_vine(k: int) -> Tree:
    t = None
    for _ in range(k):
        t = (t, None)
    return t


def union(a: Tree, b: Tree) -> Tree:
    """Smallest tree containing both, viewing trees as rooted subtrees of the infinite binary tree."""
    if a is None:
        return b
    if b is None:
        return a
    return (union(a[0], b[0]), union(a[1], b[1]))


def remainders(small: Tree, big: Tree, out: list) -> list:
    """Subtrees of ``big`` hanging below each leaf of ``small`` (which must be contained in ``big``)."""
    if small is None:
        out.append(big)
    else:
        remainders(small[0], big[0], out)
        remainders(small[1], big[1], out)
    return out


def graft(t: Tree, subs: Sequence[Tree]) -> Tree:
    """Replace the leaves of ``t`` left to right by ``subs``."""
    it = iter(subs)

    def go(n: Tree) -> Tree:
        if n is None:
            return next(it)
        return (go(n[0]), go(n[1]))

    return go(t)


def _exposed(t: Tree) -> List[int]:
    """Left leaf index of every caret whose two children are leaves."""
    out = []

    def go(n: Tree, first: int) -> int:
        if n is None:
            return 1
        if n[0] is None and n[1] is None:
            out.append(first)
            return 2
        k = go(n[0], first)
        return k + go(n[1], first + k)

    go(t, 0)
    return out


def _collapse(t: Tree, targets: set) -> Tree:
    """Replace exposed carets whose left leaf index is in ``targets`` by leaves."""

    def go(n: Tree, first: int) -> Tuple[Tree, int]:
        if n is None:
            return None, 1
        if n[0] is None and n[1] is None:
            return (None if first in targets else n), 2
        left, k = go(n[0], first)
        right, j = go(n[1], first + k)
        return (left, right), k + j

    return go(t, 0)[0]


# ------------------------------------------------------------ tree pairs

@dataclass(frozen=True)
class TreePair:
    neg: Tree = None
    pos: Tree = None

    def __post_init__(self):
        if n_leaves(self.neg) != n_leaves(self.pos):
            raise ValueError("trees of a pair must have the same number of leaves")

    def __mul__(self, other: "TreePair") -> "TreePair":
        return multiply(self, other)

    def __invert__(self) -> "TreePair":
        return inverse(self)

    def __pow__(self, k: int) -> "TreePair":
        return power(self, k)

    def key(self) -> tuple:
        return (self.neg, self.pos)

    def to_json(self) -> dict:
        return {"neg": tree_str(self.neg), "pos": tree_str(self.pos)}

    @classmethod
    def from_json(cls, obj: dict) -> "TreePair":
        return cls(parse_tree(obj["neg"]), parse_tree(obj["pos"]))

    def __str__(self) -> str:
        return str(tree_pair_to_normal_form(self)) if is_reduced(self) else repr(self)


IDENTITY = TreePair()


def _pair(neg: Tree, pos: Tree) -> TreePair:
    # trusted constructor: callers guarantee equal leaf counts
    p = object.__new__(TreePair)
    object.__setattr__(p, "neg", neg)
    object.__setattr__(p, "pos", pos)
    return p


def is_reduced(p: TreePair) -> bool:
    return not set(_exposed(p.neg)) & set(_exposed(p.pos))


def reduce(p: TreePair) -> TreePair:
    """Cancel common carets until none is left.

    Any removal order gives the same result; all currently removable pairs
    are removed at once.
    """
    if n_leaves(p.neg) != n_leaves(p.pos):
        raise ValueError("trees of a pair must have the same number of leaves")
    return _reduce(p.neg, p.pos)


def _reduce(neg: Tree, pos: Tree) -> TreePair:
    while True:
        common = set(_exposed(neg)).intersection(_exposed(pos))
        if not common:
            return _pair(neg, pos)
        neg, pos = _collapse(neg, common), _collapse(pos, common)


def expand_leaf(p: TreePair, i: int) -> TreePair:
    """Hang a caret under leaf ``i`` of both trees (same element, unreduced)."""
    n = n_leaves(p.neg)
    subs = [((None, None) if k == i else None) for k in range(n)]
    return TreePair(graft(p.neg, subs), graft(p.pos, subs))


def multiply(p: TreePair, q: TreePair) -> TreePair:
    u = union(p.neg, q.pos)
    neg = graft(q.neg, remainders(q.pos, u, []))
    pos = graft(p.pos, remainders(p.neg, u, []))
    return _reduce(neg, pos)


def inverse(p: TreePair) -> TreePair:
    return _pair(p.pos, p.neg)


def power(p: TreePair, k: int) -> TreePair:
    if k < 0:
        p, k = inverse(p), -k
    out = IDENTITY
    for _ in range(k):
        out = multiply(out, p)
    return out


def conjugate(g: TreePair, h: TreePair) -> TreePair:
    """``g^h = h^-1 g h``."""
    return multiply(multiply(inverse(h), g), h)


@lru_cache(maxsize=None)
def x(n: int) -> TreePair:
    """Reduced diagram of the generator ``x_n``, built directly."""
    if n < 0:
        raise ValueError("generator index must be non-negative")
    # right spine of n+1 carets whose last spine caret has a caret as left child
    pos: Tree = ((None, None), None)
    for _ in range(n):
        pos = (None, pos)
    return TreePair(right_vine(n + 2), pos)


def generator_pair(g: str) -> TreePair:
    """Diagram of ``x0``, ``x1`` or an inverse (``X0``, ``X1`` or ``x0^-1``)."""
    name = g.strip()
    inv = False
    if name.endswith("^-1"):
        name, inv = name[:-3], True
    if name in ("X0", "X1"):
        name, inv = name.lower(), not inv
    if name not in ("x0", "x1"):
        raise ValueError(f"unknown generator {g!r}")
    p = x(int(name[1]))
    return inverse(p) if inv else p


def evaluate_letters(letters: Iterable[Tuple[int, int]]) -> TreePair:
    out = IDENTITY
    for i, k in letters:
        out = multiply(out, power(x(i), k))
    return out


def evaluate_word(word: str) -> TreePair:
    return evaluate_letters(parse_f_word(word))


def caret_count(p: TreePair) -> int:
    return n_carets(p.neg)


# ---------------------------------------------------- normal forms

def leaf_exponents(t: Tree) -> List[int]:
    """Per-leaf length of the ascending left-edge chain that stays off the right side."""
    out: List[int] = []

    def go(n: Tree, up: int, on_right: bool) -> None:
        if n is None:
            out.append(up)
            return
        go(n[0], 0 if on_right else up + 1, False)
        go(n[1], 0, on_right)

    go(t, 0, True)
    return out


@dataclass(frozen=True)
class FNormalForm:
    """``x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1}``.

    Both parts are stored as ``(index, positive exponent)`` with strictly
    increasing indices; the negative part is applied inverted in descending
    index order.
    """

    positive: Tuple[Tuple[int, int], ...] = ()
    negative: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for part in (self.positive, self.negative):
            idx = [i for i, _ in part]
            if any(i < 0 for i in idx) or any(e <= 0 for _, e in part):
                raise ValueError(f"malformed normal form {part!r}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"normal form indices must increase: {part!r}")

    def letters(self) -> List[Tuple[int, int]]:
        return list(self.positive) + [(i, -e) for i, e in reversed(self.negative)]

    def __str__(self) -> str:
        return format_word(self.letters(), prefix="x")

    @classmethod
    def parse(cls, text: str) -> "FNormalForm":
        letters = parse_f_word(text)
        pos = [(i, k) for i, k in letters if k > 0]
        neg = [(i, -k) for i, k in letters if k < 0]
        if letters != pos + [(i, -e) for i, e in neg]:
            raise WordParseError(f"not a normal form (positive letters must precede negative ones): {text!r}")
        try:
            return cls(tuple(pos), tuple(reversed(neg)))
        except ValueError as exc:
            raise WordParseError(str(exc)) from None


def _from_exponents(exps: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, e) for i, e in enumerate(exps) if e)


def tree_pair_to_normal_form(p: TreePair) -> FNormalForm:
    return FNormalForm(_from_exponents(leaf_exponents(p.pos)), _from_exponents(leaf_exponents(p.neg)))


def normal_form_to_tree_pair(nf: FNormalForm) -> TreePair:
    return evaluate_letters(nf.letters())


# ---------------------------------------------------- caret classes

class CaretType(enum.Enum):
    L0 = "L0"
    LL = "LL"
    I0 = "I0"
    IR = "IR"
    R0 = "R0"
    RStar = "R*"

    def __str__(self) -> str:
        return self.value


def caret_types(t: Tree) -> List[CaretType]:
    """Type of every caret of ``t`` in infix order."""
    out: List[CaretType] = []
    total = n_carets(t)

    def go(n: Tree, side: str) -> None:
        if n is None:
            return
        go(n[0], "left" if side in ("root", "left") else "interior")
        k = len(out)
        if side in ("root", "left"):
            out.append(CaretType.L0 if k == 0 else CaretType.LL)
        elif side == "right":
            out.append(CaretType.R0 if k == total - 1 else CaretType.RStar)
        else:
            out.append(CaretType.I0 if n[1] is None else CaretType.IR)
        go(n[1], "right" if side in ("root", "right") else "interior")

    go(t, "root")
    return out


def classify_carets(p: TreePair) -> List[Tuple[CaretType, CaretType]]:
    """``(negative type, positive type)`` for the k-th caret of each tree."""
    return list(zip(caret_types(p.neg), caret_types(p.pos)))


_T = CaretType
PAIRING_WEIGHTS = {
    (_T.L0, _T.L0): 0,
    (_T.LL, _T.LL): 2,
    (_T.R0, _T.R0): 0,
    (_T.RStar, _T.RStar): 2,
    (_T.I0, _T.I0): 2,
    (_T.I0, _T.IR): 4,
    (_T.IR, _T.I0): 4,
}


def pairing_weight(neg: CaretType, pos: CaretType) -> int:
    try:
        return PAIRING_WEIGHTS[(neg, pos)]
    except KeyError:
        raise UnsupportedPairing(f"no weight recorded for pairing ({neg}, {pos})") from None


def fordham_weight(p: TreePair) -> int:
    return sum(pairing_weight(a, b) for a, b in classify_carets(p))


# ------------------------------------------------------ search support

def _step(p: TreePair, g: TreePair) -> TreePair:
    return multiply(p, g)


def _key(p: TreePair) -> int:
    return tree_code(p.neg, p.pos)


def _label(k: int) -> str:
    neg, pos = decode_trees(k)
    return tree_str(neg) + "|" + tree_str(pos)


def cayley_group():
    from .oracle import CayleyGroup

    gens = (("x0", x(0)), ("X0", inverse(x(0))), ("x1", x(1)), ("X1", inverse(x(1))))
    return CayleyGroup("F", IDENTITY, gens, _step, _key, _label)
