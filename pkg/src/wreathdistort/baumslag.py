"""Baumslag's metabelian group G = <a, s, t | [s,t], [a^t, a], a^s = a a^t>.

Elements are affine maps ``p -> x^i (1+x)^j p + q`` of the ring
``Z[x, x^-1, (1+x)^-1]``, stored as ``(q, i, j)``.  The product ``g * h``
is the composite ``g o h``::

    (q1, i1, j1) * (q2, i2, j2) = (q1 + x^i1 (1+x)^j1 q2, i1 + i2, j1 + j2)

with generators ``a = (1, 0, 0)``, ``t = (0, -1, 0)`` and ``s = (0, 0, -1)``.
With ``g^h = h^-1 g h`` this gives ``a^(t^n) = x^n`` and
``a^s = 1 + x``, so all three relators hold, and ``Z wr Z`` sits inside
as the maps with ``j = 0`` and Laurent translation part: counter ``c_n`` at
position ``n`` becomes the coefficient of ``x^n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple

from .laurent import ONE, ZERO, LocalizedLaurentPoly
from .words import Letter, parse_word
from . import wreath
from .wreath import WreathElement


class NotInSubgroupH(ValueError):
    pass


class NegativePower(ValueError):
    pass


@dataclass(frozen=True)
class BaumslagElement:
    q: LocalizedLaurentPoly = ZERO
    i: int = 0
    j: int = 0

    def __mul__(self, other: "BaumslagElement") -> "BaumslagElement":
        return multiply(self, other)

    def __invert__(self) -> "BaumslagElement":
        return inverse(self)

    def __pow__(self, k: int) -> "BaumslagElement":
        return power(self, k)

    def key(self) -> tuple:
        return (self.q.numerator, self.q.d, self.i, self.j)

    def __str__(self) -> str:
        return f"({self.q}, {self.i}, {self.j})"

    def to_json(self) -> dict:
        return {
            "numerator": {str(e): c for e, c in self.q.numerator},
            "denominator_power": self.q.d,
            "t_exponent": self.i,
            "s_exponent": self.j,
        }


IDENTITY = BaumslagElement()
A = BaumslagElement(ONE, 0, 0)
T = BaumslagElement(ZERO, -1, 0)
S = BaumslagElement(ZERO, 0, -1)
GENERATORS = {"a": A, "t": T, "s": S}


def multiply(g: BaumslagElement, h: BaumslagElement) -> BaumslagElement:
    return BaumslagElement(g.q + h.q.times_unit(g.i, g.j), g.i + h.i, g.j + h.j)


def inverse(g: BaumslagElement) -> BaumslagElement:
    return BaumslagElement(-g.q.times_unit(-g.i, -g.j), -g.i, -g.j)


def power(g: BaumslagElement, k: int) -> BaumslagElement:
    if k < 0:
        g, k = inverse(g), -k
    out = IDENTITY
    for _ in range(k):
        out = multiply(out, g)
    return out


def conjugate(g: BaumslagElement, h: BaumslagElement) -> BaumslagElement:
    """``g^h = h^-1 g h``."""
    return multiply(multiply(inverse(h), g), h)


def commutator(g: BaumslagElement, h: BaumslagElement) -> BaumslagElement:
    """``[g, h] = g h g^-1 h^-1``."""
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)))


def a_n(n: int) -> BaumslagElement:
    """``a^(t^n)``, the translation by ``x^n``."""
    return conjugate(A, power(T, n))


def evaluate_letters(letters: Iterable[Letter]) -> BaumslagElement:
    out = IDENTITY
    for g, k in letters:
        out = multiply(out, power(GENERATORS[g], k))
    return out


def evaluate_word(word: str) -> BaumslagElement:
    return evaluate_letters(parse_word(word, "ast"))


def relators() -> dict:
    """The three defining relators, each evaluated in the model."""
    return {
        "[s,t]": commutator(S, T),
        "[a^t,a]": commutator(conjugate(A, T), A),
        "a^s (a a^t)^-1": multiply(conjugate(A, S), inverse(multiply(A, conjugate(A, T)))),
    }


# ------------------------------------------------------- the subgroup H

def from_wreath(w: WreathElement) -> BaumslagElement:
    return BaumslagElement(LocalizedLaurentPoly(dict(w.counters)), w.cursor, 0)


def in_subgroup_h(g: BaumslagElement) -> bool:
    return g.j == 0 and g.q.is_laurent()


def to_wreath(g: BaumslagElement) -> WreathElement:
    if not in_subgroup_h(g):
        raise NotInSubgroupH(f"{g} is not in the subgroup generated by a and t")
    return WreathElement.make(g.q.poly, g.i)


def s_conjugate(w: WreathElement, k: int) -> WreathElement:
    """``w^(s^k)`` computed inside Z wr Z: counters convolved ``k`` times with ``(1, 1)``."""
    if k < 0:
        raise NegativePower("conjugation by a negative power of s leaves Z wr Z")
    counters = w.counter_map
    for _ in range(k):
        nxt = dict(counters)
        for n, c in counters.items():
            nxt[n + 1] = nxt.get(n + 1, 0) + c
        counters = nxt
    return WreathElement.make(counters, w.cursor)


def witness_word(n: int) -> str:
    """A word of length ``2n + 1`` for ``a^(s^n)``."""
    return " ".join(p for p in (f"s^{-n}" if n else "", "a", f"s^{n}" if n else "") if p)


class DistortionRow(NamedTuple):
    n: int
    len_G_witness: int
    len_H: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.len_H, self.len_G_witness)


def distortion_row(n: int) -> DistortionRow:
    """Certified row: the witness evaluates to ``a^(s^n)`` and the H-length is ``2n + 2^n``."""
    conj = s_conjugate(wreath.gen(0), n)
    if evaluate_word(witness_word(n)) != from_wreath(conj):
        raise ArithmeticError(f"witness for n={n} does not evaluate to a^(s^{n})")
    len_h = wreath.word_length(conj)
    if len_h != 2 * n + 2 ** n:
        raise ArithmeticError(f"|a^(s^{n})|_H = {len_h}, expected {2 * n + 2 ** n}")
    return DistortionRow(n, 2 * n + 1, len_h)


def distortion_table(max_n: int = 20) -> List[DistortionRow]:
    return [distortion_row(n) for n in range(max_n + 1)]


# ------------------------------------------------------ search support

def _step(g: BaumslagElement, h: BaumslagElement) -> BaumslagElement:
    return multiply(g, h)


def _key(g: BaumslagElement) -> tuple:
    return g.key()


def cayley_group():
    from .oracle import CayleyGroup

    gens = (("a", A), ("A", inverse(A)), ("s", S), ("S", inverse(S)), ("t", T), ("T", inverse(T)))
    return CayleyGroup("G", IDENTITY, gens, _step, _key)
