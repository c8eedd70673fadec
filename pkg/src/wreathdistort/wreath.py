"""The wreath product Z wr Z = <a, t>.

An element is a finite configuration of integer counters on Z together with
a cursor.  Reading a word left to right, ``a`` bumps the counter under the
cursor and ``t`` moves the cursor one step to the right.  Under this reading
``a_n = t^n a t^-n`` is the counter generator at position ``n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple

from .words import Letter, format_word, parse_word

GENERATORS = ("a", "A", "t", "T")


@dataclass(frozen=True)
class WreathElement:
    """Counters (sorted ``(position, value)`` pairs, no zeros) and cursor."""

    counters: Tuple[Tuple[int, int], ...] = ()
    cursor: int = 0

    @classmethod
    def make(cls, counters: Mapping[int, int] | Iterable[Tuple[int, int]] = (), cursor: int = 0) -> "WreathElement":
        items = counters.items() if isinstance(counters, Mapping) else counters
        acc: Dict[int, int] = {}
        for n, c in items:
            acc[n] = acc.get(n, 0) + c
        return cls(tuple(sorted((n, c) for n, c in acc.items() if c)), cursor)

    @property
    def counter_map(self) -> Dict[int, int]:
        return dict(self.counters)

    def __getitem__(self, n: int) -> int:
        return self.counter_map.get(n, 0)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return multiply(self, other)

    def __invert__(self) -> "WreathElement":
        return inverse(self)

    def __str__(self) -> str:
        return format_word(normal_form(self).letters())

    def key(self):
        return (self.counters, self.cursor)

    def to_json(self) -> dict:
        return {"counters": {str(n): c for n, c in self.counters}, "cursor": self.cursor}

    @classmethod
    def from_json(cls, obj: dict | str) -> "WreathElement":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.make({int(n): int(c) for n, c in obj["counters"].items()}, int(obj["cursor"]))


IDENTITY = WreathElement()


def gen(n: int = 0) -> WreathElement:
    """The counter generator ``a_n = t^n a t^-n``."""
    return WreathElement(((n, 1),), 0)


def t_power(m: int) -> WreathElement:
    return WreathElement((), m)


def apply_generator(w: WreathElement, g: str) -> WreathElement:
    if g in ("a", "A"):
        step = 1 if g == "a" else -1
        return WreathElement.make(list(w.counters) + [(w.cursor, step)], w.cursor)
    if g == "t":
        return WreathElement(w.counters, w.cursor + 1)
    if g == "T":
        return WreathElement(w.counters, w.cursor - 1)
    raise ValueError(f"unknown generator {g!r}")


def apply_letter(w: WreathElement, letter: Letter) -> WreathElement:
    g, k = letter
    if g == "a":
        return WreathElement.make(list(w.counters) + [(w.cursor, k)], w.cursor)
    if g == "t":
        return WreathElement(w.counters, w.cursor + k)
    raise ValueError(f"unknown generator {g!r}")


def evaluate_letters(letters: Iterable[Letter]) -> WreathElement:
    w = IDENTITY
    for letter in letters:
        w = apply_letter(w, letter)
    return w


def evaluate_word(word: str) -> WreathElement:
    return evaluate_letters(parse_word(word, "at"))


def multiply(u: WreathElement, v: WreathElement) -> WreathElement:
    shifted = [(n + u.cursor, c) for n, c in v.counters]
    return WreathElement.make(list(u.counters) + shifted, u.cursor + v.cursor)


def inverse(w: WreathElement) -> WreathElement:
    return WreathElement(tuple((n - w.cursor, -c) for n, c in w.counters), -w.cursor)


@dataclass(frozen=True)
class WreathNormalForm:
    """Right-first (``rf``) or left-first (``lf``) normal form.

    ``positive`` holds ``(i, e)`` with ``0 <= i_1 < i_2 < ...``; ``negative``
    holds ``(j, f)`` with ``0 < j_1 < j_2 < ...`` standing for ``a_{-j}^f``.
    """

    variant: str
    positive: Tuple[Tuple[int, int], ...]
    negative: Tuple[Tuple[int, int], ...]
    cursor: int

    @property
    def i_k(self) -> int:
        return self.positive[-1][0] if self.positive else 0

    @property
    def j_l(self) -> int:
        return self.negative[-1][0] if self.negative else 0

    def to_element(self) -> WreathElement:
        return WreathElement.make(
            list(self.positive) + [(-j, f) for j, f in self.negative], self.cursor
        )

    def letters(self) -> List[Tuple[str, int]]:
        """The normal form as a word in ``a_n`` symbols and a final ``t^m``."""
        pos = [(f"a_{i}", e) for i, e in self.positive]
        neg = [(f"a_{-j}", f) for j, f in self.negative]
        terms = pos + neg if self.variant == "rf" else neg + pos
        return terms + [("t", self.cursor)]

    def __str__(self) -> str:
        return format_word(self.letters()) or "1"


def normal_form(w: WreathElement, variant: str = "rf") -> WreathNormalForm:
    if variant not in ("rf", "lf"):
        raise ValueError(f"variant must be 'rf' or 'lf', not {variant!r}")
    positive = tuple((n, c) for n, c in w.counters if n >= 0)
    negative = tuple(sorted((-n, c) for n, c in w.counters if n < 0))
    return WreathNormalForm(variant, positive, negative, w.cursor)


def word_length(w: WreathElement) -> int:
    """Word length over ``{a, t}``: counter mass plus the cheaper of the two tours.

    An empty side contributes an extreme index of 0.
    """
    nf = normal_form(w)
    i_k, j_l, m = nf.i_k, nf.j_l, nf.cursor
    mass = sum(abs(c) for _, c in w.counters)
    return mass + min(2 * j_l + i_k + abs(m - i_k), 2 * i_k + j_l + abs(m + j_l))


def geodesic_letters(w: WreathElement) -> List[Letter]:
    # right-first tour when m <= 0, left-first otherwise
    nf = normal_form(w, "rf" if w.cursor <= 0 else "lf")
    stops = [(i, e) for i, e in nf.positive]
    lefts = [(-j, f) for j, f in nf.negative]
    stops = stops + lefts if nf.variant == "rf" else lefts + stops
    out: List[Letter] = []
    pos = 0
    for n, c in stops:
        if n != pos:
            out.append(("t", n - pos))
        out.append(("a", c))
        pos = n
    if nf.cursor != pos:
        out.append(("t", nf.cursor - pos))
    return out


def geodesic_word(w: WreathElement) -> str:
    return format_word(geodesic_letters(w))


FIG1_WORD = "t^2 a^3 t a^-2 t a t^-7 a^2 t"


def _step(w: WreathElement, g: str) -> WreathElement:
    return apply_generator(w, g)


def _key(w: WreathElement) -> tuple:
    return (w.counters, w.cursor)


def _label(k: tuple) -> str:
    return json.dumps(WreathElement(*k).to_json(), separators=(",", ":"))


def cayley_group():
    from .oracle import CayleyGroup

    return CayleyGroup("ZwrZ", IDENTITY, tuple((g, g) for g in GENERATORS), _step, _key, _label)
