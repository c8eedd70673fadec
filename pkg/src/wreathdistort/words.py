"""Parsing and printing of generator words.

Words are whitespace-separated tokens ``g`` or ``g^k`` where ``k`` is a
signed decimal integer.  An uppercase letter denotes the inverse of the
lowercase generator, so ``A^2`` is the same as ``a^-2``.
"""
from __future__ import annotations

import re
from typing import Iterable, List, Sequence, Tuple

Letter = Tuple[str, int]

_TOKEN = re.compile(r"^([A-Za-z])(?:\^([+-]?\d+))?$")
_F_TOKEN = re.compile(r"^x(\d+)(?:\^([+-]?\d+))?$")


class WordParseError(ValueError):
    pass


def parse_word(text: str, alphabet: str) -> List[Letter]:
    """Parse ``text`` into a list of ``(generator, exponent)`` pairs.

    Generators are reported in lowercase; inverses carry negative exponents.
    Zero exponents are dropped.
    """
    out: List[Letter] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise WordParseError(f"malformed token {tok!r}")
        letter, exp = m.group(1), m.group(2)
        k = int(exp) if exp is not None else 1
        if letter.isupper():
            letter, k = letter.lower(), -k
        if letter not in alphabet:
            raise WordParseError(f"unknown generator {tok!r}; expected one of {sorted(alphabet)}")
        if k:
            out.append((letter, k))
    return out


def parse_f_word(text: str) -> List[Tuple[int, int]]:
    """Parse a word in the infinite generators ``x0, x1, ...`` of F."""
    out = []
    for tok in text.split():
        m = _F_TOKEN.match(tok)
        if m is None:
            raise WordParseError(f"malformed token {tok!r}; expected x<i> or x<i>^<k>")
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k:
            out.append((int(m.group(1)), k))
    return out


def format_word(letters: Iterable[Tuple[object, int]], prefix: str = "") -> str:
    parts = []
    for g, k in letters:
        if k == 0:
            continue
        parts.append(f"{prefix}{g}" if k == 1 else f"{prefix}{g}^{k}")
    return " ".join(parts)


def word_letters(letters: Sequence[Tuple[object, int]]) -> int:
    """Number of generator occurrences, i.e. the length of the word."""
    return sum(abs(k) for _, k in letters)


def expand(letters: Iterable[Tuple[str, int]]) -> List[Tuple[str, int]]:
    """Split ``(g, k)`` pairs into unit steps ``(g, +-1)``."""
    out = []
    for g, k in letters:
        step = 1 if k > 0 else -1
        out.extend([(g, step)] * abs(k))
    return out
