"""The embedding of Z wr Z into Thompson's group F.

``phi`` sends ``a`` to ``x1 x2 x1^-2`` and ``t`` to ``x0``.  Images of
``a_n = t^n a t^-n`` commute, and the caret count of an image is a simple
function of the wreath normal form.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from . import oracle, thompson, wreath
from .thompson import TreePair, UnsupportedPairing
from .wreath import WreathElement, WreathNormalForm


class OutsidePaperCase(ValueError):
    """The closed form only covers elements with counters on both sides of the origin."""


PHI_A_WORD = "x1 x2 x1^-2"
PHI_A = thompson.evaluate_word(PHI_A_WORD)
PHI_T = thompson.x(0)


def phi_letters(letters) -> TreePair:
    out = thompson.IDENTITY
    for g, k in letters:
        out = thompson.multiply(out, thompson.power(PHI_A if g == "a" else PHI_T, k))
    return out


def phi(w: WreathElement) -> TreePair:
    return phi_letters(wreath.geodesic_letters(w))


def _blocks(nf: WreathNormalForm) -> int:
    return sum(abs(e) + 1 for _, e in nf.positive) + sum(abs(f) + 1 for _, f in nf.negative)


def _require_both_sides(nf: WreathNormalForm) -> None:
    if not nf.positive or not nf.negative:
        raise OutsidePaperCase(
            f"closed form needs counters at both a non-negative and a negative position: {nf}"
        )


def predicted_caret_count(nf: WreathNormalForm) -> int:
    """Caret count of ``phi(w)`` by the two-sided closed form.

    ``i_k + j_l + 2 + sum(|e|+1) + sum(|f|+1)``, plus ``m - j_l`` when
    ``m > j_l`` and ``-m - i_k`` when ``-m > i_k``.
    """
    _require_both_sides(nf)
    n = nf.i_k + nf.j_l + 2 + _blocks(nf)
    m = nf.cursor
    if m > nf.j_l:
        n += m - nf.j_l
    if m < 0 and -m > nf.i_k:
        n += -m - nf.i_k
    return n


def exact_caret_count(nf: WreathNormalForm) -> int:
    """Caret count of ``phi(w)`` for every element, fitted to computed images.

    Same base term as :func:`predicted_caret_count`; moving the cursor right
    costs a caret per step beyond ``i_k`` and moving it left a caret per step
    beyond ``j_l + 1``.  One-sided elements use ``i_k = 0`` when no counter
    sits at a non-negative position, and ``j_l = 0`` (or ``-1`` if the origin
    counter is also zero) when none sits at a negative one.
    """
    m = nf.cursor
    if not nf.positive and not nf.negative:
        return abs(m) + 1 if m else 0
    i_k = nf.i_k
    if nf.negative:
        j_l = nf.j_l
    else:
        j_l = 0 if nf.positive[0][0] == 0 else -1
    n = i_k + j_l + 2 + _blocks(nf)
    if m > 0:
        n += max(0, m - i_k)
    elif m < 0:
        n += max(0, -m - j_l - 1)
    return n


def predicted_weight(nf: WreathNormalForm) -> int:
    """Closed-form total of the caret-pair weights of ``phi(w)`` when ``m = 0``."""
    _require_both_sides(nf)
    if nf.cursor != 0:
        raise OutsidePaperCase(f"weight formula is stated for cursor 0 only: {nf}")
    k, l = len(nf.positive), len(nf.negative)
    mass_pos = sum(abs(e) for _, e in nf.positive)
    mass_neg = sum(abs(f) for _, f in nf.negative)
    return 2 * nf.j_l + 2 * nf.i_k + 2 * k + 2 * l + 4 * mass_pos + 4 * mass_neg - 2


# --------------------------------------------- two-sided test family

def _sides(positions: Sequence[int], max_exp: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    for k in range(1, len(positions) + 1):
        for idx in combinations(positions, k):
            for es in product(exps, repeat=k):
                yield tuple(zip(idx, es))


def two_sided_family(max_index: int = 3, max_exp: int = 2, max_cursor: int = 4) -> Iterator[Tuple[WreathNormalForm, TreePair]]:
    """Every normal form with ``k, l >= 1``, indices at most ``max_index``,
    nonzero exponents of size at most ``max_exp`` and ``|m| <= max_cursor``,
    paired with its image under ``phi``.

    Images are assembled from cached images of the two halves and of ``x0^m``.
    """
    cursors = range(-max_cursor, max_cursor + 1)
    t_imgs = {m: thompson.power(PHI_T, m) for m in cursors}
    negs = [(n, phi(WreathElement.make([(-j, f) for j, f in n], 0)))
            for n in _sides(range(1, max_index + 1), max_exp)]
    for pos in _sides(range(0, max_index + 1), max_exp):
        p_img = phi(WreathElement.make(pos, 0))
        for neg, n_img in negs:
            base = thompson.multiply(p_img, n_img)
            for m in cursors:
                yield WreathNormalForm("rf", pos, neg, m), thompson.multiply(base, t_imgs[m])


# ------------------------------------------------------------ reporting

@dataclass
class DistortionRecord:
    element: str
    len_H: int
    carets: int
    carets_predicted: Optional[int]
    carets_exact: int
    len_F: int | oracle.Unknown
    weight: Optional[int]

    @property
    def sandwich_ok(self) -> Optional[bool]:
        if isinstance(self.len_F, oracle.Unknown):
            # a search that reached 4 * len_H without meeting phi(w) settles the upper bound
            return False if self.len_F.radius >= 4 * self.len_H else None
        return self.len_H - 2 <= self.len_F <= 4 * self.len_H

    def row(self) -> dict:
        d = asdict(self)
        d["len_F"] = str(self.len_F) if isinstance(self.len_F, oracle.Unknown) else self.len_F
        d["sandwich_ok"] = self.sandwich_ok
        return d


COLUMNS = ["element", "len_H", "carets", "carets_predicted", "carets_exact", "len_F", "weight", "sandwich_ok"]


class ReportIncomplete(RuntimeError):
    def __init__(self, message: str, records: List[DistortionRecord]):
        super().__init__(message)
        self.records = records


def wreath_ball_elements(max_len: int) -> List[WreathElement]:
    b = oracle.ball(wreath.cayley_group(), max_len, keep_elements=True)
    return list(b.elements.values())


def distortion_report(max_len: int, bfs_radius: int, limit: int = oracle.DEFAULT_LIMIT, workers: int = 1) -> List[DistortionRecord]:
    """One record per element of length at most ``max_len``, ordered by (len_H, element).

    ``len_F`` comes from a breadth-first search in F; elements further than
    ``bfs_radius`` get ``Unknown``.
    """
    elements = wreath_ball_elements(max_len)
    images = [phi(w) for w in elements]
    partial = None
    try:
        lens = oracle.distances(thompson.cayley_group(), images, bfs_radius, limit=limit, workers=workers)
    except oracle.LimitExceeded as exc:
        partial = exc
        done = exc.partial
        lens = [done.distances.get(thompson._key(p), oracle.Unknown(done.radius)) for p in images]
    records = []
    for w, p, d in zip(elements, images, lens):
        nf = wreath.normal_form(w)
        try:
            pred = predicted_caret_count(nf)
        except OutsidePaperCase:
            pred = None
        try:
            weight = thompson.fordham_weight(p)
        except UnsupportedPairing:
            weight = None
        records.append(DistortionRecord(
            str(nf) or "1", wreath.word_length(w), thompson.caret_count(p), pred, exact_caret_count(nf), d, weight,
        ))
    records.sort(key=lambda r: (r.len_H, r.element))
    if partial is not None:
        raise ReportIncomplete(str(partial), records)
    return records


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def records_csv(records: Sequence[DistortionRecord]) -> Iterator[str]:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    yield buf.getvalue()
    for r in records:
        buf.seek(0)
        buf.truncate()
        row = r.row()
        w.writerow([_cell(row[c]) for c in COLUMNS])
        yield buf.getvalue()


def records_json(records: Sequence[DistortionRecord]) -> str:
    return json.dumps([{c: r.row()[c] for c in COLUMNS} for r in records], indent=1)
