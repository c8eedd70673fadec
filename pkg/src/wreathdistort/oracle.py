"""Breadth-first Cayley-ball engine.

Every exact group in the package exposes an identity, a finite symmetric
generating set and a canonical hashable key.  :func:`ball` explores the
Cayley graph level by level and records exact word lengths; the other
modules use it as ground truth for their closed-form length formulas.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

DEFAULT_LIMIT = 50_000_000


@dataclass(frozen=True)
class CayleyGroup:
    """A group presented for breadth-first search.

    ``step(element, generator)`` right-multiplies by one generator;
    ``key`` must be injective on group elements.  Keep ``step`` and ``key``
    module-level functions so the group pickles for worker processes.
    """

    name: str
    identity: Any
    generators: Tuple[Tuple[str, Any], ...]
    step: Callable[[Any, Any], Any]
    key: Callable[[Any], Hashable]
    label: Callable[[Any], str] = str

    def shuffled(self, order: Sequence[int]) -> "CayleyGroup":
        gens = tuple(self.generators[i] for i in order)
        return CayleyGroup(self.name, self.identity, gens, self.step, self.key, self.label)


@dataclass
class Ball:
    radius: int
    distances: Dict[Hashable, int]
    sphere_sizes: List[int]
    elements: Dict[Hashable, Any] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, k: Hashable) -> bool:
        return k in self.distances


@dataclass(frozen=True)
class Unknown:
    """Distance exceeds the searched radius."""

    radius: int

    def __str__(self) -> str:
        return f">{self.radius}"


class LimitExceeded(RuntimeError):
    def __init__(self, message: str, partial: Ball):
        super().__init__(message)
        self.partial = partial


def _expand(group: CayleyGroup, frontier: Sequence[Any]) -> List[List[Tuple[Hashable, Any]]]:
    out = []
    for g in frontier:
        out.append([(group.key(h), h) for h in (group.step(g, s) for _, s in group.generators)])
    return out


def _expand_chunk(args):
    group, chunk = args
    return _expand(group, chunk)


def _levels(group: CayleyGroup, radius: int, limit: int, workers: int, keep: bool) -> Iterator[Tuple[Ball, List[Any]]]:
    """Yield the ball after each completed level together with the new sphere."""
    idk = group.key(group.identity)
    distances = {idk: 0}
    elements = {idk: group.identity} if keep else {}
    sizes = [1]
    frontier = [group.identity]
    b = Ball(0, distances, sizes, elements)
    yield b, frontier
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for d in range(1, radius + 1):
            if pool is None:
                expanded = _expand(group, frontier)
            else:
                n = max(1, len(frontier) // (4 * workers))
                chunks = [frontier[i:i + n] for i in range(0, len(frontier), n)]
                expanded = [row for part in pool.map(_expand_chunk, [(group, c) for c in chunks]) for row in part]
            nxt = []
            # merge in frontier order so the result is independent of workers
            for row in expanded:
                for k, h in row:
                    if k not in distances:
                        distances[k] = d
                        if keep:
                            elements[k] = h
                        nxt.append(h)
                        if len(distances) > limit:
                            # drop the unfinished level so the partial ball is exact
                            for h2 in nxt:
                                k2 = group.key(h2)
                                del distances[k2]
                                elements.pop(k2, None)
                            b.radius = d - 1
                            raise LimitExceeded(
                                f"ball of {group.name} exceeded {limit} elements at radius {d}", b
                            )
            sizes.append(len(nxt))
            frontier = nxt
            b.radius = d
            yield b, frontier
    finally:
        if pool is not None:
            pool.shutdown()


def ball(group: CayleyGroup, radius: int, limit: int = DEFAULT_LIMIT, workers: int = 1, keep_elements: bool = False) -> Ball:
    """Exact word lengths for every element within ``radius`` of the identity.

    Raises :class:`LimitExceeded` (carrying the last complete level) when the
    number of stored elements passes ``limit``.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    b = None
    for b, _ in _levels(group, radius, limit, workers, keep_elements):
        pass
    return b


def distances(group: CayleyGroup, targets: Iterable[Any], max_radius: int, limit: int = DEFAULT_LIMIT, workers: int = 1) -> List[int | Unknown]:
    """Word lengths of several targets from one search; stops once all are found."""
    keys = [group.key(t) for t in targets]
    pending = set(keys)
    b = None
    for b, _ in _levels(group, max_radius, limit, workers, False):
        pending -= b.distances.keys() & pending
        if not pending:
            break
    return [b.distances[k] if k in b.distances else Unknown(max_radius) for k in keys]


def distance(group: CayleyGroup, target: Any, max_radius: int, limit: int = DEFAULT_LIMIT) -> int | Unknown:
    return distances(group, [target], max_radius, limit)[0]


def ball_csv(b: Ball, label: Callable[[Hashable], str] = str) -> Iterator[str]:
    """CSV rows ``serialization,distance`` sorted by (distance, serialization), then sphere summary."""
    rows = sorted(((d, label(k)) for k, d in b.distances.items()))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["element", "distance"])
    yield buf.getvalue()
    for d, s in rows:
        buf.seek(0)
        buf.truncate()
        w.writerow([s, d])
        yield buf.getvalue()
    for r, n in enumerate(b.sphere_sizes):
        yield f"# sphere {r}: {n}\n"
