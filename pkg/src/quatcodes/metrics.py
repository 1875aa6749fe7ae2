"""Minimum-weight tables for the Mannheim, Lipschitz and Hurwitz metrics."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

from .algebra import (
    Element,
    Family,
    RingDescriptor,
    canonical_key,
    enumerate_residues,
    raw_key_fn,
)


class MetricKind(str, enum.Enum):
    MANNHEIM = "mannheim"
    LIPSCHITZ = "lipschitz"
    HURWITZ = "hurwitz"

    @classmethod
    def parse(cls, text: str) -> "MetricKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown metric {text!r}; expected one of "
                             f"{', '.join(m.value for m in cls)}") from None


APPLICABLE = {
    MetricKind.MANNHEIM: frozenset({Family.GAUSSIAN}),
    MetricKind.LIPSCHITZ: frozenset({Family.LIPSCHITZ, Family.HURWITZ}),
    MetricKind.HURWITZ: frozenset({Family.HURWITZ}),
}

DEFAULT_METRIC = {
    Family.GAUSSIAN: MetricKind.MANNHEIM,
    Family.LIPSCHITZ: MetricKind.LIPSCHITZ,
    Family.HURWITZ: MetricKind.HURWITZ,
}


def check_applicable(ring: RingDescriptor, metric: MetricKind) -> None:
    if ring.family not in APPLICABLE[metric]:
        raise ValueError(f"{metric.value} metric is not defined on {ring.name}")


def applicable_metrics(ring: RingDescriptor) -> list[MetricKind]:
    return [m for m in MetricKind if ring.family in APPLICABLE[m]]


def representation_weight(metric: MetricKind, x: Element) -> int:
    """Weight of the given representative itself, without reducing modulo anything.

    Hurwitz weight minimises ``sum |c_i|`` over ``x = c0 + c1 e1 + c2 e2 + c3 e3 + c4 w``;
    with doubled coordinates ``d_i = 2 c_i + c4`` that is a one-dimensional search over
    ``c4`` of the parity of ``x``.
    """
    if metric is MetricKind.MANNHEIM:
        return abs(x.a) + abs(x.b)
    d = x.doubled
    if metric is MetricKind.LIPSCHITZ:
        return sum(abs(c) for c in d) // 2
    bound = max(abs(c) for c in d) + 1
    best = None
    for c4 in range(-bound, bound + 1):
        if (c4 - d[0]) % 2:
            continue
        cost = abs(c4) + sum(abs(c - c4) for c in d) // 2
        if best is None or cost < best:
            best = cost
    return best


def signed_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Integer tuples with ``sum |c_i| == total``, in lexicographic order."""
    if length == 1:
        if total == 0:
            yield (0,)
        else:
            yield (-total,)
            yield (total,)
        return
    for head in range(-total, total + 1):
        for tail in signed_compositions(total - abs(head), length - 1):
            yield (head,) + tail


def weight_shell(ring: RingDescriptor, metric: MetricKind, w: int) -> list[tuple[int, ...]]:
    """Raw elements whose representation weight is exactly ``w`` (Hurwitz metric: some
    decomposition of weight ``w``), lexicographic on coordinates."""
    if metric is MetricKind.MANNHEIM:
        return list(signed_compositions(w, 2))
    if metric is MetricKind.LIPSCHITZ:
        cands = [tuple(2 * c for c in x) for x in signed_compositions(w, 4)]
        if ring.family is Family.HURWITZ and w >= 2:
            # odd doubled coordinates with sum |d_i| == 2w
            for x in signed_compositions(2 * w, 4):
                if all(c % 2 for c in x):
                    cands.append(x)
        cands.sort()
        return cands
    # |c4| <= w automatically since every unit of |c4| costs one
    out = []
    seen = set()
    for c in signed_compositions(w, 5):
        c4 = c[4]
        d = (2 * c[0] + c4, 2 * c[1] + c4, 2 * c[2] + c4, 2 * c[3] + c4)
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


@dataclass(frozen=True)
class WeightTable:
    ring: RingDescriptor
    metric: MetricKind
    weights: Mapping[tuple[int, ...], int]
    representatives: Mapping[tuple[int, ...], Element]
    levels: tuple[tuple[Element, ...], ...]
    spectrum: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return sum(self.spectrum)

    @property
    def max_weight(self) -> int:
        return len(self.spectrum) - 1

    def of_weight(self, w: int) -> tuple[Element, ...]:
        """Minimum-weight representatives of the classes of weight exactly ``w``."""
        if w < 0 or w >= len(self.levels):
            return ()
        return self.levels[w]


@lru_cache(maxsize=None)
def build_weight_table(ring: RingDescriptor, metric: MetricKind) -> WeightTable:
    """Assign each residue the first weight shell that reaches it."""
    check_applicable(ring, metric)
    target = enumerate_residues(ring).count
    key = raw_key_fn(ring)
    weights: dict[tuple[int, ...], int] = {}
    reps: dict[tuple[int, ...], Element] = {}
    levels: list[tuple[Element, ...]] = []
    w = 0
    while len(weights) < target:
        if w > 8 * ring.p + 8:
            raise RuntimeError(f"weight shells failed to cover {ring.name}")
        level = []
        for x in weight_shell(ring, metric, w):
            k = key(x)
            if k not in weights:
                weights[k] = w
                el = ring.element(x)
                reps[k] = el
                level.append(el)
        levels.append(tuple(level))
        w += 1
    spectrum = tuple(len(level) for level in levels)
    return WeightTable(
        ring,
        metric,
        MappingProxyType(weights),
        MappingProxyType(reps),
        tuple(levels),
        spectrum,
    )


def weight(table: WeightTable, x: Element) -> int:
    return table.weights[canonical_key(table.ring, x)]


def distance(table: WeightTable, x: Element, y: Element) -> int:
    return weight(table, x - y)


def vector_weight(table: WeightTable, v: Sequence[Element]) -> int:
    return sum(weight(table, x) for x in v)
