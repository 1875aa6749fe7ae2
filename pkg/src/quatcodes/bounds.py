"""Sphere-packing bounds: closed-form sphere sizes, a spectrum-based oracle, and
exact searches for parameters meeting the bound with equality."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import compress
from math import isqrt
from typing import Iterable, Sequence

from .algebra import Family, RingDescriptor, checked, is_prime
from .metrics import MetricKind, build_weight_table, check_applicable


class CosetBase(str, enum.Enum):
    P = "p"
    P_SQUARED = "p^2"
    HURWITZ = "2p^2-1"

    def value_for(self, p: int, paper_mode: bool = False) -> int:
        if self is CosetBase.P:
            return p
        if self is CosetBase.P_SQUARED:
            return p * p
        # enumeration gives 2p^2 classes; the printed count is 2p^2 - 1
        return 2 * p * p - 1 if paper_mode else 2 * p * p


@dataclass(frozen=True)
class BoundCase:
    id: str
    metric: MetricKind
    family: Family
    t: int
    coefficients: tuple[int, int, int]  # a, b, c of a*n^2 + b*n + c
    base: CosetBase
    primes: tuple[int, ...] | None = None  # fixed moduli norms, if any
    p_min: int = 3
    rings: tuple[str, ...] = ()  # moduli the count is stated for
    description: str = ""

    @property
    def formula(self) -> str:
        a, b, c = self.coefficients
        terms = []
        for coef, var in ((a, "n^2"), (b, "n"), (c, "")):
            if coef == 0:
                continue
            mag = abs(coef)
            body = f"{mag}{var}" if (mag != 1 or not var) else var
            sign = "-" if coef < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def admits(self, p: int) -> bool:
        if not is_prime(p) or p == 2:
            return False
        if self.family is Family.GAUSSIAN and p % 4 != 1:
            return False
        if self.primes is not None:
            return p in self.primes
        return p >= self.p_min

    def base_value(self, p: int, paper_mode: bool = False) -> int:
        return self.base.value_for(p, paper_mode)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "metric": self.metric.value,
            "family": self.family.value,
            "t": self.t,
            "formula": self.formula,
            "coset_base": self.base.value,
            "primes": list(self.primes) if self.primes is not None else f">= {self.p_min}",
            "rings": list(self.rings),
            "description": self.description,
        }


def _case(*args, **kwargs) -> BoundCase:
    return BoundCase(*args, **kwargs)


_G, _L, _H = Family.GAUSSIAN, Family.LIPSCHITZ, Family.HURWITZ
_MM, _ML, _MH = MetricKind.MANNHEIM, MetricKind.LIPSCHITZ, MetricKind.HURWITZ
_L_ALL = ("L:1+1e1+1e2", "L:2+1e1", "L:2+1e1+1e2+1e3", "L:3+1e1+1e2", "L:3+2e1")
_H_ALL = tuple("H" + r[1:] for r in _L_ALL)

CASES: dict[str, BoundCase] = {
    c.id: c
    for c in (
        _case("mannheim-t1", _MM, _G, 1, (0, 4, 1), CosetBase.P, p_min=5,
              rings=("G:2+1i", "G:3+2i"), description="single Mannheim errors, p = 1 mod 4"),
        _case("mannheim-t2-p5", _MM, _G, 2, (8, -4, 1), CosetBase.P, primes=(5,),
              rings=("G:2+1i",), description="Mannheim weight <= 2 over G mod 2+i"),
        _case("mannheim-t2", _MM, _G, 2, (8, 0, 1), CosetBase.P, p_min=13,
              rings=("G:3+2i",), description="Mannheim weight <= 2, p >= 13 (printed count)"),
        _case("mannheim-t2-corrected", _MM, _G, 2, (8, 4, 1), CosetBase.P, p_min=13,
              rings=("G:3+2i",),
              description="Mannheim weight <= 2, p >= 13, counting +-1+-i as weight 2"),
        _case("lipschitz-t1", _ML, _L, 1, (0, 8, 1), CosetBase.P_SQUARED,
              rings=_L_ALL, description="single Lipschitz errors over Lipschitz integers"),
        _case("lipschitz-t2-p3", _ML, _L, 2, (32, -24, 1), CosetBase.P_SQUARED, primes=(3,),
              rings=("L:1+1e1+1e2",), description="Lipschitz weight <= 2 mod 1+e1+e2"),
        _case("lipschitz-t2-p5", _ML, _L, 2, (32, -8, 1), CosetBase.P_SQUARED, primes=(5,),
              rings=("L:2+1e1",), description="Lipschitz weight <= 2 mod 2+e1"),
        _case("lipschitz-t2-p7-p11", _ML, _L, 2, (32, 0, 1), CosetBase.P_SQUARED, primes=(7, 11),
              rings=("L:2+1e1+1e2+1e3", "L:3+1e1+1e2"),
              description="Lipschitz weight <= 2 mod 2+e1+e2+e3 and 3+e1+e2"),
        _case("lipschitz-t2", _ML, _L, 2, (32, 8, 1), CosetBase.P_SQUARED, p_min=13,
              rings=("L:3+2e1",), description="Lipschitz weight <= 2, p >= 13"),
        _case("hurwitz-lipschitz-t1", _ML, _H, 1, (0, 8, 1), CosetBase.HURWITZ,
              rings=_H_ALL, description="single Lipschitz errors over Hurwitz integers"),
        _case("hurwitz-lipschitz-t2-p3", _ML, _H, 2, (32, -16, 1), CosetBase.HURWITZ, primes=(3,),
              rings=("H:1+1e1+1e2",), description="Lipschitz weight <= 2, Hurwitz mod 1+e1+e2"),
        _case("hurwitz-lipschitz-t2-p5", _ML, _H, 2, (32, 8, 1), CosetBase.HURWITZ, primes=(5,),
              rings=("H:2+1e1",), description="Lipschitz weight <= 2, Hurwitz mod 2+e1"),
        _case("hurwitz-lipschitz-t2-p7-p11", _ML, _H, 2, (32, 16, 1), CosetBase.HURWITZ,
              primes=(7, 11), rings=("H:2+1e1+1e2+1e3", "H:3+1e1+1e2"),
              description="Lipschitz weight <= 2, Hurwitz mod 2+e1+e2+e3 and 3+e1+e2"),
        _case("hurwitz-lipschitz-t2", _ML, _H, 2, (32, 24, 1), CosetBase.HURWITZ, p_min=13,
              rings=("H:3+2e1",), description="Lipschitz weight <= 2, Hurwitz, p >= 13"),
        _case("hurwitz-t1", _MH, _H, 1, (0, 10, 1), CosetBase.HURWITZ,
              rings=_H_ALL, description="single Hurwitz errors"),
        _case("hurwitz-t2-p3", _MH, _H, 2, (50, -34, 1), CosetBase.HURWITZ, primes=(3,),
              rings=("H:1+1e1+1e2",), description="Hurwitz weight <= 2 mod 1+e1+e2"),
        _case("hurwitz-t2", _MH, _H, 2, (50, 10, 1), CosetBase.HURWITZ, p_min=13,
              rings=("H:3+2e1",), description="Hurwitz weight <= 2, p >= 13"),
    )
}


def get_case(case_id: str) -> BoundCase:
    try:
        return CASES[case_id]
    except KeyError:
        raise KeyError(f"unknown bound case {case_id!r}; known: {', '.join(CASES)}") from None


def sphere_formula(case: BoundCase, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    a, b, c = case.coefficients
    quad = checked(a * checked(n * n)) if a else 0
    return checked(quad + checked(b * n) + c)


def checked_pow(base: int, r: int) -> int:
    acc = 1
    for _ in range(r):
        acc = checked(acc * base)
    return acc


def packing_feasible(base: int, r: int, count: int) -> bool:
    """``base**r >= count`` in checked arithmetic."""
    if base < 2 or r < 1:
        raise ValueError("need base >= 2 and r >= 1")
    return checked_pow(base, r) >= count


def _truncated_power(poly: Sequence[int], n: int, t: int) -> list[int]:
    result = [1] + [0] * t
    base = list(poly[: t + 1]) + [0] * max(0, t + 1 - len(poly))

    def mul(x, y):
        out = [0] * (t + 1)
        for i, xi in enumerate(x):
            if xi:
                for j in range(t + 1 - i):
                    out[i + j] += xi * y[j]
        return [checked(v) for v in out]

    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def sphere_by_weight(ring: RingDescriptor, metric: MetricKind, n: int, t: int) -> list[int]:
    """Residue vectors of each exact total weight 0..t: coefficients of A(x)^n."""
    if n < 1 or t < 0:
        raise ValueError("need n >= 1 and t >= 0")
    check_applicable(ring, metric)
    spectrum = build_weight_table(ring, metric).spectrum
    return _truncated_power(spectrum, n, t)


def sphere_oracle(ring: RingDescriptor, metric: MetricKind, n: int, t: int) -> int:
    return checked(sum(sphere_by_weight(ring, metric, n, t)))


# ---------------------------------------------------------------------------
# Equality search
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SearchHit:
    n: int
    p: int
    r: int
    base_value: int = field(compare=False)

    @property
    def k(self) -> int:
        return self.n - self.r

    @property
    def feasible(self) -> bool:
        return self.k >= 1

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "k": self.k, "r": self.r,
                "base_value": self.base_value, "feasible": self.feasible}


@dataclass
class SearchResult:
    case: BoundCase
    paper_mode: bool
    p_range: tuple[int, int]
    n_max: int
    r_max: int
    hits: list[SearchHit]
    overflows: list[str]
    primes_scanned: int

    @property
    def feasible_hits(self) -> list[SearchHit]:
        return [h for h in self.hits if h.feasible]


def primes_between(lo: int, hi: int) -> list[int]:
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(hi) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    lo = max(lo, 2)
    return list(compress(range(lo, hi + 1), sieve[lo:]))


def solve_formula(case: BoundCase, value: int) -> list[int]:
    """Positive integers n with f(n) == value."""
    a, b, c = case.coefficients
    if a == 0:
        q, rem = divmod(value - c, b)
        return [q] if rem == 0 and q >= 1 else []
    disc = b * b - 4 * a * (c - value)
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    roots = set()
    for num in (-b + s, -b - s):
        if num % (2 * a) == 0 and num // (2 * a) >= 1:
            roots.add(num // (2 * a))
    return sorted(roots)


AUTO_P_LIMIT = 5 * 10**7


def _auto_p_max(case: BoundCase, n_max: int, paper_mode: bool) -> int:
    # largest p whose base alone does not exceed f(n_max)
    limit = sphere_formula(case, n_max)
    if case.base is CosetBase.P:
        return limit
    extra = 1 if (case.base is CosetBase.HURWITZ and paper_mode) else 0
    div = 2 if case.base is CosetBase.HURWITZ else 1
    return isqrt((limit + extra) // div)


def search_equality(
    case: BoundCase,
    p_max: int | None,
    n_max: int,
    r_max: int,
    p_min: int = 2,
    paper_mode: bool = False,
) -> SearchResult:
    """All (p, n, r) with base(p)^r == f(n), p admitted by the case, n <= n_max,
    r <= r_max.  For each p the powers of the base are walked upward and f is
    inverted exactly, so large n cost nothing extra."""
    if n_max < 1 or r_max < 1:
        raise ValueError("need n_max >= 1 and r_max >= 1")
    hi = _auto_p_max(case, n_max, paper_mode) if p_max is None else p_max
    if p_max is None and hi > AUTO_P_LIMIT:
        raise ValueError(f"automatic p range reaches {hi}; pass p_max explicitly")
    if case.primes is not None:
        candidates = [p for p in case.primes if p_min <= p <= hi]
    else:
        candidates = primes_between(max(p_min, case.p_min), hi)
    candidates = [p for p in candidates if case.admits(p)]
    f_max = sphere_formula(case, n_max)
    hits: list[SearchHit] = []
    overflows: list[str] = []
    for p in candidates:
        base = case.base_value(p, paper_mode)
        value = 1
        for r in range(1, r_max + 1):
            try:
                value = checked(value * base)
            except OverflowError:
                overflows.append(f"p={p}: {base}^{r} overflows 128 bits")
                break
            if value > f_max:
                break
            for n in solve_formula(case, value):
                if n <= n_max:
                    hits.append(SearchHit(n=n, p=p, r=r, base_value=value))
    for h in hits:
        # recompute both sides from scratch
        if checked_pow(case.base_value(h.p, paper_mode), h.r) != sphere_formula(case, h.n):
            raise AssertionError(f"search produced a non-solution {h}")
    hits.sort()
    lo = candidates[0] if candidates else p_min
    return SearchResult(case, paper_mode, (lo, hi), n_max, r_max, hits, overflows, len(candidates))


# ---------------------------------------------------------------------------
# Formula against oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiffRow:
    n: int
    formula: int
    oracle: int
    oracle_by_weight: tuple[int, ...]

    @property
    def match(self) -> bool:
        return self.formula == self.oracle

    @property
    def defect(self) -> int:
        return self.oracle - self.formula

    def to_dict(self) -> dict:
        return {"n": self.n, "formula": self.formula, "oracle": self.oracle,
                "match": self.match, "defect": self.defect,
                "oracle_by_weight": list(self.oracle_by_weight)}


@dataclass(frozen=True)
class DiffReport:
    case: BoundCase
    ring: RingDescriptor
    spectrum: tuple[int, ...]
    rows: tuple[DiffRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list[DiffRow]:
        return [r for r in self.rows if not r.match]


def compare_formula_oracle(case: BoundCase, ring: RingDescriptor, n_values: Iterable[int]) -> DiffReport:
    if ring.family is not case.family:
        raise ValueError(f"case {case.id} is for the {case.family.name} family, not {ring.name}")
    if not case.admits(ring.p):
        raise ValueError(f"case {case.id} does not cover modulus norm {ring.p}")
    rows = []
    for n in n_values:
        by_weight = sphere_by_weight(ring, case.metric, n, case.t)
        rows.append(DiffRow(n, sphere_formula(case, n), sum(by_weight), tuple(by_weight)))
    spectrum = build_weight_table(ring, case.metric).spectrum
    return DiffReport(case, ring, spectrum, tuple(rows))
