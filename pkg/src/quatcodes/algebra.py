"""Exact arithmetic for Gaussian, Lipschitz and Hurwitz integers and their residue rings.

Quaternions are stored in *doubled* coordinates: ``Quat(d0, d1, d2, d3)`` is the
value ``(d0 + d1*e1 + d2*e2 + d3*e3) / 2``.  All four doubled coordinates share
one parity; even means a Lipschitz integer, odd means a half-integer Hurwitz
element.  This keeps every operation in plain integers.

Congruence is always *right* congruence: ``x = y (mod pi)`` iff ``x - y = delta*pi``
for a Lipschitz (or Gaussian) integer ``delta``.  For the Hurwitz family ``x`` and
``y`` range over all Hurwitz integers while ``delta`` is still restricted to the
Lipschitz integers.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

INT128_MAX = (1 << 127) - 1
INT128_MIN = -(1 << 127)


def checked(value: int) -> int:
    """Return ``value`` unchanged, raising OverflowError outside signed 128-bit range."""
    if value > INT128_MAX or value < INT128_MIN:
        raise OverflowError(f"{value} does not fit in a signed 128-bit integer")
    return value


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Gaussian integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True, order=True)
class GaussianInt:
    a: int
    b: int = 0

    @staticmethod
    def _coerce(other) -> "GaussianInt":
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int):
            return GaussianInt(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianInt(checked(self.a + o.a), checked(self.b + o.b))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianInt(checked(self.a - o.a), checked(self.b - o.b))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianInt(
            checked(self.a * o.a - self.b * o.b),
            checked(self.a * o.b + self.b * o.a),
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.a, -self.b)

    def norm(self) -> int:
        return checked(self.a * self.a + self.b * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def raw(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __repr__(self) -> str:
        from .grammar import format_element

        return f"GaussianInt({format_element(self)})"


# ---------------------------------------------------------------------------
# Quaternions in doubled coordinates
# ---------------------------------------------------------------------------


def _qmul(x: tuple[int, int, int, int], y: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    # Hamilton product; e1e2 = e3, e2e3 = e1, e3e1 = e2.
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@dataclass(frozen=True, slots=True, order=True)
class Quat:
    """Hurwitz quaternion ``(d0 + d1 e1 + d2 e2 + d3 e3) / 2``."""

    d0: int
    d1: int = 0
    d2: int = 0
    d3: int = 0

    def __post_init__(self) -> None:
        parity = self.d0 & 1
        if (self.d1 & 1) != parity or (self.d2 & 1) != parity or (self.d3 & 1) != parity:
            raise ValueError(
                f"doubled coordinates {self.doubled} mix parities; not a Hurwitz integer"
            )

    @classmethod
    def of(cls, a0: int, a1: int = 0, a2: int = 0, a3: int = 0) -> "Quat":
        """Lipschitz integer from ordinary integer coordinates."""
        return cls(2 * a0, 2 * a1, 2 * a2, 2 * a3)

    @property
    def doubled(self) -> tuple[int, int, int, int]:
        return (self.d0, self.d1, self.d2, self.d3)

    @property
    def is_lipschitz(self) -> bool:
        return self.d0 % 2 == 0

    @property
    def coords(self) -> tuple[int, int, int, int]:
        """Integer coordinates; only defined for Lipschitz integers."""
        if not self.is_lipschitz:
            raise ValueError("half-integer quaternion has no integer coordinates")
        return (self.d0 // 2, self.d1 // 2, self.d2 // 2, self.d3 // 2)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quat):
            return other
        if isinstance(other, int):
            return Quat(2 * other, 0, 0, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quat(*(checked(x + y) for x, y in zip(self.doubled, o.doubled)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quat(*(checked(x - y) for x, y in zip(self.doubled, o.doubled)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> "Quat":
        return Quat(-self.d0, -self.d1, -self.d2, -self.d3)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # (d/2)(e/2) = (d*e)/4, so the doubled product is (d*e)/2; always even.
        prod = _qmul(self.doubled, o.doubled)
        return Quat(*(checked(c // 2) for c in prod))

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self

    def conj(self) -> "Quat":
        return Quat(self.d0, -self.d1, -self.d2, -self.d3)

    def norm(self) -> int:
        return checked((self.d0**2 + self.d1**2 + self.d2**2 + self.d3**2) // 4)

    def is_zero(self) -> bool:
        return self.d0 == 0 and self.d1 == 0 and self.d2 == 0 and self.d3 == 0

    @property
    def raw(self) -> tuple[int, int, int, int]:
        return self.doubled

    def __repr__(self) -> str:
        from .grammar import format_element

        return f"Quat({format_element(self)})"


ONE = Quat.of(1)
E1 = Quat.of(0, 1)
E2 = Quat.of(0, 0, 1)
E3 = Quat.of(0, 0, 0, 1)
W = Quat(1, 1, 1, 1)
I = GaussianInt(0, 1)

Element = Union[GaussianInt, Quat]


# ---------------------------------------------------------------------------
# Residue rings
# ---------------------------------------------------------------------------


class Family(str, enum.Enum):
    GAUSSIAN = "G"
    LIPSCHITZ = "L"
    HURWITZ = "H"


class RingMismatchError(TypeError):
    """An element does not belong to the ambient set of a ring."""


@dataclass(frozen=True)
class RingDescriptor:
    family: Family
    modulus: Element
    p: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.family is Family.GAUSSIAN:
            if not isinstance(self.modulus, GaussianInt):
                raise ValueError("Gaussian ring needs a Gaussian modulus")
            p = self.modulus.norm()
            if not is_prime(p) or p % 4 != 1:
                raise ValueError(f"norm {p} of the modulus must be a prime = 1 (mod 4)")
        else:
            if not isinstance(self.modulus, Quat) or not self.modulus.is_lipschitz:
                raise ValueError("quaternion rings need a Lipschitz-integer modulus")
            p = self.modulus.norm()
            if p == 2 or not is_prime(p):
                raise ValueError(f"norm {p} of the modulus must be an odd prime")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text: str) -> "RingDescriptor":
        from .grammar import parse_ring

        return parse_ring(text)

    @property
    def name(self) -> str:
        from .grammar import format_element

        return f"{self.family.value}:{format_element(self.modulus, explicit_ones=True)}"

    @property
    def is_quaternion(self) -> bool:
        return self.family is not Family.GAUSSIAN

    def zero(self) -> Element:
        return GaussianInt(0, 0) if self.family is Family.GAUSSIAN else Quat(0, 0, 0, 0)

    def one(self) -> Element:
        return GaussianInt(1, 0) if self.family is Family.GAUSSIAN else ONE

    def contains(self, x: object) -> bool:
        if self.family is Family.GAUSSIAN:
            return isinstance(x, GaussianInt)
        if not isinstance(x, Quat):
            return False
        return self.family is Family.HURWITZ or x.is_lipschitz

    def require(self, x: object) -> None:
        if not self.contains(x):
            raise RingMismatchError(f"{x!r} is not an element of the ambient set of {self.name}")

    def element(self, raw: tuple[int, ...]) -> Element:
        """Wrap a raw coordinate tuple (``(a, b)`` or doubled 4-tuple)."""
        if self.family is Family.GAUSSIAN:
            return GaussianInt(*raw)
        return Quat(*raw)

    def __str__(self) -> str:
        return self.name


def _raw_key_fn(ring: RingDescriptor):
    p = ring.p
    if ring.family is Family.GAUSSIAN:
        c, d = ring.modulus.a, ring.modulus.b

        def gkey(x: tuple[int, int]) -> tuple[int, int]:
            a, b = x
            # x * conj(pi)
            return ((a * c + b * d) % p, (b * c - a * d) % p)

        return gkey

    pc = ring.modulus.conj().coords
    m = 2 * p

    def qkey(x: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        # doubled coordinates of x * conj(pi), reduced mod 2p
        z0, z1, z2, z3 = _qmul(x, pc)
        return (z0 % m, z1 % m, z2 % m, z3 % m)

    return qkey


_KEY_FNS: dict[RingDescriptor, object] = {}


def raw_key_fn(ring: RingDescriptor):
    """Key function working on raw coordinate tuples; no ambient checks."""
    fn = _KEY_FNS.get(ring)
    if fn is None:
        fn = _KEY_FNS[ring] = _raw_key_fn(ring)
    return fn


def congruent(ring: RingDescriptor, x: Element, y: Element) -> bool:
    """Right congruence: ``x - y = delta * pi`` with ``delta`` Lipschitz (or Gaussian)."""
    ring.require(x)
    ring.require(y)
    diff = x - y
    p = ring.p
    if ring.family is Family.GAUSSIAN:
        # delta = diff * conj(pi) / p must be a Gaussian integer
        z = diff * ring.modulus.conj()
        return z.a % p == 0 and z.b % p == 0
    # doubled coords of diff * conj(pi); delta Lipschitz iff all are = 0 mod 2p
    z = _qmul(diff.doubled, ring.modulus.conj().coords)
    return all(c % (2 * p) == 0 for c in z)


def canonical_key(ring: RingDescriptor, x: Element) -> tuple[int, ...]:
    """Residue key; equal keys exactly for congruent elements."""
    ring.require(x)
    return raw_key_fn(ring)(x.raw)


def published_cardinality(ring: RingDescriptor) -> int:
    """Residue count as printed: p, p^2, and 2p^2 - 1 for the Hurwitz family."""
    p = ring.p
    if ring.family is Family.GAUSSIAN:
        return p
    if ring.family is Family.LIPSCHITZ:
        return p * p
    return 2 * p * p - 1


def _shell(ring: RingDescriptor, s: int) -> Iterator[tuple[int, ...]]:
    """Raw elements in box shell ``s``, lexicographic.

    Gaussian: max(|a|, |b|) == s.  Quaternions: ceil(max|d_i| / 2) == s, so shell s
    holds integer elements with max coordinate s and half-integer elements with
    max doubled coordinate 2s - 1.
    """
    if ring.family is Family.GAUSSIAN:
        for x in itertools.product(range(-s, s + 1), repeat=2):
            if max(abs(x[0]), abs(x[1])) == s:
                yield x
        return
    even = range(-2 * s, 2 * s + 1, 2)
    cands = [x for x in itertools.product(even, repeat=4) if max(map(abs, x)) == 2 * s]
    if ring.family is Family.HURWITZ and s >= 1:
        odd = range(-(2 * s - 1), 2 * s, 2)
        cands += [x for x in itertools.product(odd, repeat=4) if max(map(abs, x)) == 2 * s - 1]
        cands.sort()
    yield from cands


@dataclass(frozen=True)
class ResidueSystem:
    """Complete set of class representatives, sorted by residue key."""

    ring: RingDescriptor
    keys: tuple[tuple[int, ...], ...]
    representatives: tuple[Element, ...]
    shells: int
    published_count: int

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self):
        return iter(self.representatives)

    @property
    def count(self) -> int:
        return len(self.keys)

    @property
    def agrees_with_published(self) -> bool:
        return self.count == self.published_count

    @property
    def notes(self) -> tuple[str, ...]:
        if self.agrees_with_published:
            return ()
        return (
            f"enumeration of {self.ring.name} gives {self.count} classes "
            f"(stable after shell {self.shells - 1}); the printed cardinality "
            f"2N^2-1 = {self.published_count} counts zero once across the integer and "
            f"half-integer parts, but no half-integer element is congruent to 0 "
            f"when delta is Lipschitz, so the two parts are disjoint",
        )

    def representative(self, key: tuple[int, ...]) -> Element:
        return self._by_key[key]

    @property
    def _by_key(self) -> dict:
        cache = self.__dict__.get("_by_key_cache")
        if cache is None:
            cache = dict(zip(self.keys, self.representatives))
            object.__setattr__(self, "_by_key_cache", cache)
        return cache


@lru_cache(maxsize=None)
def enumerate_residues(ring: RingDescriptor) -> ResidueSystem:
    """Expand coordinate shells until one full shell contributes no new key.

    A shell that adds nothing certifies completeness: any element of the next
    shell is an element of the current box plus a vector with entries in
    {0, +-1}, so by induction no later shell can add a key either.
    """
    key = raw_key_fn(ring)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    s = 0
    while True:
        added = 0
        for x in _shell(ring, s):
            k = key(x)
            if k not in found:
                found[k] = x
                added += 1
        if added == 0 and s > 0:
            break
        s += 1
    keys = tuple(sorted(found))
    reps = tuple(ring.element(found[k]) for k in keys)
    return ResidueSystem(ring, keys, reps, shells=s + 1, published_count=published_cardinality(ring))


def cardinality(ring: RingDescriptor, paper_mode: bool = False) -> int:
    """Enumerated residue count, or the printed one when ``paper_mode`` is set."""
    if paper_mode:
        return published_cardinality(ring)
    return enumerate_residues(ring).count


def reduce(ring: RingDescriptor, x: Element) -> Element:
    """The enumerated representative congruent to ``x``."""
    return enumerate_residues(ring).representative(canonical_key(ring, x))
