"""Codewords, families, correlation profiles and multiplier equivalence.

A codeword is a weight-``w`` cyclic binary sequence of length ``v``, kept as
the sorted set of positions holding a 1. Conventions used throughout:

* ``shift(x, s)`` is the sequence ``(x_{i+s})``, so its support is ``Q - s``.
* The auto profile at ``delta`` (1..v-1) is ``|Q ∩ (Q + delta)|``.
* The cross profile of ``(x, y)`` at ``delta`` (0..v-1) is
  ``|Q_x ∩ (Q_y + delta)|``, i.e. the multiplicity of ``delta`` among the
  differences ``a - b`` with ``a`` in ``x`` and ``b`` in ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from ._accel import kernels


class OocError(ValueError):
    """Raised when an input violates the preconditions of an operation."""


class DegenerateError(OocError):
    """A family has a periodic codeword or two codewords in one shift orbit."""


class ModulusError(OocError):
    """Two codewords or families live over different moduli."""


@dataclass(frozen=True, order=True)
class Codeword:
    v: int
    support: tuple[int, ...]

    def __post_init__(self):
        if self.v < 2:
            raise OocError(f"modulus must be at least 2, got {self.v}")
        sup = tuple(self.support)
        object.__setattr__(self, "support", sup)
        if not sup:
            raise OocError("a codeword needs weight at least 1")
        if any(not 0 <= q < self.v for q in sup):
            raise OocError(f"residues must lie in [0, {self.v}): {sup}")
        if any(a >= b for a, b in zip(sup, sup[1:])):
            raise OocError(f"support must be strictly increasing: {sup}")

    @classmethod
    def of(cls, v: int, residues: Iterable[int]) -> Codeword:
        """Build from any iterable of residues (reduced mod v, sorted)."""
        reduced = [r % v for r in residues]
        if len(set(reduced)) != len(reduced):
            raise OocError(f"repeated residues modulo {v}: {list(residues)}")
        return cls(v, tuple(sorted(reduced)))

    @classmethod
    def from_bits(cls, bits: str) -> Codeword:
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise OocError(f"not a binary string: {bits!r}")
        return cls(len(bits), tuple(i for i, b in enumerate(bits) if b == "1"))

    @property
    def w(self) -> int:
        return len(self.support)

    @cached_property
    def bitmask(self) -> int:
        mask = 0
        for q in self.support:
            mask |= 1 << q
        return mask

    @property
    def bits(self) -> str:
        s = ["0"] * self.v
        for q in self.support:
            s[q] = "1"
        return "".join(s)

    @cached_property
    def period(self) -> int:
        """Smallest ``s > 0`` with ``shift(x, s) == x``; equals the orbit size."""
        full = (1 << self.v) - 1
        m = self.bitmask
        for s in range(1, self.v):
            if self.v % s == 0 and ((m >> s) | (m << (self.v - s))) & full == m:
                return s
        return self.v

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.support)) + f"}} mod {self.v}"


@dataclass(frozen=True)
class CorrelationProfile:
    """Collision counts per shift. ``profile[delta]`` indexes by the shift."""

    kind: str
    v: int
    entries: tuple[int, ...]

    @property
    def origin(self) -> int:
        return 1 if self.kind == "auto" else 0

    def __getitem__(self, delta: int) -> int:
        d = delta % self.v
        if self.kind == "auto" and d == 0:
            raise KeyError("auto profiles are undefined at shift 0")
        return self.entries[d - self.origin]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return zip(range(self.origin, self.v), self.entries)

    def max(self) -> int:
        return max(self.entries, default=0)

    def total(self) -> int:
        return sum(self.entries)


def _same_modulus(x: Codeword, y: Codeword) -> None:
    if x.v != y.v:
        raise ModulusError(f"modulus mismatch: {x.v} vs {y.v}")


def auto_profile(x: Codeword) -> CorrelationProfile:
    counts = kernels.diff_counts(x.support, x.support, x.v)
    return CorrelationProfile("auto", x.v, tuple(counts[1:]))


def cross_profile(x: Codeword, y: Codeword) -> CorrelationProfile:
    _same_modulus(x, y)
    return CorrelationProfile("cross", x.v, tuple(kernels.diff_counts(x.support, y.support, x.v)))


def max_auto(x: Codeword) -> int:
    return kernels.max_auto(x.support, x.v) if x.w > 1 else 0


def max_cross(x: Codeword, y: Codeword) -> int:
    _same_modulus(x, y)
    return kernels.max_cross(x.support, y.support, x.v)


@dataclass(frozen=True)
class OocFamily:
    """An ordered family of equal-weight codewords over a common modulus."""

    v: int
    codewords: tuple[Codeword, ...]

    def __post_init__(self):
        cws = tuple(self.codewords)
        object.__setattr__(self, "codewords", cws)
        if not cws:
            raise OocError("a family needs at least one codeword")
        for c in cws:
            if c.v != self.v:
                raise ModulusError(f"codeword {c} is not over Z_{self.v}")
        if len({c.w for c in cws}) != 1:
            raise OocError("all codewords in a family must share one weight")

    @classmethod
    def of(cls, v: int, supports: Iterable[Iterable[int]]) -> OocFamily:
        return cls(v, tuple(Codeword.of(v, s) for s in supports))

    @classmethod
    def from_bits(cls, bitstrings: Sequence[str]) -> OocFamily:
        cws = tuple(Codeword.from_bits(b) for b in bitstrings)
        return cls(cws[0].v, cws)

    @property
    def w(self) -> int:
        return self.codewords[0].w

    @property
    def n(self) -> int:
        return len(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __getitem__(self, i: int) -> Codeword:
        return self.codewords[i]

    @property
    def supports(self) -> list[list[int]]:
        return [list(c.support) for c in self.codewords]

    @cached_property
    def lambda_a(self) -> int:
        return max(max_auto(c) for c in self.codewords)

    @cached_property
    def lambda_c(self) -> int:
        return max((max_cross(x, y) for x, y in combinations(self.codewords, 2)), default=0)

    @property
    def params(self) -> tuple[int, int, int, int, int]:
        """``(v, w, lambda_a, lambda_c, N)``."""
        return self.v, self.w, self.lambda_a, self.lambda_c, self.n


def family_lambdas(f: OocFamily) -> tuple[int, int]:
    return f.lambda_a, f.lambda_c


@dataclass(frozen=True)
class Violation:
    kind: str  # "auto" or "cross"
    where: tuple[int, ...]  # (i,) or (i, j) with i < j
    delta: int
    count: int
    bound: int

    def __str__(self) -> str:
        who = f"codeword {self.where[0]}" if self.kind == "auto" else f"pair {self.where}"
        return f"{self.kind} {who} at shift {self.delta}: {self.count} > {self.bound}"


@dataclass(frozen=True)
class Verification:
    lambda_a: int
    lambda_c: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def verify_ooc(f: OocFamily, lambda_a: int, lambda_c: int) -> Verification:
    """Check conditions (A) and (B); violations are returned, not raised."""
    found = []
    for i, c in enumerate(f.codewords):
        for delta, count in auto_profile(c).items():
            if count > lambda_a:
                found.append(Violation("auto", (i,), delta, count, lambda_a))
    for i, j in combinations(range(f.n), 2):
        for delta, count in cross_profile(f[i], f[j]).items():
            if count > lambda_c:
                found.append(Violation("cross", (i, j), delta, count, lambda_c))
    return Verification(lambda_a, lambda_c, tuple(found))


def is_full_cyclic_order(x: Codeword) -> bool:
    return x.period == x.v


def orbit_rep(x: Codeword) -> Codeword:
    """Lexicographically least translate (it always contains 0)."""
    v = x.v
    best = min(tuple(sorted((q - s) % v for q in x.support)) for s in x.support)
    return Codeword(v, best)


def is_nondegenerate(f: OocFamily) -> bool:
    if not all(is_full_cyclic_order(c) for c in f.codewords):
        return False
    reps = [orbit_rep(c) for c in f.codewords]
    return len(set(reps)) == len(reps)


def properness(f: OocFamily, lambda_a: int, lambda_c: int) -> tuple[bool, bool]:
    """``(a_proper, c_proper)`` for a family that verifies at these bounds."""
    if not verify_ooc(f, lambda_a, lambda_c):
        raise OocError(f"family is not a ({f.v},{f.w},{lambda_a},{lambda_c})-OOC")
    a_proper = f.lambda_a == lambda_a
    c_proper = f.lambda_c == lambda_c
    return a_proper, c_proper


def shift(x: Codeword, s: int) -> Codeword:
    return Codeword.of(x.v, (q - s for q in x.support))


def units(v: int) -> list[int]:
    return [r for r in range(1, v) if gcd(r, v) == 1]


def multiply(x: Codeword, r: int) -> Codeword:
    """The sequence ``(x_{rt})``; its support is ``r^{-1} Q``."""
    if gcd(r, x.v) != 1:
        raise OocError(f"{r} is not a unit modulo {x.v}")
    inv = pow(r, -1, x.v)
    return Codeword.of(x.v, (inv * q for q in x.support))


def scale(x: Codeword, u: int) -> Codeword:
    """Support ``u * Q`` directly (``multiply`` by ``u^{-1}``)."""
    return Codeword.of(x.v, (u * q for q in x.support))


def _require_nondegenerate(f: OocFamily) -> None:
    if not is_nondegenerate(f):
        raise DegenerateError("operation requires a non-degenerate family")


def canonical_form(f: OocFamily) -> OocFamily:
    """Least representative under one family-wide unit plus per-codeword shifts.

    Codewords are compared as sorted tuples and the family as the sorted list
    of those, so input order never matters. Translating each codeword to its
    own least translate minimises the sorted list for a fixed unit.
    """
    _require_nondegenerate(f)
    best = None
    for u in units(f.v):
        cand = sorted(orbit_rep(scale(c, u)).support for c in f.codewords)
        if best is None or cand < best:
            best = cand
    return OocFamily(f.v, tuple(Codeword(f.v, s) for s in best))


def are_equivalent(f: OocFamily, g: OocFamily) -> bool:
    if (f.v, f.w, f.n) != (g.v, g.w, g.n):
        return False
    return canonical_form(f).codewords == canonical_form(g).codewords
