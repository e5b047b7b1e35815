"""Internal and external difference multisets and their intersections."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Codeword, ModulusError, OocError, OocFamily
from .primes import is_prime


@dataclass(frozen=True)
class DifferenceMultiset:
    v: int
    kind: str  # "internal" or "external"
    counts: dict[int, int]

    def __getitem__(self, delta: int) -> int:
        return self.counts.get(delta % self.v, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def support(self) -> set[int]:
        return set(self.counts)

    def max(self) -> int:
        return max(self.counts.values(), default=0)

    def __len__(self) -> int:
        """Total multiplicity (the multiset size)."""
        return self.total()


def _counts(a, b, v, skip_zero):
    counts: dict[int, int] = {}
    for x in a:
        for y in b:
            if skip_zero and x == y:
                continue
            d = (x - y) % v
            counts[d] = counts.get(d, 0) + 1
    return counts


def internal_differences(q: Codeword) -> DifferenceMultiset:
    return DifferenceMultiset(q.v, "internal", _counts(q.support, q.support, q.v, True))


def external_differences(q: Codeword, q2: Codeword) -> DifferenceMultiset:
    if q.v != q2.v:
        raise ModulusError(f"modulus mismatch: {q.v} vs {q2.v}")
    return DifferenceMultiset(q.v, "external", _counts(q.support, q2.support, q.v, False))


@dataclass(frozen=True)
class Intersection:
    multiset: DifferenceMultiset
    set_size: int

    @property
    def multiset_size(self) -> int:
        return self.multiset.total()


def multiset_intersection(a: DifferenceMultiset, b: DifferenceMultiset) -> Intersection:
    """Pointwise minimum of multiplicities, plus the count of shared residues."""
    if a.v != b.v or a.kind != b.kind:
        raise OocError("can only intersect multisets of the same kind and modulus")
    common = {d: min(c, b.counts[d]) for d, c in a.counts.items() if d in b.counts}
    return Intersection(DifferenceMultiset(a.v, a.kind, common), len(common))


@dataclass(frozen=True)
class PairReport:
    pair: tuple[int, int]
    cross: int
    multiset_size: int
    set_size: int
    part2: bool
    part3: bool
    part4: bool | None  # None when v is not prime or n is too large
    part4_strong: bool | None


@dataclass(frozen=True)
class IntersectionReport:
    n: int
    lambda_c: int
    part1: bool  # lambda_c == 1 iff every pairwise intersection is empty
    pairs: tuple[PairReport, ...]

    @property
    def holds(self) -> bool:
        return self.part1 and all(
            p.part2 and p.part3 and p.part4 is not False for p in self.pairs
        )


def check_intersection_theorem(f: OocFamily, n: int) -> IntersectionReport:
    """Test the four implications relating difference-multiset overlaps to
    pairwise cross-correlation on every pair of ``f``.

    Each ``partK`` is the truth value of the implication for that pair; a
    False entry would be a counterexample. Part 4 needs prime ``v`` and
    ``n < (v + 1) / 2`` and is reported as None otherwise.

    Part 4 uses the threshold ``2n - 2``: Cauchy-Davenport gives
    ``|D - D| >= 2n - 1`` but that count includes 0, so only ``2n - 2``
    nonzero differences are forced. ``part4_strong`` evaluates the
    ``2n - 1`` threshold, which fails e.g. for {0,1,2}, {5,6,7} in Z_13.
    """
    if not 2 <= n <= f.w:
        raise OocError(f"need 2 <= n <= w = {f.w}, got n = {n}")
    prime = is_prime(f.v)
    diffs = [internal_differences(c) for c in f.codewords]
    pairs = []
    all_empty = True
    for i, j in combinations(range(f.n), 2):
        inter = multiset_intersection(diffs[i], diffs[j])
        cross = max(external_differences(f[i], f[j]).counts.values())
        if inter.set_size:
            all_empty = False
        below = cross < n
        part4 = part4_strong = None
        if prime and 2 * n < f.v + 1:
            part4 = below or not inter.set_size < 2 * n - 2
            part4_strong = below or not inter.set_size < 2 * n - 1
        pairs.append(
            PairReport(
                (i, j),
                cross,
                inter.multiset_size,
                inter.set_size,
                part2=below or not inter.multiset_size < n * (n - 1),
                part3=below or not inter.set_size < n - 1,
                part4=part4,
                part4_strong=part4_strong,
            )
        )
    lam_c = f.lambda_c
    part1 = (lam_c == 1) == all_empty if f.n > 1 else True
    return IntersectionReport(n, lam_c, part1, tuple(pairs))
