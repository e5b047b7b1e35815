"""Bridges between OOCs and neighbouring objects: constant-weight and
cyclically permutable codes, difference-family variants, conflict-avoiding
codes, impulse radio sequences and cyclic packings."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .core import (
    Codeword,
    DegenerateError,
    OocError,
    OocFamily,
    auto_profile,
    cross_profile,
    is_full_cyclic_order,
    is_nondegenerate,
    orbit_rep,
    properness,
    shift,
    verify_ooc,
)
from .differences import internal_differences, external_differences

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


# -- constant-weight codes -------------------------------------------------


@dataclass(frozen=True)
class Distances:
    d_h: int | None  # None for a single codeword
    d_c: int | None  # None when there is nothing to compare against
    degenerate: bool  # repeated codeword, periodic codeword, or shift-related pair


@dataclass(frozen=True)
class ConstantWeightCode:
    length: int
    weight: int
    codewords: tuple[Codeword, ...]
    d_h: int | None
    d_c: int | None
    cyclically_permutable: bool


def _hamming(x: Codeword, y: Codeword) -> int:
    return (x.bitmask ^ y.bitmask).bit_count()


def hamming_and_cyclic_distances(code: list[Codeword] | tuple[Codeword, ...]) -> Distances:
    """Minimum Hamming distance and cyclic minimum distance of ``code``.

    The cyclic distance is taken over every codeword against its own
    distinct shifts and against every shift of every other codeword.
    """
    code = list(code)
    if not code:
        raise OocError("need at least one codeword")
    v, w = code[0].v, code[0].w
    if any(c.v != v or c.w != w for c in code):
        raise OocError("codewords must share length and weight")
    d_h = min((_hamming(x, y) for x, y in combinations(code, 2)), default=None)
    # Hamming distance between weight-w words is 2(w - overlap)
    overlaps = []
    degenerate = False
    for c in code:
        overlaps.append(auto_profile(c).max())
        if not is_full_cyclic_order(c):
            degenerate = True
    for x, y in combinations(code, 2):
        overlaps.append(cross_profile(x, y).max())
    if len({orbit_rep(c) for c in code}) != len(code):
        degenerate = True
    d_c = 2 * (w - max(overlaps)) if overlaps else None
    return Distances(d_h, d_c, degenerate)


def _require_nondegenerate_proper(f: OocFamily) -> None:
    if not is_nondegenerate(f):
        raise DegenerateError("need a non-degenerate family")
    a_proper, c_proper = properness(f, f.lambda_a, f.lambda_c)
    if not (a_proper and c_proper):
        raise OocError("need a proper family")


def ooc_to_cwcpc(f: OocFamily) -> ConstantWeightCode:
    """Re-shift one codeword so the cross-correlation value is met at relative
    shift 0, then read the family as a cyclically permutable code.

    The shift is the smallest one for the first pair (in index order) that
    attains ``lambda_c``.
    """
    _require_nondegenerate_proper(f)
    cws = list(f.codewords)
    if f.n > 1:
        lc = f.lambda_c
        for i, j in combinations(range(f.n), 2):
            prof = cross_profile(cws[i], cws[j])
            if prof.max() == lc:
                # |X ∩ (Y + d)| = lc, and shift(Y, -d) has support Y + d
                d = next(d for d, c in prof.items() if c == lc)
                cws[j] = shift(cws[j], -d)
                break
    dist = hamming_and_cyclic_distances(cws)
    return ConstantWeightCode(f.v, f.w, tuple(cws), dist.d_h, dist.d_c, True)


@dataclass(frozen=True)
class CodeAsOoc:
    family: OocFamily
    lambda_a: int
    lambda_c: int
    bound: int  # w - d_c / 2


def cwcpc_to_ooc(code: ConstantWeightCode) -> CodeAsOoc:
    """Read a cyclically permutable constant-weight code as an OOC; both
    correlation values are at most ``w - d_c/2`` and one of them meets it."""
    if not code.codewords:
        raise OocError("empty code")
    f = OocFamily(code.length, code.codewords)
    if not is_nondegenerate(f):
        raise OocError("code is not cyclically permutable")
    dist = hamming_and_cyclic_distances(code.codewords)
    bound = f.w - dist.d_c // 2
    la, lc = f.lambda_a, f.lambda_c
    if max(la, lc) != bound:
        raise OocError("cyclic distance inconsistent with the correlation values")
    return CodeAsOoc(f, la, lc, bound)


def cyclic_closure(f: OocFamily) -> ConstantWeightCode:
    """All ``v * N`` shifts of a non-degenerate proper family as one code;
    its minimum distance is ``2w - 2 max(lambda_a, lambda_c)``."""
    _require_nondegenerate_proper(f)
    words = [shift(c, s) for c in f.codewords for s in range(f.v)]
    if len(set(words)) != len(words):
        raise DegenerateError("cyclic closure produced repeated words")
    d = min(_hamming(x, y) for x, y in combinations(words, 2)) if len(words) > 1 else None
    return ConstantWeightCode(f.v, f.w, tuple(words), d, None, False)


# -- difference families ---------------------------------------------------


def _as_codewords(sets, v) -> list[Codeword]:
    cws = [Codeword.of(v, s) for s in sets]
    if not cws:
        raise OocError("need at least one set")
    if len({c.w for c in cws}) != 1:
        raise OocError("all sets must have the same size")
    return cws


def _union_internal(cws) -> Counter:
    total: Counter = Counter()
    for c in cws:
        total.update(internal_differences(c).counts)
    return total


def check_df(sets, v: int, lam: int) -> Verdict:
    """Every nonzero residue occurs exactly ``lam`` times over all ``Δ(Q_i)``."""
    total = _union_internal(_as_codewords(sets, v))
    bad = [d for d in range(1, v) if total[d] != lam]
    return Verdict(not bad, tuple(f"{d} occurs {total[d]} times" for d in bad[:10]))


def check_sdf(sets, v: int, lam: int, proper: bool = False) -> Verdict:
    """Each nonzero residue lies in at most one ``Δ(Q_i)``, at most ``lam`` times.

    With ``proper=True`` some residue must also reach ``lam``.
    """
    cws = _as_codewords(sets, v)
    owner: dict[int, int] = {}
    reasons = []
    peak = 0
    for i, c in enumerate(cws):
        for d, k in internal_differences(c).counts.items():
            peak = max(peak, k)
            if k > lam:
                reasons.append(f"{d} occurs {k} times in set {i}")
            if d in owner:
                reasons.append(f"{d} is a difference of sets {owner[d]} and {i}")
            else:
                owner[d] = i
    if proper and peak != lam:
        reasons.append(f"no difference reaches multiplicity {lam}")
    return Verdict(not reasons, tuple(reasons[:10]))


def check_rdf(sets, v: int, n: int, lam: int) -> Verdict:
    """Relative to the order-``n`` subgroup ``(v/n) Z_v``: ``lam`` copies of
    each element outside it, none inside."""
    if n < 1 or v % n:
        raise OocError(f"Z_{v} has no subgroup of order {n}")
    sub = {k * (v // n) for k in range(n)}
    total = _union_internal(_as_codewords(sets, v))
    bad = [d for d in range(1, v) if total[d] != (0 if d in sub else lam)]
    return Verdict(not bad, tuple(f"{d} occurs {total[d]} times" for d in bad[:10]))


def sdf_to_ooc(sets, v: int, lam: int) -> OocFamily:
    """An SDF with index ``lam`` is a ``(v, w, lam, 1)``-OOC."""
    verdict = check_sdf(sets, v, lam)
    if not verdict:
        raise OocError(f"not a ({v},w,{lam})-SDF: {verdict.reasons}")
    f = OocFamily(v, tuple(_as_codewords(sets, v)))
    if not verify_ooc(f, lam, 1):
        raise OocError("SDF failed OOC verification")
    return f


def check_sedf(sets, v: int, lam: int) -> Verdict:
    """Disjoint sets; for each ``i`` every nonzero residue occurs exactly
    ``lam`` times in the union of ``Δ(Q_i, Q_j)`` over ``j != i``."""
    cws = _as_codewords(sets, v)
    for (i, a), (j, b) in combinations(enumerate(cws), 2):
        if set(a.support) & set(b.support):
            raise OocError(f"sets {i} and {j} are not disjoint")
    reasons = []
    for i, a in enumerate(cws):
        total: Counter = Counter()
        for j, b in enumerate(cws):
            if j != i:
                total.update(external_differences(a, b).counts)
        bad = [d for d in range(1, v) if total[d] != lam]
        reasons.extend(f"set {i}: {d} occurs {total[d]} times" for d in bad[:5])
    return Verdict(not reasons, tuple(reasons[:10]))


def sedf_to_ooc(sets, v: int, lam: int) -> OocFamily:
    """An SEDF with index ``lam`` gives an OOC with ``lambda_c = lam`` and
    ``lambda_a`` the largest internal multiplicity."""
    verdict = check_sedf(sets, v, lam)
    if not verdict:
        raise OocError(f"not an SEDF with lambda={lam}: {verdict.reasons}")
    f = OocFamily(v, tuple(_as_codewords(sets, v)))
    if f.lambda_c != lam:
        raise OocError(f"SEDF gives cross-correlation {f.lambda_c}, expected {lam}")
    return f


# -- conflict-avoiding codes and impulse radio sequences -------------------


def check_cac(f: OocFamily) -> bool:
    """Pairwise disjoint internal-difference sets."""
    diffs = [set(internal_differences(c).counts) for c in f.codewords]
    return all(not (a & b) for a, b in combinations(diffs, 2))


def check_irs(f: OocFamily, k: int, m: int) -> bool:
    """Pulse-position property: exactly one 1 in each length-``m`` block."""
    if k * m != f.v:
        raise OocError(f"v = {f.v} is not k*m = {k}*{m}")
    for c in f.codewords:
        blocks = Counter(q // m for q in c.support)
        if c.w != k or any(blocks[b] != 1 for b in range(k)):
            return False
    return True


# -- cyclic packings -------------------------------------------------------


@dataclass(frozen=True)
class CyclicPacking:
    v: int
    w: int
    t: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]
    base_blocks: tuple[tuple[int, ...], ...] = ()
    full_orbits: int = 0
    short_orbits: int = 0
    warnings: tuple[str, ...] = field(default_factory=tuple)


def packing_violations(v: int, t: int, lam: int, blocks) -> list[tuple[int, ...]]:
    """``t``-subsets covered by more than ``lam`` blocks."""
    cover: Counter = Counter()
    for b in blocks:
        cover.update(combinations(sorted(b), t))
    return [s for s, k in cover.items() if k > lam]


def ooc_to_packing(f: OocFamily, t: int) -> CyclicPacking:
    """Develop a non-degenerate ``(v, w, t-1, t-1)``-OOC into a cyclic
    ``t-(v, w, 1)`` packing with ``N`` full orbits."""
    if t < 2:
        raise OocError("packing strength must be at least 2")
    if not is_nondegenerate(f):
        raise DegenerateError("need a non-degenerate family")
    if not verify_ooc(f, t - 1, t - 1):
        raise OocError(f"family is not a ({f.v},{f.w},{t - 1},{t - 1})-OOC")
    blocks = tuple(tuple((q + s) % f.v for q in c.support) for c in f.codewords for s in range(f.v))
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    bad = packing_violations(f.v, t, 1, blocks)
    if bad:
        raise RuntimeError(f"developed blocks are not a packing, e.g. {bad[0]} is covered twice")
    base = tuple(c.support for c in f.codewords)
    return CyclicPacking(f.v, f.w, t, 1, blocks, base, full_orbits=f.n, short_orbits=0)


def packing_orbits(v: int, blocks) -> list[tuple[Codeword, int]]:
    """Distinct block orbits as ``(least translate, orbit size)``, in order of first appearance."""
    seen: dict[Codeword, int] = {}
    for b in blocks:
        rep = orbit_rep(Codeword.of(v, b))
        if rep not in seen:
            seen[rep] = rep.period
    return list(seen.items())


def packing_to_ooc(p: CyclicPacking) -> OocFamily:
    """Base blocks of the full orbits form a ``(v, w, t-1, t-1)``-OOC.

    Short orbits are dropped with a logged warning.
    """
    if not p.blocks:
        raise OocError("empty packing")
    block_set = {tuple(sorted(b)) for b in p.blocks}
    for b in block_set:
        if len(b) != p.w or len(set(b)) != p.w or any(not 0 <= x < p.v for x in b):
            raise OocError(f"malformed block {b}")
        if tuple(sorted((x + 1) % p.v for x in b)) not in block_set:
            raise OocError("block system is not invariant under the cyclic shift")
    if packing_violations(p.v, p.t, p.lam, block_set):
        raise OocError(f"not a {p.t}-({p.v},{p.w},{p.lam}) packing")
    orbits = packing_orbits(p.v, sorted(block_set))
    full = [rep for rep, size in orbits if size == p.v]
    short = [rep for rep, size in orbits if size != p.v]
    if short:
        logger.warning("dropping %d short orbit(s): %s", len(short), ", ".join(map(str, short)))
    if not full:
        raise OocError("packing has no full orbits")
    return OocFamily(p.v, tuple(full))
