"""Acceptance checks, one per criterion.

Each check prints a single ``PASS``/``FAIL`` line with its measured runtime
and time limit. Tolerances: every numeric comparison is exact (integers and
``Fraction``); time limits are wall-clock seconds on the compiled backend.

Run standalone with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import ceil

import pytest

from ooctools import (
    Codeword,
    OocFamily,
    are_equivalent,
    auto_profile,
    canonical_form,
    check_intersection_theorem,
    check_sedf,
    construct_appended,
    construct_block,
    construct_cosets,
    construct_paley,
    construct_powers_of_two,
    construct_t_family,
    cross_profile,
    csw_lower_bound,
    cyclic_closure,
    fm_lower_bound,
    internal_differences,
    is_nondegenerate,
    johnson_bound,
    multiply,
    ooc_to_packing,
    packing_to_ooc,
    phi_search,
    shift,
    verify_ooc,
)
from ooctools.bounds import fm_counting_inequality_holds, lambda_a_min, lambda_c_min, upper_int
from ooctools.conversions import packing_violations
from ooctools.core import units
from ooctools.primes import is_prime

SEED = 20261015
CASES = 1000
RESULTS: list[str] = []


def report(number: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = "") -> bool:
    within = limit is None or elapsed < limit
    passed = ok and within
    budget = f"{elapsed:.3f}s" + (f" < {limit:g}s" if limit is not None else "")
    if ok and not within:
        detail = (detail + "; " if detail else "") + "over time limit"
    line = f"{'PASS' if passed else 'FAIL'}  AC{number} {title} [{budget}]" + (f" {detail}" if detail else "")
    print(line)
    RESULTS.append(line)
    return passed


# -- oracles: set arithmetic, independent of the kernels ---------------------


def set_auto(c: Codeword) -> list[int]:
    q = set(c.support)
    return [len(q & {(x + d) % c.v for x in q}) for d in range(1, c.v)]


def set_cross(a: Codeword, b: Codeword) -> list[int]:
    qa = set(a.support)
    return [len(qa & {(x + d) % a.v for x in b.support}) for d in range(a.v)]


def set_lambdas(f: OocFamily) -> tuple[int, int]:
    la = max(max(set_auto(c), default=0) for c in f)
    lc = max((max(set_cross(x, y)) for x, y in combinations(f.codewords, 2)), default=0)
    return la, lc


# -- criteria ------------------------------------------------------------------


def ac1() -> bool:
    t = time.perf_counter()
    z13 = OocFamily.from_bits(["1100100000000", "1010000100000"])
    z15 = OocFamily.of(15, [[0, 1, 4], [0, 7, 9]])
    ok = (
        z13.supports == [[0, 1, 4], [0, 2, 7]]
        and bool(verify_ooc(z13, 1, 1))
        and bool(verify_ooc(z15, 1, 1))
        and z13.params == (13, 3, 1, 1, 2)
        and z15.params == (15, 3, 1, 1, 2)
    )
    return report(1, "Z_13 and Z_15 families verify as (13,3,1,1) and (15,3,1,1)", ok, time.perf_counter() - t, 0.1)


def ac2() -> bool:
    t = time.perf_counter()
    params = [(v, w) for w in range(1, 17) for v in range(2, w * w + 1) if v % w == 0 and (w * w) % v == 0]
    bad = []
    for v, w in params:
        f = construct_block(v, w)
        if set_lambdas(f) != (w, w * w // v) or (f.lambda_a, f.lambda_c) != (w, w * w // v):
            bad.append(("block", v, w))
        g = construct_appended(v, w)
        if set_lambdas(g) != (w - 1, ceil(Fraction(w * w, v + 1))) or g.v != v + 1:
            bad.append(("appended", v, w))
    p3 = construct_powers_of_two(3)
    bits_ok = sorted(c.bits for c in p3) == sorted(["11110000", "11001100", "10101010"])
    ok = not bad and bits_ok and bool(verify_ooc(p3, 4, 2))
    detail = f"{len(params)} (v,w) pairs" + (f"; bad {bad[:3]}" if bad else "")
    return report(2, "block/appended/powers-of-two self-verification", ok, time.perf_counter() - t, 1.0, detail)


def ac3() -> bool:
    t = time.perf_counter()
    ok = True
    for m in range(5, 26, 2):
        f = construct_t_family(m)
        ok &= bool(verify_ooc(f, 4, 3)) and f.params == (2 * m, 5, 4, 3, (m - 1) // 2)
        ok &= set_lambdas(f) == (4, 3)
    ok &= construct_t_family(5).supports == [[0, 1, 4, 6, 9], [0, 2, 3, 7, 8]]
    ok &= construct_t_family(9).supports == [[0, 1, 8, 10, 17], [0, 2, 7, 11, 16], [0, 3, 6, 12, 15], [0, 4, 5, 13, 14]]
    return report(3, "T-family m=5..25 verifies as (2m,5,4,3)", ok, time.perf_counter() - t, 1.0)


def ac4() -> bool:
    t = time.perf_counter()
    primes = [p for p in range(5, 98) if is_prime(p) and p % 4 == 1]
    ok = True
    for p in primes:
        f = construct_paley(p)
        k = (p - 1) // 4
        ok &= bool(verify_ooc(f, k, k)) and f.params == (p, (p - 1) // 2, k, k, 2)
    sets13 = [[1, 3, 4, 9, 10, 12], [2, 5, 6, 7, 8, 11]]
    ok &= construct_paley(13).supports == sets13
    ok &= bool(check_sedf(sets13, 13, 3))
    return report(4, "Paley families and the (13,2,6,3)-SEDF", ok, time.perf_counter() - t, 2.0, f"{len(primes)} primes")


def ac5() -> bool:
    t = time.perf_counter()
    f = construct_cosets(73, 2)
    ok = f.params == (73, 9, 1, 3, 8) and bool(verify_ooc(f, 1, 3))
    ok &= lambda_a_min(73, 9) == 1 and f.lambda_a == 1
    ok &= all(len(set(auto_profile(c))) == 1 for c in f)
    g = construct_cosets(29, 25)
    ok &= g.params == (29, 7, 2, 3, 4) and bool(verify_ooc(g, 2, 3))
    ok &= set_lambdas(f) == (1, 3) and set_lambdas(g) == (2, 3)
    return report(5, "coset families (73,9,1,3) N=8 and (29,7,2,3) N=4", ok, time.perf_counter() - t, 1.0)


def ac6() -> bool:
    t = time.perf_counter()
    F = Fraction
    csw = {
        (7, 3, 1, 1): F(1, 12),
        (19, 3, 1, 1): F(13, 12),
        (43, 3, 1, 1): F(37, 12),
        (8, 4, 4, 2): F(1, 36),
        (73, 9, 1, 3): F(-383, 192),
    }
    ok = all(csw_lower_bound(*k) == val for k, val in csw.items())
    ok &= fm_lower_bound(43, 3, 1, 1) == F(-1, 17)
    ok &= fm_lower_bound(8, 4, 4, 2) is None
    johnson = {(7, 3, 1, 1): 1, (13, 3, 1, 1): 2, (19, 3, 1, 1): 3, (43, 3, 1, 1): 7}
    ok &= all(upper_int(johnson_bound(*k)) == val for k, val in johnson.items())
    return report(6, "exact bounds (csw, fm, Johnson)", ok, time.perf_counter() - t, 0.1, "bit-exact")


def ac7() -> bool:
    t0 = time.perf_counter()
    runs = [
        ((7, 3, 1, 1), 1, 60.0, True),
        ((13, 3, 1, 1), 2, 60.0, True),
        ((19, 3, 1, 1), 3, 60.0, True),
        ((43, 3, 1, 1), 7, 600.0, True),
        # the same optimum without the Johnson early stop, i.e. a full proof search
        ((43, 3, 1, 1), 7, 600.0, False),
    ]
    ok_all = True
    for params, phi, limit, johnson in runs:
        t = time.perf_counter()
        res = phi_search(*params, use_johnson=johnson)
        elapsed = time.perf_counter() - t
        ok = res.exhaustive and res.size == phi and bool(verify_ooc(res.witness, params[2], params[3]))
        if params == (13, 3, 1, 1):
            ok &= res.witness.supports == [[0, 1, 4], [0, 2, 7]]
        ok &= elapsed < limit
        ok_all &= ok
        tag = "" if johnson else " no Johnson cutoff,"
        line = f"      Phi{params} = {res.size}:{tag} {res.nodes} nodes, {elapsed:.3f}s < {limit:g}s, {res.backend}"
        print(line)
        RESULTS.append(line + ("" if ok else "  <-- FAIL"))
    return report(7, "exhaustive search Phi = 1, 2, 3, 7", ok_all, time.perf_counter() - t0, None, "limits per run above")


def _random_family(rng: random.Random, max_v=24, max_n=4, min_w=1) -> OocFamily:
    v = rng.randint(max(2, min_w), max_v)
    w = rng.randint(min_w, v)
    n = rng.randint(1, max_n)
    return OocFamily(v, tuple(Codeword.of(v, rng.sample(range(v), w)) for _ in range(n)))


def _emitted_families() -> list[OocFamily]:
    out = []
    for v, w in [(4, 2), (9, 3), (16, 4), (8, 4), (25, 5), (12, 6)]:
        out += [construct_block(v, w), construct_appended(v, w)]
    out += [construct_powers_of_two(n) for n in range(2, 7)]
    out += [construct_t_family(m) for m in range(5, 26, 2)]
    out += [construct_paley(p) for p in (5, 13, 17, 29, 37, 41)]
    out += [construct_cosets(73, 2), construct_cosets(29, 25), construct_cosets(13, 3), construct_cosets(31, 2)]
    for params in [(7, 3, 1, 1), (13, 3, 1, 1), (19, 3, 1, 1), (14, 4, 3, 2), (10, 4, 2, 2)]:
        out.append(phi_search(*params).witness)
    out.append(packing_to_ooc(ooc_to_packing(OocFamily.of(13, [[0, 1, 4], [0, 2, 7]]), 2)))
    return out


def ac8() -> bool:
    t = time.perf_counter()
    rng = random.Random(SEED)
    failures: dict[str, int] = {}

    def check(name, cond):
        if not cond:
            failures[name] = failures.get(name, 0) + 1

    for _ in range(CASES):
        f = _random_family(rng)
        v = f.v
        x, y = f[0], f[-1]
        check("auto sum", auto_profile(x).total() == x.w * (x.w - 1))
        check("cross sum", cross_profile(x, y).total() == x.w * y.w)

        s = rng.randrange(v)
        check("shift auto", auto_profile(shift(x, s)) == auto_profile(x))
        before, after = list(cross_profile(x, y)), list(cross_profile(x, shift(y, s)))
        check("shift cross rotation", after == [before[(d - s) % v] for d in range(v)])

        r = rng.choice(units(v))
        a0, a1 = auto_profile(x), auto_profile(multiply(x, r))
        check("multiplier auto", all(a1[d] == a0[r * d % v] for d in range(1, v)))
        c0, c1 = cross_profile(x, y), cross_profile(multiply(x, r), multiply(y, r))
        check("multiplier cross", all(c1[d] == c0[r * d % v] for d in range(v)))

        shifts = [rng.randrange(v) for _ in range(f.n)]
        g = OocFamily(v, tuple(shift(multiply(c, r), k) for c, k in zip(f, shifts)))
        check("lambda invariance", (g.lambda_a, g.lambda_c) == (f.lambda_a, f.lambda_c))

        h = _random_family(rng, max_n=4, min_w=2)
        if h.n > 1:
            diffs = [set(internal_differences(c).counts) for c in h]
            disjoint = all(not (diffs[i] & diffs[j]) for i, j in combinations(range(h.n), 2))
            check("lambda_c = 1 iff disjoint", (h.lambda_c == 1) == disjoint)
        for n in range(2, h.w + 1):
            check("intersection theorem", check_intersection_theorem(h, n).holds)

        if verify_ooc(f, f.lambda_a, f.lambda_c):
            check("counting inequality", fm_counting_inequality_holds(v, f.w, f.lambda_a, f.lambda_c, f.n))
        check("lambda_a minimum", f.lambda_a >= ceil(lambda_a_min(v, f.w)))
        if f.n >= 2:
            check("lambda_c minimum", f.lambda_c >= ceil(lambda_c_min(v, f.w)))

    for f in _emitted_families():
        check("emitted lambda_a minimum", f.lambda_a >= ceil(lambda_a_min(f.v, f.w)))
        if f.n >= 2:
            check("emitted lambda_c minimum", f.lambda_c >= ceil(lambda_c_min(f.v, f.w)))
        check("emitted counting inequality", fm_counting_inequality_holds(f.v, f.w, f.lambda_a, f.lambda_c, f.n))

    detail = f"{CASES} cases, seed {SEED}" + (f"; failures {failures}" if failures else "")
    return report(8, "property suites", not failures, time.perf_counter() - t, None, detail)


def ac9() -> bool:
    t = time.perf_counter()
    z13 = OocFamily.of(13, [[0, 1, 4], [0, 2, 7]])
    p = ooc_to_packing(z13, 2)
    back = packing_to_ooc(p)
    ok = canonical_form(back) == canonical_form(z13) and are_equivalent(back, z13)
    ok &= len(p.blocks) == 26 and not packing_violations(13, 2, 1, p.blocks)
    ok &= all(sum(set(pair) <= set(b) for b in p.blocks) <= 1 for pair in combinations(range(13), 2))
    z11 = OocFamily.from_bits(["11100010010", "00011101001"])
    ok &= is_nondegenerate(z11) and z11.params == (11, 5, 2, 3, 2)
    code = cyclic_closure(z11)
    ok &= len(set(code.codewords)) == 22 and code.d_h == 4
    ok &= min(len(set(a.support) ^ set(b.support)) for a, b in combinations(code.codewords, 2)) == 4
    return report(9, "packing round trip and cyclic closure", ok, time.perf_counter() - t, 5.0)


CRITERIA = [ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria passed")
    sys.exit(0 if all(outcomes) else 1)
