import logging
from itertools import combinations

import pytest
from hypothesis import given

from conftest import Z11, Z13, Z15, families
from ooctools import (
    Codeword,
    DegenerateError,
    OocError,
    OocFamily,
    are_equivalent,
    check_cac,
    check_df,
    check_irs,
    check_rdf,
    check_sdf,
    check_sedf,
    construct_block,
    construct_paley,
    construct_powers_of_two,
    cwcpc_to_ooc,
    cyclic_closure,
    hamming_and_cyclic_distances,
    is_nondegenerate,
    ooc_to_cwcpc,
    ooc_to_packing,
    packing_to_ooc,
    properness,
    sdf_to_ooc,
    sedf_to_ooc,
    shift,
)
from ooctools.conversions import ConstantWeightCode, CyclicPacking, packing_orbits, packing_violations


def brute_cyclic_distance(words):
    # every word against its distinct shifts and every shift of the others
    v = words[0].v
    best = None
    for i, x in enumerate(words):
        for j, y in enumerate(words):
            for s in range(v):
                if i == j and s == 0:
                    continue
                z = shift(y, s)
                if i == j and z == x:
                    continue
                d = len(set(x.support) ^ set(z.support))
                best = d if best is None else min(best, d)
    return best


class TestDistances:
    def test_z11_pair(self):
        d = hamming_and_cyclic_distances(Z11.codewords)
        assert d.d_c == 4 and not d.degenerate
        assert d.d_c == brute_cyclic_distance(list(Z11))

    def test_single_codeword(self):
        c = Codeword(5, (0, 1))
        d = hamming_and_cyclic_distances([c])
        assert d.d_h is None
        assert d.d_c == brute_cyclic_distance([c]) == 2

    def test_identical_pair_degenerate(self):
        c = Codeword(7, (0, 1, 3))
        d = hamming_and_cyclic_distances([c, c])
        assert d.d_h == 0 and d.degenerate

    def test_empty(self):
        with pytest.raises(OocError):
            hamming_and_cyclic_distances([])

    @given(families(max_v=16, max_n=3, min_w=2))
    def test_cyclic_distance_oracle(self, f):
        if is_nondegenerate(f):
            assert hamming_and_cyclic_distances(f.codewords).d_c == brute_cyclic_distance(list(f))


class TestCwcpc:
    def test_z11_to_cwcpc(self):
        code = ooc_to_cwcpc(Z11)
        assert code.d_h == 4 and code.d_c == 4
        back = cwcpc_to_ooc(code)
        assert (back.lambda_a, back.lambda_c) == (2, 3)
        assert back.bound == 3

    def test_z13(self):
        code = ooc_to_cwcpc(Z13)
        assert code.d_c == 4
        assert code.d_h == 2 * (3 - 1)

    def test_periodic_rejected(self):
        with pytest.raises(DegenerateError):
            ooc_to_cwcpc(construct_powers_of_two(3))

    def test_one_codeword(self):
        f = OocFamily.of(7, [[0, 1, 3]])
        back = cwcpc_to_ooc(ooc_to_cwcpc(f))
        assert back.lambda_c == 0

    def test_not_cyclically_permutable(self):
        c = Codeword(7, (0, 1, 3))
        code = ConstantWeightCode(7, 3, (c, shift(c, 2)), None, None, True)
        with pytest.raises(OocError):
            cwcpc_to_ooc(code)

    @given(families(max_v=20, max_n=3, min_w=2))
    def test_round_trip_keeps_lambdas(self, f):
        if not is_nondegenerate(f):
            return
        code = ooc_to_cwcpc(f)
        assert code.d_c == 2 * (f.w - max(f.lambda_a, f.lambda_c))
        if f.n > 1:
            assert code.d_h == 2 * (f.w - f.lambda_c)
        back = cwcpc_to_ooc(code)
        assert (back.lambda_a, back.lambda_c) == (f.lambda_a, f.lambda_c)


class TestClosure:
    def test_z11(self):
        code = cyclic_closure(Z11)
        assert len(set(code.codewords)) == 22
        assert code.d_h == 4

    def test_z13(self):
        code = cyclic_closure(Z13)
        assert len(code.codewords) == 26 and code.d_h == 4
        brute = min(len(set(x.support) ^ set(y.support)) for x, y in combinations(code.codewords, 2))
        assert brute == 4

    def test_degenerate(self):
        with pytest.raises(DegenerateError):
            cyclic_closure(OocFamily.of(8, [[0, 4]]))

    @given(families(max_v=16, max_n=3, min_w=2))
    def test_closure_distance(self, f):
        if not is_nondegenerate(f):
            return
        code = cyclic_closure(f)
        assert len(set(code.codewords)) == f.v * f.n
        assert code.d_h == 2 * f.w - 2 * max(f.lambda_a, f.lambda_c)


class TestDifferenceFamilies:
    def test_df(self):
        # (13,3,1)-DF
        assert check_df([[0, 1, 4], [0, 2, 7]], 13, 1)
        assert bool(check_df([[0, 1, 4], [0, 2, 8]], 13, 1)) == _is_df([[0, 1, 4], [0, 2, 8]], 13, 1)
        f = sdf_to_ooc([[0, 1, 4], [0, 2, 7]], 13, 1)
        assert (f.lambda_a, f.lambda_c) == (1, 1)

    def test_sdf(self):
        assert check_sdf(Z13.supports, 13, 1)
        f = sdf_to_ooc(construct_block(9, 3).supports, 9, 3)
        assert f.params == (9, 3, 3, 1, 2)
        with pytest.raises(OocError):
            sdf_to_ooc([[0, 1, 2], [0, 1, 3]], 13, 1)

    def test_sdf_short_orbit(self):
        assert not check_sdf([[0, 3, 6]], 9, 1)

    def test_rdf(self):
        # (15,3,3,1)-RDF relative to {0,5,10}
        assert check_rdf([[0, 1, 4], [0, 2, 8]], 15, 3, 1)
        assert check_rdf([[0, 1, 4], [0, 7, 9]], 15, 3, 1)
        assert not check_rdf([[0, 1, 2], [0, 3, 7]], 15, 3, 1)  # 1 repeats
        assert not check_rdf([[0, 1, 5], [0, 2, 9]], 15, 3, 1)  # 5 lies in the subgroup

    def test_sedf_paley_13(self):
        sets = [[1, 3, 4, 9, 10, 12], [2, 5, 6, 7, 8, 11]]
        assert check_sedf(sets, 13, 3)
        f = sedf_to_ooc(sets, 13, 3)
        assert f.params == (13, 6, 3, 3, 2)

    def test_sedf_paley_17(self):
        f = sedf_to_ooc(construct_paley(17).supports, 17, 4)
        assert f.params == (17, 8, 4, 4, 2)

    def test_sedf_overlap(self):
        with pytest.raises(OocError):
            check_sedf([[0, 1], [1, 2]], 7, 1)


def _is_df(sets, v, lam):
    counts = [0] * v
    for s in sets:
        for a in s:
            for b in s:
                if a != b:
                    counts[(a - b) % v] += 1
    return all(c == lam for c in counts[1:])


class TestCacIrs:
    def test_cac(self):
        assert check_cac(Z13)
        assert not check_cac(construct_powers_of_two(3))

    @given(families(max_n=4, min_w=2))
    def test_cac_iff_lambda_c_one(self, f):
        if f.n > 1:
            assert check_cac(f) == (f.lambda_c == 1)

    def test_irs(self):
        assert check_irs(OocFamily.from_bits(["100100100"]), 3, 3)
        assert check_irs(OocFamily.of(9, [[0, 4, 8]]), 3, 3)
        assert not check_irs(OocFamily.of(9, [[0, 1, 8]]), 3, 3)
        with pytest.raises(OocError):
            check_irs(Z13, 3, 4)


class TestPackings:
    def test_z13_round_trip(self):
        p = ooc_to_packing(Z13, 2)
        assert len(p.blocks) == 26 and p.full_orbits == 2
        assert packing_violations(13, 2, 1, p.blocks) == []
        back = packing_to_ooc(p)
        assert are_equivalent(back, Z13)

    def test_z15(self):
        p = ooc_to_packing(Z15, 2)
        assert len(p.blocks) == 30
        assert are_equivalent(packing_to_ooc(p), Z15)

    def test_exhaustive_pair_coverage(self):
        p = ooc_to_packing(Z13, 2)
        for pair in combinations(range(13), 2):
            assert sum(set(pair) <= set(b) for b in p.blocks) <= 1

    def test_short_orbit_dropped(self, caplog):
        base = [[0, 1, 4], [0, 2, 8], [0, 5, 10]]
        blocks = {tuple(sorted((x + s) % 15 for x in b)) for b in base for s in range(15)}
        assert len(blocks) == 35  # STS(15): two full orbits plus one of size 5
        p = CyclicPacking(15, 3, 2, 1, tuple(sorted(blocks)))
        assert sorted(size for _, size in packing_orbits(15, p.blocks)) == [5, 15, 15]
        with caplog.at_level(logging.WARNING):
            f = packing_to_ooc(p)
        assert "short orbit" in caplog.text
        assert f.n == 2 and f.params[:4] == (15, 3, 1, 1)

    def test_only_short_orbits(self):
        blocks = tuple(sorted({tuple(sorted((x + s) % 15 for x in (0, 5, 10))) for s in range(15)}))
        with pytest.raises(OocError):
            packing_to_ooc(CyclicPacking(15, 3, 2, 1, blocks))

    def test_degenerate_input(self):
        with pytest.raises(DegenerateError):
            ooc_to_packing(OocFamily.of(6, [[0, 1, 3], [1, 2, 4]]), 2)

    def test_not_a_packing(self):
        blocks = tuple(sorted({tuple(sorted((x + s) % 13 for x in b)) for b in ([0, 1, 4], [0, 1, 5]) for s in range(13)}))
        with pytest.raises(OocError):
            packing_to_ooc(CyclicPacking(13, 3, 2, 1, blocks))

    def test_t3(self):
        f = OocFamily.of(10, [[0, 1, 2, 4]])
        assert properness(f, 2, 0) == (True, True)
        p = ooc_to_packing(f, 3)
        assert packing_violations(10, 3, 1, p.blocks) == []
        assert are_equivalent(packing_to_ooc(p), f)
