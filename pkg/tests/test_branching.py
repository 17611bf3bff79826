import pytest

from sbc import branching as br
from sbc import wreath
from sbc.errors import NeedsOracleError
from sbc.partitions import Hook, binary_expansion, hooks_of
from sbc.snchars import hook_degree
from sbc.wreath import TRIVIAL, alpha, ext, ind, linear_label


def product_degree(labels):
    return 1 << sum(wreath.degree_exp(l) for l in labels)


# --- oracle ---------------------------------------------------------------


def test_p4_golden_decompositions():
    assert br.restrict_to_sylow(Hook(4, 0)).constituents == {
        (linear_label((0, 0)),): 1
    }
    assert br.restrict_to_sylow(Hook(4, 1)).constituents == {
        (linear_label((0, 1)),): 1,
        (ind(ext(TRIVIAL, 0), ext(TRIVIAL, 1)),): 1,
    }


def test_p8_golden_profiles():
    prof = br.restrict_to_sylow(Hook(8, 2)).profile()
    assert prof.distinct == {0: 1, 1: 2, 2: 3}
    assert prof.total == {0: 1, 1: 2, 2: 4}
    prof = br.restrict_to_sylow(Hook(8, 3)).profile()
    assert prof.distinct == {0: 1, 1: 3, 2: 5}
    assert prof.total == {0: 1, 1: 3, 2: 7}


def test_degree_sum_preserved():
    for n in list(range(1, 17)):
        for h in hooks_of(n):
            dec = br.restrict_to_sylow(h)
            total = sum(m * product_degree(k) for k, m in dec.constituents.items())
            assert total == hook_degree(h)
            assert all(m >= 1 for m in dec.constituents.values())


def test_multiplicity_single_label():
    h = Hook(4, 1)
    assert br.multiplicity(h, (linear_label((0, 1)),)) == 1
    assert br.multiplicity(h, (linear_label((0, 0)),)) == 0
    assert br.multiplicity(h, (ind(ext(TRIVIAL, 0), ext(TRIVIAL, 1)),)) == 1
    with pytest.raises(ValueError):
        br.multiplicity(h, (TRIVIAL,))


def test_oracle_cap():
    with pytest.raises(NeedsOracleError):
        br.restrict_to_sylow(Hook(64, 1))


def test_distinct_count_matches_profile():
    for n in (6, 8, 12):
        for h in hooks_of(n):
            prof = br.restrict_to_sylow(h).profile()
            for e in range(alpha(n) + 1):
                assert br.distinct_count(h, e) == prof.distinct.get(e, 0)
                assert br.distinct_count(h, e, limit=1) == min(
                    1, prof.distinct.get(e, 0)
                )


# --- linear formulas -------------------------------------------------------


def test_unique_linear_bits_small():
    assert br.unique_linear_bits(Hook(2, 0)) == (0,)
    assert br.unique_linear_bits(Hook(2, 1)) == (1,)
    assert br.unique_linear_bits(Hook(4, 1)) == (0, 1)
    assert br.unique_linear_bits(Hook(8, 0)) == (0, 0, 0)
    with pytest.raises(ValueError):
        br.unique_linear_bits(Hook(12, 1))


def test_unique_linear_bits_bijective():
    for k in (1, 2, 3, 4, 5):
        n = 1 << k
        seen = {br.unique_linear_bits(Hook(n, x)) for x in range(n)}
        assert len(seen) == n


def test_unique_linear_vs_oracle():
    for k in (1, 2, 3, 4):
        n = 1 << k
        for h in hooks_of(n):
            dec = br.restrict_to_sylow(h, select="linear").constituents
            assert dec == {(linear_label(br.unique_linear_bits(h)),): 1}


def test_linear_multiplicity_binomial():
    # single factor: 1 exactly when the factor leg equals the leg
    for k in (1, 2, 3):
        n = 1 << k
        for x in range(n):
            for x1 in range(n):
                expected = 1 if x1 == x else 0
                assert br.linear_multiplicity(Hook(n, x), (Hook(n, x1),)) == expected
    # two factors: binomial(1, y)
    assert br.linear_multiplicity(Hook(3, 1), (Hook(2, 1), Hook(1, 0))) == 1
    assert br.linear_multiplicity(Hook(3, 1), (Hook(2, 0), Hook(1, 0))) == 1
    assert br.linear_multiplicity(Hook(3, 0), (Hook(2, 1), Hook(1, 0))) == 0


def test_linear_profile_vs_oracle():
    for n in range(1, 15):
        for h in hooks_of(n):
            assert br.linear_profile(h) == br.restrict_to_sylow(
                h, select="linear"
            ).constituents


def test_linear_profile_nonempty():
    for n in range(1, 20):
        for h in hooks_of(n):
            assert br.linear_profile(h)


def test_degree_two_count_formula():
    assert br.degree_two_count(3, 2) == 2
    assert br.degree_two_count(3, 3) == 3
    for e in (2, 3, 4):
        n = 1 << e
        assert br.degree_two_count(e, 0) == 0
        assert br.degree_two_count(e, n - 1) == 0
        for x in range(1, n - 1):
            assert br.degree_two_count(e, x) > 0


def test_degree_two_count_vs_oracle():
    for e in (2, 3, 4):
        n = 1 << e
        for x in range(n):
            got = br.restrict_to_sylow(Hook(n, x)).profile().distinct.get(1, 0)
            assert got == br.degree_two_count(e, x)


def test_leg_one_degrees():
    assert br.leg_one_degrees(1) == (1,)
    assert br.leg_one_degrees(3) == (1, 2, 4)
    for k in (1, 2, 3, 4):
        prof = br.restrict_to_sylow(Hook(1 << k, 1)).profile()
        assert prof.distinct == {i: 1 for i in range(k)}
        assert prof.total == {i: 1 for i in range(k)}


# --- thresholds -------------------------------------------------------------


def test_t_rows_powers_of_two():
    assert [br.box_threshold_pow2(1, k) for k in range(1)] == [2]
    assert [br.box_threshold_pow2(2, k) for k in range(2)] == [4, 3]
    assert [br.box_threshold_pow2(3, k) for k in range(3)] == [8, 7, 7]
    assert [br.box_threshold_pow2(4, k) for k in range(6)] == [16, 15, 15, 15, 14, 13]


def test_t_row_interval():
    for e in (1, 2, 3, 4, 5):
        for k in range(alpha(1 << e) + 1):
            t = br.box_threshold_pow2(e, k)
            assert (1 << (e - 1)) < t <= (1 << e)


def test_t_row_monotone():
    for e in (2, 3, 4, 5):
        row = [br.box_threshold_pow2(e, k) for k in range(alpha(1 << e) + 1)]
        assert row == sorted(row, reverse=True)


def test_T_general():
    assert br.box_threshold(12, 0) == 12
    assert br.box_threshold(12, 1) == 11
    assert br.box_threshold(12, 3) == 10
    for n in range(1, 17):
        assert br.box_threshold(n, 0) == n
        for k in range(alpha(n) + 1):
            assert 1 <= br.box_threshold(n, k) <= n
    # powers of two agree with the tower recursion
    for e in (1, 2, 3, 4):
        for k in range(alpha(1 << e) + 1):
            assert br.box_threshold(1 << e, k) == br.box_threshold_pow2(e, k)


def test_T_monotone_in_k():
    for n in range(2, 17):
        row = [br.box_threshold(n, k) for k in range(alpha(n) + 1)]
        assert row == sorted(row, reverse=True)


def test_tau_values():
    assert [br.top_threshold(e) for e in range(1, 8)] == [2, 3, 7, 13, 26, 51, 102]
    for e in range(7, 21):
        assert br.top_threshold(e) == 2 * br.top_threshold(e - 1)


def test_tau_consistency():
    for n in (2, 4, 8, 12, 16, 24, 20, 14, 32):
        assert br.top_threshold_consistent(n)
    assert br.tau_sum(12) == 10
    assert br.box_threshold(12, alpha(12)) == 10


def test_boundary_corrections():
    assert br.boundary_correction(2, 1) == -1  # (3,1) has one degree-2 piece
    assert br.boundary_correction(3, 1) == -1  # (7,1) likewise
    assert br.boundary_correction(3, 2) == -1  # (7,1) unique degree-4 piece
    assert br.boundary_correction(4, 5) == 0  # (13,1^3) has two of degree 32


def test_thresholds_beyond_horizon(monkeypatch):
    monkeypatch.setenv("SBC_LEVEL_CAP", "4")
    # exponent-6 rows need the oracle at 2^5, which the cap now forbids
    with pytest.raises(NeedsOracleError):
        for k in range(alpha(1 << 6) + 1):
            br.box_threshold_pow2.__wrapped__(6, k)
    monkeypatch.delenv("SBC_LEVEL_CAP")


# --- structure checks -------------------------------------------------------


def test_membership_modes_agree():
    for n in (4, 8, 12):
        for h in hooks_of(n):
            for k in range(alpha(n) + 1):
                assert br.in_degree_set(h, k, "both") in (True, False)


def test_membership_examples():
    assert br.in_degree_set(Hook(8, 2), 2)
    assert not br.in_degree_set(Hook(8, 0), 1)
    for e in (2, 3, 4):
        assert br.in_degree_set(Hook(1 << e, 0), 0)


def test_degree_sets_and_boxes():
    for n in range(1, 17):
        for k in range(alpha(n) + 1):
            fast = set(br.degree_set(n, k))
            slow = {h for h in hooks_of(n) if br.distinct_count(h, k, limit=1) > 0}
            assert fast == slow, (n, k)


def test_inclusion():
    for n in range(1, 17):
        for k in range(alpha(n) + 1):
            for l in range(k + 1):
                assert br.degree_sets_nested(n, k, l)


def test_three_constituents():
    for n in range(4, 17):
        for k in range(2, alpha(n) + 1):
            assert br.interior_has_three(n, k)


def test_conjugate_twist():
    for n in range(1, 13):
        for h in hooks_of(n):
            assert br.conjugate_restriction_matches(h)
    # profiles of conjugate hooks coincide
    p1 = br.restrict_to_sylow(Hook(8, 2)).profile()
    p2 = br.restrict_to_sylow(Hook(8, 5)).profile()
    assert p1.distinct == p2.distinct and p1.total == p2.total


def test_sign_bits():
    assert br.sign_bits(0) == ()
    assert br.sign_bits(1) == (1,)
    assert br.sign_bits(3) == (1, 0, 0)
    # the sign twist fixes degrees
    for k in (2, 3):
        for label in wreath.irr_labels(k):
            twisted = wreath.tensor_with_linear(label, br.sign_bits(k))
            assert wreath.degree_exp(twisted) == wreath.degree_exp(label)
