import math

import pytest

from torsionnil.construct import (
    BlockParams,
    Variant,
    build_canonical_A,
    build_N,
    build_T,
    choose_params,
    descend_step,
    expected_charpoly,
    valid_params,
)
from torsionnil.decompose import torsion_order
from torsionnil.errors import ParamOutOfRange, RankConditionViolated
from torsionnil.field import GF, QQ
from torsionnil.jordan import jordan_block, jordan_matrix
from torsionnil.linalg import Matrix, Polynomial, charpoly, inverse, rank

from conftest import EX1_A, EX1_N, EX2_A, EX2_N

PLAIN, PRIME = Variant.PLAIN, Variant.PRIME


def x_pow(k, c=0, field=QQ):
    return Polynomial.x_pow(k, field, c)


def def_n_plain(n, s, r, field=QQ):
    """N_{s,r} transcribed term by term from its defining sums."""
    if s == 0:
        return Matrix.from_units(n, field, [(1, n, -1)])
    terms = []
    for i in range(n - 2 * s - r, n - s - r - 2 + 1):
        terms += [(i + 1, i, 1), (i + 1 + s + r + 1, i, 1)]
    terms.append((1, n - s - r - 1, 1))
    for i in range(n - s, n):
        terms += [(i + 1, i, -1), (i + 1 - s - r - 1, i, -1)]
    terms.append((1, n, -1))
    return Matrix.from_units(n, field, terms)


def test_params_validation():
    BlockParams(4, 1, 0)
    with pytest.raises(ParamOutOfRange):
        BlockParams(4, 2, 0)  # 2(s+1) > n
    with pytest.raises(ParamOutOfRange):
        BlockParams(6, 2, 1)  # 1+2s+r = 6
    with pytest.raises(ParamOutOfRange):
        BlockParams(6, -1, 0)


def test_valid_params_enumeration():
    got = {(p.s, p.r, p.variant) for p in valid_params(6)}
    want = {(s, r, v) for s in range(3) for r in range(6) for v in (PLAIN, PRIME) if 1 + 2 * s + r < 6}
    assert got == want


def test_canonical_A_examples():
    assert build_canonical_A(4, 1, QQ) == Matrix(QQ, EX1_A)
    assert build_canonical_A(6, 2, QQ) == Matrix(QQ, EX2_A)
    assert build_canonical_A(5, 0, QQ) == jordan_block(5, QQ)
    with pytest.raises(RankConditionViolated):
        build_canonical_A(4, 2, QQ)


def test_N_examples():
    assert build_N(BlockParams(4, 1, 0), QQ) == Matrix(QQ, EX1_N)
    assert build_N(BlockParams(4, 1, 0), QQ) == Matrix.from_units(4, QQ, [(1, 2, 1), (2, 3, -1), (4, 3, -1), (1, 4, -1)])
    assert build_N(BlockParams(6, 2, 0), QQ) == Matrix(QQ, EX2_N)
    assert build_N(BlockParams(5, 0, 2), QQ) == Matrix.from_units(5, QQ, [(1, 5, -1)])


def test_N_matches_defining_sums():
    for n in range(2, 13):
        for p in valid_params(n):
            if p.variant is PLAIN:
                assert build_N(p, QQ) == def_n_plain(p.n, p.s, p.r)


def test_prime_variant_flips_signs_across_the_range():
    # N' = Q N Q with Q = -1 on i..j: an entry changes sign iff exactly one index is in i..j
    for n in range(4, 13):
        for p in valid_params(n):
            if p.variant is not PRIME or p.s == 0:
                continue
            lo, hi = n - 2 * p.s - p.r, n - p.s - p.r - 1
            plain = build_N(BlockParams(n, p.s, p.r, PLAIN), QQ)
            flipped = Matrix(QQ, [
                [-plain[i, j] if (lo <= i <= hi) != (lo <= j <= hi) else plain[i, j] for j in range(1, n + 1)]
                for i in range(1, n + 1)
            ])
            assert build_N(p, QQ) == flipped


def test_T_examples():
    assert charpoly(build_T(BlockParams(4, 1, 0), QQ)) == x_pow(4, -1)
    assert charpoly(build_T(BlockParams(6, 2, 0), QQ)) == x_pow(6, -1)
    for v in (PLAIN, PRIME):
        t = build_T(BlockParams(7, 0, 3, v), QQ)
        assert t == Matrix.from_units(7, QQ, [(k + 1, k, 1) for k in range(1, 7)] + [(1, 7, 1)])


def test_expected_charpoly_examples():
    assert expected_charpoly(BlockParams(4, 1, 0)) == (x_pow(2, -1) * x_pow(2, 1)) == x_pow(4, -1)
    assert expected_charpoly(BlockParams(9, 3, 0)) == x_pow(9, -1)
    p = BlockParams(10, 4, 0)
    assert expected_charpoly(p) == x_pow(5, 1) * x_pow(5, -1) == x_pow(10, -1)
    assert charpoly(build_T(p, QQ)) == x_pow(10, -1)


def test_polynomial_product_examples():
    assert x_pow(2, -1) * x_pow(2, 1) == x_pow(4, -1)
    assert Polynomial(QQ, [-1, 1]) * x_pow(2, 1) == Polynomial(QQ, [-1, 1, -1, 1])


def test_rank_of_canonical_A_and_rank_condition():
    for n in range(2, 15):
        for s in range(n):
            rk = rank(jordan_matrix([n - s] + [1] * s, QQ))
            assert rk == n - s - 1
            assert (2 * rk >= n) == (2 * (s + 1) <= n)


def test_trace_is_preserved():
    for n in range(2, 13):
        for p in valid_params(n):
            assert build_T(p, QQ).trace() == 0 == build_canonical_A(n, p.s, QQ).trace()


def test_five_cases_all_present_up_to_14():
    cases = set()
    for n in range(2, 15):
        for p in valid_params(n):
            if p.s % 3 == 0:
                cases.add("1")
            elif p.s % 3 == 1:
                cases.add("2.1" if (p.variant is PLAIN) == (p.alpha % 2 == 0) else "2.2")
            else:
                cases.add("3.1" if (p.variant is PLAIN) == (p.alpha % 2 == 0) else "3.2")
    assert cases == {"1", "2.1", "2.2", "3.1", "3.2"}


@pytest.mark.parametrize(
    "m, s, r, variant, poly, d",
    [
        (4, 1, 0, PLAIN, x_pow(4, -1), 4),
        (6, 2, 0, PLAIN, x_pow(6, -1), 6),
        (5, 1, 1, PLAIN, x_pow(2, 1) * x_pow(3, -1), 12),
        (5, 0, 0, PLAIN, x_pow(5, -1), 5),
        (9, 3, 0, PLAIN, x_pow(9, -1), 9),
    ],
)
def test_choose_params_examples(m, s, r, variant, poly, d):
    plan = choose_params(m, s, QQ)
    assert (plan.params.r, plan.params.variant) == (r, variant)
    assert plan.expected_charpoly == poly
    assert plan.torsion_exponent == d
    assert plan.big == m - s


def test_exponent_for_m_congruent_3_mod_4():
    # m = 7 = 4*1 + 3, s = 1: charpoly (x^4 + 1)(x^3 - 1); the minimal order is lcm(8, 3)
    plan = choose_params(7, 1, QQ)
    assert plan.expected_charpoly == x_pow(4, 1) * x_pow(3, -1)
    t = build_T(plan.params, QQ)
    assert not (t ** math.lcm(6, 3)).is_identity()
    assert plan.torsion_exponent == 24 == torsion_order(t)


def test_choose_params_sweep_char0():
    for m in range(2, 15):
        for s in range(0, m // 2):
            plan = choose_params(m, s, QQ)
            t = build_T(plan.params, QQ)
            assert charpoly(t) == plan.expected_charpoly
            # independent minimal order by upward scan
            assert torsion_order(t) == plan.torsion_exponent
            assert plan.expected_charpoly.divides(x_pow(plan.torsion_exponent, -1))
            assert abs(plan.expected_charpoly[0]) == 1


@pytest.mark.parametrize("field", [GF(2), GF(3), GF(5), GF(7)], ids=str)
def test_choose_params_sweep_char_p(field):
    for m in range(2, 12):
        for s in range(0, m // 2):
            plan = choose_params(m, s, field)
            t = build_T(plan.params, field)
            assert torsion_order(t) == plan.torsion_exponent


def test_choose_params_rejects_rank_violation():
    with pytest.raises(RankConditionViolated):
        choose_params(4, 2, QQ)


def test_descent_example_to_s0():
    P, q = descend_step(BlockParams(8, 3, 0, PLAIN))
    assert q == BlockParams(8, 0, 3, PRIME)
    cycle = Matrix.from_units(8, QQ, [(k + 1, k, 1) for k in range(1, 8)] + [(1, 8, 1)])
    assert inverse(P) @ build_T(BlockParams(8, 3, 0, PLAIN), QQ) @ P == cycle == build_T(q, QQ)


def test_descent_examples_n14():
    p = BlockParams(14, 4, 0, PLAIN)
    P, q = descend_step(p)
    assert q == BlockParams(14, 1, 3, PRIME)
    assert inverse(P) @ build_T(p, QQ) @ P == build_T(q, QQ)
    both = x_pow(5, 1) * x_pow(9, -1)
    assert charpoly(build_T(p, QQ)) == both == charpoly(build_T(q, QQ))

    P2, q2 = descend_step(BlockParams(14, 4, 0, PRIME))
    assert q2 == BlockParams(14, 1, 3, PLAIN)
    assert inverse(P2) @ build_T(BlockParams(14, 4, 0, PRIME), QQ) @ P2 == build_T(q2, QQ)


def test_descent_needs_three_singletons():
    with pytest.raises(ParamOutOfRange):
        descend_step(BlockParams(8, 2, 0))


@pytest.mark.parametrize("field", [GF(2), GF(3)], ids=str)
def test_descent_over_small_fields(field):
    for n in range(8, 13):
        for p in valid_params(n):
            if p.s >= 3:
                P, q = descend_step(p, field)
                assert inverse(P) @ build_T(p, field) @ P == build_T(q, field)
