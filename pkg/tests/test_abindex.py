from itertools import combinations

import pytest

from posetcalc import (
    DenseTableTooLarge,
    NcPoly,
    TrivialPoset,
    YPoly,
    ab_index,
    ab_index_tilde,
    build_poset,
    ex_ab_index,
    ex_ab_index_tilde,
    expsi_via_beta_e,
    flag_alpha,
    flag_beta,
    iota,
    omega,
    random_graded_poset,
)
from posetcalc.abindex import (
    AB_METHODS,
    EX_METHODS,
    EX_TILDE_METHODS,
    alpha_from_beta,
    omega_psi_closed_form,
    omega_psi_tilde_closed_form,
)
from posetcalc.poset import chains_to_top

a, b = NcPoly.word("a"), NcPoly.word("b")
amb = a - b
one_plus_y = YPoly([1, 1])


def nc(data):
    return NcPoly.from_dict(data)


def alpha_oracle(P, S):
    """Count element sets hitting exactly the ranks in S that form a chain."""
    ranks = sorted(S)
    levels = [[v for v in range(len(P)) if P.rank[v] == r] for r in ranks]
    count = 0

    def walk(i, prev):
        nonlocal count
        if i == len(levels):
            count += 1
            return
        for v in levels[i]:
            if prev is None or P.lt(prev, v):
                walk(i + 1, v)

    walk(0, None)
    return count


EXPSI_P = nc({"aa": [1], "ba": [0, 3, 2], "ab": [2, 3], "bb": [0, 0, 1]})
EXPSI_TILDE_P = nc({"a": [1, 3, 2], "b": [2, 3, 1]})
EXPSI_TILDE_Q = nc({"aa": [1, 2, 0, -1], "ab": [1, 2, 2, 1], "ba": [1, 2, 2, 1], "bb": [-1, 0, 2, 1]})


def expsi_Q_from_printed_sum():
    """The unexpanded chain sum for Q exactly as displayed in the worked example."""
    y = YPoly.gen()
    return (
        amb * amb * amb
        + b * amb * amb * YPoly([1, 2, 0, -1])
        + (amb * b * amb + amb * amb * b) * (one_plus_y * 2)
        + (b * b * amb + b * amb * b + amb * b * b) * (one_plus_y ** 2 * 2)
        + b * b * b * (one_plus_y ** 3 * 2)
    )


# -- flag vectors -------------------------------------------------------------------------


def test_flag_tables(P, Q):
    aP, bP = flag_alpha(P), flag_beta(P)
    assert aP[set()] == 1 and aP[{1}] == 3
    assert bP[set()] == 1 and bP[{1}] == 2
    aQ, bQ = flag_alpha(Q), flag_beta(Q)
    assert (aQ[{1}], aQ[{2}], aQ[{1, 2}]) == (2, 2, 2)
    assert (bQ[set()], bQ[{1}], bQ[{2}], bQ[{1, 2}]) == (1, 1, 1, -1)


@pytest.mark.parametrize("seed", range(30))
def test_alpha_matches_oracle(seed):
    P = random_graded_poset(seed, 4, 4)
    alpha = flag_alpha(P)
    for k in range(P.n + 1):
        for S in combinations(range(P.n), k):
            assert alpha[S] == alpha_oracle(P, S)
    assert alpha[{0}] == 1


def test_flag_invariants(random_suite):
    for P in random_suite[:150]:
        alpha = flag_alpha(P)
        beta = flag_beta(P, alpha)
        assert alpha_from_beta(beta) == alpha
        assert sum(alpha.values) == sum(1 for _ in chains_to_top(P))
        assert all(v == 0 for T, v in beta.items() if T & 1)
        assert all(v >= 0 for v in alpha.values)


def test_dense_table_limit():
    names = [str(i) for i in range(26)]
    chain = build_poset(names, list(zip(names, names[1:])))
    with pytest.raises(DenseTableTooLarge):
        flag_alpha(chain)


# -- ab-index -------------------------------------------------------------------------------


@pytest.mark.parametrize("method", AB_METHODS)
def test_psi_examples(method, P, Q, chain2):
    assert ab_index(P, method) == nc({"aa": [1], "ab": [2]})
    assert ab_index(Q, method) == nc({"aaa": [1], "aab": [1], "aba": [1], "abb": [-1]})
    assert ab_index(chain2, method) == a


@pytest.mark.parametrize("method", AB_METHODS)
def test_psi_tilde_examples(method, P, Q, chain2):
    assert ab_index_tilde(P, method) == nc({"a": [1], "b": [2]})
    assert ab_index_tilde(Q, method) == nc({"aa": [1], "ab": [1], "ba": [1], "bb": [-1]})
    assert ab_index_tilde(chain2, method) == NcPoly.one()


def test_trivial_poset(trivial):
    assert ab_index(trivial) == NcPoly.one()
    assert ab_index(trivial, "beta") == NcPoly.one()
    assert ex_ab_index(trivial, "chains") == NcPoly.one()
    assert ex_ab_index(trivial, "omega") == NcPoly.one()
    with pytest.raises(TrivialPoset):
        ab_index(trivial, "recursive")
    with pytest.raises(TrivialPoset):
        ex_ab_index(trivial, "recursive")
    with pytest.raises(TrivialPoset):
        ab_index_tilde(trivial)
    with pytest.raises(TrivialPoset):
        ex_ab_index_tilde(trivial)


def test_unknown_method(P):
    with pytest.raises(ValueError):
        ex_ab_index(P, "magic")


# -- extended ab-index ----------------------------------------------------------------------


@pytest.mark.parametrize("method", EX_METHODS)
def test_expsi_P(method, P, chain2):
    assert ex_ab_index(P, method) == EXPSI_P
    assert ex_ab_index(chain2, method) == nc({"a": [1], "b": [0, 1]})


@pytest.mark.parametrize("method", EX_METHODS)
def test_expsi_Q(method, Q):
    assert ex_ab_index(Q, method) == expsi_Q_from_printed_sum()


def test_expsi_Q_printed_expansion(Q):
    f = ex_ab_index(Q)
    printed = {
        "aaa": [1], "aab": [1, 2], "aba": [1, 2], "abb": [-1, 0, 2],
        "baa": [0, 2, 0, -1], "bbb": [0, 0, 0, 1],
    }
    for w, c in printed.items():
        assert f.coeff(w) == YPoly(c)
    # bab and bba are printed as y^2 + 2y^3; the printed chain sum, the beta
    # table and the tilde index all force 2y^2 + y^3
    assert f.coeff("bab") == f.coeff("bba") == YPoly([0, 0, 2, 1])
    assert expsi_Q_from_printed_sum().coeff("bab") != YPoly([0, 0, 1, 2])
    assert iota(f) == EXPSI_TILDE_Q


@pytest.mark.parametrize("method", EX_TILDE_METHODS)
def test_expsi_tilde_examples(method, P, Q, chain2):
    assert ex_ab_index_tilde(P, method) == EXPSI_TILDE_P
    assert ex_ab_index_tilde(Q, method) == EXPSI_TILDE_Q
    assert ex_ab_index_tilde(chain2, method) == NcPoly.one() * one_plus_y


def test_expsi_via_beta_e_examples(P, Q, chain2):
    assert expsi_via_beta_e(P) == EXPSI_P
    assert expsi_via_beta_e(Q) == ex_ab_index(Q, "chains")
    assert expsi_via_beta_e(chain2) == nc({"a": [1], "b": [0, 1]})


def test_beta_table_omega_column(Q):
    beta = flag_beta(Q)
    total = NcPoly.zero(3)
    for T, w in ((set(), "aaa"), ({1}, "aba"), ({2}, "aab"), ({1, 2}, "abb")):
        total = total + omega(NcPoly.word(w)) * beta[T]
    assert total == ex_ab_index(Q, "chains")


# -- path agreement and recursion closed forms (small sample; full suite in acceptance) -------


def test_paths_agree(small_random_suite):
    for P in small_random_suite:
        ref = ex_ab_index(P, "chains")
        for m in EX_METHODS[1:]:
            assert ex_ab_index(P, m) == ref, (P.names, P.covers, m)
        assert expsi_via_beta_e(P) == ref
        psi = ab_index(P)
        assert ref.specialize_y(0) == psi
        for m in AB_METHODS[1:]:
            assert ab_index(P, m) == psi
        tilde = ex_ab_index_tilde(P, "chains")
        for m in EX_TILDE_METHODS[1:]:
            assert ex_ab_index_tilde(P, m) == tilde
        assert tilde == iota(ref)
        assert tilde.specialize_y(0) == ab_index_tilde(P)


def test_omega_recursion_closed_forms(P, Q, small_random_suite):
    for X in [P, Q, *small_random_suite]:
        assert omega(ab_index(X)) == omega_psi_closed_form(X)
        assert omega(ab_index_tilde(X)) == omega_psi_tilde_closed_form(X)


def test_coefficients_are_homogeneous_and_y_free(random_suite):
    for P in random_suite[:100]:
        psi = ab_index(P)
        assert psi.degree == P.n and psi.is_y_free()
