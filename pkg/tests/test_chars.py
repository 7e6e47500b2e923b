import random

import pytest

from althecke.chars import (
    DIAG,
    NEXT_OPP,
    PREV_OPP,
    alt_class_polys,
    char_table,
    char_via_class_polys,
    class_polys,
    cute_identity,
    delta_coefficients,
    equiv_class_check,
    gamma_of_tableau,
    greene_identity,
    resolve_sigma,
    table_rows,
    technical_partner,
    twisted_char,
    twisted_char_by_tableaux,
    twisted_char_closed,
)
from althecke.combinat import (
    StdTableau,
    diagonal_hooks,
    eps_kappa,
    partitions_of,
    self_conjugate_partitions,
    std_tableaux,
    transposable_tableaux,
)
from althecke.hecke import a_elem
from althecke.scalars import (
    GaussianRational,
    RatFunc,
    TowerElem,
    alpha_coeff,
    q_minus_qinv,
    qint,
)
from althecke.specht import char_alt, char_T, twisted_trace
from althecke.symgroup import (
    all_permutations,
    alt_classes,
    from_word,
    identity,
    split_class_reps,
    w_of_composition,
)

from conftest import compositions_of, compositions_with_length


def test_gamma_factors_hand_example():
    t = StdTableau([[1, 2], [3]])
    rpt = gamma_of_tableau(t, (3,))
    assert [(i, tag) for i, tag, _ in rpt.factors] == [(1, DIAG), (2, NEXT_OPP)]
    q = TowerElem.from_scalar(RatFunc.q_power(1))
    assert rpt.factors[0][2] == q
    assert rpt.factors[1][2] == alpha_coeff(2)
    assert rpt.product == alpha_coeff(2).scale(RatFunc.q_power(1))

    t2 = StdTableau([[1, 3], [2]])
    rpt2 = gamma_of_tableau(t2, (3,))
    assert rpt2.product == alpha_coeff(2).scale(RatFunc.q_power(-1))

    assert gamma_of_tableau(t, (1, 1, 1)) is None


def test_gamma_prev_opp_case_appears():
    seen = set()
    for lam in self_conjugate_partitions(6):
        for kappa in compositions_of(6):
            for t in std_tableaux(lam):
                rpt = gamma_of_tableau(t, kappa)
                if rpt is not None:
                    seen.update(tag for _, tag, _ in rpt.factors)
    assert seen == {DIAG, PREV_OPP, NEXT_OPP}


def test_twisted_sum_examples():
    i = GaussianRational(0, 1)
    expect = TowerElem.gen(3).scale(RatFunc.q_power(-1) * RatFunc(i))
    assert twisted_char_by_tableaux((2, 1), (3,)) == expect
    assert twisted_char_by_tableaux((2, 1), (1, 1, 1)).is_zero()
    assert twisted_char_by_tableaux((3, 3, 3), (9,)).is_zero()


def test_sigma_is_plus_one():
    assert resolve_sigma() == 1


def test_closed_examples():
    i = GaussianRational(0, 1)
    expect = TowerElem.gen(3).scale(RatFunc.q_power(-1) * RatFunc(i))
    assert twisted_char_closed((2, 1), (3,)) == expect
    # the literal published constant flips by (-1)^((n-d)/2)
    assert twisted_char_closed((2, 1), (3,), "paper") == -expect
    assert twisted_char_closed((3, 3, 3), (7, 2)).is_zero()
    val = twisted_char_closed((4, 3, 3, 1), (3, 1, 7))
    coeff = RatFunc.q_power(-4) * RatFunc(eps_kappa((3, 1, 7)))
    assert val == TowerElem.monomial([7, 3], coeff)
    assert eps_kappa((3, 1, 7)) == 1


def test_technical_partner_pairing():
    # wherever two diagonal entries share a cycle block, the partner
    # cancels the whole factor product
    checked = 0
    for lam in self_conjugate_partitions(6):
        for kappa in compositions_of(6):
            for t in transposable_tableaux(lam, kappa):
                hit = technical_partner(t, kappa)
                if hit is None:
                    continue
                a, b, partner = hit
                checked += 1
                assert partner != t
                back = technical_partner(partner, kappa)
                assert back is not None and back[2] == t
                gt = gamma_of_tableau(t, kappa)
                gs = gamma_of_tableau(partner, kappa)
                assert gs is not None
                assert (gt.product + gs.product).is_zero()
    assert checked > 0


def test_greene_examples():
    one_chain = greene_identity((1,), (0, 1))
    assert one_chain[0] == one_chain[1]
    assert one_chain[1] == RatFunc.q_power(2) / qint(1)

    anti = greene_identity((0,), (2, 5))
    assert anti[0] == anti[1]
    assert anti[1].is_zero()

    vee = greene_identity((-1, 1), (3, -1, 4))
    assert vee[0] == vee[1]


def test_greene_random_cases():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(0, 5)
        rels = tuple(rng.choice((1, -1, 0)) for _ in range(m))
        contents = rng.sample(range(-8, 9), m + 1)
        lhs, rhs = greene_identity(rels, contents)
        assert lhs == rhs, (rels, contents)


@pytest.mark.parametrize("m", range(6))
def test_cute_identity(m):
    lhs, rhs = cute_identity(m)
    assert lhs == rhs
    if m == 0:
        assert lhs == RatFunc(1)
    if m == 1:
        assert lhs == RatFunc.q_power(-1) * qint(2) / qint(1)


def test_class_polys_examples():
    w = w_of_composition((2, 1))
    assert class_polys(w).as_dict() == {(2, 1): RatFunc(1)}
    assert class_polys(identity(4)).as_dict() == {(1, 1, 1, 1): RatFunc(1)}
    f = class_polys(from_word([1, 2, 1], 3)).as_dict()
    assert f == {(2, 1): RatFunc(1), (3,): q_minus_qinv()}


def test_class_polys_soundness_and_degree():
    for n in (2, 3, 4):
        for w in all_permutations(n):
            f = class_polys(w).as_dict()
            for ctype, poly in f.items():
                wc = w_of_composition(ctype)
                assert wc.length() <= w.length()
                coeffs = delta_coefficients(poly)
                assert coeffs is not None
                assert max(coeffs) <= w.length() - wc.length()
            for lam in partitions_of(n):
                assert char_via_class_polys(lam, w) == char_T(lam, w)


def test_alt_class_polys_examples():
    for cc, rep in alt_classes(4):
        g = alt_class_polys(rep).as_dict()
        assert g == {(cc.cycle_type, cc.alt_sign): RatFunc(1)}
    g = alt_class_polys(identity(4)).as_dict()
    assert g == {((1, 1, 1, 1), "whole"): RatFunc(1)}


def test_alt_class_polys_reconstruction():
    for n in (3, 4):
        for w in all_permutations(n):
            if not w.is_even():
                continue
            g = alt_class_polys(w).as_dict()
            for lam in partitions_of(n):
                lhs = char_alt(lam, a_elem(w))
                rhs = TowerElem.zero()
                for (ctype, sign), c in g.items():
                    wp, wm = split_class_reps(ctype)
                    rep = wm if sign == "minus" else wp
                    rhs = rhs + char_alt(lam, a_elem(rep)).scale(c)
                assert lhs == rhs


def test_twisted_char_examples():
    lam = (2, 1)
    wp, wm = split_class_reps((3,))
    vp, _ = twisted_char(lam, wp)
    vm, _ = twisted_char(lam, wm)
    assert vm == -vp
    # even part in the cycle type forces zero
    v, a = twisted_char((2, 2), from_word([1], 4).conj_s(2))
    assert v.is_zero() and a.is_zero()


def test_twisted_char_matches_oracle_small():
    # odd permutations included: they appear as recursion intermediates
    for n in (3, 4):
        for lam in self_conjugate_partitions(n):
            for w in all_permutations(n):
                value, a_poly = twisted_char(lam, w)
                assert value == twisted_trace(lam, w)
                coeffs = delta_coefficients(a_poly)
                assert coeffs is not None
                if coeffs:
                    h, d = diagonal_hooks(lam)
                    assert max(coeffs) <= w.length() - w_of_composition(h).length()


def test_equiv_class_example_two_singletons():
    rpt = equiv_class_check((2, 1), (3,), 1)
    assert rpt.passed and rpt.applicable
    assert rpt.class_count == 2
    assert rpt.class_sizes == (1, 1)


def test_equiv_class_not_applicable():
    rpt = equiv_class_check((2, 2), (4,), 1)
    assert not rpt.applicable
    assert rpt.passed


def test_equiv_class_disconnected_blocks_vanish():
    rpt = equiv_class_check((3, 2, 1), (3, 3), 2)
    assert rpt.applicable and rpt.passed
    assert 0 in rpt.eps_x_values


def test_equiv_class_product_sign_matches_inversions():
    # on hook-sorted compositions the poset signs multiply to the
    # inversion-count sign of the composition
    for n in range(3, 8):
        for lam in self_conjugate_partitions(n):
            h, d = diagonal_hooks(lam)
            for kappa in compositions_with_length(n, d):
                if tuple(sorted(kappa, reverse=True)) != h:
                    continue
                total = 1
                for z in range(1, d + 1):
                    rpt = equiv_class_check(lam, kappa, z)
                    assert rpt.applicable and rpt.passed
                    eps_set = set(rpt.eps_x_values)
                    assert len(eps_set) == 1
                    total *= eps_set.pop()
                assert total == eps_kappa(kappa)


def test_table_rows_plan():
    assert table_rows(4) == [("pair", (4,)), ("pair", (3, 1)),
                             ("plus", (2, 2)), ("minus", (2, 2))]


def test_char_table_small():
    t2 = char_table(2)
    assert len(t2.rows) == 1 and len(t2.columns) == 1
    assert t2.rows[0].cells[0] == TowerElem.one()

    t3 = char_table(3)
    assert len(t3.rows) == 3 and len(t3.columns) == 3
    assert [cc.label() for cc, _ in t3.columns] == ["(1,1,1)", "(3)+", "(3)-"]

    t4 = char_table(4)
    assert [row.label() for row in t4.rows] == ["[4]", "[3,1]", "[2,2]+", "[2,2]-"]
    assert len(t4.columns) == 4


def test_char_table_cells_match_trace_definitions():
    from althecke.specht import char_split

    t4 = char_table(4)
    for row in t4.rows:
        for (cc, rep), cell in zip(t4.columns, row.cells):
            aw = a_elem(rep)
            if row.kind == "pair":
                assert cell == char_alt(row.shape, aw)
            else:
                assert cell == char_split(row.shape, 1 if row.kind == "plus" else -1, aw)


def test_char_table_json_deterministic():
    a = char_table(3).to_json()
    b = char_table(3).to_json()
    assert a == b and '"sigma":1' in a


def test_char_table_guard():
    with pytest.raises(ValueError):
        char_table(13)
    with pytest.raises(ValueError):
        char_table(1)
