"""Resultants in two variables: Sylvester matrices, certificates, criteria."""

import random

import pytest
import sympy

from skewres.errors import (
    DegreeTooLow,
    NonCommutingPoint,
    SingularSystem,
    ZeroPolynomial,
)
from skewres.polyone import ONE_P, Poly1, RealPoly, ZERO_P, real_divmod
from skewres.polytwo import VAR_Q1, VAR_Q2, Poly2
from skewres.quaternion import I, J, K, ONE, ZERO, Quaternion, Rational
from skewres.resultant import (
    BezoutCertificate,
    ResultantReport,
    bezout_certificate,
    check_common_zero,
    check_left_factor_criterion,
    classical_resultant,
    discriminant_q1,
    discriminant_q2,
    kernel_cofactors,
    resultant,
    sylvester,
    sylvester_q1,
    sylvester_q2,
    symmetrized_resultant_criterion,
)


def rand_quat(rng, span=2):
    return Quaternion(*(Rational(rng.randint(-span, span)) for _ in range(4)))


def rand_poly2(rng, d1, d2, span=2):
    while True:
        grid = [[rand_quat(rng, span) for _ in range(d2 + 1)] for _ in range(d1 + 1)]
        p = Poly2(grid)
        if p.deg_q1 == d1 and p.deg_q2 == d2:
            return p


def linear(var, a):
    return (VAR_Q1 if var == "q1" else VAR_Q2) - Poly2.const(a)


# the running pair: both factors share the left root i of the q1 slot
P_GOLD = linear("q1", I) * linear("q2", J)
Q_GOLD = linear("q1", I) * linear("q2", K)


def test_golden_sylvester_q1_matrix():
    mat = sylvester_q1(P_GOLD, Q_GOLD)
    assert (mat.nrows, mat.ncols) == (2, 2)
    top_p = Poly1([-J, ONE]).scale_left(-I)
    top_q = Poly1([-K, ONE]).scale_left(-I)
    assert mat.entry(0, 0).num == top_p and mat.entry(0, 1).num == top_q
    assert mat.entry(1, 0).num == Poly1([-J, ONE])
    assert mat.entry(1, 1).num == Poly1([-K, ONE])


def test_golden_resultants_both_variables():
    r1 = resultant(P_GOLD, Q_GOLD, "q1")
    assert r1.is_zero
    assert r1.representative == ZERO_P

    r2 = resultant(P_GOLD, Q_GOLD, "q2")
    assert not r2.is_zero
    assert r2.sdet == (RealPoly([2, 0, 4, 0, 2]), RealPoly([1]))
    rep = r2.representative
    assert rep is not None and not rep.is_zero
    assert rep.eval(I) == ZERO
    # vanishing is constant on the whole sphere of i
    assert rep.eval(Quaternion(0, 0, 1, 0)) == ZERO


def test_sylvester_layout_and_errors():
    mat = sylvester(VAR_Q1, VAR_Q1, "q1")
    assert [[e.num for e in row] for row in mat.entries] == [
        [ZERO_P, ZERO_P],
        [ONE_P, ONE_P],
    ]
    with pytest.raises(ZeroPolynomial):
        sylvester(Poly2(), VAR_Q1, "q1")
    with pytest.raises(ZeroPolynomial):
        sylvester_q2(VAR_Q1, Poly2())
    with pytest.raises(ValueError):
        sylvester(VAR_Q1, VAR_Q1, "q3")
    rng = random.Random(11)
    p = rand_poly2(rng, 2, 1)
    q = rand_poly2(rng, 1, 2)
    assert sylvester_q1(p, q).nrows == 3
    assert sylvester_q2(p, q).nrows == 3


def test_degenerate_degree_conventions():
    # both constant in q1: empty matrix, class of one
    r = resultant(linear("q2", J), linear("q2", K) * linear("q2", K), "q1")
    assert r.sylvester.nrows == 0
    assert not r.is_zero
    assert r.sdet == (RealPoly([1]), RealPoly([1]))
    assert r.representative == ONE_P

    # deg 0 against deg 2: a 2x2 band of the constant view alone
    p = linear("q2", J)
    q = linear("q1", I) * linear("q1", I)
    r = resultant(p, q, "q1")
    assert r.sylvester.nrows == 2
    assert r.sylvester.entry(0, 1).is_zero and r.sylvester.entry(1, 0).is_zero
    assert r.sylvester.entry(0, 0).num == Poly1([-J, ONE])
    # the class is that of (q2 - j)^{*2}
    assert r.sdet == (RealPoly([1, 0, 2, 0, 1]), RealPoly([1]))


def test_resultant_against_self_vanishes():
    rng = random.Random(23)
    for _ in range(3):
        p = rand_poly2(rng, rng.randint(1, 2), rng.randint(1, 2))
        assert resultant(p, p, "q1").is_zero
        assert resultant(p, p, "q2").is_zero


def test_common_left_factor_forces_zero_resultant():
    rng = random.Random(5)
    for var in ("q1", "q2"):
        for _ in range(4):
            a = rand_quat(rng, 1)
            x = rand_poly2(rng, 1, 1)
            y = rand_poly2(rng, 1, 1)
            p = linear(var, a) * x
            q = linear(var, a) * y
            assert resultant(p, q, var).is_zero


def test_left_factor_criterion_report():
    rep = check_left_factor_criterion(
        P_GOLD, Q_GOLD, q1_candidates=(I, J), q2_candidates=(J, K)
    )
    # only i is a common left root in q1; j and k each divide one side in q2
    assert rep.q1_factors == ((I, True),)
    assert rep.q2_factors == ()
    assert rep.holds
    with pytest.raises(ZeroPolynomial):
        check_left_factor_criterion(Poly2(), Q_GOLD)


def test_kernel_cofactors_on_singular_pairs():
    rng = random.Random(31)
    for var in ("q1", "q2"):
        for _ in range(3):
            a = rand_quat(rng, 1)
            p = linear(var, a) * rand_poly2(rng, 1, 1)
            q = linear(var, a) * rand_poly2(rng, 1, 1)
            cert = kernel_cofactors(p, q, var)
            assert cert is not None
            assert cert.target == ZERO_P
            assert not cert.h.is_zero and not cert.k.is_zero
            assert (p * cert.h + q * cert.k).is_zero
            assert cert.h.deg(var) < q.deg(var)
            assert cert.k.deg(var) < p.deg(var)


def test_kernel_cofactors_none_when_resultant_nonzero():
    assert kernel_cofactors(P_GOLD, Q_GOLD, "q2") is None


def test_golden_kernel_cofactors_shape():
    cert = kernel_cofactors(P_GOLD, Q_GOLD, "q1")
    # h kills the (q2 - k) column, k the (q2 - j) one, up to a right unit
    assert cert.h.deg_q1 == 0 and cert.k.deg_q1 == 0
    assert (P_GOLD * cert.h + Q_GOLD * cert.k).is_zero


def test_bezout_certificate_exactness():
    rng = random.Random(43)
    checked = 0
    for var in ("q1", "q2"):
        for _ in range(4):
            p = rand_poly2(rng, rng.randint(1, 2), rng.randint(1, 2))
            q = rand_poly2(rng, rng.randint(1, 2), rng.randint(1, 2))
            rr = resultant(p, q, var)
            if rr.is_zero:
                continue
            cert = bezout_certificate(p, q, var)
            other = "q2" if var == "q1" else "q1"
            assert not cert.target.is_zero
            assert p * cert.h + q * cert.k == Poly2.from_poly1(cert.target, other)
            assert cert.h.deg(var) < q.deg(var)
            assert cert.k.deg(var) < p.deg(var)
            num, _ = rr.sdet
            assert real_divmod(cert.target.symm(), num)[1].is_zero
            checked += 1
    assert checked >= 6


def test_bezout_diagonal_toy():
    cert = bezout_certificate(VAR_Q1, Poly2.const(ONE), "q1")
    assert cert.h.is_zero
    assert cert.k == Poly2.const(ONE)
    assert cert.target == ONE_P


def test_bezout_errors():
    with pytest.raises(SingularSystem):
        bezout_certificate(P_GOLD, Q_GOLD, "q1")
    with pytest.raises(DegreeTooLow):
        bezout_certificate(linear("q2", J), linear("q2", K), "q1")


def test_common_zero_report():
    # (i, b) with b in the slice of i is a common zero of the golden pair
    rep = check_common_zero(P_GOLD, Q_GOLD, I, Quaternion(2, 5, 0, 0) * I + Quaternion(3))
    assert rep.hypothesis_met
    assert rep.holds
    assert rep.sdet_q1_at_b == ZERO and rep.sdet_q2_at_a == ZERO
    assert rep.rep_q1_at_b == ZERO and rep.rep_q2_at_a == ZERO

    miss = check_common_zero(P_GOLD, Q_GOLD, Quaternion(5), I)
    assert not miss.hypothesis_met
    assert miss.holds is None

    with pytest.raises(NonCommutingPoint):
        check_common_zero(P_GOLD, Q_GOLD, I, J)


def test_symmetrized_resultant_criterion():
    rep = symmetrized_resultant_criterion(P_GOLD, Q_GOLD, "q1")
    assert rep.applies and rep.holds
    assert rep.classical.is_zero

    rep2 = symmetrized_resultant_criterion(P_GOLD, Q_GOLD, "q2")
    assert not rep2.applies
    assert rep2.classical is None and rep2.holds is None


def test_classical_resultant_matches_sympy():
    rng = random.Random(17)
    x = sympy.Symbol("x")
    for _ in range(8):
        av = [RealPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) for _ in range(3)]
        bv = [RealPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) for _ in range(3)]
        if av[-1].is_zero or bv[-1].is_zero:
            continue
        ours = classical_resultant(av, bv)
        y = sympy.Symbol("y")
        fa = sum(
            sum(sympy.Integer(c.numerator) / sympy.Integer(c.denominator) * x**k for k, c in enumerate(v.coeffs))
            * y**n
            for n, v in enumerate(av)
        )
        fb = sum(
            sum(sympy.Integer(c.numerator) / sympy.Integer(c.denominator) * x**k for k, c in enumerate(v.coeffs))
            * y**n
            for n, v in enumerate(bv)
        )
        want = sympy.expand(sympy.resultant(sympy.Poly(fa, y), sympy.Poly(fb, y), y))
        got = sum(
            sympy.Integer(c.numerator) / sympy.Integer(c.denominator) * x**k
            for k, c in enumerate(ours.coeffs)
        )
        assert sympy.expand(got - want) == 0


def test_discriminants_crossed_pairing():
    p = linear("q1", I) * linear("q1", I) * linear("q2", J)
    # the same-variable pairing inherits the repeated left factor
    assert resultant(p, p.partial_q1(), "q1").is_zero
    # the crossed pairing does not: 2x2 Schur complement gives 16(q1^2+1)^2
    d = discriminant_q1(p)
    assert not d.is_zero
    assert d.sdet == (RealPoly([16, 0, 32, 0, 16]), RealPoly([1]))

    # the q2 pairing shares the left factor (q1 - i)^{*2} and collapses
    d2 = discriminant_q2(p)
    assert d2.sylvester.nrows == 4
    assert d2.is_zero

    with pytest.raises(ZeroPolynomial):
        discriminant_q1(Poly2())
    with pytest.raises(DegreeTooLow):
        discriminant_q1(linear("q2", J))
    with pytest.raises(DegreeTooLow):
        discriminant_q2(linear("q1", I))


def test_report_repr_stays_lazy():
    r = resultant(P_GOLD, Q_GOLD, "q2")
    assert "nonzero" in repr(r)
    assert r._rep_known is False
    r.representative
    assert r._rep_known is True
