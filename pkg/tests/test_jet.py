import math

import pytest
from hypothesis import given, strategies as st

from jetquad.errors import DomainError, OrderMismatchError, PoleError
from jetquad.jet import Jet, ipow, jet_add, jet_mul, jet_recip, jet_scale, universal_extend
from conftest import assert_close

real = st.floats(-3.0, 3.0, allow_nan=False)


@st.composite
def jets(draw, order=None, min_order=0, max_order=8, nonzero_real=False):
    n = draw(st.integers(min_order, max_order)) if order is None else order
    c = draw(st.lists(real, min_size=n + 1, max_size=n + 1))
    if nonzero_real:
        c[0] = draw(st.floats(0.25, 3.0)) * draw(st.sampled_from([-1.0, 1.0]))
    return Jet(c)


@st.composite
def jet_pairs(draw, k=2, **kw):
    n = draw(st.integers(0, 8))
    return [draw(jets(order=n, **kw)) for _ in range(k)]


def E(order, *coeffs):
    c = list(coeffs) + [0.0] * (order + 1 - len(coeffs))
    return Jet(c)


class TestConstruction:
    def test_order_and_coeffs(self):
        u = Jet([1, 2, 3])
        assert u.order == 2
        assert u.coeffs == (1.0, 2.0, 3.0)
        assert u.real == 1.0

    def test_immutable(self):
        u = Jet([1.0])
        with pytest.raises(AttributeError):
            u._c = (2.0,)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            Jet([math.inf, 0.0])
        with pytest.raises(DomainError):
            Jet([0.0, math.nan])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Jet([])

    def test_variable(self):
        assert Jet.variable(0.9, 3).coeffs == (0.9, 1.0, 0.0, 0.0)
        assert Jet.variable(2.0, 0).coeffs == (2.0,)


class TestAdd:
    def test_componentwise(self):
        assert jet_add(E(5, 1, 1), E(5, 2, 0, 3)) == E(5, 3, 1, 3)

    def test_zero_identity(self):
        u = E(5, 0.3, -1, 2, 0, 4)
        assert jet_add(u, Jet.zero(5)) == u

    def test_doubling(self):
        assert jet_add(E(5, 0.9, 1), E(5, 0.9, 1)) == E(5, 1.8, 2)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            jet_add(E(5, 1), E(4, 1))
        with pytest.raises(OrderMismatchError):
            E(5, 1) * E(3, 1)


class TestMul:
    def test_square(self, backend):
        y = jet_mul(E(5, 0.9, 1), E(5, 0.9, 1))
        assert_close(y, [0.81, 1.8, 1.0, 0, 0, 0], 1e-15)

    def test_truncation(self, backend):
        e3 = E(5, 0, 0, 0, 1)
        assert jet_mul(e3, e3) == Jet.zero(5)

    def test_eps_squared(self, backend):
        eps = E(5, 0, 1)
        assert jet_mul(eps, eps) == E(5, 0, 0, 1)

    @given(jet_pairs(3))
    def test_ring_laws(self, uvw):
        u, v, w = uvw
        assert_close(jet_mul(jet_mul(u, v), w), jet_mul(u, jet_mul(v, w)), 1e-12)
        assert_close(jet_mul(u, v), jet_mul(v, u), 1e-12)
        assert_close(jet_mul(u, jet_add(v, w)), jet_add(jet_mul(u, v), jet_mul(u, w)), 1e-12)

    @given(jets())
    def test_nilpotent(self, u):
        w = u.nilpotent_part()
        assert ipow(w, u.order + 1) == Jet.zero(u.order)


class TestScale:
    def test_examples(self):
        assert jet_scale(2.0, E(2, 1, 0, 1)) == E(2, 2, 0, 2)
        assert jet_scale(0.0, E(3, 1, 2, 3, 4)) == Jet.zero(3)
        e81 = math.exp(0.81)
        assert_close(jet_scale(e81, E(5, 1, 1.8)), [e81, 1.8 * e81, 0, 0, 0, 0], 1e-15)

    def test_operators_with_reals(self):
        u = E(2, 1, 2, 3)
        assert 2 * u == u * 2 == jet_scale(2.0, u)
        assert (u + 1).coeffs == (2.0, 2.0, 3.0)
        assert (1 - u).coeffs == (0.0, -2.0, -3.0)
        assert (u / 2).coeffs == (0.5, 1.0, 1.5)


class TestRecip:
    def test_geometric(self, backend):
        assert jet_recip(E(5, 1, 1)) == E(5, 1, -1, 1, -1, 1, -1)

    def test_pure_real(self, backend):
        assert jet_recip(E(3, 2.0)) == E(3, 0.5)

    def test_pole(self):
        with pytest.raises(PoleError):
            jet_recip(E(3, 0.0, 1.0))
        with pytest.raises(ZeroDivisionError):
            1.0 / E(3, 0.0, 1.0)

    @given(jets(nonzero_real=True))
    def test_inverse_and_round_trip(self, u):
        r = jet_recip(u)
        # convolution error is bounded by the coefficient sizes, which grow
        # like (|u_1| / |u_0|)^k and can dwarf the unit result
        bound = 1e-13 * (u.order + 1) * max(map(abs, u.coeffs)) * max(map(abs, r.coeffs))
        for got, want in zip(jet_mul(u, r), Jet.one(u.order)):
            assert abs(got - want) <= bound
        rr = jet_recip(r)
        bound = 1e-13 * (u.order + 1) * max(map(abs, r.coeffs)) * max(map(abs, rr.coeffs))
        for got, want in zip(jet_mul(r, u), jet_mul(r, rr)):
            assert abs(got - want) <= bound
        assert_close(jet_recip(jet_recip(Jet([2.0, 0.5, -0.25, 0.1]))), [2.0, 0.5, -0.25, 0.1], 1e-14)


class TestUniversalExtend:
    def test_exp_of_eps_squared(self, backend):
        y = universal_extend([1.0] * 6, E(5, 0, 0, 1))
        assert_close(y, [1, 0, 1, 0, 0.5, 0], 1e-15)

    def test_constant_argument(self, backend):
        assert universal_extend([2.0, 3.0, 4.0, 5.0], E(3, 0.7)) == E(3, 2.0)

    def test_exp_at_081(self, backend):
        # exp(0.81 + 1.8 e + e^2) / exp(0.81)
        y = universal_extend([1.0] * 6, E(5, 0.81, 1.8, 1.0))
        assert_close(y, [1, 1.8, 2.62, 2.772, 2.5574, 2.029464], 1e-12)

    def test_length_mismatch(self):
        with pytest.raises(OrderMismatchError):
            universal_extend([1.0, 1.0], E(5, 0.0, 1.0))

    def test_order5_matches_generic_formula(self, backend):
        # e^5 coefficient of a general order-5 argument, term by term
        d = [0.3, -1.2, 0.7, 2.1, -0.4, 1.9]
        a1, a2, a3, a4, a5 = 0.5, -0.3, 0.8, 0.2, -0.6
        y = universal_extend(d, E(5, 1.1, a1, a2, a3, a4, a5))
        want5 = (
            a5 * d[1]
            + (a1 * a4 + a2 * a3) * d[2]
            + 0.5 * (a1**2 * a3 + a1 * a2**2) * d[3]
            + a1**3 * a2 / 6 * d[4]
            + a1**5 / 120 * d[5]
        )
        want4 = a4 * d[1] + (a1 * a3 + a2**2 / 2) * d[2] + a1**2 * a2 / 2 * d[3] + a1**4 / 24 * d[4]
        assert y[5] == pytest.approx(want5, rel=1e-13)
        assert y[4] == pytest.approx(want4, rel=1e-13)


def _leibniz(f, g):
    n = len(f) - 1
    return [sum(math.comb(k, j) * f[j] * g[k - j] for j in range(k + 1)) for k in range(n + 1)]


def _fa_di_bruno5(fg, g):
    """Derivatives of f(g(x)) up to order 5 from f^(k)(g(x)) and g^(k)(x)."""
    f0, f1, f2, f3, f4, f5 = fg
    g0, g1, g2, g3, g4, g5 = g
    return [
        f0,
        g1 * f1,
        g2 * f1 + g1**2 * f2,
        g3 * f1 + 3 * g1 * g2 * f2 + g1**3 * f3,
        g4 * f1 + 4 * g1 * g3 * f2 + 3 * g2**2 * f2 + 6 * g1**2 * g2 * f3 + g1**4 * f4,
        g5 * f1
        + 5 * g1 * g4 * f2
        + 10 * g2 * g3 * f2
        + 10 * g1**2 * g3 * f3
        + 15 * g1 * g2**2 * f3
        + 10 * g1**3 * g2 * f4
        + g1**5 * f5,
    ]


_TRIG = {
    "exp": lambda x: [math.exp(x)] * 6,
    "sin": lambda x: [math.sin(x), math.cos(x), -math.sin(x), -math.cos(x)] * 2,
    "cos": lambda x: [math.cos(x), -math.sin(x), -math.cos(x), math.sin(x)] * 2,
}

fn_names = st.sampled_from(sorted(_TRIG))
order5_jet = st.lists(st.floats(-1.5, 1.5), min_size=6, max_size=6).map(Jet)


@given(fn_names, fn_names, order5_jet)
def test_product_preserved(fname, gname, u):
    f = _TRIG[fname](u.real)[:6]
    g = _TRIG[gname](u.real)[:6]
    lhs = universal_extend(_leibniz(f, g), u)
    rhs = jet_mul(universal_extend(f, u), universal_extend(g, u))
    assert_close(lhs, rhs, 1e-10)


@given(order5_jet)
def test_composition_preserved(u):
    x = u.real
    g = [x * x, 2 * x, 2.0, 0.0, 0.0, 0.0]
    fg = [math.exp(g[0])] * 6
    lhs = universal_extend(_fa_di_bruno5(fg, g), u)
    rhs = universal_extend(fg, universal_extend(g, u))
    assert_close(lhs, rhs, 1e-10)


@given(fn_names, fn_names, order5_jet, st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(fname, gname, u, r, s):
    f = _TRIG[fname](u.real)[:6]
    g = _TRIG[gname](u.real)[:6]
    lhs = universal_extend([r * a + s * b for a, b in zip(f, g)], u)
    rf, sg = jet_scale(r, universal_extend(f, u)), jet_scale(s, universal_extend(g, u))
    rhs = jet_add(rf, sg)
    # measured against the summands: r*f + s*g may cancel to nearly nothing
    scale = max(abs(c) for c in rf.coeffs + sg.coeffs)
    for x, y in zip(lhs, rhs):
        assert abs(x - y) <= 1e-14 * scale


def test_ipow_matches_float_chain():
    for k in range(10):
        u = Jet.constant(1.37, 4)
        assert ipow(u, k).real == ipow(1.37, k)
    assert ipow(Jet.variable(2.0, 3), 0) == Jet.one(3)
