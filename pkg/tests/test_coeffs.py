"""Ground-ring arithmetic: Laurent polynomials, xz-extensions, w-substitution."""

import pytest
from hypothesis import given, strategies as st

from skeincalc.coeffs import (LaurentPoly, WLaurent, XZPoly, bar, substitute_w, t)


laurents = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5),
)

xz_polys = st.builds(
    XZPoly,
    st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                    laurents, max_size=4),
)


class TestLaurentPoly:
    def test_additive_inverse(self):
        assert ((t(2) + t(-2)) + (-t(2) - t(-2))).is_zero()

    def test_exponent_law(self):
        assert t(2) * t(-2) == LaurentPoly.one()

    def test_schoolbook_product(self):
        # (t^-2 - t^6)(-t^2 - t^-2) expanded by hand
        got = (t(-2) - t(6)) * (-t(2) - t(-2))
        assert got == t(8) + t(4) - 1 - t(-4)

    def test_int_mixing(self):
        assert t(0, 3) == 3
        assert 1 - t(4) == LaurentPoly({0: 1, 4: -1})
        assert (t(2) * 0).is_zero()

    def test_pow(self):
        assert (t(1) + t(-1)) ** 2 == t(2) + 2 + t(-2)
        assert (t(3)) ** 0 == LaurentPoly.one()
        with pytest.raises(ValueError):
            (t(1) + 1) ** -1

    def test_no_zero_terms_stored(self):
        p = LaurentPoly({3: 5, 1: 0})
        assert p.terms == {3: 5}
        assert (p - p).terms == {}

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * LaurentPoly.one() == a
        assert (a + LaurentPoly.zero()) == a

    @given(laurents, laurents)
    def test_bar_is_ring_involution(self, a, b):
        assert a.bar().bar() == a
        assert (a * b).bar() == a.bar() * b.bar()
        assert (a + b).bar() == a.bar() + b.bar()

    def test_bar_examples(self):
        assert bar(t(4, -1)) == t(-4, -1)
        assert bar(t(2) + t(-2)) == t(2) + t(-2)

    @given(laurents)
    def test_json_round_trip(self, a):
        assert LaurentPoly.from_json(a.to_json()) == a

    def test_json_is_sorted_with_string_coeffs(self):
        data = (t(3, 7) + t(-1, -2)).to_json()
        assert data == {"t": [[-1, "-2"], [3, "7"]]}

    def test_str_ascending(self):
        assert str(t(2) - t(-2)) == "-t^-2 + t^2"
        assert str(LaurentPoly.zero()) == "0"


class TestXZPoly:
    def test_commutative_product(self):
        x = XZPoly.monomial(1, 0)
        z = XZPoly.monomial(0, 1)
        assert x * z == z * x == XZPoly.monomial(1, 1)

    def test_scalar_laurent_mul(self):
        p = XZPoly.monomial(2, 0, t(4)) + XZPoly.monomial(0, 0, 1)
        assert p * t(-4) == XZPoly.monomial(2, 0) + XZPoly.monomial(0, 0, t(-4))

    @given(xz_polys, xz_polys, xz_polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(xz_polys, xz_polys)
    def test_bar_involution(self, a, b):
        assert a.bar().bar() == a
        assert (a * b).bar() == a.bar() * b.bar()

    def test_bar_fixes_xz_degrees(self):
        # coefficient view of -t^4 y - t^2 xz, with xz as the variable pair
        p = XZPoly.monomial(1, 1, t(2, -1)) + XZPoly.monomial(0, 0, t(4, -1))
        q = p.bar()
        assert q == XZPoly.monomial(1, 1, t(-2, -1)) + XZPoly.monomial(0, 0, t(-4, -1))

    @given(xz_polys)
    def test_json_round_trip(self, a):
        assert XZPoly.from_json(a.to_json()) == a

    def test_rejects_negative_degrees(self):
        with pytest.raises(ValueError):
            XZPoly({(-1, 0): LaurentPoly.one()})


class TestWSubstitution:
    def test_square(self):
        w = WLaurent.w_power(1) + WLaurent.w_power(-1)
        got = substitute_w([0, 0, 1], w)  # xi^2
        assert got == WLaurent({2: t(0), 0: t(0, 2), -2: t(0)})

    def test_t2_substitution(self):
        w = WLaurent.w_power(1) + WLaurent.w_power(-1)
        got = substitute_w([-2, 0, 1], w)  # T_2 = xi^2 - 2
        assert got == WLaurent({2: t(0), -2: t(0)})

    def test_s2_substitution(self):
        w = WLaurent.w_power(1) + WLaurent.w_power(-1)
        got = substitute_w([-1, 0, 1], w)  # S_2 = xi^2 - 1
        assert got == WLaurent({2: t(0), 0: t(0), -2: t(0)})

    def test_laurent_coefficients(self):
        w = WLaurent.w_power(1, t(1)) + WLaurent.w_power(-1, t(-1))
        got = substitute_w([LaurentPoly.zero(), LaurentPoly.one()], w)
        assert got == WLaurent({1: t(1), -1: t(-1)})
