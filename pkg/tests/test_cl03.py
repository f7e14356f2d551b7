import numpy as np
import pytest
from hypothesis import given

from clifspin.algebra import CL03, CL30, CliffordError, ParityError, SignatureError, conjugation
from clifspin.cl03 import (
    E12,
    E13,
    E23,
    E31,
    F_MINUS,
    F_PLUS,
    J,
    QUATERNION_UNITS,
    E12Number,
    Kind03,
    QPair,
    WeylSpinor03,
    cus03_from_even,
    dictionary_even,
    e12_projection,
    even_from_cus03,
    line_coefficient03,
    metric03,
    metric03_alt,
    metric03_from_product,
    metric03_product,
    metric03_via_sigma,
    reduce_even03,
    rep_h_plus_h,
    rep_h_plus_h_inverse,
    right_module_embed,
    sigma,
    sigma_dual_spinor,
    sigma_spinor,
    to_cds03,
)
from strategies import evens, multivectors, unit

E = CL03.blade
ONE = CL03.scalar(1.0)

evens03 = evens(CL03)
spinors03 = evens03.map(cus03_from_even)


def hamilton(p, q):
    """Quaternion product on (w, i, j, k) coordinates."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


def as_complex(z: E12Number) -> complex:
    return complex(z.re, z.im)


class TestIdempotents:
    def test_central_pseudoscalar(self):
        assert J * J == ONE
        for b in CL03.basis():
            assert J * b == b * J

    def test_orthogonal_idempotents(self):
        assert F_PLUS * F_PLUS == F_PLUS and F_MINUS * F_MINUS == F_MINUS
        assert F_PLUS * F_MINUS == CL03.zero()
        assert F_PLUS + F_MINUS == ONE

    def test_quaternion_units(self):
        _, i, j, k = QUATERNION_UNITS
        for u in (i, j, k):
            assert u * u == -ONE
        assert i * j == k and j * k == i and k * i == j
        assert i * j * k == -ONE


class TestReduction:
    @given(multivectors(CL03))
    def test_same_left_ideal_element(self, a):
        r = reduce_even03(a)
        assert r.is_even()
        assert ((r - a) * F_PLUS).norm_inf() <= 1e-15

    def test_examples(self):
        assert reduce_even03(J) == ONE
        assert reduce_even03(E("e1")) == E("e1") * J

    def test_signature(self):
        with pytest.raises(SignatureError):
            reduce_even03(CL30.scalar(1.0))


class TestSpinors:
    @pytest.mark.parametrize(
        "q,k1,k2",
        [(ONE, (1, 0), (0, 0)), (E12, (0, 1), (0, 0)), (E13, (0, 0), (1, 0)), (E23, (0, 0), (0, -1))],
    )
    def test_components(self, q, k1, k2):
        k = cus03_from_even(q)
        assert (k.c1, k.c2) == (E12Number(*k1), E12Number(*k2))

    @given(evens03)
    def test_embed_is_q_fplus(self, q):
        k = cus03_from_even(q)
        assert (k.embed() - q * F_PLUS).norm_inf() <= 1e-15
        assert (even_from_cus03(k) - q).norm_inf() <= 1e-15

    @given(spinors03)
    def test_conjugate_spinor(self, k):
        assert (to_cds03(k).embed() - conjugation(k.embed())).norm_inf() <= 1e-15

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            cus03_from_even(E("e1"))

    def test_kind_checked(self):
        with pytest.raises(CliffordError):
            metric03(to_cds03(cus03_from_even(ONE)), cus03_from_even(ONE))


class TestE12Number:
    @given(unit, unit, unit, unit)
    def test_complex_arithmetic(self, a, b, c, d):
        z, w = E12Number(a, b), E12Number(c, d)
        assert as_complex(z * w) == pytest.approx(complex(a, b) * complex(c, d), abs=1e-15)
        assert ((z * w).to_multivector() - z.to_multivector() * w.to_multivector()).norm_inf() <= 1e-15
        assert as_complex(z - w) == complex(a - c, b - d)
        assert as_complex(z.conj()) == complex(a, -b)

    def test_scalars_coerce(self):
        assert 2 * E12Number(1, 1) == E12Number(2, 2)
        assert 1 - E12Number(1, 1) == E12Number(0, -1)

    def test_not_central(self):
        # e12 commutes with e3 but not with e1: the line ring is not the centre
        assert E12 * E("e1") != E("e1") * E12
        assert E12 * E("e3") == E("e3") * E12


class TestMetric:
    def test_example(self):
        k, eta = WeylSpinor03(Kind03.CUS03, 1, 0), WeylSpinor03(Kind03.CUS03, 0, 1)
        assert metric03(k, eta) == E12Number(-1, 0)

    @given(spinors03, spinors03)
    def test_antisymmetric(self, k, eta):
        assert metric03(k, eta) == -metric03(eta, k)

    @given(spinors03, spinors03)
    def test_matches_product(self, k, eta):
        assert metric03_from_product(k, eta).isclose(metric03(k, eta))

    def test_raw_product_is_off_the_line(self):
        k = cus03_from_even(ONE + E13)
        eta = cus03_from_even(E12 + 0.5 * E23)
        with pytest.raises(CliffordError):
            line_coefficient03(metric03_product(k, eta))

    @given(evens03)
    def test_projection_keeps_the_line(self, q):
        p = e12_projection(q)
        assert p == q["1"] * ONE + q["e12"] * E12


class TestSigma:
    @given(evens03, evens03)
    def test_antihomomorphism(self, a, b):
        assert (sigma(a * b) - sigma(b) * sigma(a)).norm_inf() <= 1e-12

    @given(evens03)
    def test_involution(self, q):
        assert (sigma(sigma(q)) - q).norm_inf() <= 1e-15

    def test_examples(self):
        assert sigma(ONE) == ONE
        assert sigma(E12) == E12
        assert sigma(E13) == E13
        assert sigma(E23) == -E23

    @given(evens03)
    def test_moves_spinor_to_right_ideal(self, q):
        k = cus03_from_even(q)
        s = sigma_spinor(k)
        assert (s - F_PLUS * sigma(q)).norm_inf() <= 1e-15
        assert (F_PLUS * s - s).norm_inf() <= 1e-15

    @given(spinors03)
    def test_dual_spinor_components(self, k):
        c1, c2 = sigma_dual_spinor(k)
        assert (sigma_spinor(k) * E13 - right_module_embed(c1, c2)).norm_inf() <= 1e-15

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            sigma(E("e1"))


class TestAltMetric:
    def test_unit_arguments(self):
        assert metric03_alt(ONE, ONE) == CL03.zero()

    @given(spinors03, spinors03)
    def test_agrees_with_dictionary(self, k, eta):
        assert metric03_via_sigma(k, eta).isclose(metric03(k, eta))

    @given(spinors03, spinors03)
    def test_natural_dictionary_gives_symmetric_form(self, k, eta):
        x = metric03_alt(even_from_cus03(k), even_from_cus03(eta))
        want = -(k.c1 * eta.c2 + k.c2 * eta.c1)
        assert E12Number(x["1"], x["e12"]).isclose(want)

    def test_natural_dictionary_disagrees(self):
        k, eta = WeylSpinor03(Kind03.CUS03, 0, 1), WeylSpinor03(Kind03.CUS03, 1, 0)
        x = metric03_alt(even_from_cus03(k), even_from_cus03(eta))
        assert E12Number(x["1"], x["e12"]) == E12Number(-1, 0)
        assert metric03(k, eta) == E12Number(1, 0)

    def test_dictionary_flips_second_component(self):
        k = WeylSpinor03(Kind03.CUS03, (0.3, 0.2), (0.5, -0.7))
        d = cus03_from_even(dictionary_even(k))
        assert d.c1 == k.c1 and d.c2 == -k.c2


class TestQuaternionPair:
    def test_pseudoscalar(self):
        assert rep_h_plus_h(J) == QPair((1, 0, 0, 0), (-1, 0, 0, 0))

    def test_units(self):
        assert rep_h_plus_h(E23) == QPair((0, 1, 0, 0), (0, 1, 0, 0))
        q = rep_h_plus_h(E("e1"))
        # e1 = -e23 J, so the two halves carry opposite signs of i
        assert q == QPair((0, -1, 0, 0), (0, 1, 0, 0))

    @given(multivectors(CL03), multivectors(CL03))
    def test_homomorphism(self, a, b):
        qa, qb, qab = rep_h_plus_h(a), rep_h_plus_h(b), rep_h_plus_h(a * b)
        assert np.allclose(qab.plus, hamilton(qa.plus, qb.plus), atol=1e-12)
        assert np.allclose(qab.minus, hamilton(qa.minus, qb.minus), atol=1e-12)

    @given(multivectors(CL03))
    def test_roundtrip(self, a):
        assert (rep_h_plus_h_inverse(rep_h_plus_h(a)) - a).norm_inf() <= 1e-15

    def test_injective(self):
        rows = [np.r_[rep_h_plus_h(b).plus, rep_h_plus_h(b).minus] for b in CL03.basis()]
        assert np.linalg.matrix_rank(np.array(rows)) == 8

    def test_json(self):
        q = QPair((1, 2, 3, 4), (5, 6, 7, 8))
        assert QPair.from_json(q.to_json()) == q
        with pytest.raises(CliffordError):
            QPair((1, 2, 3), (1, 2, 3, 4))
        with pytest.raises(CliffordError):
            QPair.from_json({"plus": [1, 2, 3, 4]})

    def test_e31_is_j(self):
        assert QUATERNION_UNITS[2] == E31
