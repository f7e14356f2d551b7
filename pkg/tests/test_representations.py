import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifspin.algebra import CL13, CL30, CliffordError, Multivector, ParityError, SignatureError, conjugation, grade_involution, reversion
from clifspin.representations import (
    GAMMA,
    I4,
    MINKOWSKI,
    dirac_column,
    gamma,
    iso_cl13even_to_cl30,
    iso_cl30_to_cl13even,
    matrix_from_json,
    matrix_to_json,
    rep_cl13,
    rep_cl13_even,
    rep_cl30,
    rep_cl30_inverse,
    rep_R_matrix,
    rotor_components,
    standard_dirac_residual,
)
from clifspin.sampling import make_rng, unit_rotor
from oracles import pauli_image
from strategies import evens, multivectors, unit

E = CL30.blade
FP = (1 + E("e3")) / 2
FM = (1 - E("e3")) / 2


class TestCl30Matrices:
    @pytest.mark.parametrize(
        "x,m",
        [
            (FP, [[1, 0], [0, 0]]),
            (FM, [[0, 0], [0, 1]]),
            (E("e1") * FP, [[0, 0], [1, 0]]),
            (E("e1") * FM, [[0, 1], [0, 0]]),
            (CL30.scalar(1.0), np.eye(2)),
            (E("e123"), 1j * np.eye(2)),
        ],
    )
    def test_anchor_images(self, x, m):
        assert np.array_equal(rep_cl30(x), np.asarray(m, dtype=complex))

    @given(multivectors(CL30))
    def test_agrees_with_pauli_oracle(self, a):
        assert np.allclose(rep_cl30(a), pauli_image(a), atol=1e-15)

    @given(multivectors(CL30), multivectors(CL30))
    def test_homomorphism(self, a, b):
        assert np.max(np.abs(rep_cl30(a * b) - rep_cl30(a) @ rep_cl30(b))) <= 1e-12

    @given(multivectors(CL30))
    def test_reversion_is_dagger(self, a):
        assert np.allclose(rep_cl30(reversion(a)), rep_cl30(a).conj().T, atol=1e-15)

    def test_faithful(self):
        imgs = np.array([rep_cl30(b).ravel() for b in CL30.basis()])
        assert np.linalg.matrix_rank(np.hstack([imgs.real, imgs.imag])) == 8

    def test_inverse_examples(self):
        assert rep_cl30_inverse(np.eye(2)) == CL30.scalar(1.0)
        assert rep_cl30_inverse([[1, 0], [0, 0]]).allclose(FP, 1e-15)

    @given(st.lists(unit, min_size=8, max_size=8), multivectors(CL30))
    def test_inverse_roundtrips(self, raw, a):
        m = np.array(raw[:4]).reshape(2, 2) + 1j * np.array(raw[4:]).reshape(2, 2)
        assert np.max(np.abs(rep_cl30(rep_cl30_inverse(m)) - m)) <= 1e-12
        assert (rep_cl30_inverse(rep_cl30(a)) - a).norm_inf() <= 1e-12

    def test_inverse_shape(self):
        with pytest.raises(CliffordError):
            rep_cl30_inverse(np.eye(3))

    def test_wrong_signature(self):
        with pytest.raises(SignatureError):
            rep_cl30(CL13.blade("e1"))


class TestRotorMatrix:
    def test_identity(self):
        m = rep_R_matrix(CL30.scalar(1.0))
        assert np.array_equal(m, np.eye(2)) and np.linalg.det(m) == 1.0

    @given(unit, unit, unit, unit)
    def test_printed_form_and_determinant(self, a, b, c, d):
        r = a + b * E("e12") + c * E("e13") + d * E("e23")
        m = rep_R_matrix(r)
        assert np.allclose(m, rep_cl30(r), atol=1e-15)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        assert abs(det - (a * a + b * b + c * c + d * d)) <= 1e-12
        assert abs(det - (r * conjugation(r)).scalar) <= 1e-12

    @given(multivectors(CL30))
    def test_det_is_rotor_norm_in_general(self, r):
        z = r * conjugation(r)
        assert abs(np.linalg.det(rep_cl30(r)) - complex(z["1"], z["e123"])) <= 1e-12

    def test_complex_components(self):
        r = Multivector(CL30, np.arange(1.0, 9.0))
        al, be, ga, de = (complex(z) for z in rotor_components(r))
        basis = [rep_cl30(CL30.scalar(1.0)), rep_cl30(E("e12")), rep_cl30(E("e13")), rep_cl30(E("e23"))]
        assert np.allclose(al * basis[0] + be * basis[1] + ga * basis[2] + de * basis[3], rep_cl30(r))

    def test_hat_is_inverse_dagger(self):
        rng = make_rng(7)
        for _ in range(100):
            r = unit_rotor(rng)
            want = np.linalg.inv(rep_cl30(r).conj().T)
            assert np.max(np.abs(rep_cl30(grade_involution(r)) - want)) <= 1e-12

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            rep_R_matrix(E("e1"))


class TestGamma:
    def test_clifford_relations(self):
        for mu in range(4):
            for nu in range(4):
                anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
                assert np.array_equal(anti, 2 * MINKOWSKI[mu, nu] * I4)

    def test_generators_map_to_gammas(self):
        for mu in range(4):
            assert np.array_equal(rep_cl13(gamma(mu)), GAMMA[mu])

    def test_gamma12(self):
        g12 = gamma(1) * gamma(2)
        assert np.array_equal(rep_cl13_even(g12), np.diag([-1j, 1j, -1j, 1j]))
        assert np.array_equal(dirac_column(g12), np.array([-1j, 0, 0, 0]))

    def test_identity(self):
        assert np.array_equal(rep_cl13_even(CL13.scalar(1.0)), I4)
        assert np.array_equal(dirac_column(CL13.scalar(1.0)), np.array([1, 0, 0, 0], dtype=complex))

    @given(evens(CL13), evens(CL13))
    def test_even_homomorphism(self, a, b):
        assert np.max(np.abs(rep_cl13_even(a * b) - rep_cl13_even(a) @ rep_cl13_even(b))) <= 1e-12

    @given(evens(CL13), evens(CL13), unit, unit)
    def test_column_linear(self, a, b, s, t):
        assert np.allclose(dirac_column(s * a + t * b), s * dirac_column(a) + t * dirac_column(b), atol=1e-15)

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            rep_cl13_even(gamma(0))

    def test_index_range(self):
        with pytest.raises(CliffordError):
            gamma(4)


class TestIsomorphism:
    def test_examples(self):
        assert iso_cl13even_to_cl30(gamma(1) * gamma(0)) == E("e1")
        assert iso_cl13even_to_cl30(CL13.pseudoscalar()) == E("e123")
        assert iso_cl30_to_cl13even(E("e3")) == gamma(3) * gamma(0)

    @given(evens(CL13), evens(CL13))
    def test_homomorphism(self, a, b):
        lhs = iso_cl13even_to_cl30(a * b)
        assert (lhs - iso_cl13even_to_cl30(a) * iso_cl13even_to_cl30(b)).norm_inf() <= 1e-12

    @given(multivectors(CL30), evens(CL13))
    def test_bijective(self, x, a):
        assert iso_cl30_to_cl13even(x).is_even()
        assert iso_cl13even_to_cl30(iso_cl30_to_cl13even(x)) == x
        assert iso_cl30_to_cl13even(iso_cl13even_to_cl30(a)) == a

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            iso_cl13even_to_cl30(gamma(2))


class TestStandardDirac:
    M = 1.3

    def rest(self, t, x):
        return np.exp(-1j * self.M * t) * np.array([1, 0, 0, 0], dtype=complex)

    def rest_partials(self, t, x):
        return [-1j * self.M * self.rest(t, x)] + [np.zeros(4)] * 3

    def test_rest_solution_analytic(self):
        r = standard_dirac_residual(self.rest, self.M, 0.4, [0.1, 0.2, 0.3], derivative=self.rest_partials)
        assert np.max(np.abs(r)) <= 1e-10

    def test_rest_solution_finite_difference(self):
        r = standard_dirac_residual(self.rest, self.M, 0.4, [0.1, 0.2, 0.3])
        assert np.max(np.abs(r)) <= 1e-7

    def test_wrong_frequency_fails(self):
        r = standard_dirac_residual(self.rest, 2 * self.M, 0.0, [0, 0, 0], derivative=self.rest_partials)
        assert np.linalg.norm(r) == pytest.approx(self.M)

    def test_global_phase(self):
        def off(t, x):
            return 0.5 * self.rest(t, x) + np.array([0, 0.2, 0, 0])

        def shifted(t, x):
            return np.exp(0.7j) * off(t, x)

        r1 = standard_dirac_residual(off, self.M, 0.2, [0, 0, 0])
        r2 = standard_dirac_residual(shifted, self.M, 0.2, [0, 0, 0])
        assert np.linalg.norm(r1) == pytest.approx(np.linalg.norm(r2), rel=1e-9)


def test_matrix_json_roundtrip():
    m = np.array([[1 + 2j, -0.5], [3j, 0.25 - 1j]])
    assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)
    assert matrix_to_json(np.eye(1)) == [[[1.0, 0.0]]]
    with pytest.raises(CliffordError):
        matrix_from_json([[1, 2]])
