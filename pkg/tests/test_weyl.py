import math

import numpy as np
import pytest
from hypothesis import given

from clifspin.algebra import CL03, CL30, CenterScalar, CliffordError, Multivector, ParityError, SignatureError, conjugation, grade_involution, mv_exp, reversion
from clifspin.sampling import make_rng, unit_rotor
from clifspin.weyl import (
    E1,
    F_MINUS,
    F_PLUS,
    IdealTag,
    KindError,
    NormalizationError,
    SpinorKind,
    WeylSpinor,
    cus_from_even,
    idempotent_coefficient,
    metric_fminus,
    metric_fplus,
    normalize_rotor,
    reduce_to_even,
    to_cds,
    to_cvds,
    to_cvus,
    transform,
)
from strategies import evens, multivectors, spinors

E = CL30.blade
I = CenterScalar(0.0, 1.0)


def cus(a, b):
    return WeylSpinor.cus(a, b)


def comps(s):
    return s.components()


def test_idempotents():
    assert F_PLUS * F_MINUS == CL30.zero() == F_MINUS * F_PLUS
    assert F_PLUS * F_PLUS == F_PLUS and F_MINUS * F_MINUS == F_MINUS
    assert F_PLUS + F_MINUS == CL30.scalar(1.0)


def test_kind_to_ideal():
    assert {k: k.ideal for k in SpinorKind} == {
        SpinorKind.CUS: IdealTag.LEFT_PLUS,
        SpinorKind.CVUS: IdealTag.RIGHT_PLUS,
        SpinorKind.CDS: IdealTag.RIGHT_MINUS,
        SpinorKind.CVDS: IdealTag.LEFT_MINUS,
    }


class TestEvenReduction:
    def test_e3(self):
        assert reduce_to_even(E("e3")) == CL30.scalar(1.0)

    def test_e1(self):
        r = reduce_to_even(E("e1"))
        assert r == E("e13") and r * F_PLUS == E("e1") * F_PLUS

    @given(multivectors(CL30))
    def test_random(self, psi):
        r = reduce_to_even(psi)
        assert r.is_even()
        assert ((r - psi) * F_PLUS).norm_inf() <= 1e-15

    def test_wrong_signature(self):
        with pytest.raises(SignatureError):
            reduce_to_even(CL03.blade("e1"))


class TestCusFromEven:
    @pytest.mark.parametrize(
        "psi,k1,k2",
        [(CL30.scalar(1.0), 1, 0), (E("e13"), 0, 1), (E("e12"), 1j, 0), (E("e23"), 0, 1j)],
    )
    def test_examples(self, psi, k1, k2):
        assert comps(cus_from_even(psi)) == (k1, k2)

    @given(evens())
    def test_embeds_psi_fplus(self, psi):
        assert (cus_from_even(psi).embed() - psi * F_PLUS).norm_inf() <= 1e-15

    def test_odd_rejected(self):
        with pytest.raises(ParityError):
            cus_from_even(E("e1"))


class TestConversions:
    def test_cvus_examples(self):
        assert comps(to_cvus(cus(1, 0))) == (0, 1)
        assert comps(to_cvus(cus(0, 1))) == (-1, 0)

    def test_cds_examples(self):
        assert comps(to_cds(cus(I, 0))) == (-1j, 0)
        assert comps(to_cds(cus(1, 0))) == (1, 0)

    def test_cvds_examples(self):
        assert comps(to_cvds(WeylSpinor(SpinorKind.CDS, 1, 0))) == (0, 1)
        assert comps(to_cvds(WeylSpinor(SpinorKind.CDS, 0, 1))) == (-1, 0)

    @given(spinors())
    def test_match_algebraic_definitions(self, k):
        x = k.embed()
        assert (to_cvus(k).embed() - E1 * conjugation(x)).norm_inf() <= 1e-15
        assert (to_cds(k).embed() - E1 * reversion(x)).norm_inf() <= 1e-15
        kb = to_cds(k)
        assert (to_cvds(kb).embed() - conjugation(E1 * kb.embed())).norm_inf() <= 1e-15

    @given(spinors())
    def test_diagram_closes_on_hat(self, k):
        assert (to_cvds(to_cds(k)).embed() - grade_involution(k.embed())).norm_inf() <= 1e-12

    @given(spinors())
    def test_ideal_membership(self, k):
        x, ks, kb = k.embed(), to_cvus(k).embed(), to_cds(k).embed()
        kbs = to_cvds(to_cds(k)).embed()
        # tolerance rather than ==: halving subnormal coefficients underflows
        for kept, killed in ((x * F_PLUS - x, x * F_MINUS), (F_PLUS * ks - ks, F_MINUS * ks),
                             (F_MINUS * kb - kb, F_PLUS * kb), (kbs * F_MINUS - kbs, kbs * F_PLUS)):
            assert kept.norm_inf() <= 1e-15 and killed.norm_inf() <= 1e-15

    def test_wrong_kind(self):
        with pytest.raises(KindError):
            to_cvus(WeylSpinor(SpinorKind.CDS, 1, 0))
        with pytest.raises(KindError):
            to_cvds(cus(1, 0))


class TestMetrics:
    def test_fplus_example(self):
        assert complex(metric_fplus(cus(1, 0), cus(0, 1))) == 1

    @given(spinors(), spinors())
    def test_fplus_is_the_product_coefficient(self, k, eta):
        p = to_cvus(k).embed() * eta.embed()
        z = metric_fplus(k, eta)
        assert (p - z.to_multivector() * F_PLUS).norm_inf() <= 1e-12
        assert abs(idempotent_coefficient(p, F_PLUS) - z) <= 1e-12

    @given(spinors(), spinors())
    def test_fplus_antisymmetric(self, k, eta):
        assert metric_fplus(k, eta) == -metric_fplus(eta, k)
        assert abs(metric_fplus(k, k)) == 0.0

    def test_fminus_example(self):
        eta_star = to_cvds(WeylSpinor(SpinorKind.CDS, 1, 0))
        assert complex(metric_fminus(WeylSpinor(SpinorKind.CDS, 0, 1), eta_star)) == 1

    @given(spinors(), spinors())
    def test_fminus_is_the_product_coefficient(self, k, eta):
        kb, ebs = to_cds(k), to_cvds(to_cds(eta))
        p = kb.embed() * ebs.embed()
        z = metric_fminus(kb, ebs)
        assert (p - z.to_multivector() * F_MINUS).norm_inf() <= 1e-12

    @given(spinors())
    def test_fminus_vanishes_on_matched_arguments(self, k):
        kb = to_cds(k)
        assert abs(metric_fminus(kb, to_cvds(kb))) <= 1e-15

    def test_kind_mismatch(self):
        with pytest.raises(KindError):
            metric_fplus(cus(1, 0), to_cvus(cus(1, 0)))
        with pytest.raises(KindError):
            metric_fminus(cus(1, 0), cus(1, 0))


class TestTransform:
    @given(spinors())
    def test_identity_rotor(self, k):
        one = CL30.scalar(1.0)
        for s in (k, to_cvus(k), to_cds(k), to_cvds(to_cds(k))):
            assert transform(one, s).isclose(s, 1e-15)

    def test_rotation_acts_by_left_product(self):
        th = 0.3
        r = mv_exp(E("e12") * th)
        out = transform(r, cus(1, 0))
        assert (out.embed() - r * F_PLUS).norm_inf() <= 1e-15
        # e12 f+ = e123 e3 f+ = e123 f+, so R f+ = exp(e123 th) f+
        assert out.c1.isclose(CenterScalar(math.cos(th), math.sin(th))) and abs(out.c2) <= 1e-15

    def test_rejects_unnormalized(self):
        with pytest.raises(NormalizationError, match="normalize_rotor"):
            transform(2.0 * CL30.scalar(1.0), cus(1, 0))

    def test_rejects_wrong_signature(self):
        with pytest.raises(SignatureError):
            transform(CL03.scalar(1.0), cus(1, 0))

    def test_invariance_and_commuting_diagram(self):
        rng = make_rng(3)
        for _ in range(50):
            r = unit_rotor(rng)
            k = WeylSpinor.cus(complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2)))
            eta = WeylSpinor.cus(complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2)))
            assert abs(metric_fplus(transform(r, k), transform(r, eta)) - metric_fplus(k, eta)) <= 1e-12
            kb, ebs = to_cds(k), to_cvds(to_cds(eta))
            assert abs(metric_fminus(transform(r, kb), transform(r, ebs)) - metric_fminus(kb, ebs)) <= 1e-12
            assert to_cvus(transform(r, k)).isclose(transform(r, to_cvus(k)))
            assert to_cds(transform(r, k)).isclose(transform(r, to_cds(k)))
            assert to_cvds(transform(r, kb)).isclose(transform(r, to_cvds(kb)))

    def test_normalize(self):
        rng = make_rng(4)
        for _ in range(20):
            r = normalize_rotor(Multivector(CL30, rng.uniform(-1, 1, 8)))
            assert (r * conjugation(r) - 1.0).norm_inf() <= 1e-12
        with pytest.raises(NormalizationError):
            normalize_rotor(1 + E("e3"))


class TestEmbedding:
    @given(spinors())
    def test_components_from_matrix_picture(self, k):
        for s in (k, to_cvus(k), to_cds(k), to_cvds(to_cds(k))):
            assert WeylSpinor.from_multivector(s.kind, s.embed()).isclose(s, 1e-15)

    def test_rejects_non_ideal_element(self):
        with pytest.raises(CliffordError):
            WeylSpinor.from_multivector(SpinorKind.CUS, CL30.scalar(1.0))

    @given(spinors())
    def test_json_roundtrip(self, k):
        assert WeylSpinor.from_json(k.to_json()) == k

    def test_json_format(self):
        assert cus(1, 2j).to_json() == {"kind": "CUS", "c1": [1.0, 0.0], "c2": [0.0, 2.0]}
        with pytest.raises(CliffordError):
            WeylSpinor.from_json({"kind": "XYZ", "c1": [0, 0], "c2": [0, 0]})

    @given(spinors())
    def test_components_are_central(self, k):
        for c in (k.c1, k.c2):
            z = c.to_multivector()
            for b in CL30.basis():
                assert np.array_equal((z * b).coeffs, (b * z).coeffs)
