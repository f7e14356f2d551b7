"""Property-check suites and their JSON reports.

Each suite draws from its own Philox stream keyed by ``(seed, suite index)``,
so a suite's records do not depend on which other suites ran. A record holds
the worst residual seen over its samples and the bound it is held to. Upper
checks pass when ``residual <= tolerance``; lower checks (negative controls)
pass when ``residual > tolerance``.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import cl03 as c3
from . import sampling as S
from .algebra import (
    CL03,
    CL13,
    CL30,
    CenterScalar,
    Multivector,
    Signature,
    conjugation,
    grade_involution,
    mv_exp,
    reversion,
)
from .dirac import (
    Branch,
    MultivectorField,
    PlaneWaveParams,
    SingularError,
    SpacetimePoint,
    Spin,
    ZERO_POTENTIAL,
    boost,
    dhe_residual,
    lounesto_decompose,
    pauli_fields,
    pauli_residuals,
    planewave_field,
    left_phase,
    right_phase,
    weyl_fields,
    weyl_residuals,
)
from .paravector import (
    NullTetradLabel,
    Paravector,
    clifford_symmetrization,
    is_future,
    minkowski_square,
    paravector_from_spinor,
    pv_metric,
    spinor_square,
    tetrad_decompose,
    tetrad_rank_defect,
)
from .reference import hamilton, slow_product
from .representations import (
    GAMMA,
    I4,
    MINKOWSKI,
    dirac_column,
    iso_cl13even_to_cl30,
    iso_cl30_to_cl13even,
    rep_cl13_even,
    rep_cl30,
    standard_dirac_residual,
)
from .weyl import (
    E1,
    F_MINUS,
    F_PLUS,
    SpinorKind,
    idempotent_coefficient,
    metric_fminus,
    metric_fplus,
    to_cds,
    to_cvds,
    to_cvus,
    transform,
)

SUITES = ("core", "rep", "weyl", "dirac", "paravector", "cl03")
FAULTS = ("boost-sign",)
SIGNATURES = (CL30, CL03, CL13)
MASSES = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 1000
    rotor_samples: int = 200
    momenta: int = 20
    tolerances: dict = field(default_factory=dict)
    inject_fault: str | None = None
    timing: bool = False

    def __post_init__(self) -> None:
        if self.samples < 1 or self.rotor_samples < 1 or self.momenta < 1:
            raise ValueError("sample counts must be positive")
        if self.inject_fault is not None and self.inject_fault not in FAULTS:
            raise ValueError(f"unknown fault {self.inject_fault!r}; choose from {FAULTS}")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    residual: float
    tolerance: float
    passed: bool
    samples: int
    bound: str = "upper"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "samples": self.samples,
            "bound": self.bound,
        }


@dataclass
class SuiteReport:
    suites: list[str]
    seed: int
    records: list[CheckRecord]
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def record(self, check_id: str) -> CheckRecord:
        for r in self.records:
            if r.id == check_id:
                return r
        raise KeyError(check_id)

    def to_json(self) -> dict:
        out = {
            "suites": self.suites,
            "seed": self.seed,
            "pass": self.passed,
            "records": [r.to_json() for r in sorted(self.records, key=lambda r: r.id)],
        }
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


class _Recorder:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.records: list[CheckRecord] = []

    def upper(self, check_id: str, residuals: Iterable[float], tol: float) -> None:
        vals = [float(v) for v in residuals]
        tol = float(self.cfg.tolerances.get(check_id, tol))
        worst = max(vals) if vals else 0.0
        ok = bool(vals) and all(math.isfinite(v) for v in vals) and worst <= tol
        self.records.append(CheckRecord(check_id, worst, tol, ok, len(vals)))

    def lower(self, check_id: str, margins: Iterable[float], threshold: float) -> None:
        vals = [float(v) for v in margins]
        threshold = float(self.cfg.tolerances.get(check_id, threshold))
        worst = min(vals) if vals else 0.0
        ok = bool(vals) and worst > threshold
        self.records.append(CheckRecord(check_id, worst, threshold, ok, len(vals), "lower"))


def _sig_tag(sig: Signature) -> str:
    return f"cl{sig.p}{sig.q}"


def _mdiff(a: Multivector, b) -> float:
    return (a - b).norm_inf()


# --------------------------------------------------------------------------
# core


def suite_core(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    n = cfg.samples
    n_oracle = min(n, 200)
    expected_i2 = {CL30: -1.0, CL03: 1.0, CL13: -1.0}
    for sig in SIGNATURES:
        tag = _sig_tag(sig)
        assoc, rev, inv, conj, comp, oracle = [], [], [], [], [], []
        for i in range(n):
            a, b, c = (S.multivector(rng, sig) for _ in range(3))
            ab = a * b
            assoc.append(_mdiff(ab * c, a * (b * c)))
            rev.append(_mdiff(reversion(ab), reversion(b) * reversion(a)))
            inv.append(_mdiff(grade_involution(ab), grade_involution(a) * grade_involution(b)))
            conj.append(
                max(
                    _mdiff(conjugation(a), reversion(grade_involution(a))),
                    _mdiff(conjugation(a), grade_involution(reversion(a))),
                )
            )
            comp.append(_mdiff(sum((a.grade(k) for k in range(sig.n + 1)), sig.zero()), a))
            if i < n_oracle:
                oracle.append(_mdiff(ab, slow_product(a, b)))
        rec.upper(f"core.associativity.{tag}", assoc, 1e-12)
        rec.upper(f"core.reversion_antiautomorphism.{tag}", rev, 1e-12)
        rec.upper(f"core.involution_automorphism.{tag}", inv, 1e-12)
        rec.upper(f"core.conjugation_composition.{tag}", conj, 0.0)
        rec.upper(f"core.grade_completeness.{tag}", comp, 0.0)
        rec.upper(f"core.product_vs_word_oracle.{tag}", oracle, 1e-12)

        gens = [sig.blade(1 << i) for i in range(sig.n)]
        anti = []
        for i, j in itertools.product(range(sig.n), repeat=2):
            want = 2.0 * sig.square(i + 1) if i == j else 0.0
            anti.append(_mdiff(gens[i] * gens[j] + gens[j] * gens[i], want))
        rec.upper(f"core.anticommutation.{tag}", anti, 0.0)
        ps = sig.pseudoscalar()
        rec.upper(f"core.pseudoscalar_square.{tag}", [_mdiff(ps * ps, expected_i2[sig])], 0.0)

    for sig in (CL30, CL03):
        ps = sig.pseudoscalar()
        rec.upper(
            f"core.pseudoscalar_central.{_sig_tag(sig)}",
            [_mdiff(ps * b, b * ps) for b in sig.basis()],
            0.0,
        )
    e12 = CL30.blade("e12")
    exps = []
    for _ in range(n):
        th = float(rng.uniform(-math.pi, math.pi))
        exps.append(_mdiff(mv_exp(e12 * th) * mv_exp(e12 * -th), 1.0))
    rec.upper("core.exp_inverse", exps, 1e-12)
    rec.upper("core.exp_quarter_turn", [_mdiff(mv_exp(CL30.blade("e123") * CL30.blade("e3") * (math.pi / 2)), e12)], 1e-15)
    return rec.records


# --------------------------------------------------------------------------
# representations


def _mat_err(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def suite_rep(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    n = cfg.samples
    e1, e3 = CL30.blade("e1"), CL30.blade("e3")
    fp, fm = (1 + e3) / 2, (1 - e3) / 2
    anchors = [
        (fp, [[1, 0], [0, 0]]),
        (fm, [[0, 0], [0, 1]]),
        (e1 * fp, [[0, 0], [1, 0]]),
        (e1 * fm, [[0, 1], [0, 0]]),
    ]
    rec.upper("rep.anchor_matrices", [_mat_err(rep_cl30(x), m) for x, m in anchors], 0.0)
    imgs = np.array([rep_cl30(b).ravel() for b in CL30.basis()])
    real_imgs = np.hstack([imgs.real, imgs.imag])
    rec.upper("rep.faithful_rank_deficit", [8 - np.linalg.matrix_rank(real_imgs)], 0.0)

    hom, dag, det, hat = [], [], [], []
    for _ in range(n):
        a, b = S.multivector(rng, CL30), S.multivector(rng, CL30)
        hom.append(_mat_err(rep_cl30(a * b), rep_cl30(a) @ rep_cl30(b)))
        dag.append(_mat_err(rep_cl30(reversion(a)), rep_cl30(a).conj().T))
        r = S.even(rng)
        m = rep_cl30(r)
        det.append(abs((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]) - (r * conjugation(r)).scalar))
        u = S.unit_rotor(rng)
        hat.append(_mat_err(rep_cl30(grade_involution(u)), np.linalg.inv(rep_cl30(u).conj().T)))
    rec.upper("rep.cl30_homomorphism", hom, 1e-12)
    rec.upper("rep.reversion_is_dagger", dag, 1e-12)
    rec.upper("rep.det_equals_norm", det, 1e-12)
    rec.upper("rep.hat_is_inverse_dagger", hat, 1e-12)

    rel = []
    for mu, nu in itertools.product(range(4), repeat=2):
        rel.append(_mat_err(GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu], 2 * MINKOWSKI[mu, nu] * I4))
    rec.upper("rep.gamma_clifford_relations", rel, 0.0)
    # the even blades against direct products of gamma matrices
    blade_err = []
    for mask in range(16):
        if bin(mask).count("1") % 2:
            continue
        direct = I4.copy()
        for mu in range(4):
            if mask >> mu & 1:
                direct = direct @ GAMMA[mu]
        blade_err.append(_mat_err(rep_cl13_even(CL13.blade(mask)), direct))
    rec.upper("rep.cl13_even_blades", blade_err, 0.0)

    h13, iso_h, iso_rt = [], [], []
    for _ in range(n):
        a, b = S.even(rng, CL13), S.even(rng, CL13)
        h13.append(_mat_err(rep_cl13_even(a * b), rep_cl13_even(a) @ rep_cl13_even(b)))
        iso_h.append(_mdiff(iso_cl13even_to_cl30(a * b), iso_cl13even_to_cl30(a) * iso_cl13even_to_cl30(b)))
        x = S.multivector(rng, CL30)
        iso_rt.append(max(_mdiff(iso_cl13even_to_cl30(iso_cl30_to_cl13even(x)), x), _mdiff(iso_cl30_to_cl13even(iso_cl13even_to_cl30(a)), a)))
    rec.upper("rep.cl13_even_homomorphism", h13, 1e-12)
    rec.upper("rep.iso_homomorphism", iso_h, 1e-12)
    rec.upper("rep.iso_roundtrip", iso_rt, 0.0)
    return rec.records


# --------------------------------------------------------------------------
# Weyl spinors


def _cdiff(a: CenterScalar, b: CenterScalar) -> float:
    return abs(a - b)


def suite_weyl(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    n = cfg.samples
    rec.upper(
        "weyl.idempotent_algebra",
        [_mdiff(F_PLUS * F_MINUS, 0.0), _mdiff(F_MINUS * F_PLUS, 0.0), _mdiff(F_PLUS * F_PLUS, F_PLUS), _mdiff(F_MINUS * F_MINUS, F_MINUS), _mdiff(F_PLUS + F_MINUS, 1.0)],
        0.0,
    )
    comp, emb, mplus, mminus, anti, hat, ideal = [], [], [], [], [], [], []
    for _ in range(n):
        k, eta = S.spinor(rng), S.spinor(rng)
        ks, kb = to_cvus(k), to_cds(k)
        kbs = to_cvds(kb)
        # component relations, compared exactly
        comp.append(
            max(
                _cdiff(ks.c1, -k.c2), _cdiff(ks.c2, k.c1),
                _cdiff(kb.c1, k.c1.conj()), _cdiff(kb.c2, k.c2.conj()),
                _cdiff(kbs.c1, -kb.c2), _cdiff(kbs.c2, kb.c1),
            )
        )
        x = k.embed()
        emb.append(
            max(
                _mdiff(ks.embed(), E1 * conjugation(x)),
                _mdiff(kb.embed(), E1 * reversion(x)),
                _mdiff(kbs.embed(), conjugation(E1 * kb.embed())),
            )
        )
        hat.append(_mdiff(kbs.embed(), grade_involution(x)))
        ideal.append(
            max(
                _mdiff(x * F_PLUS, x),
                _mdiff(F_PLUS * ks.embed(), ks.embed()),
                _mdiff(F_MINUS * kb.embed(), kb.embed()),
                _mdiff(kbs.embed() * F_MINUS, kbs.embed()),
            )
        )
        mplus.append(_cdiff(idempotent_coefficient(ks.embed() * eta.embed(), F_PLUS), metric_fplus(k, eta)))
        ebs = to_cvds(to_cds(eta))
        mminus.append(_cdiff(idempotent_coefficient(kb.embed() * ebs.embed(), F_MINUS), metric_fminus(kb, ebs)))
        anti.append(_cdiff(metric_fplus(k, eta), -metric_fplus(eta, k)))
    rec.upper("weyl.component_relations", comp, 0.0)
    rec.upper("weyl.conversions_match_products", emb, 1e-12)
    rec.upper("weyl.diagram_closure_hat", hat, 1e-12)
    rec.upper("weyl.ideal_membership", ideal, 1e-12)
    rec.upper("weyl.metric_fplus_product", mplus, 1e-12)
    rec.upper("weyl.metric_fminus_product", mminus, 1e-12)
    rec.upper("weyl.metric_fplus_antisymmetry", anti, 0.0)

    inv_p, inv_m, commute, unit = [], [], [], []
    for _ in range(cfg.rotor_samples):
        r = S.unit_rotor(rng)
        unit.append(_mdiff(r * conjugation(r), 1.0))
        k, eta = S.spinor(rng), S.spinor(rng)
        inv_p.append(_cdiff(metric_fplus(transform(r, k), transform(r, eta)), metric_fplus(k, eta)))
        kb, ebs = to_cds(k), to_cvds(to_cds(eta))
        inv_m.append(_cdiff(metric_fminus(transform(r, kb), transform(r, ebs)), metric_fminus(kb, ebs)))
        errs = []
        for conv, src in ((to_cvus, k), (to_cds, k), (to_cvds, kb)):
            a, b = conv(transform(r, src)), transform(r, conv(src))
            errs += [_cdiff(a.c1, b.c1), _cdiff(a.c2, b.c2)]
        commute.append(max(errs))
    rec.upper("weyl.rotor_unit", unit, 1e-12)
    rec.upper("weyl.metric_fplus_invariance", inv_p, 1e-12)
    rec.upper("weyl.metric_fminus_invariance", inv_m, 1e-12)
    rec.upper("weyl.transform_commutes_with_conversion", commute, 1e-12)
    return rec.records


# --------------------------------------------------------------------------
# Dirac sector


def faulty_boost(p, m: float) -> Multivector:
    """Boost with the sign of its vector part flipped (negative control)."""
    l = boost(p, m)
    return l.grade(0) - l.grade(1)


def _plane_wave_params(cfg: RunConfig, rng) -> list[PlaneWaveParams]:
    out = []
    for branch, spin in itertools.product(Branch, Spin):
        for m in MASSES:
            out.append(PlaneWaveParams(branch, spin, (0.0, 0.0, 0.0), m))
            for _ in range(cfg.momenta):
                out.append(PlaneWaveParams(branch, spin, tuple(S.momentum(rng, m)), m))
    return out


def _column_field(f: MultivectorField):
    def column(t, x):
        return dirac_column(iso_cl30_to_cl13even(f.value(t, x)))

    def derivative(t, x):
        return [dirac_column(iso_cl30_to_cl13even(d)) for d in f.partials(t, x)]

    return column, derivative


def _fd_orders(f: MultivectorField, m: float, pt: SpacetimePoint, h0: float) -> list[float]:
    errs = [dhe_residual(f.finite_difference(h0 / 2**j), ZERO_POTENTIAL, m, pt).norm() for j in range(3)]
    return [math.log2(errs[j] / errs[j + 1]) for j in range(2)]


def suite_dirac(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    boost_fn = faulty_boost if cfg.inject_fault == "boost-sign" else boost
    analytic, fd, weyl_r, pauli_r, cross, rphase, lphase, unit = [], [], [], [], [], [], [], []
    orders = []
    for params in _plane_wave_params(cfg, rng):
        m = params.m
        f = planewave_field(params, boost_fn)
        t, x = S.point(rng)
        pt = SpacetimePoint(t, x)
        analytic.append(dhe_residual(f, ZERO_POTENTIAL, m, pt).norm_inf())
        fd.append(dhe_residual(f.finite_difference(1e-4), ZERO_POTENTIAL, m, pt).norm_inf())
        xi, eta = weyl_fields(f)
        weyl_r.append(max(r.norm_inf() for r in weyl_residuals(xi, eta, m, pt)))
        phi, chi = pauli_fields(f)
        pauli_r.append(max(r.norm_inf() for r in pauli_residuals(phi, chi, m, pt)))
        col, dcol = _column_field(f)
        cross.append(float(np.max(np.abs(standard_dirac_residual(col, m, t, x, derivative=dcol)))))
        c, d = rng.uniform(-1, 1, 2)
        g = f.map(lambda v, c=c, d=d: right_phase(v, c, d))
        rphase.append(dhe_residual(g, ZERO_POTENTIAL, m, pt).norm_inf())
        lb = boost_fn(params.p, m)
        unit.append(_mdiff(lb * conjugation(lb), 1.0))
        if np.linalg.norm(params.p[:2]) > 0.25 * m:
            # a left phase breaks the equation whenever p has transverse components
            g = f.map(lambda v: left_phase(v, 0.0, 1.0))
            lphase.append(dhe_residual(g, ZERO_POTENTIAL, m, pt).norm() / m)
        if m == max(MASSES) and np.linalg.norm(params.p) >= m:
            # order is only measurable where truncation error dwarfs round-off
            orders.extend(abs(o - 2.0) for o in _fd_orders(f.finite_difference(), m, pt, 1e-4))
    rec.upper("dirac.planewave_analytic", analytic, 1e-10)
    rec.upper("dirac.planewave_finite_difference", fd, 1e-4)
    rec.upper("dirac.fd_order_deviation", orders, 0.1)
    rec.upper("dirac.weyl_system", weyl_r, 1e-10)
    rec.upper("dirac.pauli_system", pauli_r, 1e-10)
    rec.upper("dirac.gamma_matrix_oracle", cross, 1e-10)
    rec.upper("dirac.right_phase_closure", rphase, 1e-10)
    rec.lower("dirac.left_phase_control", lphase, 0.1)
    rec.upper("dirac.boost_unit", unit, 1e-12)

    # even seeds oscillate at +m, odd ones at -m
    match, mismatch = [], []
    seeds = (CL30.scalar(1.0), CL30.blade("e13"), CL30.blade("e123"), CL30.blade("e2"))
    for m in MASSES:
        for psi0 in seeds:
            right = m if psi0.is_even() else -m
            for omega in (m, -m):
                f = _rest_field(psi0, omega)
                pt = SpacetimePoint(*S.point(rng))
                r = dhe_residual(f, ZERO_POTENTIAL, m, pt).norm()
                (match if omega == right else mismatch).append(r if omega == right else r / m)
    rec.upper("dirac.frequency_rule_match", match, 1e-10)
    rec.lower("dirac.frequency_rule_mismatch", mismatch, 0.1)

    rt, runit, betas = [], [], []
    for _ in range(cfg.samples):
        psi = S.well_conditioned(rng)
        dec = lounesto_decompose(psi)
        rt.append(_mdiff(dec.recompose(), psi))
        runit.append(_mdiff(dec.R * conjugation(dec.R), 1.0))
        betas.append(0.0 if -math.pi < dec.beta <= math.pi else 1.0)
    rec.upper("dirac.lounesto_roundtrip", rt, 1e-12)
    rec.upper("dirac.lounesto_unit_rotor", runit, 1e-12)
    rec.upper("dirac.lounesto_beta_range", betas, 0.0)
    rejected = []
    witnesses = [1 + CL30.blade("e3")] + [S.spinor(rng).embed() for _ in range(20)]
    for w in witnesses:
        try:
            lounesto_decompose(w)
            rejected.append(1.0)
        except SingularError:
            rejected.append(0.0)
    rec.upper("dirac.lounesto_singular_rejected", rejected, 0.0)
    return rec.records


def _rest_field(psi0: Multivector, omega: float) -> MultivectorField:
    ie3 = CL30.blade("e12")

    def value(t, x):
        return psi0 * mv_exp(ie3 * (-omega * t))

    def partials(t, x):
        z = CL30.zero()
        return [value(t, x) * ie3 * (-omega), z, z, z]

    return MultivectorField(value, partials)


# --------------------------------------------------------------------------
# paravectors


def suite_paravector(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    null, future, grades, sym, formula, polar, rank, tetrad = [], [], [], [], [], [], [], []
    for _ in range(cfg.samples):
        k = S.nonzero_spinor(rng)
        sq = spinor_square(k)
        grades.append(max(sq.grade(2).norm_inf(), sq.grade(3).norm_inf()))
        a = paravector_from_spinor(k)
        null.append(abs(minkowski_square(a)) / max(1.0, a.scale**2))
        future.append(0.0 if is_future(a) else 1.0)
        b = Paravector(rng.uniform(-1, 1), tuple(rng.uniform(-1, 1, 3)))
        s = clifford_symmetrization(a, b)
        sym.append((s - s.scalar).norm_inf())
        formula.append(abs(pv_metric(a, b) - (a.a0 * b.a0 - float(np.dot(a.a, b.a)))))
        polar.append(abs(pv_metric(a, b) - (pv_metric(a + b, a + b) - pv_metric(a, a) - pv_metric(b, b)) / 2))
        x = k.embed()
        coeffs = tetrad_decompose(x * reversion(x))
        rank.append(abs(tetrad_rank_defect(coeffs)))
        L = NullTetradLabel
        want = {
            L.OO: k.c1 * k.c1.conj(),
            L.OI: k.c1 * k.c2.conj(),
            L.IO: k.c2 * k.c1.conj(),
            L.II: k.c2 * k.c2.conj(),
        }
        tetrad.append(max(abs(coeffs[lab] - want[lab]) for lab in L))
    rec.upper("paravector.spinor_square_grades", grades, 1e-12)
    rec.upper("paravector.null", null, 1e-12)
    rec.upper("paravector.future_failures", future, 0.0)
    rec.upper("paravector.symmetrized_nonscalar", sym, 1e-12)
    rec.upper("paravector.metric_formula", formula, 1e-12)
    rec.upper("paravector.metric_polarization", polar, 1e-12)
    rec.upper("paravector.tetrad_rank_one", rank, 1e-12)
    rec.upper("paravector.tetrad_components", tetrad, 1e-12)
    return rec.records


# --------------------------------------------------------------------------
# Cl(0,3)


def suite_cl03(cfg: RunConfig, rng) -> list[CheckRecord]:
    rec = _Recorder(cfg)
    fp, fm = c3.idempotents03()
    rec.upper(
        "cl03.idempotents",
        [_mdiff(fp * fp, fp), _mdiff(fm * fm, fm), _mdiff(fp * fm, 0.0), _mdiff(fp + fm, 1.0)]
        + [_mdiff(fp * b, b * fp) for b in CL03.basis()],
        0.0,
    )
    i, j, k = c3.E23, c3.E31, c3.E12
    rec.upper(
        "cl03.quaternion_units",
        [_mdiff(i * i, -1.0), _mdiff(j * j, -1.0), _mdiff(k * k, -1.0), _mdiff(i * j, k), _mdiff(j * k, i), _mdiff(k * i, j)],
        0.0,
    )
    red, anti, invol, swap, dual, m_prod, m_alt, hom, rt = [], [], [], [], [], [], [], [], []
    for _ in range(cfg.samples):
        a, b = S.multivector(rng, CL03), S.multivector(rng, CL03)
        ar = c3.reduce_even03(a)
        red.append(max(_mdiff((ar - a) * fp, 0.0), ar.odd().norm_inf()))
        q1, q2 = S.cl03_even(rng), S.cl03_even(rng)
        anti.append(_mdiff(c3.sigma(q1 * q2), c3.sigma(q2) * c3.sigma(q1)))
        invol.append(_mdiff(c3.sigma(c3.sigma(q1)), q1))
        ks = c3.cus03_from_even(q1)
        swap.append(_mdiff(c3.sigma_spinor(ks), fp * c3.sigma(q1)))
        dual.append(_mdiff(c3.right_module_embed(*c3.sigma_dual_spinor(ks)), c3.sigma_spinor(ks) * c3.E13))
        eta = c3.cus03_from_even(q2)
        z = c3.metric03(ks, eta)
        m_prod.append(abs(c3.metric03_from_product(ks, eta) - z))
        m_alt.append(abs(c3.metric03_via_sigma(ks, eta) - z))
        ra, rb, rab = c3.rep_h_plus_h(a), c3.rep_h_plus_h(b), c3.rep_h_plus_h(a * b)
        hom.append(
            max(
                float(np.max(np.abs(hamilton(ra.plus, rb.plus) - np.array(rab.plus)))),
                float(np.max(np.abs(hamilton(ra.minus, rb.minus) - np.array(rab.minus)))),
            )
        )
        rt.append(_mdiff(c3.rep_h_plus_h_inverse(ra), a))
    rec.upper("cl03.reduction", red, 0.0)
    rec.upper("cl03.sigma_antihomomorphism", anti, 1e-12)
    rec.upper("cl03.sigma_involution", invol, 1e-12)
    rec.upper("cl03.sigma_module_swap", swap, 1e-12)
    rec.upper("cl03.sigma_dual_spinor", dual, 1e-12)
    rec.upper("cl03.metric_vs_product", m_prod, 1e-12)
    rec.upper("cl03.metric_vs_sigma_form", m_alt, 1e-12)
    rec.upper("cl03.h_plus_h_homomorphism", hom, 1e-12)
    rec.upper("cl03.h_plus_h_roundtrip", rt, 1e-12)
    imgs = np.array([np.r_[c3.rep_h_plus_h(bl).plus, c3.rep_h_plus_h(bl).minus] for bl in CL03.basis()])
    rec.upper("cl03.h_plus_h_rank_deficit", [8 - np.linalg.matrix_rank(imgs)], 0.0)
    return rec.records


SUITE_FUNCS: dict[str, Callable] = {
    "core": suite_core,
    "rep": suite_rep,
    "weyl": suite_weyl,
    "dirac": suite_dirac,
    "paravector": suite_paravector,
    "cl03": suite_cl03,
}


def resolve_suites(names: Iterable[str]) -> list[str]:
    names = list(names) or ["all"]
    out: list[str] = []
    for name in names:
        if name == "all":
            chosen = list(SUITES)
        elif name in SUITE_FUNCS:
            chosen = [name]
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
        out += [c for c in chosen if c not in out]
    return [s for s in SUITES if s in out]


def run_suite(name: str, cfg: RunConfig) -> list[CheckRecord]:
    rng = S.make_rng(cfg.seed, SUITES.index(name))
    return SUITE_FUNCS[name](cfg, rng)


def run_verify(cfg: RunConfig, suites: Iterable[str] = ("all",)) -> SuiteReport:
    chosen = resolve_suites(suites)
    start = time.perf_counter()
    records: list[CheckRecord] = []
    for name in chosen:
        records += run_suite(name, cfg)
    records.sort(key=lambda r: r.id)
    wall = time.perf_counter() - start if cfg.timing else None
    return SuiteReport(chosen, cfg.seed, records, wall)


__all__ = [
    "CheckRecord",
    "RunConfig",
    "SUITES",
    "SuiteReport",
    "resolve_suites",
    "run_suite",
    "run_verify",
]
