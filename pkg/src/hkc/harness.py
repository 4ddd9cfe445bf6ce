"""Verification harness and command-line entry point.

Runs the identity suites against a freshly built structure, collects the
residuals into a machine-readable report, and resolves the three sign
conventions empirically before any curvature suite is interpreted.  All
sampling is driven by counter-keyed seed sequences, so a report is a pure
function of its configuration.
"""

import argparse
import os
import sys
from dataclasses import dataclass

import numpy as np

from .connections import (
    ConnectionKind,
    VectorField,
    cov_deriv,
    curvature,
    h_form_gap,
    lie_bracket,
    nabla_bar_phi_defect,
    sasaki_defect,
    sphere_curvature_oracle,
    torsion,
)
from .curvature import (
    cor_xxx_data,
    cross_check_rbar,
    holomorphic_sectional_bar,
    ricci,
    sec_rela_data,
    sectional,
    theorem_sec_data,
    two_route_gap_form,
    verify_symmetries,
)
from .numlin import (
    CENTRAL_DIFFERENCE,
    EXACT_FORWARD,
    DiffScheme,
    PreconditionError,
    StructuralError,
    directional_derivative,
    dot,
)
from .records import SCHEMA, VerificationReport, make_record
from .sphere3s import (
    EVEN_PERMUTATIONS,
    TangentVector,
    ThreeSasakiStructure,
)

LC = ConnectionKind.LEVI_CIVITA
HC = ConnectionKind.H_CONNECTION

SUITE_ORDER = (
    "axioms",
    "sasaki",
    "connection",
    "torsion",
    "curvature",
    "cross-check",
    "ricci",
    "sectional",
    "theorem-sec",
)

_SWEEP_ANGLES = (
    ("0", 0.0),
    ("pi/6", np.pi / 6.0),
    ("pi/4", np.pi / 4.0),
    ("pi/3", np.pi / 3.0),
    ("pi/2", np.pi / 2.0),
)

_CONVENTION_STREAM = 97  # spawn-key lane reserved for sign resolution
_CLI_STREAM = 98         # spawn-key lane for the curvature subcommand


# ============================================================
# configuration
# ============================================================

@dataclass(frozen=True)
class RunConfig:
    n: int = 1
    points: int = 25
    seed: int = 0
    tol_first: float = 1e-9
    tol_second: float = 1e-7
    scheme: DiffScheme = EXACT_FORWARD
    suites: tuple = SUITE_ORDER

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise StructuralError(f"n must be a non-negative integer, got {self.n!r}")
        if int(self.points) != self.points or self.points < 1:
            raise StructuralError(f"points must be a positive integer, got {self.points!r}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise StructuralError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not (0.0 < self.tol_first <= self.tol_second):
            raise StructuralError(
                f"tolerances must satisfy 0 < tol_first <= tol_second, got "
                f"{self.tol_first!r} and {self.tol_second!r}")
        if not isinstance(self.scheme, DiffScheme):
            raise StructuralError("scheme must be a DiffScheme")
        unknown = [s for s in self.suites if s not in SUITE_ORDER]
        if unknown:
            raise StructuralError(f"unknown suites: {unknown}")
        if not self.suites:
            raise StructuralError("at least one suite must be requested")

    def run_order(self):
        return tuple(name for name in SUITE_ORDER if name in self.suites)

    def as_dict(self):
        return {
            "n": int(self.n),
            "points": int(self.points),
            "seed": int(self.seed),
            "tol_first": float(self.tol_first),
            "tol_second": float(self.tol_second),
            "scheme": {"kind": self.scheme.kind, "step": float(self.scheme.step)},
            "suites": list(self.run_order()),
        }


# ============================================================
# deterministic sampling
# ============================================================

def _stream(seed, lane, index):
    """Independent generator keyed by (seed, lane, index); the lane is a
    suite position or a reserved constant, so no two records share draws."""
    return np.random.default_rng(
        np.random.SeedSequence(int(seed), spawn_key=(int(lane), int(index))))


def _suite_stream(cfg, suite, index):
    return _stream(cfg.seed, SUITE_ORDER.index(suite), index)


def sample_point(structure, rng):
    for _ in range(10):
        v = rng.standard_normal(structure.ambient_dim)
        nv = float(np.linalg.norm(v))
        if nv > 1e-6:
            return structure.point(v / nv)
    raise PreconditionError("could not draw a usable ambient direction")


def sample_unit_tangent(structure, x, rng):
    for _ in range(10):
        w = structure.tangent_project_raw(rng.standard_normal(structure.ambient_dim), x.x)
        nw = float(np.linalg.norm(w))
        if nw > 1e-6:
            return TangentVector(x, w / nw)
    raise PreconditionError("could not draw a usable tangent direction")


def sample_unit_H(structure, x, rng):
    if structure.h_dim == 0:
        raise PreconditionError(
            "the distribution H is zero-dimensional for n = 0; "
            "no unit direction can be drawn from it")
    for _ in range(10):
        w = structure.project_h_raw(rng.standard_normal(structure.ambient_dim), x.x)
        nw = float(np.linalg.norm(w))
        if nw > 1e-6:
            return TangentVector(x, w / nw)
    raise PreconditionError("could not draw a usable distribution direction")


def _ext(structure, t):
    return VectorField.extension(structure, t)


# ============================================================
# sign-convention resolution
# ============================================================

def resolve_conventions(structure, seed, scheme=EXACT_FORWARD):
    """Measure the three sign conventions instead of assuming them.

    Each entry records the selected value, the residual it leaves, and a
    plain statement of what the value means.  Resolution happens on a
    dedicated sampling lane so it never perturbs suite draws.
    """
    rng = _stream(seed, _CONVENTION_STREAM, 0)
    x = sample_point(structure, rng)
    u = sample_unit_tangent(structure, x, rng)
    Xf = _ext(structure, u)

    # (1) orientation of the Reeb first-derivative law
    d_xi = cov_deriv(LC, Xf, VectorField.reeb(structure, 1), x, scheme)
    phi_u = structure.phi(1, u)
    r_minus = (d_xi + phi_u).norm()
    r_plus = (d_xi - phi_u).norm()
    reeb_val = "-1" if r_minus <= r_plus else "+1"

    # (2) sign of the round curvature operator, probed on an orthonormal
    # tangent pair via R(X, Y)Y
    v = sample_unit_tangent(structure, x, rng)
    w = v.v - float(np.dot(v.v, u.v)) * u.v
    v = TangentVector(x, w / np.linalg.norm(w))
    RXYY = curvature(LC, Xf, _ext(structure, v), _ext(structure, v), x, scheme)
    c_plus = (RXYY - u).norm()
    c_minus = (RXYY + u).norm()
    curv_val = "+1" if c_plus <= c_minus else "-1"

    # (3) plane normalization: the factor for which round planes measure +1
    k_minus = sectional(structure, u, v, convention=-1, scheme=scheme)
    k_plus = sectional(structure, u, v, convention=+1, scheme=scheme)
    p_minus = abs(k_minus - 1.0)
    p_plus = abs(k_plus - 1.0)
    plane_val = "-1" if p_minus <= p_plus else "+1"

    return {
        "reeb-orientation": {
            "value": reeb_val,
            "residual": float(min(r_minus, r_plus)),
            "meaning": "first derivative of each Reeb field along X equals "
                       "(value) * phi_a X",
        },
        "curvature-sign": {
            "value": curv_val,
            "residual": float(min(c_plus, c_minus)),
            "meaning": "round curvature operator equals (value) * "
                       "(g(Y,Z) X - g(X,Z) Y); the quadrilinear table is "
                       "r(X,Y,Z,W) = g(R(X,Y)W, Z)",
        },
        "plane-normalization": {
            "value": plane_val,
            "residual": float(min(p_minus, p_plus)),
            "meaning": "plane measure = (value) * (-r(X,Y,X,Y)) / gram(X,Y); "
                       "the selected value makes round planes measure +1",
        },
    }


def selected_plane_convention(conventions):
    return int(conventions["plane-normalization"]["value"])


# ============================================================
# suites
# ============================================================

def _suite_axioms(s, cfg, conventions):
    pts = []
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "axioms", i)
        x = sample_point(s, rng)
        pts.append((x, sample_unit_tangent(s, x, rng),
                    sample_unit_tangent(s, x, rng)))
    return s.check_structure_axioms(pts, tol=cfg.tol_first)


def _suite_sasaki(s, cfg, conventions):
    d_def = d_cov = d_br = d_rr = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "sasaki", i)
        x = sample_point(s, rng)
        X = _ext(s, sample_unit_tangent(s, x, rng))
        Y = _ext(s, sample_unit_tangent(s, x, rng))
        for a in (1, 2, 3):
            d_def = max(d_def, sasaki_defect(a, X, Y, x, cfg.scheme).norm())
            d = cov_deriv(LC, X, VectorField.reeb(s, a), x, cfg.scheme)
            d_cov = max(d_cov, (d + s.phi(a, X.at(x))).norm())
        for (a, b, c) in EVEN_PERMUTATIONS:
            xa, xb = VectorField.reeb(s, a), VectorField.reeb(s, b)
            br = lie_bracket(xa, xb, x, cfg.scheme)
            d_br = max(d_br, (br - 2.0 * s.reeb(c, x)).norm())
            rr = cov_deriv(LC, xa, xb, x, cfg.scheme)
            d_rr = max(d_rr, (rr - s.reeb(c, x)).norm())
            d_rr = max(d_rr, cov_deriv(LC, xa, xa, x, cfg.scheme).norm())
    conv_residual = max(v["residual"] for v in conventions.values())
    return [
        make_record("sasaki.defect", suite="sasaki",
                    passed=bool(d_def <= cfg.tol_second),
                    max_residual=d_def, tolerance=cfg.tol_second,
                    samples=cfg.points),
        make_record("sasaki.reeb_covariant", suite="sasaki",
                    passed=bool(d_cov <= cfg.tol_first),
                    max_residual=d_cov, tolerance=cfg.tol_first,
                    samples=cfg.points),
        make_record("sasaki.reeb_bracket", suite="sasaki",
                    passed=bool(d_br <= cfg.tol_first),
                    max_residual=d_br, tolerance=cfg.tol_first,
                    samples=cfg.points),
        make_record("sasaki.reeb_on_reeb", suite="sasaki",
                    passed=bool(d_rr <= cfg.tol_first),
                    max_residual=d_rr, tolerance=cfg.tol_first,
                    samples=cfg.points),
        make_record("sasaki.conventions", suite="sasaki", kind="info",
                    passed=True, max_residual=conv_residual,
                    samples=1, details=conventions),
    ]


def _suite_connection(s, cfg, conventions):
    d_forms = d_metric = d_reeb = d_hpres = d_br3 = d_phi = d_htab = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "connection", i)
        x = sample_point(s, rng)
        Xt = sample_unit_tangent(s, x, rng)
        Zt = sample_unit_tangent(s, x, rng)
        X, Z = _ext(s, Xt), _ext(s, Zt)
        Xh = _ext(s, sample_unit_H(s, x, rng)).project_H()
        Yh = _ext(s, sample_unit_H(s, x, rng)).project_H()

        d_forms = max(d_forms, h_form_gap(X, Z, x, cfg.scheme))

        gfun = lambda y: dot(X(y), Z(y))
        dg = directional_derivative(gfun, x.x, Xt.v, cfg.scheme)
        # metric compatibility of the adapted derivative along itself:
        # differentiate g(X, Z) along X and compare with the product rule
        rhs = (s.metric(cov_deriv(HC, X, X, x, cfg.scheme), Zt)
               + s.metric(Xt, cov_deriv(HC, X, Z, x, cfg.scheme)))
        dg2 = directional_derivative(lambda y: dot(X(y), X(y)), x.x, Zt.v,
                                     cfg.scheme)
        rhs2 = 2.0 * s.metric(cov_deriv(HC, Z, X, x, cfg.scheme), Xt)
        d_metric = max(d_metric, abs(float(dg) - rhs), abs(float(dg2) - rhs2))

        for a in (1, 2, 3):
            d_reeb = max(d_reeb, cov_deriv(
                HC, X, VectorField.reeb(s, a), x, cfg.scheme).norm())

        dY = cov_deriv(HC, X, Yh, x, cfg.scheme)
        d_hpres = max(d_hpres, max(abs(s.eta(a, dY)) for a in (1, 2, 3)))

        br = lie_bracket(X, Z, x, cfg.scheme)
        rhs_br = (cov_deriv(HC, X, Z, x, cfg.scheme).v
                  - cov_deriv(HC, Z, X, x, cfg.scheme).v)
        for a in (1, 2, 3):
            rhs_br = rhs_br - 2.0 * s.omega(a, Xt, Zt) * s.reeb(a, x).v
        d_br3 = max(d_br3, float(np.linalg.norm(br.v - rhs_br)))

        for a in (1, 2, 3):
            d_phi = max(d_phi, nabla_bar_phi_defect(
                a, Xh, Yh, x, cfg.scheme).norm())

        ht = Xt  # the comparison table is exact for any tangent argument
        phis = {a: s.phi(a, ht) for a in (1, 2, 3)}
        expect = {(1, 2): phis[3], (2, 1): -1.0 * phis[3],
                  (2, 3): phis[1], (3, 2): -1.0 * phis[1],
                  (3, 1): phis[2], (1, 3): -1.0 * phis[2]}
        for a in (1, 2, 3):
            d_htab = max(d_htab, s.h_tensor(a, a, ht, cfg.scheme).norm())
        for (a, b), want in expect.items():
            d_htab = max(d_htab,
                         (s.h_tensor(a, b, ht, cfg.scheme) - want).norm())

    def rec(rid, res, tol):
        return make_record(rid, suite="connection", passed=bool(res <= tol),
                           max_residual=res, tolerance=tol, samples=cfg.points)

    return [
        rec("connection.two_forms_agree", d_forms, cfg.tol_first),
        rec("connection.metricity", d_metric, cfg.tol_first),
        rec("connection.reeb_parallel", d_reeb, cfg.tol_first),
        rec("connection.h_preserved", d_hpres, cfg.tol_first),
        rec("connection.bracket3", d_br3, cfg.tol_first),
        rec("connection.phi_parallel", d_phi, cfg.tol_second),
        rec("connection.h_tensor_table", d_htab, cfg.tol_first),
    ]


def _suite_torsion(s, cfg, conventions):
    d_lc = d_h = d_mixed = d_pair = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "torsion", i)
        x = sample_point(s, rng)
        X = _ext(s, sample_unit_tangent(s, x, rng))
        Y = _ext(s, sample_unit_tangent(s, x, rng))
        d_lc = max(d_lc, torsion(LC, X, Y, x, cfg.scheme).norm())

        Xh_t = sample_unit_H(s, x, rng)
        Yh_t = sample_unit_H(s, x, rng)
        Xh, Yh = _ext(s, Xh_t).project_H(), _ext(s, Yh_t).project_H()
        t = torsion(HC, Xh, Yh, x, cfg.scheme)
        want = np.zeros(s.ambient_dim)
        for a in (1, 2, 3):
            want = want + 2.0 * s.omega(a, Xh_t, Yh_t) * s.reeb(a, x).v
        d_h = max(d_h, float(np.linalg.norm(t.v - want)))

        for a in (1, 2, 3):
            d_mixed = max(d_mixed, torsion(
                HC, Xh, VectorField.reeb(s, a), x, cfg.scheme).norm())
        for (a, b, c) in EVEN_PERMUTATIONS:
            tp = torsion(HC, VectorField.reeb(s, a), VectorField.reeb(s, b),
                         x, cfg.scheme)
            d_pair = max(d_pair, (tp + 2.0 * s.reeb(c, x)).norm())

    def rec(rid, res):
        return make_record(rid, suite="torsion", passed=bool(res <= cfg.tol_first),
                           max_residual=res, tolerance=cfg.tol_first,
                           samples=cfg.points)

    return [
        rec("torsion.lc_zero", d_lc),
        rec("torsion.h_pair", d_h),
        rec("torsion.mixed", d_mixed),
        rec("torsion.reeb_pair", d_pair),
    ]


def _suite_curvature(s, cfg, conventions):
    d_gate = d_reeb = d_last = d_mid = d_pair = 0.0
    quads = []
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "curvature", i)
        x = sample_point(s, rng)
        Xt = sample_unit_tangent(s, x, rng)
        Yt = sample_unit_tangent(s, x, rng)
        Zt = sample_unit_tangent(s, x, rng)
        X, Y, Z = _ext(s, Xt), _ext(s, Yt), _ext(s, Zt)

        direct = curvature(LC, X, Y, Z, x, cfg.scheme)
        oracle = sphere_curvature_oracle(Xt, Yt, Zt)
        d_gate = max(d_gate, (direct - oracle).norm())

        for a in (1, 2, 3):
            xi_f = VectorField.reeb(s, a)
            r_xi = curvature(LC, X, Y, xi_f, x, cfg.scheme)
            want = s.eta(a, Yt) * Xt + (-s.eta(a, Xt)) * Yt
            d_reeb = max(d_reeb, (r_xi - want).norm())
            d_last = max(d_last, curvature(HC, X, Y, xi_f, x, cfg.scheme).norm())
            d_mid = max(d_mid, curvature(HC, X, xi_f, Z, x, cfg.scheme).norm())
        for (a, b, c) in EVEN_PERMUTATIONS:
            xa, xb = VectorField.reeb(s, a), VectorField.reeb(s, b)
            d_pair = max(d_pair, curvature(HC, xa, xb, Z, x, cfg.scheme).norm())
            d_pair = max(d_pair, curvature(
                HC, xa, xb, VectorField.reeb(s, c), x, cfg.scheme).norm())

        quads.append((x, *(sample_unit_H(s, x, rng) for _ in range(4))))

    sym_records = verify_symmetries(s, quads, tol=cfg.tol_second,
                                    scheme=cfg.scheme)

    def rec(rid, res):
        return make_record(rid, suite="curvature",
                           passed=bool(res <= cfg.tol_second),
                           max_residual=res, tolerance=cfg.tol_second,
                           samples=cfg.points)

    return [
        rec("curvature.oracle_gate", d_gate),
        rec("curvature.reeb_curvature_lc", d_reeb),
        rec("curvature.annihilation_last", d_last),
        rec("curvature.annihilation_middle", d_mid),
        rec("curvature.annihilation_pair", d_pair),
        *sym_records,
    ]


def _suite_cross_check(s, cfg, conventions):
    families = {"pure_h": [], "reeb_last": [], "reeb_pairs": [],
                "single_reeb": [], "generic": []}
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "cross-check", i)
        x = sample_point(s, rng)
        Xh = sample_unit_H(s, x, rng)
        Yh = sample_unit_H(s, x, rng)
        Zh = sample_unit_H(s, x, rng)
        a = 1 + (i % 3)
        b = 1 + ((i + 1) % 3)
        families["pure_h"].append((x, Xh, Yh, Zh))
        families["reeb_last"].append((x, Xh, Yh, s.reeb(a, x)))
        if i % 3 == 2:
            families["reeb_pairs"].append(
                (x, s.reeb(a, x), s.reeb(b, x), s.reeb(1 + ((i + 2) % 3), x)))
        else:
            families["reeb_pairs"].append((x, s.reeb(a, x), s.reeb(b, x), Zh))
        families["single_reeb"].append((x, Xh, s.reeb(a, x), Zh))
        families["generic"].append(
            (x, sample_unit_tangent(s, x, rng),
             sample_unit_tangent(s, x, rng),
             sample_unit_tangent(s, x, rng)))

    worst = {}
    gap_match = 0.0
    for name, samples in families.items():
        results = cross_check_rbar(s, samples, cfg.scheme)
        worst[name] = max(r.residual for r in results)
        for r in results:
            X, Y, Z = r.args
            gap = two_route_gap_form(s, X, Y, Z)
            gap_match = max(gap_match, float(np.linalg.norm(
                r.value_algebraic - r.value_direct - gap.v)))

    def rec(rid, res):
        return make_record(rid, suite="cross-check",
                           passed=bool(res <= cfg.tol_second),
                           max_residual=res, tolerance=cfg.tol_second,
                           samples=cfg.points)

    info = make_record(
        "cross_check.gap_structure", suite="cross-check", kind="info",
        passed=bool(gap_match <= 1e-9), max_residual=gap_match,
        tolerance=1e-9, samples=5 * cfg.points,
        details={
            "family_residuals": {k: float(v) for k, v in worst.items()},
            "note": "the difference between the algebraic expansion and the "
                    "differential evaluation is reproduced exactly by a "
                    "closed-form tensor built from the Reeb components of "
                    "the arguments; it vanishes when the first two "
                    "arguments lie in H",
        })
    return [
        rec("cross_check.pure_h", worst["pure_h"]),
        rec("cross_check.reeb_last", worst["reeb_last"]),
        rec("cross_check.reeb_pairs", worst["reeb_pairs"]),
        rec("cross_check.single_reeb", worst["single_reeb"]),
        rec("cross_check.generic", worst["generic"]),
        info,
    ]


def _suite_ricci(s, cfg, conventions):
    c_lc = float(4 * s.n + 2)
    c_claim = float(4 * s.n + 5)
    d_lc = 0.0
    d_claim = 0.0
    hc_samples = []
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "ricci", i)
        x = sample_point(s, rng)
        Xt = sample_unit_tangent(s, x, rng)
        Yt = sample_unit_tangent(s, x, rng)
        d_lc = max(d_lc, abs(ricci(s, LC, Xt, Xt, cfg.seed, cfg.scheme) - c_lc))
        d_lc = max(d_lc, abs(ricci(s, LC, Xt, Yt, cfg.seed, cfg.scheme)
                             - c_lc * s.metric(Xt, Yt)))
        Xh = sample_unit_H(s, x, rng)
        Yh = sample_unit_H(s, x, rng)
        diag = ricci(s, HC, Xh, Xh, cfg.seed, cfg.scheme)
        off = ricci(s, HC, Xh, Yh, cfg.seed, cfg.scheme)
        hc_samples.append((diag, off, s.metric(Xh, Yh)))
        d_claim = max(d_claim, abs(diag - c_claim),
                      abs(off - c_claim * s.metric(Xh, Yh)))

    measured = hc_samples[0][0]
    d_prop = 0.0
    for diag, off, gxy in hc_samples:
        d_prop = max(d_prop, abs(diag - measured), abs(off - measured * gxy))

    return [
        make_record("ricci.einstein_lc", suite="ricci",
                    passed=bool(d_lc <= cfg.tol_second),
                    max_residual=d_lc, tolerance=cfg.tol_second,
                    samples=cfg.points,
                    details={"constant": c_lc}),
        make_record("ricci.h_connection", suite="ricci",
                    passed=bool(d_claim <= cfg.tol_second),
                    max_residual=d_claim, tolerance=cfg.tol_second,
                    samples=cfg.points,
                    details={"stated_constant": c_claim}),
        make_record("ricci.h_connection_measured", suite="ricci", kind="info",
                    passed=bool(d_prop <= cfg.tol_second),
                    max_residual=d_prop, tolerance=cfg.tol_second,
                    samples=cfg.points,
                    details={
                        "measured_constant": float(measured),
                        "stated_constant": c_claim,
                        "note": "the adapted trace on distribution arguments "
                                "is proportional to the metric; the measured "
                                "factor matches 4 n + 8, which exceeds the "
                                "stated constant by 3",
                    }),
    ]


def _suite_sectional(s, cfg, conventions):
    sel = selected_plane_convention(conventions)
    sel_key = f"{sel:+d}"
    d_sphere = d_inv = d_rela = d_holo = d_sum = d_tanno = d_third = d_cor = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "sectional", i)
        x = sample_point(s, rng)
        Xt = sample_unit_tangent(s, x, rng)
        Yt = sample_unit_tangent(s, x, rng)
        if abs(s.metric(Xt, Yt)) > 0.999:
            continue
        k = sectional(s, Xt, Yt, convention=sel, scheme=cfg.scheme)
        d_sphere = max(d_sphere, abs(k - 1.0))
        coeffs = rng.standard_normal(4)
        while abs(coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]) < 0.1:
            coeffs = rng.standard_normal(4)
        U = float(coeffs[0]) * Xt + float(coeffs[1]) * Yt
        V = float(coeffs[2]) * Xt + float(coeffs[3]) * Yt
        k2 = sectional(s, U, V, convention=sel, scheme=cfg.scheme)
        d_inv = max(d_inv, abs(k - k2))

        Xh = sample_unit_H(s, x, rng)
        total = 0.0
        for a in (1, 2, 3):
            hval = holomorphic_sectional_bar(s, a, Xh, cfg.scheme)
            total += hval
            d_holo = max(d_holo, abs(hval - 4.0))
            rela = sec_rela_data(s, a, Xh, cfg.scheme)
            d_rela = max(d_rela, rela["residual"][sel_key])
        d_sum = max(d_sum, abs(total - 12.0))

        tanno = 0.0
        for a in (1, 2, 3):
            ka = sectional(s, Xh, s.phi(a, Xh), convention=sel,
                           scheme=cfg.scheme)
            tanno += ka
            d_third = max(d_third, abs(ka - 1.0))
        d_tanno = max(d_tanno, abs(tanno - 3.0))

        lhs, rhs = cor_xxx_data(s, Xh, cfg.scheme)
        d_cor = max(d_cor, abs(lhs - rhs))

    def rec(rid, res, details=None):
        return make_record(rid, suite="sectional",
                           passed=bool(res <= cfg.tol_second),
                           max_residual=res, tolerance=cfg.tol_second,
                           samples=cfg.points, details=details or {})

    conv_detail = {"selected_convention": sel_key}
    return [
        rec("sectional.sphere_constant", d_sphere, conv_detail),
        rec("sectional.plane_invariance", d_inv),
        rec("sectional.sec_rela", d_rela, conv_detail),
        rec("sectional.holomorphic_constant", d_holo),
        rec("sectional.holomorphic_sum", d_sum),
        rec("sectional.tanno_sum", d_tanno, conv_detail),
        rec("sectional.third_constant", d_third, conv_detail),
        rec("sectional.cor_xxx", d_cor),
    ]


def _suite_theorem_sec(s, cfg, conventions):
    sel = selected_plane_convention(conventions)
    combo_sel = f"{sel:+d}/{sel:+d}"
    alpha, axis = 1, 2

    d_h = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "theorem-sec", i)
        x = sample_point(s, rng)
        u = sample_unit_H(s, x, rng)
        data = theorem_sec_data(s, alpha, u, cfg.scheme)
        d_h = max(d_h, data["residual"][combo_sel])

    table = {}
    best = {}
    for label, theta in _SWEEP_ANGLES:
        worst = {}
        for i in range(cfg.points):
            rng = _suite_stream(cfg, "theorem-sec", 1000 + i)
            x = sample_point(s, rng)
            u = sample_unit_H(s, x, rng)
            co, si = float(np.cos(theta)), float(np.sin(theta))
            X = co * u + si * s.reeb(axis, x)
            X = TangentVector(x, X.v / np.linalg.norm(X.v))
            data = theorem_sec_data(s, alpha, X, cfg.scheme)
            for combo, res in data["residual"].items():
                worst[combo] = max(worst.get(combo, 0.0), res)
        table[label] = {combo: float(res) for combo, res in worst.items()}
        best[label] = min(worst, key=lambda cmb: worst[cmb])
    sweep_pass = all(min(table[label].values()) <= cfg.tol_second
                     for label, _ in _SWEEP_ANGLES)
    sweep_res = max(min(table[label].values()) for label, _ in _SWEEP_ANGLES)

    d_reeb = 0.0
    for i in range(cfg.points):
        rng = _suite_stream(cfg, "theorem-sec", 2000 + i)
        x = sample_point(s, rng)
        data = theorem_sec_data(s, alpha, s.reeb(axis, x), cfg.scheme)
        d_reeb = max(d_reeb, data["residual"]["+1/+1"])

    return [
        make_record("theorem_sec.h_case", suite="theorem-sec",
                    passed=bool(d_h <= cfg.tol_second),
                    max_residual=d_h, tolerance=cfg.tol_second,
                    samples=cfg.points,
                    details={"convention_combination": combo_sel}),
        make_record("theorem_sec.sweep", suite="theorem-sec", kind="finding",
                    passed=bool(sweep_pass), max_residual=sweep_res,
                    tolerance=cfg.tol_second, samples=5 * cfg.points,
                    details={
                        "angles": [label for label, _ in _SWEEP_ANGLES],
                        "residuals": table,
                        "best_combination": best,
                        "note": "for mixed directions the measured plane "
                                "value follows 4 - 8 sin^2 t + 4 sin^4 t "
                                "under the selected convention, while the "
                                "prediction carries a 6 sin^4 t quartic "
                                "term; no convention combination closes "
                                "the gap away from the endpoints",
                    }),
        make_record("theorem_sec.reeb_case", suite="theorem-sec",
                    kind="finding", passed=bool(d_reeb <= cfg.tol_second),
                    max_residual=d_reeb, tolerance=cfg.tol_second,
                    samples=cfg.points,
                    details={
                        "convention_combination": "+1/+1",
                        "note": "along a pure Reeb axis the two sides agree "
                                "only when both plane measures are taken "
                                "with the unflipped factor",
                    }),
    ]


_SUITE_FUNCS = {
    "axioms": _suite_axioms,
    "sasaki": _suite_sasaki,
    "connection": _suite_connection,
    "torsion": _suite_torsion,
    "curvature": _suite_curvature,
    "cross-check": _suite_cross_check,
    "ricci": _suite_ricci,
    "sectional": _suite_sectional,
    "theorem-sec": _suite_theorem_sec,
}

_ORACLE_GATED = ("cross-check", "ricci", "sectional", "theorem-sec")


# ============================================================
# runner
# ============================================================

def run_suites(config: RunConfig, structure=None) -> VerificationReport:
    """Execute the requested suites and assemble the report.

    A failing foundation gates everything it supports: broken axioms skip
    all later suites, a broken first-derivative layer skips the
    connection layer onward, and a failing curvature oracle gate skips
    every suite that interprets second derivatives.
    """
    s = structure if structure is not None else ThreeSasakiStructure(n=config.n)
    conventions = resolve_conventions(s, config.seed, config.scheme)
    order = config.run_order()
    results = {}
    blocked = {}

    for name in order:
        if name in blocked:
            results[name] = {"status": "skipped", "records": [],
                             "reason": blocked[name]}
            continue
        try:
            records = _SUITE_FUNCS[name](s, config, conventions)
            failed = any(r.kind == "check" and r.passed is False
                         for r in records)
            results[name] = {"status": "fail" if failed else "pass",
                             "records": records}
        except Exception as exc:
            results[name] = {"status": "errored", "records": [],
                             "reason": f"{type(exc).__name__}: {exc}"}

        bad = results[name]["status"] in ("fail", "errored")
        if name == "axioms" and bad:
            for later in order[order.index(name) + 1:]:
                blocked.setdefault(later, "structure axioms did not hold")
        if name == "sasaki" and bad:
            for later in order[order.index(name) + 1:]:
                blocked.setdefault(
                    later, "first-derivative structure identities did not hold")
        if name == "curvature":
            gate = next((r for r in results[name]["records"]
                         if r.id == "curvature.oracle_gate"), None)
            if gate is None or gate.passed is not True:
                for later in _ORACLE_GATED:
                    if later in order:
                        blocked.setdefault(
                            later, "the curvature oracle gate did not pass")

    overall = ("pass" if all(b["status"] in ("pass", "skipped")
                             for b in results.values()) else "fail")
    return VerificationReport(schema=SCHEMA, config=config.as_dict(),
                              conventions=conventions, suites=results,
                              overall=overall)


# ============================================================
# output formatting
# ============================================================

def format_text(report: VerificationReport) -> str:
    lines = [f"schema: {report.schema}"]
    cfg = report.config
    lines.append(
        "config: n={n} points={points} seed={seed} tol_first={tol_first:g} "
        "tol_second={tol_second:g} scheme={kind}".format(
            kind=cfg["scheme"]["kind"], **{k: cfg[k] for k in
            ("n", "points", "seed", "tol_first", "tol_second")}))
    lines.append("conventions:")
    for name in sorted(report.conventions):
        c = report.conventions[name]
        lines.append(f"  {name} = {c['value']}  (residual {c['residual']:.3e})")
    for suite, body in report.suites.items():
        head = f"suite {suite}: {body['status']}"
        if "reason" in body:
            head += f"  ({body['reason']})"
        lines.append(head)
        for r in body["records"]:
            mark = ("pass" if r.passed else "FAIL") if r.kind == "check" else r.kind
            res = "-" if r.max_residual is None else f"{r.max_residual:.3e}"
            tol = "-" if r.tolerance is None else f"{r.tolerance:.0e}"
            lines.append(f"  [{mark:>7}] {r.id:<34} max {res:>10}  tol {tol}")
    lines.append(f"overall: {report.overall}")
    return "\n".join(lines)


# ============================================================
# command line
# ============================================================

def _build_parser():
    p = argparse.ArgumentParser(
        prog="hkc",
        description="verification tools for the adapted connection on the "
                    "total space of the quaternionic sphere fibration")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites and emit a report")
    v.add_argument("--n", type=int, default=1)
    v.add_argument("--points", type=int, default=25)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol-first", type=float, default=1e-9)
    v.add_argument("--tol-second", type=float, default=1e-7)
    v.add_argument("--scheme", choices=("exact", "fd"), default="exact")
    v.add_argument("--fd-step", type=float, default=1e-5)
    v.add_argument("--suites", default=None,
                   help="comma-separated subset of: " + ", ".join(SUITE_ORDER))
    v.add_argument("--out", default=None, help="write the report to a file")
    v.add_argument("--format", choices=("json", "text"), default="json",
                   dest="fmt")

    c = sub.add_parser("curvature",
                       help="print the adapted holomorphic plane table")
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--alpha", type=int, choices=(1, 2, 3), default=1)
    return p


def _resolve_seed(cli_seed):
    env = os.environ.get("HKC_SEED")
    if env is None or env == "":
        return cli_seed
    try:
        return int(env)
    except ValueError:
        raise StructuralError(f"HKC_SEED must be an integer, got {env!r}")


def _cmd_verify(args) -> int:
    suites = (tuple(t.strip() for t in args.suites.split(",") if t.strip())
              if args.suites else SUITE_ORDER)
    scheme = (EXACT_FORWARD if args.scheme == "exact"
              else DiffScheme(CENTRAL_DIFFERENCE.kind, step=args.fd_step))
    cfg = RunConfig(n=args.n, points=args.points, seed=_resolve_seed(args.seed),
                    tol_first=args.tol_first, tol_second=args.tol_second,
                    scheme=scheme, suites=suites)
    report = run_suites(cfg)
    payload = report.to_json() if args.fmt == "json" else format_text(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
        print(f"overall: {report.overall}")
    else:
        print(payload)
    return 0 if report.overall == "pass" else 1


def _cmd_curvature(args) -> int:
    s = ThreeSasakiStructure(n=args.n)
    rng = _stream(_resolve_seed(args.seed), _CLI_STREAM, 0)
    x = sample_point(s, rng)
    X = sample_unit_H(s, x, rng)
    vals = {a: holomorphic_sectional_bar(s, a, X) for a in (1, 2, 3)}
    total = sum(vals.values())
    print(f"adapted holomorphic plane values at a sampled point (n={args.n}):")
    for a in (1, 2, 3):
        mark = " *" if a == args.alpha else ""
        print(f"  alpha={a}: {vals[a]:+.12f}{mark}")
    ok = all(abs(v - 4.0) <= 1e-6 for v in vals.values())
    ok = ok and abs(total - 12.0) <= 1e-6
    print(f"  sum: {total:+.12f} (expected +12) -> {'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and bad flags
        code = exc.code
        return int(code) if code is not None else 0
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_curvature(args)
    except (StructuralError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
