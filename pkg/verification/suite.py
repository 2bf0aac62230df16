# verification/suite.py
"""
The invariant suite behind `main.py verify`.

Each check returns its worst residual and is timed; the suite runs the
algebra, eta_4, representation, splitting, MGF, two-mode and group checks
over the default grids in core/config.py plus the user's (z, rho, r).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from algebra.lie_core import (
    StructureConstants,
    basis_jacobi_max,
    ceheis_structure,
    derived_series,
    is_linearly_independent,
    perturbed,
    random_jacobi_max,
    star_compatibility_max,
    triple_brackets_central,
)
from algebra.real_form import eta4_defect, real_form_star_defect, roundtrip_defect
from core import config
from core.utils import random_complex
from fock.space import (
    FockSpace,
    TwoModeSpace,
    annihilator,
    ccr_interior_defect,
    commutator,
    creator,
    derivative_vector,
    exponential_vector,
    interior_residual,
    power,
)
from group.law import GroupElement, WeylCase, compose, heisenberg_compose, identity_element, inverse
from group.law import power as group_power
from group.oracle import (
    derivative_identity_residuals,
    group_oracle_check,
    reorder_a_adag_residual,
    reorder_weyl_residual,
    zassenhaus_residual,
)
from probability.splitting import (
    QuadraticExponentParams,
    gamma_factor_defect,
    gaussian_log_defect,
    mgf_closed_form,
    mgf_moments,
    mgf_oracle,
    mgf_params,
    observable_defect,
    ode_residuals,
    oracle_moments,
    riccati_canonical,
    splitting_grid,
    verify_splitting,
)
from representations.boson import (
    RepresentationParams,
    adjoint_formula,
    build_representation,
    duality_defects,
    exp_vector_action_defect,
    structure_realization_defect,
    verify_ceccr,
)
from representations.two_mode import (
    CCRCase,
    build_ccr_representation,
    build_quadratures,
    helper_identity_residuals,
    quadrature_defects,
)
from verification.report import CheckResult, Timer

log = logging.getLogger(__name__)

Perturbation = Tuple[int, int, int, float]


@dataclass(frozen=True)
class SuiteConfig:
    rep_params: RepresentationParams
    dim: int = config.DEFAULT_DIM
    margin: int = config.DEFAULT_MARGIN
    seed: int = config.DEFAULT_SEED
    perturb: Optional[Perturbation] = None
    two_mode_dim: int = config.TWO_MODE_DIM
    splitting_dim: int = config.SPLITTING_DIM

    @property
    def z(self) -> complex:
        return self.rep_params.z


class Suite:
    """Collects timed CheckResults; one method per module."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.rng = np.random.default_rng(cfg.seed)
        self.results: List[CheckResult] = []

    # -------------------------------------------------------------------------
    def check(self, group: str, name: str, tolerance: float,
              fn: Callable[[], Tuple[float, str] | float]) -> CheckResult:
        with Timer() as timer:
            outcome = fn()
        worst, detail = outcome if isinstance(outcome, tuple) else (outcome, "")
        result = CheckResult(group=group, name=name, worst=float(worst), tolerance=tolerance,
                             elapsed=timer.elapsed, detail=detail)
        log.info("%s/%s worst=%.3g tol=%.0e %s", group, name, result.worst, tolerance,
                 "ok" if result.passed else "FAILED")
        self.results.append(result)
        return result

    def table(self, z: complex) -> StructureConstants:
        """CEHeis(z), with the optional mutation applied."""
        sc = ceheis_structure(z)
        if self.cfg.perturb is not None:
            i, j, k, delta = self.cfg.perturb
            sc = perturbed(sc, i, j, k, delta)
        return sc

    # -------------------------------------------------------------------------
    def run_algebra(self) -> None:
        z_grid = tuple(dict.fromkeys(config.ALGEBRA_Z_GRID + (self.cfg.z,)))
        tables = [self.table(z) for z in z_grid]
        tol = config.COEFF_TOL
        self.check("algebra", "jacobi basis triples", tol,
                   lambda: max(basis_jacobi_max(sc) for sc in tables))
        self.check("algebra", f"jacobi {config.JACOBI_FUZZ_COUNT} random triples", tol,
                   lambda: max(random_jacobi_max(sc, config.JACOBI_FUZZ_COUNT, self.rng)
                               for sc in tables))
        self.check("algebra", "star compatibility", tol,
                   lambda: max(star_compatibility_max(sc) for sc in tables))

        def derived_dims() -> Tuple[float, str]:
            dims = [tuple(len(level) for level in derived_series(sc)) for sc in tables]
            bad = [d for d in dims if d != (4, 2, 0)]
            return float(len(bad)), f"dims {dims[0]}" if not bad else f"dims {bad[0]}"

        self.check("algebra", "derived series (4, 2, 0)", 0.0, derived_dims)
        self.check("algebra", "basis linearly independent", 0.0,
                   lambda: float(not all(is_linearly_independent(sc.basis()) for sc in tables)))
        self.check("algebra", "triple brackets central", 0.0,
                   lambda: float(not all(triple_brackets_central(sc) for sc in tables)))

    def run_real_form(self) -> None:
        tol = config.COEFF_TOL
        z_grid = config.ETA4_Z_GRID
        self.check("real_form", f"eta_4 table ({len(z_grid)} z values)", tol,
                   lambda: max(eta4_defect(z) for z in z_grid))
        self.check("real_form", "complex basis roundtrip", tol,
                   lambda: max(roundtrip_defect(z) for z in z_grid))
        self.check("real_form", "H skew-adjoint, p q E self-adjoint", tol,
                   lambda: max(real_form_star_defect(z) for z in z_grid))

    def run_fock(self) -> None:
        space = FockSpace(self.cfg.dim)
        self.check("fock", "CCR on interior", config.CECCR_TOL, lambda: ccr_interior_defect(space))

        def creator_cube() -> float:
            b, cube = annihilator(space), power(creator(space), 3)
            return interior_residual(commutator(b, cube) - 3 * power(creator(space), 2), 3)

        self.check("fock", "[b, b_dag^3] = 3 b_dag^2 on interior", config.CECCR_TOL, creator_cube)

        def derivative_is_creator() -> float:
            b_dag = creator(space)
            return max((derivative_vector(lam, space, 1)
                        - b_dag.apply(exponential_vector(lam, space))).norm()
                       for lam in config.EXP_VECTOR_LAMBDAS)

        self.check("fock", "y'(lam) = b_dag y(lam)", config.COEFF_TOL, derivative_is_creator)

    def run_boson(self) -> None:
        space = FockSpace(self.cfg.dim)
        margin = self.cfg.margin
        grid = [RepresentationParams.auto(z, rho, r)
                for z in config.BOSON_Z_GRID
                for rho in config.BOSON_RHO_GRID
                for r in config.BOSON_R_GRID]
        grid.append(self.cfg.rep_params)

        def ceccr() -> Tuple[float, str]:
            worst, where = 0.0, ""
            for params in grid:
                value = verify_ceccr(build_representation(params, space), params.z, margin).worst
                if value >= worst:
                    worst, where = value, f"z={params.z} rho={params.rho} r={params.r}"
            return worst, where

        self.check("boson_rep", f"CECCR ({len(grid)} parameter points)", config.CECCR_TOL, ceccr)
        self.check("boson_rep", "duality a_dag = a*, h = h*", 0.0,
                   lambda: max(max(duality_defects(build_representation(p, space))) for p in grid))
        self.check("boson_rep", "closed-form a_dag", config.COEFF_TOL,
                   lambda: max(float(np.max(np.abs((adjoint_formula(p, space)
                                                    - build_representation(p, space).a_dag_op).matrix)))
                               for p in grid))
        rep = build_representation(self.cfg.rep_params, space)
        self.check("boson_rep", "structure constants realized", config.CECCR_TOL,
                   lambda: structure_realization_defect(rep, self.table(self.cfg.z), margin))

        def exp_vector_actions() -> float:
            worst = 0.0
            for z, rho, r in config.EXP_VECTOR_PARAMS:
                params = RepresentationParams.auto(z, rho, r)
                for lam in config.EXP_VECTOR_LAMBDAS:
                    worst = max(worst, exp_vector_action_defect(params, lam, space, margin))
            return worst

        self.check("boson_rep", "exponential-vector actions", config.EXP_VECTOR_TOL, exp_vector_actions)

    def run_splitting(self) -> None:
        space = FockSpace(self.cfg.splitting_dim)
        points = list(splitting_grid(space.dim))
        self.check("splitting_mgf", f"splitting formula ({len(points)} points)", config.SPLITTING_TOL,
                   lambda: max(verify_splitting(params, s, space) for params, s in points))

        def odes() -> float:
            worst = 0.0
            seen = {(p.L, p.M, p.N) for p, _ in points}
            for L, M, N in seen:
                params = QuadraticExponentParams(L, M, N)
                lo = -0.2 if L <= 0 else max(-0.2, (config.MIN_DOMAIN_MARGIN - 1) / (2 * L))
                for s in np.linspace(lo, 0.4, config.ODE_SAMPLES):
                    if params.domain(s) >= config.MIN_DOMAIN_MARGIN:
                        worst = max(worst, *ode_residuals(params, float(s)))
            return worst

        self.check("splitting_mgf", "ODE residuals", config.ODE_TOL, odes)

        def riccati() -> float:
            worst = 0.0
            for L in config.SPLITTING_L_GRID:
                if L == 0:
                    continue
                params = QuadraticExponentParams(L, 1, 1)
                for s in config.SPLITTING_S_GRID:
                    if params.domain(s) > 0:
                        form = riccati_canonical(params, s)
                        worst = max(worst, form.residual(), abs(form.delta_sq))
            return worst

        self.check("splitting_mgf", "Riccati canonical form", config.COEFF_TOL, riccati)

    def run_mgf(self) -> None:
        space = FockSpace(self.cfg.splitting_dim)
        grid = [RepresentationParams.auto(z, rho, r) for z, rho, r in config.MGF_PARAM_GRID]

        def oracle_grid() -> Tuple[float, str]:
            worst, where = 0.0, ""
            for params in grid:
                qe = mgf_params(params)
                for s in config.MGF_S_GRID:
                    closed = mgf_closed_form(qe, s).real
                    rel = abs(closed - mgf_oracle(params, s, space)) / abs(closed)
                    if rel >= worst:
                        worst, where = rel, f"z={params.z} s={s}"
            return worst, where

        self.check("splitting_mgf", "MGF closed form vs oracle", config.MGF_REL_TOL, oracle_grid)
        self.check("splitting_mgf", "MGF(0) = 1", 0.0,
                   lambda: max(abs(mgf_oracle(p, 0.0, space) - 1) for p in grid))
        self.check("splitting_mgf", "a + a_dag + h = L b^2 + ...", config.CECCR_TOL,
                   lambda: max(observable_defect(p, FockSpace(self.cfg.dim)) for p in grid))

        gaussian = RepresentationParams.auto(2 + 4j, 0.5, 8.0 ** 0.5)
        self.check("splitting_mgf", "Gaussian case log-quadratic", config.GAUSSIAN_TOL,
                   lambda: gaussian_log_defect(gaussian, np.linspace(-0.5, 0.5, 11)))
        self.check("splitting_mgf", "Gaussian value e^0.2 at s = 0.2", config.MGF_REL_TOL,
                   lambda: abs(mgf_oracle(gaussian, 0.2, space) - np.exp(0.2)))

        def gamma() -> float:
            worst = 0.0
            for params in grid:
                qe = mgf_params(params)
                for s in config.MGF_S_GRID:
                    worst = max(worst, gamma_factor_defect(qe, s))
            return worst

        self.check("splitting_mgf", "gamma factor identity", config.COEFF_TOL, gamma)

        def moments() -> float:
            worst = 0.0
            for params in grid:
                mean, second = mgf_moments(mgf_params(params))
                num_mean, num_second = oracle_moments(params, space)
                worst = max(worst, abs(num_mean - mean.real), abs(num_second - second.real))
            return worst

        self.check("splitting_mgf", "mean and second moment", config.MOMENT_TOL, moments)

    def run_two_mode(self) -> None:
        space = TwoModeSpace(self.cfg.two_mode_dim)
        margin = self.cfg.margin
        quad = build_quadratures(space)
        self.check("ccr_two_mode", "quadrature relations", config.QUADRATURE_TOL,
                   lambda: max(quadrature_defects(quad, margin).values()))
        self.check("ccr_two_mode", "helper identities", config.TWO_MODE_TOL,
                   lambda: max(helper_identity_residuals(quad, margin).values()))

        cases = {
            CCRCase.BOTH_NONZERO: [(1 + 1j, 0.0, 0j)],
            CCRCase.RE_ZERO: [(2j, r, c) for r, c in zip(config.TWO_MODE_R_SAMPLES,
                                                         config.TWO_MODE_C_SAMPLES)],
            CCRCase.IM_ZERO: [(3 + 0j, r, c) for r, c in zip(config.TWO_MODE_R_SAMPLES,
                                                            config.TWO_MODE_C_SAMPLES)],
        }
        for case, samples in cases.items():
            def ceccr(samples=samples) -> float:
                worst = 0.0
                for z, r, c in samples:
                    rep = build_ccr_representation(z, r, c, space)
                    worst = max(worst, verify_ceccr(rep, z, margin).worst, *duality_defects(rep))
                return worst

            self.check("ccr_two_mode", f"case ({case.value}) CECCR + duality", config.TWO_MODE_TOL, ceccr)

    def run_group(self) -> None:
        count = config.GROUP_FUZZ_COUNT

        def draw(real: bool = False) -> GroupElement:
            if real:
                u, v, w = self.rng.uniform(-1, 1, 3)
                return GroupElement.real(u, v, w, complex(random_complex(self.rng, 1)[0]))
            return GroupElement(*random_complex(self.rng, 4))

        def associativity() -> float:
            worst = 0.0
            for z in config.GROUP_Z_GRID:
                for _ in range(count // len(config.GROUP_Z_GRID)):
                    g1, g2, g3 = draw(), draw(), draw()
                    left = compose(compose(g1, g2, z), g3, z)
                    right = compose(g1, compose(g2, g3, z), z)
                    worst = max(worst, left.distance(right))
            return worst

        def inverses() -> float:
            worst = 0.0
            e = identity_element()
            z = 0.7 + 0.2j
            for _ in range(count):
                g = draw()
                g_inv = inverse(g, z)
                worst = max(worst, compose(g, g_inv, z).distance(e), compose(g_inv, g, z).distance(e),
                            compose(g, e, z).distance(g), compose(e, g, z).distance(g))
            return worst

        def powers() -> float:
            e = identity_element()
            worst = 0.0
            for z in config.GROUP_Z_GRID:
                for _ in range(count // len(config.GROUP_Z_GRID)):
                    g = draw()
                    worst = max(worst, compose(group_power(g, 3, z), group_power(g, -3, z), z).distance(e))
            return worst

        def real_closure() -> float:
            bad = 0
            for _ in range(count):
                g = compose(draw(real=True), draw(real=True), self.cfg.z)
                bad += int(not g.real_subgroup or any(c.imag != 0 for c in (g.u, g.v, g.w)))
            return float(bad)

        def heisenberg_reduction() -> float:
            return max(compose(g1, g2, 0).distance(heisenberg_compose(g1, g2))
                       for g1, g2 in ((draw(), draw()) for _ in range(100)))

        self.check("group_law", "associativity", config.GROUP_TOL, associativity)
        self.check("group_law", "two-sided identity and inverse", config.INVERSE_TOL, inverses)
        self.check("group_law", "g^3 g^-3 = identity", config.GROUP_TOL, powers)
        self.check("group_law", "real subgroup closed", 0.0, real_closure)
        self.check("group_law", "Heisenberg reduction at z = 0", 0.0, heisenberg_reduction)

        space = FockSpace(self.cfg.dim)
        oracle_params = RepresentationParams.auto(config.ORACLE_Z, config.ORACLE_RHO, config.ORACLE_R)
        z = oracle_params.z
        cmax = config.ORACLE_COORD_MAX
        tol = config.OPERATOR_ORACLE_TOL

        def operator_law() -> float:
            pairs = [(GroupElement.real(0, 0, cmax, 0), GroupElement.real(cmax, 0, 0, 0)),
                     (GroupElement.real(0, cmax, 0, 0), GroupElement.real(cmax, 0, 0, 0))]
            for _ in range(config.GROUP_ORACLE_PAIRS):
                coords = self.rng.uniform(-cmax, cmax, (2, 5))
                pairs.append(tuple(GroupElement.real(c[0], c[1], c[2], complex(c[3], c[4]))
                                   for c in coords))
            return max(group_oracle_check(g1, g2, z, oracle_params, space) for g1, g2 in pairs)

        def reorderings() -> float:
            sc_basis = ceheis_structure(z).basis()
            a, a_dag, h, _ = sc_basis
            values = [
                reorder_a_adag_residual(cmax, cmax, oracle_params, space),
                reorder_a_adag_residual(-0.3 + 0.2j, 0.4, oracle_params, space),
                reorder_weyl_residual(cmax, -cmax, WeylCase.A_H, oracle_params, space),
                reorder_weyl_residual(0.3, 0.4, WeylCase.H_ADAG, oracle_params, space),
                zassenhaus_residual(cmax * a_dag, cmax * a, oracle_params, space),
                zassenhaus_residual(0.3 * a + 0.2 * h, -0.4 * a_dag, oracle_params, space),
            ]
            values.extend(derivative_identity_residuals(0.3, -0.4, oracle_params, space))
            return max(values)

        self.check("group_law", f"operator oracle ({config.GROUP_ORACLE_PAIRS + 2} pairs)", tol,
                   operator_law)
        self.check("group_law", "reordering identities and derivative forms", tol, reorderings)

    # -------------------------------------------------------------------------
    def run(self) -> List[CheckResult]:
        for stage in (self.run_algebra, self.run_real_form, self.run_fock, self.run_boson,
                      self.run_splitting, self.run_mgf, self.run_two_mode, self.run_group):
            stage()
        return self.results


def run_suite(cfg: SuiteConfig) -> List[CheckResult]:
    return Suite(cfg).run()
