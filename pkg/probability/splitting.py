# probability/splitting.py
"""
Splitting formula and vacuum moment generating function of a + a_dag + h.

For G = L b^2 + L b_dag^2 - 2L b_dag b - L + M b + N b_dag and 2Ls + 1 > 0,

    exp(sG) Phi = exp(w1 b_dag^2) exp(w2 b_dag) exp(w3) Phi

    w1 = L s / u
    w2 = (L (M + N) s^2 + N s) / u
    w3 = Q / (6u) - ln(u) / 2
    u  = 2Ls + 1,   Q = (M + N)^2 (L^2 s^4 + 2L s^3) + 3MN s^2

so <Phi, exp(sG) Phi> = exp(w3) = u^(-1/2) exp(Q / (6u)).
The coefficients solve
    w1' = 4L w1^2 - 4L w1 + L
    w2' = (4L w1 - 2L) w2 + 2M w1 + N
    w3' = 2L w1 + L w2^2 - L + M w2
with w1(0) = w2(0) = w3(0) = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from core.config import (
    COEFF_TOL,
    DEFAULT_MARGIN,
    MAX_SQUEEZE_TAIL,
    MGF_MAX_AMPLIFICATION,
    MIN_DOMAIN_MARGIN,
    MOMENT_STEP,
    ODE_STEP,
    SPLITTING_L_GRID,
    SPLITTING_MAX_AMPLIFICATION,
    SPLITTING_MN_GRID,
    SPLITTING_S_GRID,
)
from core.errors import DomainError
from fock.space import (
    FockOperator,
    FockSpace,
    annihilator,
    creator,
    exp_matrix,
    identity,
    inner,
    interior_residual,
    number_operator,
    vacuum,
)
from representations.boson import Branch, RepresentationParams, build_representation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticExponentParams:
    L: float
    M: complex
    N: complex

    def __post_init__(self):
        L = float(np.real(self.L))
        M, N = complex(self.M), complex(self.N)
        if not all(np.isfinite(v) for v in (L, M.real, M.imag, N.real, N.imag)):
            raise DomainError(f"non-finite quadratic exponent parameters {(self.L, self.M, self.N)}")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "N", N)

    def domain(self, s: float) -> float:
        """2Ls + 1."""
        return 2 * self.L * s + 1

    def require_domain(self, s: float) -> float:
        u = self.domain(s)
        if u <= 0:
            raise DomainError(f"2Ls + 1 = {u:.6g} <= 0 at s = {s} (L = {self.L})")
        return u


@dataclass(frozen=True)
class SplittingCoefficients:
    w1: complex
    w2: complex
    w3: complex
    s: float


@dataclass(frozen=True)
class RiccatiForm:
    """V = w1 / L solves V' = 1 + 2 alpha V + beta V^2 with alpha = -2L, beta = 4L^2."""
    V: float
    dV: float
    alpha: float
    beta: float

    @property
    def delta_sq(self) -> float:
        return self.alpha ** 2 - self.beta

    def residual(self) -> float:
        return abs(self.dV - (1 + 2 * self.alpha * self.V + self.beta * self.V ** 2))


@dataclass(frozen=True)
class MGFRow:
    s: float
    closed_form: float
    oracle: float
    abs_error: float
    rel_error: float


# =============================================================================
# Closed forms
# =============================================================================

def _q_term(params: QuadraticExponentParams, s: float) -> complex:
    L, M, N = params.L, params.M, params.N
    return (M + N) ** 2 * (L ** 2 * s ** 4 + 2 * L * s ** 3) + 3 * M * N * s ** 2


def closed_form_w(params: QuadraticExponentParams, s: float) -> SplittingCoefficients:
    """w1, w2, w3 at s; the logarithm is the real one since 2Ls + 1 > 0."""
    u = params.require_domain(s)
    L, M, N = params.L, params.M, params.N
    w1 = L * s / u
    w2 = (L * (M + N) * s ** 2 + N * s) / u
    w3 = _q_term(params, s) / (6 * u) - 0.5 * np.log(u)
    return SplittingCoefficients(w1=complex(w1), w2=complex(w2), w3=complex(w3), s=s)


def ode_residuals(params: QuadraticExponentParams, s: float,
                  step: float = ODE_STEP) -> Tuple[float, float, float]:
    """|w_i' - rhs_i| with w_i' from central differences of width `step`."""
    for point in (s - step, s, s + step):
        params.require_domain(point)
    L, M, N = params.L, params.M, params.N
    lo, mid, hi = (closed_form_w(params, point) for point in (s - step, s, s + step))
    d1 = (hi.w1 - lo.w1) / (2 * step)
    d2 = (hi.w2 - lo.w2) / (2 * step)
    d3 = (hi.w3 - lo.w3) / (2 * step)
    w1, w2 = mid.w1, mid.w2
    return (
        abs(d1 - (4 * L * w1 ** 2 - 4 * L * w1 + L)),
        abs(d2 - ((4 * L * w1 - 2 * L) * w2 + 2 * M * w1 + N)),
        abs(d3 - (2 * L * w1 + L * w2 ** 2 - L + M * w2)),
    )


def riccati_canonical(params: QuadraticExponentParams, s: float) -> RiccatiForm:
    if params.L == 0:
        raise DomainError("the Riccati canonical form needs L != 0")
    u = params.require_domain(s)
    L = params.L
    return RiccatiForm(V=s / u, dV=1 / u ** 2, alpha=-2 * L, beta=4 * L ** 2)


def mgf_closed_form(params: QuadraticExponentParams, s: float) -> complex:
    """(2Ls + 1)^(-1/2) exp(Q / (6(2Ls + 1)))."""
    u = params.require_domain(s)
    return complex(u ** -0.5 * np.exp(_q_term(params, s) / (6 * u)))


def gaussian_exponent(params: QuadraticExponentParams, s: float) -> complex:
    u = params.require_domain(s)
    return complex(_q_term(params, s) / (6 * u))


def gamma_factor(params: QuadraticExponentParams, s: float) -> float:
    """(2Ls + 1)^(-1/2), the MGF of a (shifted, scaled) gamma variable."""
    return params.require_domain(s) ** -0.5


def gamma_factor_defect(params: QuadraticExponentParams, s: float) -> float:
    """|mgf(s) exp(-rational exponent) - (2Ls + 1)^(-1/2)|."""
    return abs(mgf_closed_form(params, s) * np.exp(-gaussian_exponent(params, s))
               - gamma_factor(params, s))


def mgf_moments(params: QuadraticExponentParams) -> Tuple[complex, complex]:
    """(mean, second moment) = (-L, MN + 3L^2) from the series of the MGF at 0."""
    return complex(-params.L), params.M * params.N + 3 * params.L ** 2


# =============================================================================
# Parameters from the boson representation
# =============================================================================

def mgf_params(rep_params: RepresentationParams) -> QuadraticExponentParams:
    """L, M, N with a + a_dag + h = L b^2 + L b_dag^2 - 2L b_dag b - L + M b + N b_dag."""
    z, rho, r = rep_params.z, rep_params.rho, rep_params.r
    x, y = z.real, z.imag
    if rep_params.branch is Branch.RE_NONZERO:
        return QuadraticExponentParams(
            L=(4 * rho * y - r ** 2) / (2 * x),
            M=-(y / r + 1j * r),
            N=-(y / r - 1j * r),
        )
    return QuadraticExponentParams(
        L=2 * rho,
        M=2 * r + 1j * y / (2 * r),
        N=2 * r - 1j * y / (2 * r),
    )


def is_gaussian(rep_params: RepresentationParams, tol: float = COEFF_TOL) -> bool:
    """L = 0: r^2 = 4 rho Im z on the ReNonzero branch, rho = 0 on the ReZero branch."""
    return abs(mgf_params(rep_params).L) <= tol


def gaussian_variance(rep_params: RepresentationParams) -> float:
    """MN, the variance of a + a_dag + h when it is Gaussian."""
    if not is_gaussian(rep_params):
        raise DomainError("a + a_dag + h is only Gaussian when L = 0")
    params = mgf_params(rep_params)
    return float((params.M * params.N).real)


def quadratic_generator(params: QuadraticExponentParams, space: FockSpace) -> FockOperator:
    b, b_dag = annihilator(space), creator(space)
    L = params.L
    return (L * (b @ b) + L * (b_dag @ b_dag) - (2 * L) * number_operator(space)
            - L * identity(space) + params.M * b + params.N * b_dag)


def observable_defect(rep_params: RepresentationParams, space: FockSpace,
                      margin: int = DEFAULT_MARGIN) -> float:
    """||(a + a_dag + h - G) P|| with G built from mgf_params."""
    rep = build_representation(rep_params, space)
    x_op = rep.a_op + rep.a_dag_op + rep.h_op
    return interior_residual(x_op - quadratic_generator(mgf_params(rep_params), space), margin)


# =============================================================================
# Oracle regime
# =============================================================================

def oracle_amplification(params: QuadraticExponentParams, s: float, dim: int) -> float:
    """Log of the roundoff amplification of the dense truncated exp(sG)."""
    return 4 * dim * max(-s * params.L, 0.0)


def squeeze_tail(params: QuadraticExponentParams, s: float, dim: int) -> float:
    """(2|w1|)^(D/2), the size of exp(w1 b_dag^2) Phi beyond the cutoff."""
    w1 = closed_form_w(params, s).w1
    return float((2 * abs(w1)) ** (dim / 2))


def oracle_reliable(params: QuadraticExponentParams, s: float, dim: int,
                    max_amplification: float = SPLITTING_MAX_AMPLIFICATION) -> bool:
    if params.domain(s) < MIN_DOMAIN_MARGIN:
        return False
    return (oracle_amplification(params, s, dim) <= max_amplification
            and squeeze_tail(params, s, dim) <= MAX_SQUEEZE_TAIL)


def splitting_grid(dim: int) -> Iterator[Tuple[QuadraticExponentParams, float]]:
    """Default (L, M, N, s) points on which the dense oracle is trustworthy."""
    for L in SPLITTING_L_GRID:
        for M in SPLITTING_MN_GRID:
            for N in SPLITTING_MN_GRID:
                params = QuadraticExponentParams(L=L, M=M, N=N)
                for s in SPLITTING_S_GRID:
                    if oracle_reliable(params, s, dim):
                        yield params, s


# =============================================================================
# Oracle checks
# =============================================================================

def verify_splitting(params: QuadraticExponentParams, s: float, space: FockSpace) -> float:
    """||LHS Phi - RHS Phi|| / ||LHS Phi|| with both sides from matrix exponentials."""
    coeffs = closed_form_w(params, s)
    phi = vacuum(space)
    lhs = exp_matrix(s * quadratic_generator(params, space)).apply(phi)
    b_dag = creator(space)
    rhs = exp_matrix(coeffs.w1 * (b_dag @ b_dag)).apply(
        exp_matrix(coeffs.w2 * b_dag).apply(phi)) * np.exp(coeffs.w3)
    residual = (lhs - rhs).norm() / lhs.norm()
    log.debug("splitting L=%g M=%s N=%s s=%g: residual %.3g", params.L, params.M, params.N, s, residual)
    return residual


def mgf_oracle_complex(rep_params: RepresentationParams, s: float, space: FockSpace) -> complex:
    """<Phi, exp(sX) Phi> with X = a + a_dag + h from the boson matrices."""
    if s == 0:
        return 1.0 + 0j
    rep = build_representation(rep_params, space)
    x_op = rep.a_op + rep.a_dag_op + rep.h_op
    phi = vacuum(space)
    return inner(phi, exp_matrix(s * x_op).apply(phi))


def mgf_oracle(rep_params: RepresentationParams, s: float, space: FockSpace) -> float:
    value = mgf_oracle_complex(rep_params, s, space)
    if abs(value.imag) > 1e-10 * max(1.0, abs(value)):
        log.warning("MGF oracle at s=%g has imaginary part %.3g", s, value.imag)
    return value.real


def oracle_moments(rep_params: RepresentationParams, space: FockSpace,
                   step: float = MOMENT_STEP) -> Tuple[float, float]:
    """First and second derivative of the oracle MGF at 0 (Richardson-extrapolated)."""
    f = {h: mgf_oracle(rep_params, h, space) for h in (-step, -step / 2, step / 2, step)}
    f0 = 1.0

    def first(h: float) -> float:
        return (f[h] - f[-h]) / (2 * h)

    def second(h: float) -> float:
        return (f[h] - 2 * f0 + f[-h]) / h ** 2

    mean = (4 * first(step / 2) - first(step)) / 3
    second_moment = (4 * second(step / 2) - second(step)) / 3
    return mean, second_moment


def mgf_table(rep_params: RepresentationParams, s_values: Sequence[float],
              space: FockSpace) -> List[MGFRow]:
    """Closed form vs oracle rows, sorted by s."""
    params = mgf_params(rep_params)
    rows = []
    for s in sorted(s_values):
        closed = mgf_closed_form(params, s).real
        oracle = mgf_oracle(rep_params, s, space)
        abs_error = abs(closed - oracle)
        rows.append(MGFRow(s=s, closed_form=closed, oracle=oracle, abs_error=abs_error,
                           rel_error=abs_error / abs(closed)))
        if not oracle_reliable(params, s, space.dim, MGF_MAX_AMPLIFICATION):
            log.warning("s=%g is outside the reliable oracle regime for L=%g", s, params.L)
    return rows


def gaussian_log_defect(rep_params: RepresentationParams, s_values: Sequence[float]) -> float:
    """max |log mgf(s) - MN s^2 / 2| over s; zero when L = 0."""
    params = mgf_params(rep_params)
    return max(abs(np.log(mgf_closed_form(params, s)) - 0.5 * params.M * params.N * s ** 2)
               for s in s_values)
