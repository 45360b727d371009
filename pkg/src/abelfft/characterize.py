"""Hypothesis checking and constructive recovery for transform-like operators.

``check_hypotheses`` measures how far an operator is from the three algebraic
identities that characterize the reference family:

  (a) additivity against the involution: F(f + g*) = F(f) + [F(g)]*,
      with each side's own involution;
  (b) the product law: primal->dual operators must send pointwise products to
      convolutions (output-side weight); primal->primal operators must
      preserve pointwise products;
  (c) the convolution law: primal->dual operators must send convolutions
      (input-side weight) to pointwise products; primal->primal operators
      must preserve convolutions.

``recover`` reduces a primal->dual operator to a primal->primal one through
the inverse transform, then reconstructs the relabeling automorphism from the
supports of transformed point masses, reads the scalar map off constants, and
classifies it as either the identity or complex conjugation.  Probes are
independent of each other, so a caller may treat apply as concurrency-safe or
not; the engine only ever invokes it sequentially.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DichotomyViolationError,
    NotEssentiallyFourierError,
    SideMismatchError,
)
from .functions import (
    PRIMAL,
    GFunction,
    constant_one,
    delta,
    max_abs_diff,
    norm_inf,
    pointwise_product,
    random_function,
    star,
    zero,
)
from .groups import Automorphism, find_additivity_violation
from .operators import Operator, T_FORM, U_FORM
from .transform import convolve_fast, fft_inverse

PROBE_SCALARS: tuple[complex, ...] = (1 + 0j, -1 + 0j, 1j, 2 + 0j, 0.5 + 0j, 1 + 1j)

DEFAULT_TOL = 1e-9
DEFAULT_RESIDUAL_TRIALS = 32
DEFAULT_RECOVER_SEED = 1789
_EXHAUSTIVE_PAIR_BUDGET = 4096
_SUPPORT_TOL_FACTOR = 1e-12


@dataclass(frozen=True)
class HypothesisReport:
    """Largest observed violation of each identity, with pass flags at a tolerance."""

    max_err_a: float
    max_err_b: float
    max_err_c: float
    trials: int
    seed: int
    tol: float

    @property
    def pass_a(self) -> bool:
        return self.max_err_a <= self.tol

    @property
    def pass_b(self) -> bool:
        return self.max_err_b <= self.tol

    @property
    def pass_c(self) -> bool:
        return self.max_err_c <= self.tol

    @property
    def passed(self) -> bool:
        return self.pass_a and self.pass_b and self.pass_c

    def as_dict(self) -> dict:
        return {
            "a": self.max_err_a,
            "b": self.max_err_b,
            "c": self.max_err_c,
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "pass_a": self.pass_a,
            "pass_b": self.pass_b,
            "pass_c": self.pass_c,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class RecoveryReport:
    """Outcome of a successful recovery."""

    psi: Automorphism
    conjugation: bool
    residual: float
    m_samples: list[tuple[complex, complex]]
    diagnostics: dict
    tol: float
    seed: int

    def as_dict(self) -> dict:
        return {
            "psi": list(self.psi.perm),
            "conjugation": self.conjugation,
            "residual": self.residual,
            "m_samples": [[[a.real, a.imag], [m.real, m.imag]] for a, m in self.m_samples],
            "diagnostics": dict(self.diagnostics),
            "tol": self.tol,
            "seed": self.seed,
        }


def _require_checkable(op: Operator) -> None:
    if op.form not in (T_FORM, U_FORM):
        raise SideMismatchError(
            f"only primal->dual and primal->primal operators are supported, "
            f"got {op.input_side} -> {op.output_side}"
        )


def _as_primal_map(op: Operator) -> Callable[[GFunction], GFunction]:
    """The operator itself for U-form; the inverse transform composed on top for T-form."""
    _require_checkable(op)
    if op.form == U_FORM:
        return op.apply

    def reduced(f: GFunction) -> GFunction:
        return fft_inverse(op.apply(f))

    return reduced


def check_hypotheses(
    op: Operator,
    trials: int = 16,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> HypothesisReport:
    """Probe the three identities on point-mass pairs and random functions.

    Point-mass pairs are exhausted whenever size^2 <= 4096; on top of that,
    ``trials`` seeded pairs of complex-Gaussian functions are checked.  The
    report carries the worst deviation per identity; nothing raises.
    """
    _require_checkable(op)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    group = op.group
    n = group.size
    t_form = op.form == T_FORM
    err_a = err_b = err_c = 0.0

    def record_pair(f, g, op_f, op_g, op_prod, op_conv):
        nonlocal err_a, err_b, err_c
        lhs_a = op.apply(f + star(g))
        err_a = max(err_a, max_abs_diff(lhs_a, op_f + star(op_g)))
        if t_form:
            rhs_b = convolve_fast(op_f, op_g)
            rhs_c = pointwise_product(op_f, op_g)
        else:
            rhs_b = pointwise_product(op_f, op_g)
            rhs_c = convolve_fast(op_f, op_g)
        err_b = max(err_b, max_abs_diff(op_prod, rhs_b))
        err_c = max(err_c, max_abs_diff(op_conv, rhs_c))

    if n * n <= _EXHAUSTIVE_PAIR_BUDGET:
        op_delta = [op.apply(delta(group, x)) for x in range(n)]
        op_zero = op.apply(zero(group))
        for x in range(n):
            for y in range(n):
                f, g = delta(group, x), delta(group, y)
                # delta_x * delta_y is exactly delta_x or zero; their primal
                # convolution is exactly the point mass at x + y.
                op_prod = op_delta[x] if x == y else op_zero
                op_conv = op_delta[group.add_index(x, y)]
                record_pair(f, g, op_delta[x], op_delta[y], op_prod, op_conv)

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = random_function(group, rng)
        g = random_function(group, rng)
        op_f, op_g = op.apply(f), op.apply(g)
        op_prod = op.apply(pointwise_product(f, g))
        op_conv = op.apply(convolve_fast(f, g))
        record_pair(f, g, op_f, op_g, op_prod, op_conv)

    return HypothesisReport(err_a, err_b, err_c, trials, seed, tol)


def recover(
    op: Operator,
    tol: float = DEFAULT_TOL,
    *,
    residual_trials: int = DEFAULT_RESIDUAL_TRIALS,
    seed: int = DEFAULT_RECOVER_SEED,
) -> RecoveryReport:
    """Reconstruct the automorphism and conjugation flag behind a conforming operator.

    Raises NotEssentiallyFourierError (or its DichotomyViolationError
    subclass) as soon as a structural check fails; the exception names the
    failing stage and carries the offending data.
    """
    u_map = _as_primal_map(op)
    group = op.group
    n = group.size

    # Stage 1: constants must be preserved.
    u_one = u_map(constant_one(group))
    unit_error = float(np.max(np.abs(u_one.values - 1.0)))
    if unit_error > tol:
        raise NotEssentiallyFourierError(
            "unit-preservation",
            f"U(1) deviates from 1 by {unit_error:.3e} (tol {tol:.1e})",
            max_error=unit_error,
        )

    # Stage 2: each transformed point mass must be a {0,1} indicator of a single point.
    phi = np.empty(n, dtype=np.int64)
    binary_error = 0.0
    for x in range(n):
        values = u_map(delta(group, x)).values
        deviation = np.minimum(np.abs(values), np.abs(values - 1.0))
        worst = float(deviation.max())
        binary_error = max(binary_error, worst)
        if worst > tol:
            raise NotEssentiallyFourierError(
                "point-mass-binary",
                f"U(delta_{x}) is not {{0,1}}-valued (max deviation {worst:.3e})",
                x=x,
                max_deviation=worst,
            )
        supp = np.flatnonzero(np.abs(values - 1.0) <= tol)
        if supp.size != 1:
            raise NotEssentiallyFourierError(
                "singleton-support",
                f"U(delta_{x}) has support of size {supp.size}, expected a single point",
                x=x,
                support=tuple(int(j) for j in supp),
            )
        phi[x] = supp[0]

    # Stage 3: the support map must be an automorphism; its inverse is psi.
    if np.bincount(phi, minlength=n).max() != 1:
        seen: dict[int, int] = {}
        collision = (0, 0)
        for x, v in enumerate(phi):
            if int(v) in seen:
                collision = (seen[int(v)], x)
                break
            seen[int(v)] = x
        raise NotEssentiallyFourierError(
            "support-map-bijection",
            f"point masses at {collision[0]} and {collision[1]} map to the same support",
            pair=collision,
        )
    if phi[0] != 0:
        raise NotEssentiallyFourierError(
            "identity-not-fixed",
            f"the support map sends the identity to index {int(phi[0])}",
            image=int(phi[0]),
        )
    violation = find_additivity_violation(phi, group)
    if violation is not None:
        raise NotEssentiallyFourierError(
            "homomorphism",
            f"support map is not additive on the pair {violation}",
            pair=violation,
        )
    psi_perm = np.empty(n, dtype=np.int64)
    psi_perm[phi] = np.arange(n, dtype=np.int64)
    psi = Automorphism(group, tuple(int(p) for p in psi_perm))

    # Stage 4: the scalar map, read off constants, must be constant in x and
    # must send i to one of +-i.
    one = constant_one(group)
    m_cache: dict[complex, complex] = {}
    independence_error = 0.0

    def m_at(alpha: complex) -> complex:
        nonlocal independence_error
        alpha = complex(alpha)
        if alpha in m_cache:
            return m_cache[alpha]
        values = u_map(alpha * one).values
        m_value = complex(values[0])
        deviation = float(np.max(np.abs(values - m_value)))
        independence_error = max(independence_error, deviation)
        if deviation > tol:
            raise NotEssentiallyFourierError(
                "scalar-independence",
                f"U({alpha} * 1) is not constant (max deviation {deviation:.3e})",
                alpha=alpha,
                deviation=deviation,
            )
        m_cache[alpha] = m_value
        return m_value

    m_samples = [(alpha, m_at(alpha)) for alpha in PROBE_SCALARS]
    m_i = m_at(1j)
    if abs(m_i - 1j) <= tol:
        conjugation = False
    elif abs(m_i + 1j) <= tol and abs(m_i + 1j) < abs(m_i - 1j):
        conjugation = True
    else:
        raise DichotomyViolationError(
            "dichotomy",
            f"m(i) = {m_i} matches neither i nor -i at tolerance {tol:.1e}",
            m_i=m_i,
        )

    def scalar_image(z: np.ndarray | complex):
        return np.conj(z) if conjugation else z

    probe_dichotomy_error = max(
        abs(m_value - scalar_image(alpha)) for alpha, m_value in m_samples
    )
    if probe_dichotomy_error > tol:
        raise DichotomyViolationError(
            "dichotomy-cross-validation",
            f"a probe scalar deviates from the {'conjugation' if conjugation else 'identity'} "
            f"branch by {probe_dichotomy_error:.3e}",
            max_error=probe_dichotomy_error,
        )

    m_mult_error = 0.0
    m_conj_add_error = 0.0
    for alpha in PROBE_SCALARS:
        for beta in PROBE_SCALARS:
            m_mult_error = max(
                m_mult_error, abs(m_at(alpha * beta) - m_at(alpha) * m_at(beta))
            )
            m_conj_add_error = max(
                m_conj_add_error,
                abs(m_at(alpha + beta.conjugate()) - m_at(alpha) - m_at(beta).conjugate()),
            )

    # Stage 5: residual of U(f) against the reconstructed model on scaled point
    # masses and seeded random functions, plus the vanishing correspondence
    # between f(x) and U(f)(phi(x)) on the point-mass probes.
    perm = psi.perm_array
    residual_point = 0.0
    condition_star_ok = True
    for alpha in PROBE_SCALARS:
        for x in range(n):
            values = np.zeros(n, dtype=np.complex128)
            values[x] = alpha
            probe = GFunction(group, PRIMAL, values)
            image = u_map(probe).values
            expected = scalar_image(values[perm])
            residual_point = max(residual_point, float(np.max(np.abs(image - expected))))
            support_tol = _SUPPORT_TOL_FACTOR * float(np.max(np.abs(image)))
            on_point = abs(image[phi[x]])
            off_point = float(np.max(np.abs(np.delete(image, phi[x])))) if n > 1 else 0.0
            if on_point <= support_tol or off_point > support_tol:
                condition_star_ok = False

    rng = np.random.default_rng(seed)
    residual_random = 0.0
    for _ in range(residual_trials):
        f = random_function(group, rng)
        image = u_map(f).values
        expected = scalar_image(f.values[perm])
        residual_random = max(residual_random, float(np.max(np.abs(image - expected))))

    diagnostics = {
        "unit_error": unit_error,
        "point_mass_binary_error": binary_error,
        "supports_singleton": True,
        "identity_fixed": True,
        "homomorphism_ok": True,
        "homomorphism_exhaustive": n <= 4096,
        "scalar_independence_error": independence_error,
        "probe_dichotomy_error": float(probe_dichotomy_error),
        "m_multiplicativity_error": float(m_mult_error),
        "m_conjugate_additivity_error": float(m_conj_add_error),
        "condition_star_ok": condition_star_ok,
        "residual_point_masses": residual_point,
        "residual_random": residual_random,
    }
    return RecoveryReport(
        psi=psi,
        conjugation=conjugation,
        residual=max(residual_point, residual_random),
        m_samples=m_samples,
        diagnostics=diagnostics,
        tol=tol,
        seed=seed,
    )


def verify_recovery(
    op: Operator,
    report: RecoveryReport,
    trials: int = 32,
    seed: int = 905,
) -> float:
    """Independent residual of the operator against a report's model.

    Probes every point mass plus ``trials`` fresh random functions, so a
    report carrying the wrong automorphism shows an order-one residual.
    """
    u_map = _as_primal_map(op)
    group = op.group
    if report.psi.group != group:
        raise SideMismatchError("report and operator live on different groups")
    perm = report.psi.perm_array

    def expected(values: np.ndarray) -> np.ndarray:
        composed = values[perm]
        return np.conj(composed) if report.conjugation else composed

    residual = 0.0
    for x in range(group.size):
        probe = delta(group, x)
        residual = max(
            residual, float(np.max(np.abs(u_map(probe).values - expected(probe.values))))
        )
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = random_function(group, rng)
        residual = max(residual, float(np.max(np.abs(u_map(f).values - expected(f.values)))))
    return residual
