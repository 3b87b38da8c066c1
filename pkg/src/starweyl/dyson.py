"""Similarity map that trades imaginary position drives for real symbols.

The map is the star-exponential of a linear form A_1 q_1 + A_2 q_2 +
B_1 p_1 + B_2 p_2 with complex per-mode coefficients kept in polar form.
Conjugating a quadratic-plus-linear symbol by it is a complex translation;
demanding that the translated symbol be real pins the real parts of A_i and
B_i, while the imaginary parts stay free inputs (parametrised here by the
phase angles).

Two independent constructions of the resulting real symbol are provided:
the generic star-conjugation route and the hand-coded coefficient formulas
(including the general-quadratic variant); their coefficient-wise agreement
is the module's central cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAlgebraError
from .phasepoly import PhaseSymbol
from .star import ExpLinear, deformation_matrix, star_conjugate

# eps_12 = +1 between the two modes
_EPS = ((0.0, 1.0), (-1.0, 0.0))


@dataclass(frozen=True)
class DysonParams:
    """Per-mode coefficients A_i = |A_i| e^{i phase_A_i}, likewise B_i."""

    magnitude_a: tuple
    phase_a: tuple
    magnitude_b: tuple
    phase_b: tuple

    def __post_init__(self):
        for name in ("magnitude_a", "phase_a", "magnitude_b", "phase_b"):
            vals = tuple(float(v) for v in getattr(self, name))
            if len(vals) != 2 or not all(math.isfinite(v) for v in vals):
                raise ValueError(f"{name} must be two finite reals")
            object.__setattr__(self, name, vals)
        if any(m < 0 for m in self.magnitude_a + self.magnitude_b):
            raise ValueError("magnitudes must be non-negative")

    @classmethod
    def zero(cls):
        return cls((0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0))

    @classmethod
    def from_complex(cls, a_coeffs, b_coeffs):
        a = [complex(v) for v in a_coeffs]
        b = [complex(v) for v in b_coeffs]
        return cls(
            tuple(abs(v) for v in a),
            tuple(np.angle(v) if v != 0 else 0.0 for v in a),
            tuple(abs(v) for v in b),
            tuple(np.angle(v) if v != 0 else 0.0 for v in b),
        )

    def a_complex(self):
        return tuple(m * np.exp(1j * p) for m, p in zip(self.magnitude_a, self.phase_a))

    def b_complex(self):
        return tuple(m * np.exp(1j * p) for m, p in zip(self.magnitude_b, self.phase_b))

    def exponent_coeffs(self):
        """(A_1, A_2, B_1, B_2) in variable order."""
        return self.a_complex() + self.b_complex()

    def is_zero(self):
        return all(m == 0.0 for m in self.magnitude_a + self.magnitude_b)


@dataclass(frozen=True)
class HermitianNCCoeffs:
    """Per-mode momentum drive V_i, position drive T_i and constant offset."""

    v: tuple
    t: tuple
    constant: tuple


def hermiticity_constraints(osc, alg, phases):
    """Build DysonParams whose real parts make the conjugated symbol real.

    ``phases`` is (phase_A1, phase_A2, phase_B1, phase_B2); the real parts
    are fixed by

        Re A_i = -(delta_j + delta_j*) zeta_ji
                 / (2 m w_j^2 (zeta_ji theta_ij + hbar^2))
        Re B_i =  (delta_i + delta_i*) hbar
                 / (2 m w_i^2 (theta_ji zeta_ij + hbar^2))

    with j the opposite mode, and the magnitudes then follow from
    |X| = Re X / cos(phase).  Phases at odd multiples of pi/2 make that
    division ill-defined and are rejected.
    """
    pa1, pa2, pb1, pb2 = (float(p) for p in phases)
    pa = (pa1, pa2)
    pb = (pb1, pb2)
    den = alg.hbar**2 - alg.theta * alg.zeta
    scale = max(alg.hbar**2, abs(alg.theta * alg.zeta))
    if abs(den) < 1e-14 * scale:
        raise DegenerateAlgebraError("hbar^2 - theta*zeta vanishes")
    a = [0j, 0j]
    b = [0j, 0j]
    for i in (0, 1):
        j = 1 - i
        if abs(math.cos(pa[i])) < 1e-12 or abs(math.cos(pb[i])) < 1e-12:
            raise DegenerateAlgebraError("phase too close to pi/2: tan/cos ill-defined")
        zeta_ji = alg.zeta * _EPS[j][i]
        re_a = -(2.0 * osc.delta[j]) * zeta_ji / (2 * osc.m * osc.omega[j] ** 2 * den)
        re_b = (2.0 * osc.delta[i]) * alg.hbar / (2 * osc.m * osc.omega[i] ** 2 * den)
        a[i] = complex(re_a, re_a * math.tan(pa[i]))
        b[i] = complex(re_b, re_b * math.tan(pb[i]))
    return DysonParams.from_complex(a, b)


def conjugate_hamiltonian(h_nh, d, alg):
    """Generic route: conjugate a symbol by the exponential linear form.

    Scalar phases from splitting the exponent into per-mode factors cancel
    between the map and its inverse, so the action is the single translation
    by -i Omega (A_1, A_2, B_1, B_2).
    """
    return star_conjugate(d.exponent_coeffs(), h_nh, alg)


def hermitian_nc_coefficients(osc, alg, d):
    """Hand-coded drive coefficients V_i, T_i and constant of the real symbol.

    Written for general complex delta; with real delta the familiar
    tan-of-phase forms are recovered.
    """
    ta = [math.tan(p) for p in d.phase_a]
    tb = [math.tan(p) for p in d.phase_b]
    v = [0.0, 0.0]
    t = [0.0, 0.0]
    const = [0.0, 0.0]
    m = osc.m
    hbar = alg.hbar
    for i in (0, 1):
        j = 1 - i
        delta_i = complex(osc.delta[i])
        delta_j = complex(osc.delta[j])
        zeta_ji = alg.zeta * _EPS[j][i]
        theta_ij = alg.theta * _EPS[i][j]
        theta_ji = alg.theta * _EPS[j][i]
        zeta_ij = alg.zeta * _EPS[i][j]
        den_v = 2 * m**2 * osc.omega[j] ** 2 * (zeta_ji * theta_ij + hbar**2)
        v_i = -zeta_ji * hbar * (delta_j + delta_j.conjugate()) * (tb[j] - ta[i]) / den_v \
            + osc.gamma[i]
        den_t = 2 * (theta_ji * zeta_ij + hbar**2)
        t_i = 1j * (delta_i - delta_i.conjugate()) / 2 \
            + (delta_i + delta_i.conjugate()) * (ta[j] * theta_ji * zeta_ij + tb[i] * hbar**2) / den_t
        v[i] = _require_real(v_i, "V")
        t[i] = _require_real(t_i, "T")
    for i in (0, 1):
        const[i] = (m**2 * osc.omega[i] ** 2 * (v[i] ** 2 - osc.gamma[i] ** 2)
                    + t[i] ** 2 + osc.delta[i] ** 2) / (2 * m * osc.omega[i] ** 2)
    return HermitianNCCoeffs(tuple(v), tuple(t), tuple(const))


def _require_real(value, label, tol=1e-10):
    value = complex(value)
    if abs(value.imag) > tol * max(1.0, abs(value)):
        raise DegenerateAlgebraError(f"{label} coefficient came out complex: {value}")
    return value.real


def build_hhnc_paper(osc, alg, d):
    """Hand-coded real symbol: sum_i p_i^2/2m + m w_i^2 q_i^2/2 + V_i p_i
    + T_i q_i + const_i."""
    coeffs = hermitian_nc_coefficients(osc, alg, d)
    order = alg.order
    terms = {}

    def put(exps, c):
        terms[tuple(exps)] = terms.get(tuple(exps), 0.0) + c

    for i in (0, 1):
        qi, pi = order.q_index(i), order.p_index(i)
        e = [0, 0, 0, 0]
        e[pi] = 2
        put(e, 1.0 / (2 * osc.m))
        e = [0, 0, 0, 0]
        e[qi] = 2
        put(e, 0.5 * osc.m * osc.omega[i] ** 2)
        e = [0, 0, 0, 0]
        e[pi] = 1
        put(e, coeffs.v[i])
        e = [0, 0, 0, 0]
        e[qi] = 1
        put(e, coeffs.t[i])
        put((0, 0, 0, 0), coeffs.constant[i])
    return PhaseSymbol(order, terms)


def build_hhnc_appendix(alphas, betas, gammas, deltas, alg, d):
    """General-quadratic variant: sum_i alpha_i p_i^2 + beta_i q_i^2 + drives.

    The drive and constant formulas are evaluated in complex arithmetic as
    written; the imaginary parts cancel identically for admissible inputs.
    With alpha_i = 1/2m and beta_i = m w_i^2 / 2 this reproduces the
    oscillator construction coefficient for coefficient.
    """
    ta = [math.tan(p) for p in d.phase_a]
    tb = [math.tan(p) for p in d.phase_b]
    hbar = alg.hbar
    order = alg.order
    terms = {}

    def put(exps, c):
        terms[tuple(exps)] = terms.get(tuple(exps), 0.0) + c

    for i in (0, 1):
        j = 1 - i
        alpha_i, beta_i, beta_j = alphas[i], betas[i], betas[j]
        gamma_i = gammas[i]
        delta_i, delta_j = complex(deltas[i]), complex(deltas[j])
        zeta_ji = alg.zeta * _EPS[j][i]
        theta_ij = alg.theta * _EPS[i][j]
        theta_ji = alg.theta * _EPS[j][i]
        zeta_ij = alg.zeta * _EPS[i][j]
        den_a = zeta_ji * theta_ij + hbar**2
        den_b = theta_ji * zeta_ij + hbar**2
        p_drive = -alpha_i * zeta_ji * hbar * (delta_j + delta_j.conjugate()) \
            * (tb[j] - ta[i]) / (2 * beta_j * den_a) + gamma_i
        q_drive = 1j * (delta_i - delta_i.conjugate()) / 2 \
            + (delta_i + delta_i.conjugate()) * (ta[j] * theta_ji * zeta_ij + tb[i] * hbar**2) \
            / (2 * den_b)
        u = delta_j * (tb[j] - ta[i]) * zeta_ji * hbar / (2 * beta_j * den_a)
        tq = (ta[j] * theta_ji * zeta_ij + tb[i] * hbar**2) / den_b
        const = -alpha_i * (1j * u) ** 2 \
            - delta_i**2 / (4 * beta_i) * (-1 - 1j * tq) ** 2 \
            - gamma_i * delta_j * ((tb[j] - ta[i]) * zeta_ji * hbar / (2 * beta_j * den_a)) \
            + delta_i**2 / (2 * beta_i) * (1 + 1j * tq)

        qi, pi = order.q_index(i), order.p_index(i)
        e = [0, 0, 0, 0]
        e[pi] = 2
        put(e, alpha_i)
        e = [0, 0, 0, 0]
        e[qi] = 2
        put(e, beta_i)
        e = [0, 0, 0, 0]
        e[pi] = 1
        put(e, _require_real(p_drive, "p drive"))
        e = [0, 0, 0, 0]
        e[qi] = 1
        put(e, _require_real(q_drive, "q drive"))
        put((0, 0, 0, 0), _require_real(const, "constant"))
    return PhaseSymbol(order, terms)


def metric_weyl(d, alg):
    """Symbol of the metric factor: conj-exponent star exponent.

    Coefficient vector conj(a) + a = 2 Re(a); scalar prefactor
    exp((i/2) conj(a)^T Omega a), which is real and positive.
    """
    a = np.asarray(d.exponent_coeffs(), dtype=complex)
    omega = deformation_matrix(alg)
    phase = np.exp(0.5j * (np.conj(a) @ omega @ a))
    return ExpLinear(tuple(2.0 * a.real), complex(phase))
