"""Linear map between deformed and canonical phase-space variables.

The two-parameter family (mu, nu) expresses the deformed variables through
canonical ones:

    q_k = nu Q_k - theta_kl / (2 nu hbar) P_l
    p_k = mu P_k + zeta_kl / (2 mu hbar) Q_l

with theta_kl = theta eps_kl, zeta_kl = zeta eps_kl and eps_12 = +1.  The
parameters obey theta*zeta / (4 hbar^2) = nu*mu*(1 - nu*mu); the root with
nu*mu -> 1 in the commutative limit is selected so the closed-form inverse
map stays real and agrees with the numeric matrix inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidAlgebraError
from .phasepoly import PhaseSymbol

CONSTRAINT_TOL = 1e-12


def solve_constraint(alg, mu):
    """Return nu with nu*mu = (1 + sqrt(1 - theta*zeta/hbar^2)) / 2."""
    if mu == 0:
        raise InvalidAlgebraError("mu must be nonzero")
    ratio = alg.theta * alg.zeta / alg.hbar**2
    if ratio >= 1:
        raise InvalidAlgebraError("theta*zeta/hbar^2 must be below 1")
    return 0.5 * (1.0 + np.sqrt(1.0 - ratio)) / mu


@dataclass(frozen=True)
class SWParams:
    """(mu, nu) pair tied to an algebra; validates the product constraint."""

    mu: float
    nu: float
    alg: object

    def __post_init__(self):
        if self.mu == 0 or self.nu == 0:
            raise InvalidAlgebraError("mu and nu must be nonzero")
        if self.constraint_residual() > CONSTRAINT_TOL:
            raise InvalidAlgebraError(
                f"(mu, nu) violate the product constraint "
                f"(residual {self.constraint_residual():.3e})"
            )

    @classmethod
    def from_mu(cls, alg, mu):
        return cls(mu, solve_constraint(alg, mu), alg)

    def constraint_residual(self):
        nm = self.nu * self.mu
        return abs(nm * (1.0 - nm) - self.alg.theta * self.alg.zeta / (4 * self.alg.hbar**2))


@dataclass(frozen=True)
class LinearPhaseMap:
    """Matrix M acting on (Q1, Q2, P1, P2) column vectors, with det cached."""

    matrix: np.ndarray
    jacobian: float

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (4, 4):
            raise DimensionError("phase map must be 4x4")
        det = float(np.linalg.det(matrix))
        if abs(det) < 1e-14:
            raise InvalidAlgebraError("phase map is singular")
        return cls(matrix, det)

    def render_csv(self):
        return "\n".join(",".join(f"{v:.17e}" for v in row) for row in self.matrix)


def forward_map(sw):
    """(q, p) in terms of (Q, P)."""
    alg = sw.alg
    th = alg.theta / (2 * sw.nu * alg.hbar)
    ze = alg.zeta / (2 * sw.mu * alg.hbar)
    m = np.array([
        [sw.nu, 0.0, 0.0, -th],
        [0.0, sw.nu, th, 0.0],
        [0.0, ze, sw.mu, 0.0],
        [-ze, 0.0, 0.0, sw.mu],
    ])
    return LinearPhaseMap.from_matrix(m)


def inverse_map(sw):
    """(Q, P) in terms of (q, p), from the closed form.

    Checked against the numeric inverse of the forward matrix; both must
    agree to 1e-10 entrywise, which is what pins the constraint root.
    """
    alg = sw.alg
    ratio = alg.theta * alg.zeta / alg.hbar**2
    if ratio >= 1:
        raise InvalidAlgebraError("theta*zeta/hbar^2 must be below 1")
    pref = (1.0 - ratio) ** -0.5
    numu = sw.nu * sw.mu
    th = alg.theta / (2 * numu * alg.hbar)
    ze = alg.zeta / (2 * numu * alg.hbar)
    m = np.array([
        [pref * sw.mu, 0.0, 0.0, pref * sw.mu * th],
        [0.0, pref * sw.mu, -pref * sw.mu * th, 0.0],
        [0.0, -pref * sw.nu * ze, pref * sw.nu, 0.0],
        [pref * sw.nu * ze, 0.0, 0.0, pref * sw.nu],
    ])
    closed = LinearPhaseMap.from_matrix(m)
    numeric = np.linalg.inv(forward_map(sw).matrix)
    if np.max(np.abs(closed.matrix - numeric)) > 1e-10:
        raise InvalidAlgebraError("closed-form inverse disagrees with numeric inverse")
    return closed


def substitute(f, phase_map):
    """Exact polynomial composition f(M z).

    Each original variable is replaced by the corresponding row of the map
    read as a linear combination of the new variables.
    """
    if phase_map.matrix.shape[0] != f.order.n_vars:
        raise DimensionError("map size does not match symbol variable count")
    order = f.order
    rows = []
    for a in range(order.n_vars):
        row = PhaseSymbol.zero(order)
        for b in range(order.n_vars):
            coeff = phase_map.matrix[a, b]
            if coeff != 0.0:
                row = row + PhaseSymbol.variable(order, b, coeff)
        rows.append(row)
    result_terms = {}
    for exps, coeff in f.terms().items():
        term = PhaseSymbol.constant(order, coeff)
        for a, e in enumerate(exps):
            for _ in range(e):
                term = term * rows[a]
        for key, c in term.terms().items():
            result_terms[key] = result_terms.get(key, 0.0) + c
    return PhaseSymbol(order, result_terms)
