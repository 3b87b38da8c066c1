"""Composite Moyal product for deformed two-mode phase space.

The algebra carries three constants: the canonical ``hbar`` on every
``(q_k, p_k)`` pair, a position-position constant ``theta`` and a
momentum-momentum constant ``zeta``, each entering antisymmetrically between
the two modes.  All three bidifferential factors commute, so the product is
implemented as a single exponential of the summed bidifferential with one
antisymmetric matrix ``Omega``; the coordinate commutators
``[z_a, z_b]_star = i Omega_ab`` fix every sign convention used here.

On polynomials the exponential series terminates and everything is exact.
Exponentials of linear forms are kept as a dedicated type since their star
products and conjugation actions close in that family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .errors import DimensionError, InvalidAlgebraError
from .phasepoly import PhaseSymbol, VariableOrder


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation constants (hbar, theta, zeta) for two modes."""

    hbar: float
    theta: float = 0.0
    zeta: float = 0.0
    n_modes: int = 2

    def __post_init__(self):
        if self.n_modes != 2:
            raise InvalidAlgebraError("the deformed algebra is defined for exactly two modes")
        if self.hbar <= 0:
            raise InvalidAlgebraError("hbar must be positive")
        if self.theta * self.zeta >= self.hbar**2:
            raise InvalidAlgebraError(
                "theta*zeta must stay below hbar**2 for an invertible variable map"
            )

    @property
    def order(self):
        return VariableOrder(self.n_modes)


def deformation_matrix(alg):
    """Antisymmetric matrix Omega with [z_a, z_b]_star = i Omega_ab.

    In (q1, q2, p1, p2) order: Omega[q1,q2] = theta, Omega[qk,pk] = hbar,
    Omega[p1,p2] = zeta, antisymmetric completion, zeros elsewhere.
    """
    omega = np.zeros((4, 4))
    omega[0, 1] = alg.theta
    omega[0, 2] = alg.hbar
    omega[1, 3] = alg.hbar
    omega[2, 3] = alg.zeta
    omega -= omega.T
    assert np.array_equal(omega, -omega.T)
    return omega


@dataclass(frozen=True)
class ExpLinear:
    """``prefactor * exp(coeffs . z)`` with complex coefficient vector."""

    coeffs: tuple
    prefactor: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.prefactor == 0:
            raise InvalidAlgebraError("exp-linear prefactor must be nonzero")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @classmethod
    def identity(cls, n_vars=4):
        return cls((0.0,) * n_vars, 1.0)

    def inverse(self):
        return ExpLinear(tuple(-c for c in self.coeffs), 1.0 / self.prefactor)

    def conjugate(self):
        return ExpLinear(tuple(np.conj(c) for c in self.coeffs), np.conj(self.prefactor))

    def evaluate(self, point):
        if len(point) != len(self.coeffs):
            raise DimensionError("point length does not match coefficient vector")
        return self.prefactor * np.exp(sum(c * complex(z) for c, z in zip(self.coeffs, point)))


def _compositions(total, boxes):
    """Yield all ways to place ``total`` identical items into ``boxes`` slots."""
    for combo in combinations_with_replacement(range(boxes), total):
        counts = [0] * boxes
        for b in combo:
            counts[b] += 1
        yield tuple(counts)


def star_product(f, g, alg):
    """Star product of two polynomial symbols.

    Expands exp[(i/2) dL^T Omega dR] term by term; the series stops at
    min(deg f, deg g), so the result is exact.
    """
    if f.order != g.order:
        raise DimensionError("operands use different variable orders")
    omega = deformation_matrix(alg)
    entries = [(a, b, omega[a, b]) for a in range(4) for b in range(4) if omega[a, b] != 0.0]
    nmax = min(f.degree(), g.degree())
    if nmax < 0:
        return PhaseSymbol.zero(f.order)

    df_cache = {(0, 0, 0, 0): f}
    dg_cache = {(0, 0, 0, 0): g}

    def cached_partial(cache, base, multi):
        multi = tuple(multi)
        if multi in cache:
            return cache[multi]
        # reduce along the first non-zero entry
        idx = next(i for i, m in enumerate(multi) if m > 0)
        lower = list(multi)
        lower[idx] -= 1
        parent = cached_partial(cache, base, lower)
        out = parent.partial(idx)
        cache[multi] = out
        return out

    accum = {}
    for n in range(nmax + 1):
        base = (1j / 2) ** n
        for counts in _compositions(n, len(entries)):
            weight = base
            left = [0, 0, 0, 0]
            right = [0, 0, 0, 0]
            for (a, b, w), c in zip(entries, counts):
                if c == 0:
                    continue
                weight *= w**c / math.factorial(c)
                left[a] += c
                right[b] += c
            fa = cached_partial(df_cache, f, left)
            if fa.is_zero():
                continue
            gb = cached_partial(dg_cache, g, right)
            if gb.is_zero():
                continue
            for exps, coeff in (fa * gb).terms().items():
                accum[exps] = accum.get(exps, 0.0) + weight * coeff
    return PhaseSymbol(f.order, accum)


def star_commutator(f, g, alg):
    """f star g - g star f."""
    return star_product(f, g, alg) - star_product(g, f, alg)


def exp_star_exp(a, b, alg):
    """Star product of two exponentials of linear forms.

    exp(a.z) star exp(b.z) = exp((a+b).z) * exp((i/2) a^T Omega b); the
    scalar prefactors multiply through.
    """
    if len(a.coeffs) != 4 or len(b.coeffs) != 4:
        raise DimensionError("exp-linear coefficient vectors must have length 4")
    omega = deformation_matrix(alg)
    av = np.asarray(a.coeffs)
    bv = np.asarray(b.coeffs)
    phase = np.exp(0.5j * (av @ omega @ bv))
    return ExpLinear(tuple(av + bv), a.prefactor * b.prefactor * phase)


def star_conjugate(a, f, alg):
    """Conjugation exp(a.z) star f star exp(-a.z) of a polynomial symbol.

    For a linear exponent the conjugation acts as the translation
    f(z - i Omega a); scalar prefactors cancel between the factor and its
    inverse, and conjugating by a product of such factors composes as
    translation by the summed shifts.
    """
    coeffs = a.coeffs if isinstance(a, ExpLinear) else tuple(a)
    if len(coeffs) != f.order.n_vars:
        raise DimensionError("exponent coefficient vector has wrong length")
    omega = deformation_matrix(alg)
    shift = -1j * (omega @ np.asarray(coeffs, dtype=complex))
    return f.shift(tuple(shift))
