"""Sparse complex polynomials over phase-space variables.

A symbol is stored as a map from exponent multi-indices to complex
coefficients.  With N modes the variables are ordered
``(q_1, ..., q_N, p_1, ..., p_N)``; index ``k`` is position ``k``, index
``N + k`` is momentum ``k``.  The same container represents functions of the
deformed variables and of the canonical ones -- only the caller's labelling
changes.

All operations are pure and return new symbols; coefficients below
``PRUNE_TOL`` in magnitude are dropped so that zero is representable exactly
as the empty term map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionError, OrderMismatchError

PRUNE_TOL = 1e-14


@dataclass(frozen=True)
class VariableOrder:
    """Fixes the number of modes and the (q_1..q_N, p_1..p_N) index layout."""

    n_modes: int = 2

    def __post_init__(self):
        if self.n_modes < 1:
            raise DimensionError("need at least one mode")

    @property
    def n_vars(self):
        return 2 * self.n_modes

    def q_index(self, mode):
        if not 0 <= mode < self.n_modes:
            raise DimensionError(f"mode {mode} out of range")
        return mode

    def p_index(self, mode):
        if not 0 <= mode < self.n_modes:
            raise DimensionError(f"mode {mode} out of range")
        return self.n_modes + mode

    def names(self):
        n = self.n_modes
        return tuple(f"q{k + 1}" for k in range(n)) + tuple(f"p{k + 1}" for k in range(n))


class PhaseSymbol:
    """Complex-coefficient polynomial in the phase-space variables."""

    __slots__ = ("order", "_terms")

    def __init__(self, order, terms=None):
        self.order = order
        pruned = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != order.n_vars:
                raise DimensionError("multi-index length does not match variable count")
            c = complex(coeff)
            if abs(c) > PRUNE_TOL:
                pruned[tuple(int(e) for e in exps)] = c
        self._terms = pruned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls(order, {})

    @classmethod
    def constant(cls, order, value):
        return cls(order, {(0,) * order.n_vars: value})

    @classmethod
    def variable(cls, order, index, coeff=1.0):
        if not 0 <= index < order.n_vars:
            raise DimensionError(f"variable index {index} out of range")
        exps = [0] * order.n_vars
        exps[index] = 1
        return cls(order, {tuple(exps): coeff})

    @classmethod
    def monomial(cls, order, exps, coeff):
        return cls(order, {tuple(exps): coeff})

    # -- inspection ---------------------------------------------------

    def terms(self):
        return dict(self._terms)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0.0 + 0.0j)

    def is_zero(self):
        return not self._terms

    def degree(self):
        """Total degree; -1 for the zero symbol."""
        return max((sum(e) for e in self._terms), default=-1)

    def max_abs_imag(self):
        return max((abs(c.imag) for c in self._terms.values()), default=0.0)

    def max_abs_coeff(self):
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # -- arithmetic ---------------------------------------------------

    def _check_order(self, other):
        if self.order != other.order:
            raise OrderMismatchError("symbols use different variable orders")

    def __add__(self, other):
        if not isinstance(other, PhaseSymbol):
            return NotImplemented
        self._check_order(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            out[exps] = out.get(exps, 0.0) + c
        return PhaseSymbol(self.order, out)

    def __sub__(self, other):
        return self + other.scale(-1.0)

    def scale(self, factor):
        factor = complex(factor)
        return PhaseSymbol(self.order, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        self._check_order(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                out[key] = out.get(key, 0.0) + ca * cb
        return PhaseSymbol(self.order, out)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1.0)

    def __eq__(self, other):
        if not isinstance(other, PhaseSymbol):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __hash__(self):
        return hash((self.order, frozenset(self._terms.items())))

    # -- calculus -----------------------------------------------------

    def partial(self, index):
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.order.n_vars:
            raise DimensionError(f"variable index {index} out of range")
        out = {}
        for exps, c in self._terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            out[key] = out.get(key, 0.0) + c * e
        return PhaseSymbol(self.order, out)

    def shift(self, offsets):
        """Return the symbol of ``f(z + s)`` expanded exactly.

        Complex offsets are allowed; used for translations generated by
        exponentials of linear forms.
        """
        if len(offsets) != self.order.n_vars:
            raise DimensionError("offset vector length does not match variable count")
        offsets = [complex(s) for s in offsets]
        out = {}
        for exps, c in self._terms.items():
            # expand prod_a (z_a + s_a)^{e_a} one variable at a time
            partial_terms = {(): c}
            for a, e in enumerate(exps):
                s = offsets[a]
                nxt = {}
                for prefix, pc in partial_terms.items():
                    if s == 0:
                        nxt[prefix + (e,)] = nxt.get(prefix + (e,), 0.0) + pc
                        continue
                    for k in range(e + 1):
                        w = pc * math.comb(e, k) * s ** (e - k)
                        key = prefix + (k,)
                        nxt[key] = nxt.get(key, 0.0) + w
                partial_terms = nxt
            for key, w in partial_terms.items():
                out[key] = out.get(key, 0.0) + w
        return PhaseSymbol(self.order, out)

    def evaluate(self, point):
        """Numeric value at a (possibly complex) phase-space point."""
        if len(point) != self.order.n_vars:
            raise DimensionError("point length does not match variable count")
        total = 0.0 + 0.0j
        for exps, c in self._terms.items():
            v = c
            for z, e in zip(point, exps):
                if e:
                    v *= complex(z) ** e
            total += v
        return total

    # -- rendering ----------------------------------------------------

    def render(self):
        """Canonical text form: graded-lex ordered, one term per line."""
        names = self.order.names()
        lines = []
        for exps in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[exps]
            monos = " ".join(f"{n}^{e}" for n, e in zip(names, exps))
            lines.append(f"({c.real:.17g},{c.imag:.17g}) {monos}")
        return "\n".join(lines) if lines else "(0,0) " + " ".join(f"{n}^0" for n in names)

    def __repr__(self):
        return f"PhaseSymbol({len(self._terms)} terms, degree {self.degree()})"


def max_coeff_diff(f, g):
    """Largest coefficient-wise absolute difference between two symbols."""
    if f.order != g.order:
        raise OrderMismatchError("symbols use different variable orders")
    keys = set(f.terms()) | set(g.terms())
    return max((abs(f.coefficient(k) - g.coefficient(k)) for k in keys), default=0.0)


def almost_equal(f, g, tol=1e-12):
    return max_coeff_diff(f, g) <= tol
