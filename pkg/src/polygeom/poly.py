"""Dense complex polynomials, ascending coefficient order.

A polynomial is stored as a tuple of complex coefficients where
``coeffs[k]`` multiplies ``z**k``. Construction canonicalizes: trailing
coefficients with magnitude below TRIM_REL times the largest magnitude
are dropped, so ``degree()`` stays meaningful after cancellation-heavy
arithmetic (derivatives, subtraction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeTooLarge, InvalidDegree, InvalidIndex, InvalidInput

# Degrees above N_MAX would overflow the exact-binomial guarantee the
# apolarity functional relies on.
N_MAX = 60

TRIM_REL = 1e-14


def _as_finite_complex(values: Iterable[complex]) -> tuple[complex, ...]:
    out = []
    for v in values:
        c = complex(v)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise InvalidInput(f"non-finite value {c!r}")
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Sequence[complex]):
        cs = _as_finite_complex(coeffs)
        top = max((abs(c) for c in cs), default=0.0)
        cut = TRIM_REL * top
        n = len(cs)
        while n > 0 and abs(cs[n - 1]) <= cut:
            n -= 1
        object.__setattr__(self, "coeffs", cs[:n])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the canonical form; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        """Horner evaluation."""
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        """Formal derivative of the given order (order 0 is identity)."""
        if order < 0:
            raise InvalidInput("derivative order must be >= 0")
        if order == 0:
            return self
        if order > self.degree():
            return Polynomial(())
        out = []
        for k in range(len(self.coeffs) - order):
            f = 1
            for j in range(k + 1, k + order + 1):
                f *= j
            out.append(self.coeffs[k + order] * f)
        return Polynomial(out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial(())
            out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * complex(other) for c in self.coeffs])

    __rmul__ = __mul__

    def shifted_constant(self, delta: complex) -> "Polynomial":
        """Return self + delta (as a polynomial in z)."""
        if self.is_zero:
            return Polynomial([delta])
        out = list(self.coeffs)
        out[0] += complex(delta)
        return Polynomial(out)


def from_roots(roots: Sequence[complex]) -> Polynomial:
    """Monic polynomial with exactly the given roots (with multiplicity)."""
    pts = _as_finite_complex(roots)
    if not pts:
        raise InvalidInput("from_roots requires at least one root")
    coeffs = [1.0 + 0j]
    for w in pts:
        coeffs.append(0j)
        for k in range(len(coeffs) - 1, 0, -1):
            coeffs[k] = coeffs[k - 1] - w * coeffs[k]
        coeffs[0] = -w * coeffs[0]
    # exact construction: no trimming surprises, leading coeff is 1
    return Polynomial(coeffs)


def elementary_symmetric_all(points: Sequence[complex]) -> list[complex]:
    """All e_0..e_n of the points via the incremental recurrence."""
    pts = _as_finite_complex(points)
    e = [1.0 + 0j] + [0j] * len(pts)
    for i, x in enumerate(pts):
        for k in range(i + 1, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def elementary_symmetric(points: Sequence[complex], k: int) -> complex:
    """e_k of the points; e_0 = 1."""
    if k < 0 or k > len(points):
        raise InvalidIndex(f"k={k} out of range for {len(points)} points")
    return elementary_symmetric_all(points)[k]


def binomial(n: int, k: int) -> int:
    """Exact C(n,k) for 0 <= k <= n <= N_MAX."""
    if n < 0 or k < 0 or k > n:
        raise InvalidIndex(f"binomial({n},{k}) undefined")
    if n > N_MAX:
        raise DegreeTooLarge(f"n={n} exceeds N_MAX={N_MAX}")
    return math.comb(n, k)


def mean_of_roots(p: Polynomial) -> complex:
    """Arithmetic mean of the zeros, from coefficients alone."""
    n = p.degree()
    if n < 1:
        raise InvalidDegree("mean_of_roots needs degree >= 1")
    return -p.coeffs[n - 1] / (n * p.coeffs[n])
