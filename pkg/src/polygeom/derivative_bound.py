"""Lower bound on k-th-derivative zeros inside a disk.

A closed disk containing n-1 zeros of p, centered at their arithmetic
mean, contains at least floor((n-2k+1)/2) zeros of p^(k). This module
verifies that bound on concrete instances, checks the closed-form
derivative identity the proof rests on, and runs Gauss-Lucas checks.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from .errors import InvalidInput, InvalidInstance
from .poly import Polynomial, from_roots, mean_of_roots
from .regions import Disk, convex_hull, hull_distance
from .rootfind import RootSet, find_roots

_MEAN_RTOL = 1e-12
_COUNT_TOL = 1e-7


@dataclass(frozen=True)
class Theorem2Instance:
    inner_zeros: tuple[complex, ...]
    outer_zero: complex
    disk: Disk

    def validate(self, membership_tol: float = _COUNT_TOL) -> None:
        m = len(self.inner_zeros)
        if m < 2:
            raise InvalidInstance("need at least two inner zeros (n >= 3)")
        mean = sum(self.inner_zeros) / m
        c = self.disk.center
        if abs(mean - c) > _MEAN_RTOL * (1.0 + abs(c)):
            raise InvalidInstance(
                f"disk center {c} is not the mean of the inner zeros ({mean})"
            )
        for z in self.inner_zeros:
            if abs(z - c) > self.disk.radius + membership_tol * (1.0 + abs(z)):
                raise InvalidInstance(f"inner zero {z} outside the closed disk")


@dataclass(frozen=True)
class Theorem2Report:
    n: int
    k: int
    bound: int
    derivative_roots: RootSet
    count_in_disk: int
    satisfied: bool
    mean_residual: float
    vacuous: bool


def theorem2_bound(n: int, k: int) -> int:
    """floor((n-2k+1)/2), clamped at 0 (a count cannot go negative)."""
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"need 1 <= k <= n-1, got n={n}, k={k}")
    return max(0, (n - 2 * k + 1) // 2)


def check_theorem2(inst: Theorem2Instance, k: int, root_tol: float = 1e-12) -> Theorem2Report:
    inst.validate()
    n = len(inst.inner_zeros) + 1
    bound = theorem2_bound(n, k)

    # derivative zeros are affine-equivariant, so work in the disk's own
    # frame (center 0, radius 1); this keeps tightly clustered instances
    # well-conditioned without changing any count
    c, r = inst.disk.center, inst.disk.radius
    zeros = [(z - c) / r for z in list(inst.inner_zeros) + [inst.outer_zero]]
    p = from_roots(zeros)
    d = p.derivative(k)
    droots_n = find_roots(d, tol=root_tol)

    count = 0
    for rep, mult in droots_n.clusters:
        if abs(rep) <= 1.0 + _COUNT_TOL * (1.0 + abs(rep)):
            count += mult

    droots = RootSet(
        tuple(c + r * z for z in droots_n.roots),
        droots_n.residuals,
        tuple((c + r * rep, mult) for rep, mult in droots_n.clusters),
    )

    mu_p = mean_of_roots(p)
    mu_d = mean_of_roots(d)
    mean_residual = abs(mu_p - mu_d) / (1.0 + abs(mu_p))

    return Theorem2Report(
        n=n,
        k=k,
        bound=bound,
        derivative_roots=droots,
        count_in_disk=count,
        satisfied=count >= bound,
        mean_residual=mean_residual,
        vacuous=(bound == 0),
    )


def kth_derivative_identity(n: int, k: int, y: complex) -> float:
    """Residual of d^k/dz^k [z (z-y)^(n-1)] against its closed form.

    Closed form: k! C(n-1,k) z (z-y)^(n-k-1) + k! C(n-1,k-1) (z-y)^(n-k).
    Returns the max coefficient deviation relative to the largest
    coefficient magnitude.
    """
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"need 1 <= k <= n-1, got n={n}, k={k}")
    y = complex(y)
    lhs = from_roots([0j] + [y] * (n - 1)).derivative(k)

    fact = math.factorial(k)
    shell = from_roots([y] * (n - k - 1)) if n - k - 1 > 0 else Polynomial([1])
    t1 = fact * math.comb(n - 1, k) * (Polynomial([0, 1]) * shell)
    t2 = fact * math.comb(n - 1, k - 1) * from_roots([y] * (n - k))
    rhs = t1 + t2

    la, lb = list(lhs.coeffs), list(rhs.coeffs)
    width = max(len(la), len(lb))
    la += [0j] * (width - len(la))
    lb += [0j] * (width - len(lb))
    top = max(max(abs(c) for c in la), max(abs(c) for c in lb), 1e-300)
    return max(abs(x - z) for x, z in zip(la, lb)) / top


def factorization_roots(n: int, k: int, y: complex) -> list[complex]:
    """Zeros of the closed form: y with multiplicity n-k-1, plus (k/n) y."""
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"need 1 <= k <= n-1, got n={n}, k={k}")
    y = complex(y)
    return [y] * (n - k - 1) + [(k / n) * y]


def gauss_lucas_check(p: Polynomial, tol: float = 1e-7, root_tol: float = 1e-12) -> bool:
    """Every critical point within tol of the convex hull of the zeros."""
    if p.degree() < 2:
        raise InvalidInput("gauss_lucas_check needs degree >= 2")
    hull = convex_hull(find_roots(p, tol=root_tol).roots)
    crit = find_roots(p.derivative(), tol=root_tol)
    return all(hull_distance(hull, z) <= tol for z in crit.roots)


def generate_theorem2_instance(
    n: int,
    seed: int,
    radius: float = 1.0,
    outer_distance: float = 2.0,
    center: complex = 0j,
) -> Theorem2Instance:
    """Hypothesis-respecting sampler, deterministic given seed.

    n-1 points are drawn in the disk and recentered so their mean is
    exactly the disk center (kept at most 0.999*radius from it); the
    remaining zero goes at distance >= outer_distance from the center.
    """
    if n < 3:
        raise InvalidInput("need n >= 3")
    if radius <= 0 or outer_distance <= 0:
        raise InvalidInput("radius and outer_distance must be positive")
    rng = random.Random(seed)
    center = complex(center)

    pts = []
    for _ in range(n - 1):
        r = radius * math.sqrt(rng.random())
        th = rng.uniform(0.0, 2.0 * math.pi)
        pts.append(cmath.rect(r, th))
    mean = sum(pts) / len(pts)
    pts = [z - mean for z in pts]
    top = max(abs(z) for z in pts)
    if top > 0.999 * radius:
        s = 0.999 * radius / top
        pts = [s * z for z in pts]
    inner = tuple(center + z for z in pts)

    d = outer_distance * (1.0 + rng.random())
    outer = center + cmath.rect(d, rng.uniform(0.0, 2.0 * math.pi))
    return Theorem2Instance(inner, outer, Disk(center, radius))
