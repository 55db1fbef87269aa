import math
import random

import pytest

from polygeom.errors import InvalidDegree, NonConvergence
from polygeom.poly import Polynomial, from_roots
from polygeom.rootfind import cauchy_bound, find_roots


def match_multisets(found, expected, tol):
    """Greedy nearest matching; adequate for well-separated root sets."""
    pool = list(found)
    for w in expected:
        best = min(pool, key=lambda r: abs(r - w))
        assert abs(best - w) <= tol, f"{w} unmatched (closest {best})"
        pool.remove(best)


class TestCauchyBound:
    def test_quadratic(self):
        assert cauchy_bound(Polynomial([-1, 0, 1])) == 2.0

    def test_pure_power(self):
        assert cauchy_bound(Polynomial([0, 0, 0, 1])) == 1.0

    def test_cubic(self):
        assert cauchy_bound(Polynomial([10, -1, -10, 1])) == 11.0

    def test_rejects_constant(self):
        with pytest.raises(InvalidDegree):
            cauchy_bound(Polynomial([5]))


class TestFindRoots:
    def test_cube_roots_of_unity(self):
        rs = find_roots(Polynomial([-1, 0, 0, 1]))
        expected = [1, complex(-0.5, math.sqrt(3) / 2), complex(-0.5, -math.sqrt(3) / 2)]
        match_multisets(rs.roots, expected, 1e-10)

    def test_triple_root_clusters(self):
        rs = find_roots(from_roots([2, 2, 2]))
        assert len(rs.clusters) == 1
        rep, mult = rs.clusters[0]
        assert mult == 3
        assert abs(rep - 2) <= 1e-8
        assert all(r <= 1e-12 for r in rs.residuals)

    def test_quadratic_formula_oracle(self):
        # 3z^2 - 6z + 2: roots 1 +- 1/sqrt(3)
        rs = find_roots(Polynomial([2, -6, 3]))
        expected = [1 - 1 / math.sqrt(3), 1 + 1 / math.sqrt(3)]
        match_multisets(rs.roots, expected, 1e-12)

    def test_zeros_at_origin_factored_exactly(self):
        rs = find_roots(Polynomial([0, 0, 0, 1, 1]))
        assert sum(1 for r in rs.roots if r == 0) == 3
        match_multisets(rs.roots, [0, 0, 0, -1], 1e-12)

    def test_rejects_constant(self):
        with pytest.raises(InvalidDegree):
            find_roots(Polynomial([1]))

    def test_non_convergence_carries_best_effort(self):
        with pytest.raises(NonConvergence) as exc:
            find_roots(Polynomial([-1, 0, 0, 0, 0, 1]), max_iter=1)
        assert len(exc.value.roots) == 5
        assert len(exc.value.residuals) == 5

    def test_cluster_multiplicities_sum_to_degree(self):
        rng = random.Random(3)
        for _ in range(50):
            deg = rng.randint(1, 15)
            cs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(deg + 1)]
            while abs(cs[-1]) < 0.1:
                cs[-1] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            rs = find_roots(Polynomial(cs))
            assert sum(m for _, m in rs.clusters) == deg


class TestSoundness:
    def test_residuals_and_vieta_on_random_polynomials(self):
        rng = random.Random(17)
        for _ in range(300):
            deg = rng.randint(1, 20)
            cs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(deg + 1)]
            while abs(cs[-1]) < 0.1:
                cs[-1] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            p = Polynomial(cs)
            rs = find_roots(p)
            n = p.degree()
            for r in rs.roots:
                scale = sum(abs(c) * max(1.0, abs(r)) ** k for k, c in enumerate(p.coeffs))
                assert abs(p(r)) <= 1e-8 * scale
            root_sum = sum(rs.roots)
            root_prod = 1 + 0j
            for r in rs.roots:
                root_prod *= r
            vieta_sum = -p.coeffs[n - 1] / p.coeffs[n]
            vieta_prod = (-1) ** n * p.coeffs[0] / p.coeffs[n]
            assert abs(root_sum - vieta_sum) <= 1e-8 * (1 + abs(vieta_sum))
            assert abs(root_prod - vieta_prod) <= 1e-8 * (1 + abs(vieta_prod))

    def test_from_roots_round_trip(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.randint(1, 12)
            pts = []
            while len(pts) < n:
                z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                if all(abs(z - w) >= 1e-2 for w in pts):
                    pts.append(z)
            rs = find_roots(from_roots(pts))
            match_multisets(rs.roots, pts, 1e-7)
