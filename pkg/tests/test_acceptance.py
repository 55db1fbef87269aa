"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line. Run with `pytest tests/test_acceptance.py -v -s`.
"""

import random
import time

from polygeom import jsonio
from polygeom.apolarity import apolarity_functional
from polygeom.campaign import CampaignConfig, run_campaign
from polygeom.coincidence import (
    SymmetricMultiaffine,
    coincidence_witness,
    theorem1_apolarity_residual,
)
from polygeom.derivative_bound import kth_derivative_identity
from polygeom.errors import HypothesisViolated, TheoremViolation
from polygeom.poly import Polynomial, from_roots
from polygeom.regions import disk, exterior_disk
from polygeom.rootfind import find_roots


def report(number, description, ok):
    print(f"ACCEPTANCE {number:2d} [{'PASS' if ok else 'FAIL'}] {description}")
    assert ok, f"criterion {number} failed: {description}"


def assert_clean(rep, number, description):
    ok = rep.failed == 0 and rep.errored == 0 and not rep.notes
    if not ok:
        for f in rep.failures[:3]:
            print("  failure:", f["diagnostic"])
    report(number, description, ok)


class TestAcceptance:
    def test_01_paper_counterexample(self):
        start = time.monotonic()
        P = SymmetricMultiaffine(2, [0, 1])
        w = [-1, 1]

        exterior_ok = False
        try:
            coincidence_witness(P, w, exterior_disk(0, 1))
        except HypothesisViolated:
            try:
                coincidence_witness(P, w, exterior_disk(0, 1), check_hypothesis=False)
            except TheoremViolation:
                exterior_ok = True

        witness = coincidence_witness(P, w, disk(0, 1))
        elapsed = time.monotonic() - start
        report(1, "counterexample: no witness in the disk exterior, witness 0 in the disk",
               exterior_ok and abs(witness) <= 1e-10 and elapsed < 1.0)

    def test_02_extension_proof_identity(self):
        start = time.monotonic()
        rng = random.Random(2024)
        worst = 0.0
        for _ in range(10_000):
            n = rng.randint(1, 12)
            m = rng.randint(1, n)
            w = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)]
            E = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(m + 1)]
            while abs(E[m]) < 0.1:
                E[m] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            P = SymmetricMultiaffine(n, E, trim=False)
            worst = max(worst, theorem1_apolarity_residual(P, w))
        elapsed = time.monotonic() - start
        report(2, f"apolarity proof identity residual <= 1e-10 over 1e4 trials "
                  f"(worst {worst:.2e}, {elapsed:.1f}s)",
               worst <= 1e-10 and elapsed < 60.0)

    def test_03_extension_witness_existence(self):
        start = time.monotonic()
        convex = run_campaign(CampaignConfig(
            property="theorem1_convex", trials=6666, seed=303, n_min=2, n_max=12))
        exterior = run_campaign(CampaignConfig(
            property="theorem1_exterior", trials=3334, seed=303, n_min=2, n_max=12))
        elapsed = time.monotonic() - start
        ok = (convex.failed == exterior.failed == 0
              and convex.errored == exterior.errored == 0
              and not convex.notes and not exterior.notes
              and elapsed < 120.0)
        report(3, f"witness found on disks, half-planes, and disk exteriors "
                  f"over 1e4 trials ({elapsed:.1f}s)", ok)

    def test_04_derivative_count_bound(self):
        start = time.monotonic()
        rep = run_campaign(CampaignConfig(
            property="theorem2", trials=10_000, seed=404, n_min=3, n_max=15))
        elapsed = time.monotonic() - start
        assert elapsed < 120.0
        assert_clean(rep, 4, f"in-disk derivative-zero count meets the bound with "
                             f"mean residual <= 1e-12 over 1e4 trials ({elapsed:.1f}s)")

    def test_05_derivative_closed_form(self):
        rng = random.Random(505)
        worst = 0.0
        for n in range(2, 21):
            for k in range(1, n):
                for _ in range(10):
                    y = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                    worst = max(worst, kth_derivative_identity(n, k, y))
        report(5, f"k-th derivative closed form residual <= 1e-11 "
                  f"(worst {worst:.2e})", worst <= 1e-11)

    def test_06_grace_property(self):
        start = time.monotonic()
        rep = run_campaign(CampaignConfig(
            property="grace", trials=10_000, seed=606, n_min=2, n_max=10))
        elapsed = time.monotonic() - start
        assert_clean(rep, 6, f"witness root of b inside the region on 1e4 "
                             f"constructed apolar pairs ({elapsed:.1f}s)")

    def test_07_apolarity_algebra(self):
        rng = random.Random(707)
        worst = 0.0
        for _ in range(1000):
            n = rng.randint(1, 20)
            rand_poly = lambda: Polynomial(
                [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n + 1)]
            )
            a, a2, b = rand_poly(), rand_poly(), rand_poly()
            alpha = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))

            lin = apolarity_functional(alpha * a + a2, b, n) - (
                alpha * apolarity_functional(a, b, n) + apolarity_functional(a2, b, n)
            )
            swap = apolarity_functional(b, a, n) - (-1) ** n * apolarity_functional(a, b, n)
            point = apolarity_functional(from_roots([c] * n), b, n) - (-1) ** n * b(c)
            scale = 1 + abs(apolarity_functional(a, b, n)) + abs(b(c))
            worst = max(worst, max(abs(lin), abs(swap), abs(point)) / scale)
        report(7, f"bilinearity, transposition sign, and point evaluation to 1e-10 "
                  f"(worst {worst:.2e})", worst <= 1e-10)

    def test_08_root_finder_soundness(self):
        rng = random.Random(808)
        ok = True
        for _ in range(1000):
            deg = rng.randint(1, 20)
            cs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(deg + 1)]
            while abs(cs[-1]) < 0.1:
                cs[-1] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            p = Polynomial(cs)
            rs = find_roots(p)
            n = p.degree()
            s = sum(rs.roots)
            pr = 1 + 0j
            for r in rs.roots:
                pr *= r
            vs = -p.coeffs[n - 1] / p.coeffs[n]
            vp = (-1) ** n * p.coeffs[0] / p.coeffs[n]
            ok &= abs(s - vs) <= 1e-8 * (1 + abs(vs))
            ok &= abs(pr - vp) <= 1e-8 * (1 + abs(vp))

        # round trip on well-separated root sets
        for _ in range(1000):
            n = rng.randint(1, 12)
            pts = []
            while len(pts) < n:
                z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                if all(abs(z - q) >= 1e-2 for q in pts):
                    pts.append(z)
            found = list(find_roots(from_roots(pts)).roots)
            for w in pts:
                best = min(found, key=lambda r: abs(r - w))
                ok &= abs(best - w) <= 1e-7
                found.remove(best)
        report(8, "Vieta checks to 1e-8 and root round trip to 1e-7 over "
                  "1e3 random polynomials", ok)

    def test_09_gauss_lucas(self):
        rep = run_campaign(CampaignConfig(
            property="gauss_lucas", trials=1000, seed=909))
        assert_clean(rep, 9, "every critical point within 1e-7 of the root hull "
                             "on 1e3 random polynomials")

    def test_10_campaign_determinism(self):
        docs = []
        for jobs in (1, 3):
            for _ in range(2):
                rep = run_campaign(CampaignConfig(
                    property="theorem1_convex", trials=200, seed=1010, jobs=jobs))
                docs.append(jsonio.dumps(rep.to_json()))
        report(10, "byte-identical campaign reports on rerun and at any --jobs",
               len(set(docs)) == 1)
