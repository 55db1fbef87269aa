"""Deterministic randomized verification campaigns.

Each trial derives its own generator state from (campaign seed, trial
index) through a 64-bit mixer, so trials are independent, reproducible,
and safe to run in parallel; the report is assembled in trial-index
order and is byte-identical at any --jobs setting.
"""

from __future__ import annotations

import cmath
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import jsonio
from .apolarity import apolarity_functional, grace_witness, make_apolar
from .coincidence import SymmetricMultiaffine, coincidence_witness
from .derivative_bound import (
    Theorem2Instance,
    check_theorem2,
    gauss_lucas_check,
    kth_derivative_identity,
)
from .errors import (
    HypothesisViolated,
    InvalidConfig,
    InvalidInput,
    NonConvergence,
    PolygeomError,
    TheoremViolation,
)
from .poly import N_MAX, Polynomial, from_roots
from .regions import disk, exterior_disk, half_plane, smallest_enclosing_disk
from .rootfind import find_roots

PASS = "pass"
FAIL = "fail"
ERROR = "error"
HYPOTHESIS_VIOLATION = "hypothesis-violation"

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def trial_seed(seed: int, index: int) -> int:
    return _splitmix64(_splitmix64(seed & _MASK) ^ ((index + 1) * 0xD1B54A32D192ED03))


@dataclass(frozen=True)
class CampaignConfig:
    property: str
    trials: int
    seed: int = 0
    n_min: int = 2
    n_max: int = 12
    root_tol: float = 1e-12
    membership_tol: float = 1e-9
    witness_tol: float = 1e-6
    jobs: int = 1

    def validate(self) -> None:
        if self.property not in PROPERTIES:
            raise InvalidConfig(
                f"unknown property {self.property!r}; choose from {sorted(PROPERTIES)}"
            )
        if self.trials < 1:
            raise InvalidConfig("trials must be >= 1")
        if not 1 <= self.n_min <= self.n_max <= N_MAX:
            raise InvalidConfig(f"need 1 <= n_min <= n_max <= {N_MAX}")
        if self.root_tol <= 0:
            raise InvalidConfig("root_tol must be positive")

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "trials": self.trials,
            "seed": self.seed,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "root_tol": self.root_tol,
            "membership_tol": self.membership_tol,
            "witness_tol": self.witness_tol,
        }


@dataclass
class CampaignReport:
    config: CampaignConfig
    passed: int = 0
    failed: int = 0
    errored: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self) -> dict:
        # wall_time deliberately omitted: reports must be byte-identical
        # across reruns and parallelism levels
        return {
            "schema": jsonio.SCHEMA,
            "config": self.config.to_json(),
            "passed": self.passed,
            "failed": self.failed,
            "errored": self.errored,
            "failures": self.failures,
            "notes": self.notes,
        }


# ------------------------- instance generators -------------------------


def _unit_box(rng: random.Random) -> complex:
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def _point_in_disk(rng: random.Random, center: complex, radius: float) -> complex:
    return center + cmath.rect(radius * math.sqrt(rng.random()), rng.uniform(0, 2 * math.pi))


def _random_region_with_points(rng: random.Random, count: int):
    """A random disk or half-plane plus `count` points inside it."""
    if rng.random() < 0.5:
        center = 2.0 * _unit_box(rng)
        radius = rng.uniform(0.3, 2.0)
        region = disk(center, radius)
        pts = [_point_in_disk(rng, center, 0.9 * radius) for _ in range(count)]
    else:
        direction = cmath.rect(1.0, rng.uniform(0, 2 * math.pi))
        offset = rng.uniform(-2.0, 2.0)
        region = half_plane(direction, offset)
        pts = [
            direction * complex(offset - rng.uniform(0.05, 2.0), rng.uniform(-2.0, 2.0))
            for _ in range(count)
        ]
    return region, pts


def _gen_grace(rng: random.Random, cfg: CampaignConfig) -> dict:
    n = rng.randint(max(2, cfg.n_min), cfg.n_max)
    region, roots = _random_region_with_points(rng, n)
    a = from_roots(roots)
    b = make_apolar(a, n, seed=rng.getrandbits(32))
    while b.degree() != n:
        b = make_apolar(a, n, seed=rng.getrandbits(32))
    return {
        "property": "grace",
        "n": n,
        "a": jsonio.poly_to_json(a),
        "b": jsonio.poly_to_json(b),
        "region": jsonio.region_to_json(region),
    }


def _check_grace(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    a = jsonio.poly_from_json(inst["a"])
    b = jsonio.poly_from_json(inst["b"])
    region = jsonio.region_from_json(inst["region"])
    try:
        w = grace_witness(
            a, b, inst["n"], region,
            membership_tol=cfg.membership_tol, witness_tol=cfg.witness_tol,
        )
    except HypothesisViolated as e:
        return HYPOTHESIS_VIOLATION, str(e)
    except TheoremViolation as e:
        return FAIL, str(e)
    return PASS, f"witness {w}"


def _random_multiaffine(rng: random.Random, n: int, m: int) -> SymmetricMultiaffine:
    E = [_unit_box(rng) for _ in range(m + 1)]
    while abs(E[m]) < 0.1:
        E[m] = _unit_box(rng)
    return SymmetricMultiaffine(n, E, trim=False)


def _gen_walsh_classic(rng: random.Random, cfg: CampaignConfig) -> dict:
    n = rng.randint(max(2, cfg.n_min), cfg.n_max)
    P = _random_multiaffine(rng, n, n)
    w = [2.0 * _unit_box(rng) for _ in range(n)]
    sed = smallest_enclosing_disk(w)
    region = disk(sed.center, max(sed.radius, 1e-9))
    return {
        "property": "walsh_classic",
        "multiaffine": {"n": n, "E": jsonio.points_to_json(P.E)},
        "points": jsonio.points_to_json(w),
        "region": jsonio.region_to_json(region),
        "classic": True,
    }


def _gen_theorem1(rng: random.Random, cfg: CampaignConfig, exterior: bool) -> dict:
    n = rng.randint(max(2, cfg.n_min), cfg.n_max)
    m = rng.randint(1, n)
    P = _random_multiaffine(rng, n, m)
    w = [2.0 * _unit_box(rng) for _ in range(n)]
    droots = find_roots(from_roots(w).derivative(n - m)).roots if m < n else tuple(w)

    if exterior:
        while True:
            center = 4.0 * _unit_box(rng)
            d = min(abs(r - center) for r in droots)
            if d > 1e-6:
                break
        region = exterior_disk(center, d / 2.0)
    elif rng.random() < 0.5:
        sed = smallest_enclosing_disk(droots)
        region = disk(sed.center, sed.radius + 1e-9 * (1.0 + sed.radius))
    else:
        direction = cmath.rect(1.0, rng.uniform(0, 2 * math.pi))
        offset = max((z * direction.conjugate()).real for z in droots)
        region = half_plane(direction, offset + 1e-9 * (1.0 + abs(offset)))

    return {
        "property": "theorem1_exterior" if exterior else "theorem1_convex",
        "multiaffine": {"n": n, "E": jsonio.points_to_json(P.E)},
        "points": jsonio.points_to_json(w),
        "region": jsonio.region_to_json(region),
        "classic": False,
    }


def _check_coincidence(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    ma = inst["multiaffine"]
    P = SymmetricMultiaffine(ma["n"], jsonio.points_from_json(ma["E"]), trim=False)
    w = jsonio.points_from_json(inst["points"])
    region = jsonio.region_from_json(inst["region"])
    try:
        z = coincidence_witness(
            P, w, region,
            membership_tol=cfg.membership_tol,
            witness_tol=cfg.witness_tol,
            root_tol=cfg.root_tol,
            classic=bool(inst.get("classic", False)),
        )
    except HypothesisViolated as e:
        return HYPOTHESIS_VIOLATION, str(e)
    except TheoremViolation as e:
        return FAIL, str(e)
    return PASS, f"witness {z}"


def _gen_theorem2(rng: random.Random, cfg: CampaignConfig) -> dict:
    n = rng.randint(max(3, cfg.n_min), max(3, cfg.n_max))
    k = rng.randint(1, n - 1)
    radius = rng.uniform(0.1, 3.0)
    factor = rng.uniform(1.01, 2.0) if rng.random() < 0.5 else rng.uniform(2.0, 100.0)
    from .derivative_bound import generate_theorem2_instance

    inst = generate_theorem2_instance(
        n,
        seed=rng.getrandbits(32),
        radius=radius,
        outer_distance=radius * factor,
        center=2.0 * _unit_box(rng),
    )
    return {
        "property": "theorem2",
        "k": k,
        "inner_zeros": jsonio.points_to_json(inst.inner_zeros),
        "outer_zero": jsonio.complex_to_json(inst.outer_zero),
        "disk": jsonio.disk_to_json(inst.disk),
    }


def _check_theorem2(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    t2 = Theorem2Instance(
        tuple(jsonio.points_from_json(inst["inner_zeros"])),
        jsonio.complex_from_json(inst["outer_zero"]),
        jsonio.disk_from_json(inst["disk"]),
    )
    report = check_theorem2(t2, inst["k"], root_tol=cfg.root_tol)
    if not report.satisfied:
        return FAIL, (
            f"count {report.count_in_disk} < bound {report.bound} "
            f"(n={report.n}, k={report.k})"
        )
    if report.mean_residual > 1e-12:
        return FAIL, f"mean residual {report.mean_residual:.3e} above 1e-12"
    return PASS, f"count {report.count_in_disk} >= bound {report.bound}"


def _gen_apolarity_identity(rng: random.Random, cfg: CampaignConfig) -> dict:
    n = rng.randint(max(1, cfg.n_min), min(cfg.n_max, 20))
    deg_poly = lambda: [_unit_box(rng) for _ in range(n + 1)]
    return {
        "property": "apolarity_identity",
        "n": n,
        "a": jsonio.points_to_json(deg_poly()),
        "a2": jsonio.points_to_json(deg_poly()),
        "b": jsonio.points_to_json(deg_poly()),
        "alpha": jsonio.complex_to_json(_unit_box(rng)),
        "c": jsonio.complex_to_json(2.0 * _unit_box(rng)),
    }


def _check_apolarity_identity(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    n = inst["n"]
    a = Polynomial(jsonio.points_from_json(inst["a"]))
    a2 = Polynomial(jsonio.points_from_json(inst["a2"]))
    b = Polynomial(jsonio.points_from_json(inst["b"]))
    alpha = jsonio.complex_from_json(inst["alpha"])
    c = jsonio.complex_from_json(inst["c"])

    lin = apolarity_functional(alpha * a + a2, b, n) - (
        alpha * apolarity_functional(a, b, n) + apolarity_functional(a2, b, n)
    )
    swap = apolarity_functional(b, a, n) - (-1) ** n * apolarity_functional(a, b, n)
    point = apolarity_functional(from_roots([c] * n), b, n) - (-1) ** n * b(c)

    scale = 1.0 + abs(apolarity_functional(a, b, n)) + abs(b(c))
    worst = max(abs(lin), abs(swap), abs(point)) / scale
    if worst > 1e-10:
        return FAIL, f"identity residual {worst:.3e} above 1e-10"
    return PASS, f"residual {worst:.3e}"


def _gen_derivative_identity(rng: random.Random, cfg: CampaignConfig) -> dict:
    n = rng.randint(2, 20)
    return {
        "property": "derivative_identity",
        "n": n,
        "k": rng.randint(1, n - 1),
        "y": jsonio.complex_to_json(_unit_box(rng)),
    }


def _check_derivative_identity(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    res = kth_derivative_identity(inst["n"], inst["k"], jsonio.complex_from_json(inst["y"]))
    if res > 1e-11:
        return FAIL, f"closed-form residual {res:.3e} above 1e-11"
    return PASS, f"residual {res:.3e}"


def _gen_gauss_lucas(rng: random.Random, cfg: CampaignConfig) -> dict:
    deg = rng.randint(2, 15)
    coeffs = [_unit_box(rng) for _ in range(deg + 1)]
    while abs(coeffs[deg]) < 0.1:
        coeffs[deg] = _unit_box(rng)
    return {"property": "gauss_lucas", "poly": jsonio.poly_to_json(Polynomial(coeffs))}


def _check_gauss_lucas(inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    p = jsonio.poly_from_json(inst["poly"])
    if gauss_lucas_check(p, tol=1e-7, root_tol=cfg.root_tol):
        return PASS, "all critical points in the root hull"
    return FAIL, "critical point outside the root hull"


PROPERTIES = {
    "grace": (_gen_grace, _check_grace),
    "walsh_classic": (_gen_walsh_classic, _check_coincidence),
    "theorem1_convex": (
        lambda rng, cfg: _gen_theorem1(rng, cfg, exterior=False),
        _check_coincidence,
    ),
    "theorem1_exterior": (
        lambda rng, cfg: _gen_theorem1(rng, cfg, exterior=True),
        _check_coincidence,
    ),
    "theorem2": (_gen_theorem2, _check_theorem2),
    "apolarity_identity": (_gen_apolarity_identity, _check_apolarity_identity),
    "derivative_identity": (_gen_derivative_identity, _check_derivative_identity),
    "gauss_lucas": (_gen_gauss_lucas, _check_gauss_lucas),
}


def run_check(prop: str, inst: dict, cfg: CampaignConfig) -> tuple[str, str]:
    """One verification with a single relaxed-tolerance retry on
    root-finder non-convergence."""
    _, check = PROPERTIES[prop]
    try:
        return check(inst, cfg)
    except NonConvergence:
        try:
            relaxed = replace(cfg, root_tol=cfg.root_tol * 10.0)
            status, diag = check(inst, relaxed)
            return status, diag + " (after tol relaxation x10)"
        except NonConvergence as e:
            return ERROR, f"root finding did not converge: {e}"
    except PolygeomError as e:
        return ERROR, f"{type(e).__name__}: {e}"


def _run_trial(cfg: CampaignConfig, index: int) -> dict:
    ts = trial_seed(cfg.seed, index)
    rng = random.Random(ts)
    gen, _ = PROPERTIES[cfg.property]
    try:
        inst = gen(rng, cfg)
    except PolygeomError as e:
        return {"trial": index, "trial_seed": ts, "status": ERROR,
                "instance": None, "diagnostic": f"generation failed: {e}"}
    status, diag = run_check(cfg.property, inst, cfg)
    return {"trial": index, "trial_seed": ts, "status": status,
            "instance": inst, "diagnostic": diag}


def run_campaign(config: CampaignConfig) -> CampaignReport:
    config.validate()
    start = time.monotonic()

    indices = range(config.trials)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_trial, [config] * config.trials, indices,
                                    chunksize=max(1, config.trials // (8 * config.jobs))))
    else:
        results = [_run_trial(config, i) for i in indices]

    report = CampaignReport(config=config)
    for r in results:
        if r["status"] == PASS:
            report.passed += 1
        elif r["status"] == FAIL:
            report.failed += 1
            report.failures.append(
                {"trial_seed": r["trial_seed"], "instance": r["instance"],
                 "diagnostic": r["diagnostic"]}
            )
        elif r["status"] == ERROR:
            report.errored += 1
            report.failures.append(
                {"trial_seed": r["trial_seed"], "instance": r["instance"],
                 "diagnostic": r["diagnostic"]}
            )
        else:
            # hypothesis violations are recorded, not counted as failures
            report.passed += 1
            report.notes.append(
                {"trial_seed": r["trial_seed"], "status": r["status"],
                 "diagnostic": r["diagnostic"]}
            )
    report.wall_time = time.monotonic() - start
    return report


def replay(inst: dict, prop: str | None = None,
           cfg: CampaignConfig | None = None) -> dict:
    """Re-run exactly one recorded trial instance."""
    prop = prop or inst.get("property")
    if prop not in PROPERTIES:
        raise InvalidInput(f"unknown or missing property {prop!r}")
    if cfg is None:
        cfg = CampaignConfig(property=prop, trials=1)
    status, diag = run_check(prop, inst, cfg)
    return {"schema": jsonio.SCHEMA, "property": prop, "status": status,
            "diagnostic": diag}
