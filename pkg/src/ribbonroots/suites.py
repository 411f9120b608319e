"""Verification sweeps driven by the ``verify`` subcommand and the acceptance tests.

Each suite returns a :class:`SuiteResult`. Work items are generated up front
from a seeded RNG, optionally mapped over a process pool, and aggregated in
input order, so reports do not depend on ``parallelism``.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .descent import (
    brute_force_descent_count,
    check_coefficient_monotonicity,
    check_refined_corollaries,
    check_shifted_positivity,
    descent_data,
    excitation_factor,
    integer_root_structure,
    lemma33_coefficients,
)
from .errors import DomainError
from .excited import brute_force_count, naruse_count
from .roots import (
    check_excitation_bounds,
    check_k7_interior,
    check_lemma_a1,
    check_lemma_a2,
    check_main_bounds,
    check_perturbation_lemma,
    check_root_bridge,
    random_perturbed,
    sharp_instance,
)
from .shapes import Cell, DescentSet, Partition, SkewShape, ribbon_from_descent_set
from .sqci import (
    SqciDiagram,
    check_slice_and_push,
    check_slice_without_push,
    check_square_relation,
    circle_translates,
)
from .verdict import _jsonable

DEFAULT_SEED = 20240617
SEED_ENV = "RIBBONROOTS_SEED"


@dataclass(frozen=True)
class Budget:
    syt: int = 20
    permutations: int = 10

    @classmethod
    def parse(cls, text: str | None) -> Budget:
        """``"syt=18,permutations=9"``; a bare integer sets the SYT cap."""
        if not text:
            return cls()
        fields = {}
        for piece in text.split(","):
            key, sep, value = piece.partition("=")
            try:
                if not sep:
                    fields["syt"] = int(key)
                elif key.strip() in ("syt", "permutations"):
                    fields[key.strip()] = int(value)
                else:
                    raise DomainError(f"unknown budget key {key!r}")
            except ValueError as exc:
                raise DomainError(f"malformed budget {text!r}") from exc
        return cls(**fields)


@dataclass(frozen=True)
class SweepConfig:
    max_m: int = 7
    seed: int = DEFAULT_SEED
    budget: Budget = Budget()
    parallelism: int = 1

    def __post_init__(self):
        if self.max_m < 1:
            raise DomainError(f"max_m must be at least 1, got {self.max_m}")
        if self.parallelism < 1:
            raise DomainError(f"parallelism must be at least 1, got {self.parallelism}")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError(f"seed must fit in 64 bits, got {self.seed}")
        if self.budget.permutations > 10:
            raise DomainError("the permutation oracle is capped at n = 10")


def resolve_seed(cli_seed: int | None) -> int:
    env = os.environ.get(SEED_ENV)
    if env:
        return int(env)
    return DEFAULT_SEED if cli_seed is None else cli_seed


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name, "passed": self.passed, "checked": self.checked,
            "failures": _jsonable(self.failures[:20]), "n_failures": len(self.failures),
            "details": _jsonable(self.details), "elapsed_s": round(self.elapsed, 3),
        }


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def descent_sets(max_m: int, min_m: int = 1) -> list[DescentSet]:
    """All nonempty subsets of ``{1..max_m}``, ordered by maximum then lexicographically."""
    out = []
    for m in range(min_m, max_m + 1):
        for r in range(m):
            for rest in combinations(range(1, m), r):
                out.append(DescentSet(rest + (m,)))
    return out


def partitions_up_to(n: int) -> list[Partition]:
    out = []

    def rec(prefix, remaining, cap):
        out.append(Partition(prefix))
        for p in range(min(remaining, cap), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], n, n)
    return out


def random_partition(rng: random.Random, max_parts: int, max_part: int) -> Partition:
    parts = sorted((rng.randint(0, max_part) for _ in range(max_parts)), reverse=True)
    return Partition(parts)


def random_subpartition(rng: random.Random, lam: Partition) -> Partition:
    mu = []
    cap = None
    for part in lam:
        hi = part if cap is None else min(part, cap)
        x = rng.randint(0, hi)
        mu.append(x)
        cap = x
    return Partition(mu)


def _timed(fn):
    def wrapper(config: SweepConfig, **kw) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(config, **kw)
        res.elapsed = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# --- workers (top level so a process pool can pickle them) ------------------

def _monotonicity_item(I: DescentSet):
    shape = ribbon_from_descent_set(I)
    nf = excitation_factor(shape)
    mono = check_coefficient_monotonicity(nf)
    cors = check_refined_corollaries(shape)
    applied = len(cors.details.get("applied", []))
    return str(I), mono.holds, cors.holds, applied


def _roots_item(I: DescentSet):
    main = check_main_bounds(I)
    exc = check_excitation_bounds(ribbon_from_descent_set(I))
    bridge = check_root_bridge(I)
    return (str(I), main.holds, exc.holds, bridge.holds,
            main.details["checks"]["modulus"]["min_margin"],
            main.details["checks"]["real-part"]["min_margin"])


def _sap_item(lam: Partition):
    lam = Partition(lam)
    checked = 0
    bad = []
    for mu in partitions_up_to(lam.size):
        if not mu:
            continue
        for circles in circle_translates(mu, lam):
            d = SqciDiagram(circles, (), lam)
            for k in range(lam.part(1) + 1):
                v = check_slice_and_push(d, k)
                checked += 1
                if not v.holds:
                    bad.append({"lambda": list(lam), "circles": [str(c) for c in circles],
                                "k": k, "lhs": v.lhs, "rhs": v.rhs})
    return checked, bad


# --- suites ------------------------------------------------------------------

@_timed
def suite_monotonicity(config: SweepConfig) -> SuiteResult:
    """Weakly decreasing ``C_d/d!`` and the refined chains, for every ``I`` up to ``max_m``."""
    rows = _map(_monotonicity_item, descent_sets(config.max_m), config.parallelism)
    fails = [r[0] for r in rows if not (r[1] and r[2])]
    applied = sum(r[3] for r in rows)
    return SuiteResult("monotonicity", not fails, len(rows), fails, {"refined_chains": applied})


@_timed
def suite_sap(config: SweepConfig, max_size: int = 10, random_instances: int = 1000) -> SuiteResult:
    """Slice and Push: exhaustive with no squares, then seeded random instances with squares."""
    lams = [lam for lam in partitions_up_to(max_size) if lam]
    checked = 0
    fails = []
    for n, bad in _map(_sap_item, lams, config.parallelism):
        checked += n
        fails.extend(bad)
    rng = random.Random(config.seed)
    done = 0
    while done < random_instances:
        lam = random_partition(rng, 5, 5)
        mu = random_partition(rng, 3, 3)
        options = circle_translates(mu, lam) if mu else []
        if not options:
            continue
        circles = rng.choice(options)
        cells = lam.cells()
        squares = tuple(rng.choice(cells) for _ in range(rng.randint(1, 2)))
        d = SqciDiagram(circles, squares, lam)
        k = rng.randint(0, lam.part(1))
        v = check_slice_and_push(d, k)
        done += 1
        if not v.holds:
            fails.append({"lambda": list(lam), "circles": [str(c) for c in circles],
                          "squares": [str(c) for c in squares], "k": k, "lhs": v.lhs, "rhs": v.rhs})
    return SuiteResult("sap", not fails, checked + done, fails,
                       {"exhaustive": checked, "random": done, "max_size": max_size})


def sap_single(lam, circles, squares=(), k: int = 1) -> SuiteResult:
    d = SqciDiagram(tuple(circles), tuple(squares), Partition(lam))
    v = check_slice_and_push(d, k)
    return SuiteResult("sap", v.holds, 1, [] if v.holds else [{"lhs": v.lhs, "rhs": v.rhs}],
                       {"lhs": v.lhs, "rhs": v.rhs, "k": k})


NO_PUSH_WITNESS = (Partition((4, 3)), (Cell(1, 1), Cell(1, 2)), 1)


@_timed
def suite_no_push_witness(config: SweepConfig) -> SuiteResult:
    """The unpushed variant must fail on the known witness (27 < 28)."""
    lam, circles, k = NO_PUSH_WITNESS
    d = SqciDiagram(circles, (), lam)
    bare = check_slice_without_push(d, k)
    pushed = check_slice_and_push(d, k)
    ok = (not bare.holds) and pushed.holds
    return SuiteResult("no-push-witness", ok, 1, [] if ok else ["witness did not behave as expected"],
                       {"lhs": bare.lhs, "rhs_unpushed": bare.rhs, "rhs_pushed": pushed.rhs,
                        "unpushed_holds": bare.holds, "expected_failure_observed": not bare.holds})


@_timed
def suite_square_relation(config: SweepConfig, instances: int = 1000) -> SuiteResult:
    rng = random.Random(config.seed + 1)
    fails = []
    for _ in range(instances):
        lam = random_partition(rng, 5, 6)
        while not lam:
            lam = random_partition(rng, 5, 6)
        cells = lam.cells()
        a = rng.choice(cells)
        b = rng.choice(cells)
        i, i2 = sorted((a.row, b.row))
        j, j2 = sorted((a.col, b.col))
        if not lam.has_cell(Cell(i2, j2)):
            i2, j2 = i, j
        corners = [Cell(i, j), Cell(i2, j), Cell(i, j2), Cell(i2, j2)]
        F = [rng.choice(cells) for _ in range(rng.randint(0, 3))]
        if not check_square_relation(F, lam, corners):
            fails.append({"lambda": list(lam), "corners": [str(c) for c in corners]})
    return SuiteResult("square-relation", not fails, instances, fails)


@_timed
def suite_roots(config: SweepConfig) -> SuiteResult:
    """Main bounds, excitation-factor bounds and the root bridge, jointly per ``I``."""
    rows = _map(_roots_item, descent_sets(config.max_m), config.parallelism)
    fails = [r[0] for r in rows if not (r[1] and r[2] and r[3])]
    # the excitation bounds imply the main bounds; a pass of the former with a
    # failure of the latter would be a contradiction worth reporting on its own
    implication = all(r[1] for r in rows if r[2])
    return SuiteResult("roots", not fails and implication, len(rows), fails, {
        "min_modulus_margin": min(r[4] for r in rows),
        "min_real_margin": min(r[5] for r in rows),
        "implication_ok": implication,
    })


@_timed
def suite_factorial_quotient(config: SweepConfig, max_k: int = 12, samples: int = 4096) -> SuiteResult:
    fails = []
    flagged = {}
    for k in range(1, max_k + 1):
        a1 = check_lemma_a1(k)
        a2 = check_lemma_a2(k, samples)
        if not a1.holds:
            fails.append({"lemma": "a1", "k": k})
        if not a2.holds:
            fails.append({"lemma": "a2", "k": k, "witness": a2.details["witness"]})
        if a1.details.get("strict_flag"):
            flagged[k] = a1.details["strict_flag"]
    k7 = check_k7_interior(samples)
    if not k7.holds:
        fails.append({"lemma": "k7", **k7.details})
    return SuiteResult("factorial-quotient", not fails, 2 * max_k + 1, fails,
                       {"strict_flagged": flagged, "k7": k7.details})


@_timed
def suite_perturbation(config: SweepConfig, instances: int = 500) -> SuiteResult:
    rng = random.Random(config.seed + 2)
    items = [random_perturbed(rng) for _ in range(instances)]
    verdicts = _map(check_perturbation_lemma, items, config.parallelism)
    fails = [{"a": v.details["a"], "g": v.details["g"]} for v in verdicts if not v.holds]
    sharp = {}
    for k in (3, 5, 7):
        v = check_perturbation_lemma(sharp_instance(k))
        sharp[k] = v.details["sharp_vanishes"]
        if not v.holds:
            fails.append({"sharp_k": k})
    return SuiteResult("perturbation", not fails, instances + 3, fails, {"sharp_vanishes": sharp})


def _random_skew(rng: random.Random, max_cells: int) -> SkewShape:
    while True:
        lam = random_partition(rng, 6, 6)
        if not lam:
            continue
        mu = random_subpartition(rng, lam)
        if 1 <= lam.size - mu.size <= max_cells:
            return SkewShape(lam, mu)


@_timed
def suite_oracles(config: SweepConfig, instances: int = 200, max_cells: int = 12,
                  ribbon_max_m: int = 8, sign_max_m: int = 6) -> SuiteResult:
    """Naruse vs direct counting, the two coefficient formulas, and the sign of ``d_I(0)``."""
    rng = random.Random(config.seed + 3)
    fails = []
    for _ in range(instances):
        shape = _random_skew(rng, min(max_cells, config.budget.syt))
        a, b = naruse_count(shape), brute_force_count(shape, config.budget.syt)
        if a != b:
            fails.append({"shape": str(shape), "naruse": a, "brute": b})
    ribbons = descent_sets(ribbon_max_m)
    for I in ribbons:
        shape = ribbon_from_descent_set(I)
        if list(excitation_factor(shape).coeffs) != lemma33_coefficients(shape):
            fails.append({"coefficients": str(I)})
    signs = descent_sets(sign_max_m)
    for I in signs:
        if descent_data(I).polynomial(0) != (-1) ** len(I):
            fails.append({"d_at_0": str(I)})
    return SuiteResult("oracles", not fails, instances + len(ribbons) + len(signs), fails)


@_timed
def suite_exactness(config: SweepConfig) -> SuiteResult:
    """``d_I(n)`` against a permutation scan, plus positivity and integer roots."""
    cap = config.budget.permutations
    fails = []
    checked = 0
    for I in descent_sets(min(config.max_m, cap - 1)):
        d = descent_data(I).polynomial
        for n in range(I.m + 1, min(I.m + 3, cap) + 1):
            checked += 1
            if d(n) != brute_force_descent_count(I, n, cap):
                fails.append({"I": str(I), "n": n})
        if not check_shifted_positivity(I):
            fails.append({"positivity": str(I)})
        if not integer_root_structure(I):
            fails.append({"integer_roots": str(I)})
    return SuiteResult("exactness", not fails, checked, fails)


SUITES = {
    "monotonicity": suite_monotonicity,
    "sap": suite_sap,
    "no-push-witness": suite_no_push_witness,
    "square-relation": suite_square_relation,
    "roots": suite_roots,
    "factorial-quotient": suite_factorial_quotient,
    "perturbation": suite_perturbation,
    "oracles": suite_oracles,
    "exactness": suite_exactness,
}


def run_suites(names: list[str], config: SweepConfig) -> list[SuiteResult]:
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[n](config) for n in names]
