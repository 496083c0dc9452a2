"""Exhaustive verification suites over small parameter sweeps.

Each suite pairs an instance generator with a checker. The checker yields
``(input, expected, actual)`` triples, every one of which counts as an
instance; a triple with ``expected != actual`` is a failure. Instances are
independent, so a sweep can be split across worker processes.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from ..algebra.polynomial import Polynomial
from ..algebra.tableaux import diagram_of_tableau, enumerate_ssyt, rsk_insert
from ..config import DEFAULT_SEED, DEFAULT_WORKERS
from ..core.composition import WeakComposition
from ..core.diagram import Cell, key_diagram
from ..core.matching import thread_weight
from ..errors import KeyPieriError, UnsupportedCase
from ..insertion import bottom_insert, bottom_remove, rectify, top_insert, top_remove
from ..pieri import (
    horizontal_strip_expansion,
    nonneg_pieri,
    pieri_case,
    pieri_signed_expansion,
    satisfies_vex2,
)
from ..space import enumerate_kd, enumerate_target_space, in_target_space, kd_membership, key_polynomial
from ..space.kohnert_space import lswap_down_set, lswap_leq
from ..stratify import added_column, stratum_inverse, stratum_map, stratum_map_m
from .report import VerificationReport

logger = logging.getLogger("keypieri.verify")

DEFAULT_PARAMS = {
    "n_max": 3,
    "size_max": 4,
    "k_max": 3,
    "m_max": 1,
    "part_max": 3,
    "sample": None,
}

Triple = tuple[Any, Any, Any]


def weak_compositions(n: int, size_max: int, part_max: int | None = None) -> Iterator[WeakComposition]:
    """Weak compositions with exactly ``n`` parts and total at most ``size_max``."""
    top = size_max if part_max is None else min(size_max, part_max)
    for parts in itertools.product(range(top + 1), repeat=n):
        if sum(parts) <= size_max:
            yield WeakComposition(parts)


def _compositions(params: dict, use_part_max: bool = False) -> list[WeakComposition]:
    part_max = params["part_max"] if use_part_max else None
    size_max = params["size_max"] if not use_part_max else params["n_max"] * params["part_max"]
    return [a for n in range(1, params["n_max"] + 1) for a in weak_compositions(n, size_max, part_max)]


def _weights(poly: Polynomial) -> list:
    return [[list(exp), coeff] for exp, coeff in sorted(poly.terms.items())]


# --- bijection-count ---

def _bijection_instances(params: dict) -> list:
    return [
        (a, k, m)
        for a in _compositions(params)
        for k in range(1, min(params["k_max"], len(a)) + 1)
        for m in range(1, params["m_max"] + 1)
    ]


def _bijection_check(instance, params: dict) -> Iterator[Triple]:
    a, k, m = instance
    n = len(a)
    product = key_polynomial(a) * Polynomial.complete_homogeneous(m, k, n)
    counts: dict[tuple[int, ...], int] = {}
    for diagram in enumerate_target_space(a, k, m).diagrams:
        exp = diagram.row_weight(n).parts
        counts[exp] = counts.get(exp, 0) + 1
    yield [a.to_json(), k, m], _weights(product), _weights(Polynomial(n, counts))


# --- insertion-bijection ---

def _insertion_instances(params: dict) -> list:
    return _compositions(params)


def _insertion_check(a: WeakComposition, params: dict) -> Iterator[Triple]:
    members = enumerate_kd(a).diagrams

    bottom = {}
    for diagram in members:
        image = bottom_insert(diagram)
        bottom[image] = diagram
        yield ["bottom-remove", a.to_json(), diagram.to_json()], diagram.to_json(), bottom_remove(image, a).to_json()
    target = set(enumerate_target_space(a, 1, 1).diagrams)
    yield ["bottom-image", a.to_json()], len(members), len(bottom)
    yield ["bottom-onto", a.to_json()], True, set(bottom) == target

    # top insertion at every bound k from l(a) up to the ambient row count
    for k in range(max(a.length, 1), len(a) + 1):
        top = {}
        for diagram in members:
            for j in range(1, k + 1):
                image = top_insert(diagram, j)
                top[image] = (diagram, j)
                base, row = top_remove(image, a)
                yield (
                    ["top-remove", a.to_json(), k, diagram.to_json(), j],
                    [diagram.to_json(), j],
                    [base.to_json(), row],
                )
        target = set(enumerate_target_space(a, k, 1).diagrams)
        yield ["top-image", a.to_json(), k], len(members) * k, len(top)
        yield ["top-onto", a.to_json(), k], True, set(top) == target


# --- stratum-roundtrip ---

def _stratum_instances(params: dict) -> list:
    return [
        (a, k, m)
        for a in _compositions(params)
        for k in range(2, min(params["k_max"], len(a)) + 1)
        for m in range(1, min(params["m_max"], 2) + 1)
    ]


def _stratum_check(instance, params: dict) -> Iterator[Triple]:
    a, k, m = instance
    lower = set(enumerate_target_space(a, k - 1, m).diagrams)
    stratum = [u for u in enumerate_target_space(a, k, m).diagrams if u not in lower]
    images = {}
    for u in stratum:
        label = [a.to_json(), k, m, u.to_json()]
        if m == 1:
            v = stratum_map(u, a, k)
            yield label + ["member"], True, kd_membership(v, a)
            yield label + ["inverse"], u.to_json(), stratum_inverse(v, a, k, added_column(u, a)).to_json()
        else:
            v = stratum_map_m(u, a, k, m)
            yield label + ["member"], True, in_target_space(v, a, k, m - 1)
        expected_weight = u.row_weight(len(a)).minus_unit(k)
        yield label + ["weight"], expected_weight.to_json(), v.row_weight(len(a)).to_json()
        images.setdefault(v, []).append(u)
    collisions = sorted(len(us) for us in images.values() if len(us) > 1)
    yield [a.to_json(), k, m, "injective"], [], collisions


# --- monkey-identity / oracle-consistency ---

def _pieri_instances(params: dict) -> list:
    return [(a, k) for a in _compositions(params) for k in range(1, min(params["k_max"], len(a)) + 1)]


def _monkey_check(instance, params: dict) -> Iterator[Triple]:
    a, k = instance
    n = len(a)
    lhs = key_polynomial(a) * Polynomial.complete_homogeneous(1, k, n)
    rhs = pieri_signed_expansion(a, k).evaluate(n)
    yield [a.to_json(), k], _weights(lhs), _weights(rhs.embed(n))


def _oracle_check(instance, params: dict) -> Iterator[Triple]:
    a, k = instance
    yield [a.to_json(), k], pieri_signed_expansion(a, k).to_json(), horizontal_strip_expansion(a, k, 1).to_json()


# --- rsk-rect ---

def _rsk_instances(params: dict) -> list:
    side = params["part_max"]
    shapes = [
        tuple(p for p in parts if p)
        for parts in itertools.product(range(side, -1, -1), repeat=side)
        if list(parts) == sorted(parts, reverse=True)
    ]
    return [(shape, n) for n in range(1, params["n_max"] + 1) for shape in shapes if len(shape) <= n]


def _rsk_check(instance, params: dict) -> Iterator[Triple]:
    shape, n = instance
    width = shape[0] if shape else 0
    for tableau in enumerate_ssyt(shape, n):
        start = diagram_of_tableau(tableau, n)
        for j in range(1, n + 1):
            expected = diagram_of_tableau(rsk_insert(tableau, j), n)
            actual = rectify(start.add(Cell(width + 1, n + 1 - j))).result
            yield [tableau.to_json(), n, j], expected.to_json(), actual.to_json()


# --- vexillary-sharpness ---

def _vex_instances(params: dict) -> list:
    return [(a, m) for a in _compositions(params, use_part_max=True) for m in range(1, params["m_max"] + 1)]


def _vex_check(instance, params: dict) -> Iterator[Triple]:
    a, m = instance
    n = len(a)
    expansions = {k: horizontal_strip_expansion(a, k, m) for k in range(1, n + 1)}
    nonnegative = all(e.is_nonnegative() for e in expansions.values())
    yield [a.to_json(), m, "sharp"], satisfies_vex2(a), nonnegative
    for k, expansion in expansions.items():
        try:
            pieri_case(a, k)
        except UnsupportedCase:
            continue
        yield [a.to_json(), k, m, "nonneg"], expansion.to_json(), nonneg_pieri(a, k, m).to_json()


# --- lswap-consistency ---

def _lswap_instances(params: dict) -> list:
    return _compositions(params)


def _lswap_check(a: WeakComposition, params: dict) -> Iterator[Triple]:
    members = enumerate_kd(a)
    rearrangements = {WeakComposition(p) for p in itertools.permutations(a.parts)}
    by_keys = sorted(b.to_json() for b in rearrangements if key_diagram(b) in members)
    yield [a.to_json(), "down-set"], by_keys, sorted(b.to_json() for b in lswap_down_set(a))
    for diagram in members.diagrams:
        theta = thread_weight(diagram, len(a))
        yield [a.to_json(), diagram.to_json(), "theta"], True, lswap_leq(theta, a)


@dataclass(frozen=True)
class Suite:
    name: str
    instances: Callable[[dict], list]
    check: Callable[[Any, dict], Iterable[Triple]]
    description: str = ""


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("bijection-count", _bijection_instances, _bijection_check,
              "per-weight counts of KD(a) x KD(m e_k) against the target space"),
        Suite("insertion-bijection", _insertion_instances, _insertion_check,
              "bottom and top insertion are bijections with working inverses"),
        Suite("stratum-roundtrip", _stratum_instances, _stratum_check,
              "stratum maps land in the right space, drop e_k, are injective and invert"),
        Suite("monkey-identity", _pieri_instances, _monkey_check,
              "signed Pieri formula equals kappa_a * (x_1 + ... + x_k)"),
        Suite("oracle-consistency", _pieri_instances, _oracle_check,
              "signed Pieri formula equals the greedy key expansion"),
        Suite("rsk-rect", _rsk_instances, _rsk_check,
              "RSK insertion equals rectification on tableau diagrams"),
        Suite("vexillary-sharpness", _vex_instances, _vex_check,
              "strip expansions are nonnegative for every k exactly for vex(2) inputs"),
        Suite("lswap-consistency", _lswap_instances, _lswap_check,
              "left swap down-sets agree with key diagram membership"),
    ]
}


def _check_chunk(name: str, params: dict, chunk: list) -> VerificationReport:
    suite = SUITES[name]
    report = VerificationReport(name, params)
    for instance in chunk:
        try:
            for input, expected, actual in suite.check(instance, params):
                report.record(input, expected, actual)
        except (KeyPieriError, AssertionError) as e:
            report.record(repr(instance), "no error", f"{type(e).__name__}: {e}")
    return report


def run_suite(name: str, params: dict | None = None, seed: int | None = None,
              workers: int | None = None) -> VerificationReport:
    """Run suite ``name`` over the sweep described by ``params``.

    ``params`` may set ``n_max``, ``size_max``, ``k_max``, ``m_max``,
    ``part_max`` and ``sample``; with ``sample`` only that many instances,
    drawn with ``seed``, are checked.

    Raises:
        KeyError: if there is no suite called ``name``.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    params = {**DEFAULT_PARAMS, **(params or {})}
    seed = DEFAULT_SEED if seed is None else seed
    workers = max(1, DEFAULT_WORKERS if workers is None else workers)

    instances = SUITES[name].instances(params)
    if params.get("sample") and params["sample"] < len(instances):
        instances = random.Random(seed).sample(instances, params["sample"])
    logger.info("suite %s: %d instances, %d workers", name, len(instances), workers)

    started = time.perf_counter()
    report = VerificationReport(name, {**params, "seed": seed})
    if workers == 1 or len(instances) < 2:
        report.merge(_check_chunk(name, params, instances))
    else:
        chunks = [instances[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_check_chunk, [name] * workers, [params] * workers, chunks):
                report.merge(part)
    report.duration_seconds = time.perf_counter() - started
    logger.info("suite %s finished: %d checks, %d failures", name, report.instances, len(report.failures))
    return report
