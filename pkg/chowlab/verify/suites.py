"""
Verification suites. Each suite runs a battery of exact checks up to a size
bound and collects one ``CheckResult`` per check into a ``Report``.

- ``bijection``: Lehmer coding, ``psi``/``phi``, the ``⊲`` order and the
  Eulerian identity.
- ``rewriting``: the ``g_map`` case split, ``D^k_n`` by both constructions,
  the ascent floor and the preimage table.
- ``oracle``: three-way Hilbert series agreement, relations in the oracle
  ring, soundness of ``g_map`` against the ring, and the principal ideals.
- ``corollary``: uniform Chow polynomials from ``D^k_n`` against the oracle.
- ``interlacing``: real-rootedness and the interlacing experiments.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from typing import Any, Callable, Dict, List, Optional

from chowlab.chow.boolean import enumerate_normal_monomials, hilbert_boolean, is_normal, phi, psi, triangle_less
from chowlab.chow.dsets import (
    chow_uniform_via_dsets,
    dset_depth,
    dset_recursive,
    g_images,
    g_power_tower,
    uniform_chow_by_corank,
)
from chowlab.chow.rewrite import ZERO, RewriteCase, g_map, rewrite_trace
from chowlab.core.enumerate import (
    enumerate_derangement_seqs,
    enumerate_inversion_sequences,
    enumerate_permutations,
    inversion_prefixes,
    permutation_prefixes,
)
from chowlab.core.errors import InvalidObjectError, InvariantViolation, ResourceGuardError
from chowlab.core.ground import GroundSet, InversionSequence
from chowlab.core.statistics import (
    ascent_count,
    descent_count,
    is_fixed_point_free,
    lehmer_code,
    lehmer_inverse,
)
from chowlab.oracle.chains import fy_chain_count
from chowlab.oracle.lattice import boolean_lattice, uniform_lattice
from chowlab.oracle.ring import ChowRing, Reduction
from chowlab.polyalg.families import derangement_number, derangement_poly, eulerian, eulerian_by_ascents
from chowlab.polyalg.polynomial import IntPolynomial, to_text
from chowlab.polyalg.properties import is_gamma_positive, is_log_concave, is_palindromic, is_unimodal
from chowlab.polyalg.roots import is_real_rooted
from chowlab.verify.config import ChowlabSettings, get_settings
from chowlab.verify.experiments import run_interlace
from chowlab.verify.jobs import WorkerPool
from chowlab.verify.logging import create_logger, ring_buffer
from chowlab.verify.models import CheckResult, CheckStatus, Report

SUITES = ("bijection", "rewriting", "oracle", "corollary", "interlacing")

# Sizes above which the quadratic checks are skipped.
_ORDER_MAX_N = 7
_RING_RELATIONS_MAX_N = 4
_REAL_ROOTED_MAX_N = 9


def _expected_case(e: tuple[int, ...]) -> RewriteCase:
    if len(e) == 1:
        return RewriteCase.BASE
    if e[-1] == 0:
        return RewriteCase.LAST_ZERO
    if all(e[1:]):
        return RewriteCase.NO_ZERO
    return RewriteCase.INNER_ZERO


def _bijection_block(job: tuple[int, tuple[int, ...]]) -> Dict[str, Any]:
    """Permutation checks over one value prefix; runs in a worker process."""
    n, prefix = job
    g = GroundSet.canonical(n)
    failures: Dict[str, str] = {}
    descents: Counter[int] = Counter()
    count = fixed_point_free = 0
    for p in enumerate_permutations(g, prefix):
        count += 1
        des = descent_count(p)
        descents[des] += 1
        fixed_point_free += is_fixed_point_free(p)
        e = lehmer_code(p)
        if lehmer_inverse(e, g) != p:
            failures.setdefault("lehmer_round_trip", str(p))
        if ascent_count(e) != des:
            failures.setdefault("descent_ascent_transport", str(p))
        m = psi(p)
        if m.degree != des or not is_normal(m.parts):
            failures.setdefault("psi_normal_degree", str(p))
        if phi(m) != p:
            failures.setdefault("phi_inverts_psi", str(p))
        if n <= _ORDER_MAX_N:
            parts = m.parts
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    if not triangle_less(parts[i], parts[j]) or triangle_less(parts[j], parts[i]):
                        failures.setdefault("triangle_order_on_parts", m.text())
    return {"count": count, "fixed_point_free": fixed_point_free, "descents": dict(descents), "failures": failures}


def _rewriting_block(job: tuple[int, tuple[int, ...]]) -> Dict[str, Any]:
    """``g_map`` case and degree checks over one inversion-sequence prefix."""
    n, prefix = job
    failures: Dict[str, str] = {}
    cases: Counter[str] = Counter()
    zeros = 0
    for e in enumerate_inversion_sequences(n, prefix):
        result, steps = rewrite_trace(e)
        cases[steps[0].case.value] += 1
        if any(step.case is not _expected_case(step.sequence) for step in steps):
            failures.setdefault("case_partition", str(e))
        if result is ZERO:
            zeros += 1
        elif len(result) != n or ascent_count(result) != ascent_count(e) + 1:
            failures.setdefault("degree_raise", f"{e} -> {result}")
    return {"cases": dict(cases), "zeros": zeros, "failures": failures}


def _merge_blocks(blocks: List[Dict[str, Any]]) -> Dict[str, Any]:
    """Associative merge: sums counters and keeps the first failure per check."""
    merged: Dict[str, Any] = {"failures": {}}
    for block in blocks:
        for key, value in block.items():
            if key == "failures":
                for name, example in value.items():
                    merged["failures"].setdefault(name, example)
            elif isinstance(value, dict):
                bucket = merged.setdefault(key, Counter())
                bucket.update(value)
            else:
                merged[key] = merged.get(key, 0) + value
    return merged


class SuiteRunner:
    """
    Runs verification suites and records their checks.

    Args:
        settings: Budgets and guards; the cached settings when omitted.
        threads: Worker processes; ``settings.threads`` when omitted.
        allow_big: Lifts the hard size guards.
        logger: Logger for check events; a ring-buffered
            ``chowlab.verify.checks`` logger when omitted.
    """

    def __init__(
        self,
        settings: Optional[ChowlabSettings] = None,
        threads: Optional[int] = None,
        allow_big: bool = False,
        logger: Optional[logging.Logger] = None,
    ):
        self.settings = settings or get_settings()
        self.threads = threads or self.settings.threads
        self.allow_big = allow_big
        self.logger = logger or create_logger("chowlab.verify.checks", self.settings.log_ring_size)
        self._checks: List[CheckResult] = []
        self._suite = ""
        self._pool: Optional[WorkerPool] = None
        self._rings: Dict[tuple[int, int], ChowRing] = {}

    # ------------------------------------------------------------------ plumbing

    def _guard(self, max_n: int, hard: int, what: str) -> None:
        if max_n > hard and not self.allow_big:
            raise ResourceGuardError(f"{what} up to n={max_n} exceeds the hard limit {hard}; pass --allow-big")

    def _record(
        self,
        name: str,
        ok: Optional[bool],
        n: Optional[int] = None,
        k: Optional[int] = None,
        message: Optional[str] = None,
        **details: Any,
    ) -> bool:
        """Appends a check; ``ok=None`` records a skip."""
        if ok is None:
            status = CheckStatus.SKIP
        else:
            status = CheckStatus.PASS if ok else CheckStatus.FAIL
        full_name = f"{self._suite}.{name}"
        self._checks.append(
            CheckResult(name=full_name, status=status, n=n, k=k, message=message, details=details)
        )
        level = logging.ERROR if status is CheckStatus.FAIL else logging.INFO
        self.logger.log(
            level, "check", extra={"details": {"name": full_name, "status": status.value, "n": n, "k": k, **details}}
        )
        return bool(ok)

    def _row_echelon_ring(self, rank: int, n: int) -> ChowRing:
        """Row-reduced ring of ``U_{rank,n}``, ``B_n`` when ``rank == n``; cached across suites."""
        key = (rank, n)
        ring = self._rings.get(key)
        if ring is None:
            lattice = boolean_lattice(n) if rank == n else uniform_lattice(rank, n)
            ring = ChowRing(lattice, self.settings.oracle_max_columns)
            self._rings[key] = ring
        return ring

    def _map(self, task: Callable, jobs: list) -> list:
        if self._pool is None:
            return [task(j) for j in jobs]
        return self._pool.map(task, jobs)

    def run(self, suite: str, max_n: Optional[int] = None) -> Report:
        """
        Runs one suite, or all of them for ``suite == "all"``.

        Args:
            suite: A name from ``SUITES`` or ``"all"``.
            max_n: Size bound; each suite's configured budget when omitted.

        Raises:
            InvalidObjectError: On an unknown suite or ``max_n < 1``.
            ResourceGuardError: If ``max_n`` exceeds a hard limit without
                ``allow_big``.
        """
        names = SUITES if suite == "all" else (suite,)
        if suite != "all" and suite not in SUITES:
            raise InvalidObjectError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}, all")
        if max_n is not None and max_n < 1:
            raise InvalidObjectError(f"max_n must be positive, got {max_n}")
        buffer = ring_buffer(self.logger)
        if buffer is not None:
            buffer.clear()
        self._checks = []
        budgets = {name: max_n if max_n is not None else self.settings.suite_budget(name) for name in names}
        for name, budget in budgets.items():
            self._guard(budget, self.settings.hard_max_n, f"suite {name}")
        with WorkerPool(self.threads) as pool:
            self._pool = pool
            try:
                for name in names:
                    self._suite = name
                    getattr(self, f"_suite_{name}")(budgets[name])
            finally:
                self._pool = None
        failed = any(c.status is CheckStatus.FAIL for c in self._checks)
        return Report(
            suite=suite,
            max_n=max(budgets.values()),
            status=CheckStatus.FAIL if failed else CheckStatus.PASS,
            checks=list(self._checks),
            events=buffer.get_events(logging.ERROR) if buffer else [],
        )

    # ------------------------------------------------------------------ suites

    def _suite_bijection(self, max_n: int) -> None:
        for n in range(1, max_n + 1):
            g = GroundSet.canonical(n)
            jobs = [(n, prefix) for prefix in permutation_prefixes(g, 1)]
            merged = _merge_blocks(self._map(_bijection_block, jobs))
            failures = merged["failures"]
            for name in ("lehmer_round_trip", "descent_ascent_transport", "psi_normal_degree", "phi_inverts_psi"):
                self._record(name, name not in failures, n=n, example=failures.get(name), count=merged["count"])
            if n <= _ORDER_MAX_N:
                example = failures.get("triangle_order_on_parts")
                self._record("triangle_order_on_parts", example is None, n=n, example=example)

            d_count = sum(1 for _ in enumerate_derangement_seqs(n))
            self._record(
                "derangement_count",
                merged["fixed_point_free"] == d_count == derangement_number(n),
                n=n,
                fixed_point_free=merged["fixed_point_free"],
                derangement_seqs=d_count,
            )

            size = 0
            bad = None
            for m in enumerate_normal_monomials(g):
                size += 1
                p = phi(m)
                if sorted(p) != list(g.labels) or psi(p) != m:
                    bad = bad or m.text()
            self._record("psi_inverts_phi", bad is None and size == merged["count"], n=n, monomials=size, example=bad)

            descents = merged["descents"]
            by_descents = IntPolynomial(tuple(descents.get(d, 0) for d in range(max(descents) + 1)))
            hilbert = hilbert_boolean(n)
            self._record(
                "eulerian_identity",
                hilbert == by_descents == eulerian_by_ascents(n) and is_palindromic(hilbert),
                n=n,
                hilbert=to_text(hilbert),
                descents=to_text(by_descents),
            )

    def _suite_rewriting(self, max_n: int) -> None:
        for n in range(2, max_n + 1):
            jobs = [(n, prefix) for prefix in inversion_prefixes(n, 3)]
            merged = _merge_blocks(self._map(_rewriting_block, jobs))
            failures = merged["failures"]
            cases = {c.value: merged["cases"].get(c.value, 0) for c in RewriteCase}
            self._record(
                "case_partition",
                "case_partition" not in failures and sum(cases.values()) == math.factorial(n),
                n=n,
                cases=cases,
                example=failures.get("case_partition"),
            )
            self._record("degree_raise", "degree_raise" not in failures, n=n, zeros=merged["zeros"],
                         example=failures.get("degree_raise"))

            tower = g_power_tower(n, n - 1)
            depth: Counter[int] = Counter()
            recursive: Dict[int, set] = {k: set() for k in range(1, n)}
            for e in enumerate_derangement_seqs(n):
                d = dset_depth(e)
                depth[d] += 1
                for k in range(1, min(d, n - 1) + 1):
                    recursive[k].add(e)
            for k in range(1, n):
                image = tower[k]
                self._record("dset_equality", image.elements == recursive[k], n=n, k=k,
                             size=len(image), recursive_size=len(recursive[k]))
                floor = image.min_ascents()
                self._record("ascent_floor", floor is None or floor == k, n=n, k=k, min_ascents=floor)
                preimages = g_images(tower[k - 1].elements)
                table = Counter(preimages.values())
                self._record(
                    "surjectivity",
                    set(preimages) == set(image.elements),
                    n=n,
                    k=k,
                    preimages={str(c): table[c] for c in sorted(table)},
                )
            top = InversionSequence(range(n))
            self._record("top_dset", tower[n - 1].elements == frozenset({top}), n=n, k=n - 1)
            self._record("zero_image", not g_images(tower[n - 1].elements), n=n)

    def _suite_oracle(self, max_n: int) -> None:
        settings = self.settings
        boolean_max = min(max_n, settings.oracle_boolean_max_n)
        identity_max = min(max_n, settings.oracle_identity_max_n)
        soundness_max = min(max_n, settings.oracle_soundness_max_n)
        uniform_max = min(max_n, settings.oracle_uniform_max_n)
        largest = max(boolean_max, identity_max, soundness_max, uniform_max)
        self._guard(largest, settings.oracle_hard_max_n, "oracle suite")
        if max_n > largest:
            self._record("budget", None, message=f"oracle capped at n <= {largest}")
        # B_n beyond this is only reached through nested-set rewriting
        row_echelon_max = max(boolean_max, identity_max)

        for n in range(1, max(row_echelon_max, soundness_max) + 1):
            if n <= row_echelon_max:
                ring = self._row_echelon_ring(n, n)
            else:
                ring = ChowRing(boolean_lattice(n), settings.oracle_max_columns, Reduction.NESTED_BASIS)
            if n <= boolean_max:
                series = ring.hilbert_series()
                chains = fy_chain_count(ring.lattice)
                normal = hilbert_boolean(n)
                self._record(
                    "hilbert_agreement",
                    series == chains == normal and is_palindromic(series),
                    n=n,
                    oracle=to_text(series),
                    chains=to_text(chains),
                    normal=to_text(normal),
                )
            self._check_generators(ring, n)
            if n <= _RING_RELATIONS_MAX_N:
                self._check_simplicial(ring, n)
            if n <= soundness_max:
                self._check_soundness(ring, n)
            if n <= identity_max:
                self._check_ring_identity(ring, n)
                self._check_principal_ideals(ring, n)

        for n in range(1, uniform_max + 1):
            self._record(
                "boolean_as_uniform", uniform_lattice(n, n).masks == boolean_lattice(n).masks, n=n
            )
            # rank n is B_n, which the boolean loop covers
            for rank in range(1, n):
                ring = self._row_echelon_ring(rank, n)
                series = ring.hilbert_series()
                chains = fy_chain_count(ring.lattice)
                self._record(
                    "uniform_hilbert_agreement",
                    series == chains == chow_uniform_via_dsets(n, n - rank) and is_palindromic(series),
                    n=n,
                    k=rank,
                    oracle=to_text(series),
                    chains=to_text(chains),
                )
                if n <= _RING_RELATIONS_MAX_N:
                    self._check_simplicial(ring, n, rank)

    def _check_generators(self, ring: ChowRing, n: int) -> None:
        g = ring.lattice.ground
        full = g.full()
        ok = ring.g_element(full) == ring.h_element(full)
        for f in ring.lattice.flats:
            if f and n in f:
                ok = ok and ring.g_element(f) == ring.x_element(f)
        for i in g.labels:
            ok = ok and ring.h_element(g.subset([i])).is_zero()
        self._record("generators", ok, n=n)

    def _check_simplicial(self, ring: ChowRing, n: int, rank: Optional[int] = None) -> None:
        flats = [f for f in ring.lattice.flats if f]
        bad = None
        for i, f1 in enumerate(flats):
            for f2 in flats[i + 1:]:
                if not ring.simplicial_relation(f1, f2).is_zero():
                    bad = bad or f"{f1},{f2}"
        self._record("simplicial_relations", bad is None, n=n, k=rank, pairs=len(flats) * (len(flats) - 1) // 2,
                     example=bad)

    def _check_soundness(self, ring: ChowRing, n: int) -> None:
        """``g_E`` times each basis class against the ``g_map`` image."""
        g = ring.lattice.ground
        g_full = ring.g_element(g.full())
        by_degree: Dict[int, list] = {}
        bad = None
        zeros = 0
        for e in enumerate_inversion_sequences(n):
            parts = psi(lehmer_inverse(e, g)).parts
            by_degree.setdefault(len(parts), []).append(ring.g_monomial(parts))
            product = ring.multiply(g_full, by_degree[len(parts)][-1])
            image = g_map(e)
            if image is ZERO:
                zeros += 1
                ok = product.is_zero()
            else:
                ok = product == ring.g_monomial(psi(lehmer_inverse(image, g)).parts)
            if not ok:
                bad = bad or str(e)
        self._record("g_map_soundness", bad is None, n=n, zeros=zeros, example=bad)
        dims = {d: ring.span_dimension(v, d) for d, v in sorted(by_degree.items())}
        self._record(
            "g_basis",
            all(dims[d] == ring.dimension(d) for d in dims),
            n=n,
            spans=[dims[d] for d in sorted(dims)],
        )

    def _check_ring_identity(self, ring: ChowRing, n: int) -> None:
        """``g_E g_F = g_F g_{E <= max(E - F)}`` for ``F`` containing ``max E``."""
        g = ring.lattice.ground
        full = g.full()
        g_full = ring.g_element(full)
        bad = None
        count = 0
        for f in ring.lattice.flats:
            if len(f) < 2 or n not in f or f == full:
                continue
            count += 1
            g_f = ring.g_element(f)
            lhs = ring.multiply(g_full, g_f)
            rhs = ring.multiply(g_f, ring.g_element(g.at_most((full - f).max)))
            if lhs != rhs:
                bad = bad or str(f)
        self._record("ring_identity", bad is None, n=n, flats=count, example=bad)

    def _check_principal_ideals(self, ring: ChowRing, n: int) -> None:
        for rank in range(1, n + 1):
            ideal = ring.principal_ideal_hilbert(n - rank)
            uniform = self._row_echelon_ring(rank, n).hilbert_series()
            self._record(
                "principal_ideal",
                ideal == uniform.shift(n - rank),
                n=n,
                k=rank,
                ideal=to_text(ideal),
                uniform=to_text(uniform),
            )

    def _suite_corollary(self, max_n: int) -> None:
        oracle_max = min(max_n, self.settings.oracle_uniform_max_n, self.settings.oracle_hard_max_n)
        for n in range(2, max_n + 1):
            by_corank = uniform_chow_by_corank(n)
            for k in range(1, n):
                ascents = dset_recursive(n, k).ascent_polynomial()
                shifted = by_corank[k].shift(k)
                if n > oracle_max:
                    self._record("corollary", ascents == shifted, n=n, k=k,
                                 message="oracle skipped above its size limit", dsets=to_text(ascents))
                    continue
                oracle = self._row_echelon_ring(n - k, n).hilbert_series()
                self._record(
                    "corollary",
                    ascents == shifted == oracle.shift(k),
                    n=n,
                    k=k,
                    dsets=to_text(ascents),
                    oracle=to_text(oracle),
                )
            try:
                derangements = derangement_poly(n)
                ok = by_corank[1].shift(1) == derangements
            except InvariantViolation as exc:
                derangements, ok = None, False
                self.logger.error("derangement routes disagree", extra={"details": {"n": n, "error": str(exc)}})
            self._record("corank_one", ok, n=n, derangements=to_text(derangements) if derangements is not None else None)

    def _suite_interlacing(self, max_n: int) -> None:
        for n in range(1, min(max_n, _REAL_ROOTED_MAX_N) + 1):
            a = eulerian(n)
            self._record("eulerian_real_rooted", is_real_rooted(a), n=n, polynomial=to_text(a))
            if n >= 2:
                d = derangement_poly(n)
                self._record("derangement_real_rooted", is_real_rooted(d), n=n, polynomial=to_text(d))
                for k, p in uniform_chow_by_corank(n).items():
                    self._record(
                        "uniform_real_rooted",
                        is_real_rooted(p),
                        n=n,
                        k=k,
                        polynomial=to_text(p),
                        unimodal=is_unimodal(p),
                        log_concave=is_log_concave(p),
                        gamma_positive=is_gamma_positive(p),
                    )

        experiments = [
            ("eulerian-refined", 2, 1),
            ("derangement-refined", 3, 1),
            ("drop22", 4, 2),
            ("merge12", 4, 2),
            ("plain", 4, 2),
        ]
        for family, start, k in experiments:
            if max_n < start:
                self._record(family, None, message=f"needs n >= {start}")
                continue
            report = run_interlace(family, range(start, max_n + 1), k=k, pool=self._pool)
            self._record(
                family,
                report.status is CheckStatus.PASS,
                k=k,
                claimed=report.claimed,
                witness=report.witness,
                n_from=start,
                n_to=max_n,
            )


def run_suite(
    suite: str,
    max_n: Optional[int] = None,
    threads: Optional[int] = None,
    allow_big: bool = False,
    settings: Optional[ChowlabSettings] = None,
) -> Report:
    """Convenience wrapper around ``SuiteRunner.run``."""
    return SuiteRunner(settings=settings, threads=threads, allow_big=allow_big).run(suite, max_n)
