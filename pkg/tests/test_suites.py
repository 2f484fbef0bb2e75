"""Tests for the verification suites; runs at the default budgets are marked slow."""
import time

import pytest

from chowlab.core.errors import InvalidObjectError, ResourceGuardError
from chowlab.verify.config import ChowlabSettings
from chowlab.verify.models import CheckStatus
from chowlab.verify.suites import SuiteRunner, run_suite


def _names(report):
    return {c.name for c in report.checks}


def test_bijection_suite(settings):
    report = SuiteRunner(settings).run("bijection", 4)
    assert report.status is CheckStatus.PASS
    assert report.max_n == 4
    assert "bijection.phi_inverts_psi" in _names(report)
    assert "bijection.eulerian_identity" in _names(report)
    assert report.events == []


def test_rewriting_suite(settings):
    report = SuiteRunner(settings).run("rewriting", 5)
    assert report.status is CheckStatus.PASS
    surjectivity = [c for c in report.checks if c.name == "rewriting.surjectivity" and c.n == 3 and c.k == 1]
    assert surjectivity[0].details["preimages"] == {"1": 1, "2": 1}


def test_oracle_suite(settings):
    report = SuiteRunner(settings).run("oracle", 3)
    assert report.status is CheckStatus.PASS
    names = _names(report)
    for check in ("hilbert_agreement", "generators", "simplicial_relations", "g_map_soundness",
                  "g_basis", "ring_identity", "principal_ideal", "uniform_hilbert_agreement"):
        assert f"oracle.{check}" in names


def test_corollary_suite(settings):
    report = SuiteRunner(settings).run("corollary", 4)
    assert report.status is CheckStatus.PASS
    assert sum(1 for c in report.checks if c.name == "corollary.corollary") == 1 + 2 + 3


def test_interlacing_suite(settings):
    report = SuiteRunner(settings).run("interlacing", 5)
    assert report.status is CheckStatus.PASS
    plain = next(c for c in report.checks if c.name == "interlacing.plain")
    assert plain.details["claimed"] is False
    assert plain.status is CheckStatus.PASS
    assert plain.details["witness"] == 5


def test_interlacing_suite_skips_families_below_their_start(settings):
    report = SuiteRunner(settings).run("interlacing", 3)
    skipped = {c.name for c in report.checks if c.status is CheckStatus.SKIP}
    assert skipped == {"interlacing.drop22", "interlacing.merge12", "interlacing.plain"}


def test_guards(settings):
    with pytest.raises(ResourceGuardError):
        SuiteRunner(settings).run("bijection", 11)
    wide = ChowlabSettings(_env_file=None, oracle_uniform_max_n=8)
    with pytest.raises(ResourceGuardError):
        SuiteRunner(wide).run("oracle", 8)
    with pytest.raises(InvalidObjectError):
        SuiteRunner(settings).run("nope", 3)
    with pytest.raises(InvalidObjectError):
        SuiteRunner(settings).run("bijection", 0)


def test_run_suite_all(settings):
    report = run_suite("all", max_n=3, settings=settings)
    assert report.suite == "all"
    assert report.passed
    prefixes = {c.name.split(".")[0] for c in report.checks}
    assert prefixes == {"bijection", "rewriting", "oracle", "corollary", "interlacing"}


def _sizes(report, name):
    return {c.n for c in report.checks if c.name == name}


@pytest.mark.slow
def test_oracle_suite_default_budget(settings):
    started = time.perf_counter()
    report = SuiteRunner(settings).run("oracle")
    assert time.perf_counter() - started < 300
    assert report.status is CheckStatus.PASS
    assert report.max_n == 6
    assert _sizes(report, "oracle.hilbert_agreement") == set(range(1, 5))
    assert _sizes(report, "oracle.g_map_soundness") == set(range(1, 7))
    assert _sizes(report, "oracle.g_basis") == set(range(1, 7))
    assert _sizes(report, "oracle.ring_identity") == set(range(1, 6))
    principal = {(c.n, c.k) for c in report.checks if c.name == "oracle.principal_ideal"}
    assert principal == {(n, k) for n in range(1, 6) for k in range(1, n + 1)}
    uniform = {(c.n, c.k) for c in report.checks if c.name == "oracle.uniform_hilbert_agreement"}
    assert uniform == {(n, k) for n in range(1, 7) for k in range(1, n)}


def test_oracle_suite_runs_soundness_past_the_identity_range():
    narrow = ChowlabSettings(
        _env_file=None,
        oracle_boolean_max_n=3,
        oracle_identity_max_n=3,
        oracle_soundness_max_n=4,
        oracle_uniform_max_n=3,
    )
    report = SuiteRunner(narrow).run("oracle", 4)
    assert report.status is CheckStatus.PASS
    assert _sizes(report, "oracle.g_map_soundness") == {1, 2, 3, 4}
    assert _sizes(report, "oracle.ring_identity") == {1, 2, 3}
    assert _sizes(report, "oracle.hilbert_agreement") == {1, 2, 3}
    assert _sizes(report, "oracle.generators") == {1, 2, 3, 4}


@pytest.mark.slow
def test_default_budgets_cover_the_acceptance_ranges(settings):
    bijection = SuiteRunner(settings).run("bijection")
    assert bijection.status is CheckStatus.PASS
    assert _sizes(bijection, "bijection.eulerian_identity") == set(range(1, 10))
    corollary = SuiteRunner(settings).run("corollary")
    assert corollary.status is CheckStatus.PASS
    assert _sizes(corollary, "corollary.corank_one") == set(range(2, 9))
