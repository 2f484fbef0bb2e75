"""Tests for the interlacing experiments and the worker pool."""
import pytest

from chowlab.core.errors import InvalidObjectError, ResourceGuardError
from chowlab.polyalg.polynomial import IntPolynomial
from chowlab.verify.experiments import (
    CLAIMED,
    family_indices,
    family_members,
    interlace_row,
    run_interlace,
    smallest_n,
)
from chowlab.verify.jobs import WorkerPool
from chowlab.verify.models import CheckStatus


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_family_members():
    labels, polys = family_members("eulerian-refined", 3)
    assert labels == ["A^0", "A^1", "A^2"]
    assert polys == [P(1, 1), P(0, 2), P(0, 1, 1)]

    labels, polys = family_members("plain", 4, 2)
    assert labels == ["d^{2,0}", "d^{2,1}", "d^{2,2}", "d^{2,3}"]
    assert polys == [P(0, 0, 1), P(), P(0, 0, 1), P(0, 0, 0, 1)]

    labels, polys = family_members("drop22", 4, 2)
    assert labels == ["d^{2,0}", "d^{2,1}", "d^{2,3}"]

    labels, polys = family_members("merge12", 4, 2)
    assert labels == ["d^{2,0}", "d^{2,1}+d^{2,2}", "d^{2,3}"]
    assert polys == [P(0, 0, 1), P(0, 0, 1), P(0, 0, 0, 1)]
    assert family_indices("merge12", 4, 2) == [0, 1, 3]
    assert family_indices("derangement-refined", 4) == [1, 2, 3]


def test_family_members_rejects_bad_input():
    with pytest.raises(InvalidObjectError):
        family_members("nope", 4)
    with pytest.raises(InvalidObjectError):
        family_members("plain", 2, 2)
    assert smallest_n("drop22", 2) == 3
    assert "plain" not in CLAIMED


def test_interlace_row_marks_non_real_rooted_pairs():
    row = interlace_row(1, ["a", "b"], [P(1, 0, 1), P(1, 1)])
    assert row.real_rooted == [False, True]
    assert row.matrix[0][1] is False
    assert row.failure == [0, 1]
    assert not row.interlacing


@pytest.mark.parametrize(
    "family, ns, k",
    [
        ("eulerian-refined", range(1, 6), 2),
        ("derangement-refined", range(3, 7), 2),
        ("drop22", range(3, 7), 2),
        ("merge12", range(3, 7), 2),
    ],
)
def test_claimed_families_interlace(family, ns, k):
    report = run_interlace(family, ns, k=k)
    assert report.claimed
    assert report.status is CheckStatus.PASS
    assert report.witness is None
    assert [row.n for row in report.rows] == list(ns)


def test_dset_report_keeps_k():
    assert run_interlace("plain", range(3, 5), k=2).k == 2
    assert run_interlace("eulerian-refined", range(2, 3)).k is None


def test_run_interlace_guards():
    with pytest.raises(ResourceGuardError):
        run_interlace("eulerian-refined", range(1, 8), max_n=6)
    with pytest.raises(InvalidObjectError):
        run_interlace("eulerian-refined", range(3, 3))
    with pytest.raises(InvalidObjectError):
        run_interlace("drop22", range(2, 4), k=2)


def test_worker_pool_keeps_order():
    with WorkerPool(1) as pool:
        assert pool.map(abs, [-3, 1, -2]) == [3, 1, 2]
    with WorkerPool(2) as pool:
        assert pool.map(abs, range(-2, 3)) == [2, 1, 0, 1, 2]


def test_plain_family_exhibits_a_witness():
    report = run_interlace("plain", range(4, 7), k=2)
    assert not report.claimed
    assert report.status is CheckStatus.PASS
    assert report.witness == 5
    assert report.rows[0].interlacing
    first_failure = report.rows[1]
    assert [first_failure.labels[i] for i in first_failure.failure] == ["d^{2,1}", "d^{2,2}"]


def test_plain_family_without_witness_fails():
    report = run_interlace("plain", range(4, 5), k=2)
    assert report.witness is None
    assert report.status is CheckStatus.FAIL
