"""
Interlacing experiments on families of polynomials indexed by the last entry
of an inversion sequence.

Families:

- ``plain``: ``(d^{k,0}_n, ..., d^{k,n-1}_n)``. Not expected to interlace;
  the experiment reports the smallest ``n`` where it fails.
- ``drop22``: the plain family without ``d^{k,k}_n``.
- ``merge12``: the plain family with ``d^{k,1}_n, ..., d^{k,k}_n`` merged
  into their sum.
- ``eulerian-refined``: ``(A^0_n, ..., A^{n-1}_n)``.
- ``derangement-refined``: ``(d^1_n, ..., d^{n-1}_n)``.

Every family except ``plain`` is expected to interlace, and a failing row
makes the experiment fail. ``plain`` fails the other way round: when no row of
the range exhibits a non-interlacing pair.
"""
from __future__ import annotations

import logging
from typing import Optional

from chowlab.chow.dsets import dki_family
from chowlab.core.errors import InvalidObjectError, NotRealRootedError
from chowlab.polyalg.families import check_budget, refined_derangement, refined_eulerian
from chowlab.polyalg.interlacing import interlaces
from chowlab.polyalg.polynomial import IntPolynomial, sum_polynomials
from chowlab.polyalg.roots import is_real_rooted
from chowlab.verify.jobs import WorkerPool
from chowlab.verify.models import CheckStatus, InterlaceReport, InterlaceRow, PolynomialModel

logger = logging.getLogger(__name__)

FAMILIES = ("plain", "drop22", "merge12", "eulerian-refined", "derangement-refined")
CLAIMED = frozenset(FAMILIES) - {"plain"}
_DSET_FAMILIES = ("plain", "drop22", "merge12")


def _label(k: int, i: int) -> str:
    return f"d^{{{k},{i}}}"


def smallest_n(family: str, k: int) -> int:
    """Smallest ``n`` for which ``family`` is defined."""
    if family in _DSET_FAMILIES:
        # dki_family needs 1 <= k <= n - 1
        return k + 1
    if family == "eulerian-refined":
        return 1
    return 2


def family_indices(family: str, n: int, k: int = 2) -> list[int]:
    """The index ``i`` each member of a row stands for; a merged member takes the smallest."""
    if family == "derangement-refined":
        return list(range(1, n))
    if family == "drop22":
        return [i for i in range(n) if i != k]
    if family == "merge12":
        return [0, 1] + list(range(k + 1, n))
    return list(range(n))


def family_members(family: str, n: int, k: int = 2) -> tuple[list[str], list[IntPolynomial]]:
    """
    Labels and polynomials of one row of an experiment.

    Args:
        family: One of ``FAMILIES``.
        n: Sequence length.
        k: Depth of the ``D^k_n`` sets; only used by the ``d^{k,i}_n``
            families.

    Raises:
        InvalidObjectError: On an unknown family or ``n``, ``k`` out of range.
    """
    if family not in FAMILIES:
        raise InvalidObjectError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if family in _DSET_FAMILIES and k < 1:
        raise InvalidObjectError(f"family {family} needs k >= 1, got {k}")
    if n < smallest_n(family, k):
        raise InvalidObjectError(f"family {family} needs n >= {smallest_n(family, k)}, got {n}")

    if family == "eulerian-refined":
        return [f"A^{i}" for i in range(n)], refined_eulerian(n)
    if family == "derangement-refined":
        return [f"d^{i}" for i in range(1, n)], refined_derangement(n)

    polys = dki_family(n, k)
    labels = [_label(k, i) for i in range(n)]
    if family == "drop22":
        return labels[:k] + labels[k + 1:], polys[:k] + polys[k + 1:]
    if family == "merge12":
        merged = "+".join(labels[1:k + 1])
        return [labels[0], merged] + labels[k + 1:], [polys[0], sum_polynomials(polys[1:k + 1])] + polys[k + 1:]
    return labels, polys


def interlace_row(n: int, labels: list[str], polys: list[IntPolynomial]) -> InterlaceRow:
    """
    Real-rootedness flags and the full pairwise matrix
    ``matrix[i][j] = interlaces(polys[i], polys[j])``. Pairs with a
    non-real-rooted member count as not interlacing.
    """
    real = [is_real_rooted(p) for p in polys]
    size = len(polys)
    matrix = [[True] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            try:
                matrix[i][j] = interlaces(polys[i], polys[j])
            except NotRealRootedError:
                matrix[i][j] = False
    failure = next(([i, j] for i in range(size) for j in range(i + 1, size) if not matrix[i][j]), None)
    return InterlaceRow(
        n=n,
        labels=labels,
        polynomials=[PolynomialModel.of(p) for p in polys],
        real_rooted=real,
        matrix=matrix,
        interlacing=failure is None,
        failure=failure,
    )


def _row_task(job: tuple[str, int, int]) -> InterlaceRow:
    family, k, n = job
    labels, polys = family_members(family, n, k)
    return interlace_row(n, labels, polys)


def run_interlace(
    family: str,
    ns: range,
    k: int = 2,
    pool: Optional[WorkerPool] = None,
    max_n: Optional[int] = None,
) -> InterlaceReport:
    """
    Runs ``family`` for every ``n`` in ``ns``.

    Args:
        family: One of ``FAMILIES``.
        ns: The values of ``n``, increasing.
        k: Depth for the ``d^{k,i}_n`` families.
        pool: Worker pool; rows run in process when omitted.
        max_n: Enumeration budget; ``None`` disables the guard.

    Raises:
        InvalidObjectError: On an unknown family or an empty range.
        ResourceGuardError: If ``ns`` goes beyond ``max_n``.
    """
    if family not in FAMILIES:
        raise InvalidObjectError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not ns:
        raise InvalidObjectError("empty range of n")
    check_budget(ns[-1], max_n, f"interlacing family {family}")
    if ns[0] < smallest_n(family, k):
        raise InvalidObjectError(f"family {family} needs n >= {smallest_n(family, k)}, got {ns[0]}")

    jobs = [(family, k, n) for n in ns]
    rows = pool.map(_row_task, jobs) if pool is not None else [_row_task(j) for j in jobs]
    witness = next((row.n for row in rows if not row.interlacing), None)
    claimed = family in CLAIMED
    # unclaimed families must exhibit a witness somewhere in the range
    failed = witness is not None if claimed else witness is None
    status = CheckStatus.FAIL if failed else CheckStatus.PASS
    logger.info(
        "interlace %s k=%s n=%s..%s: %s (witness %s)", family, k, ns[0], ns[-1], status.value, witness
    )
    return InterlaceReport(
        family=family,
        k=k if family in _DSET_FAMILIES else None,
        n_from=ns[0],
        n_to=ns[-1],
        claimed=claimed,
        status=status,
        witness=witness,
        rows=rows,
    )
