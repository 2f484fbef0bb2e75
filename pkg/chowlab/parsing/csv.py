"""
CSV emission of polynomial families: a header row, then one polynomial per
row as ``n,k,i,c0,c1,...``. Coefficient columns are padded with zeros to the
largest degree in the file.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from chowlab.polyalg.polynomial import IntPolynomial


@dataclass(frozen=True)
class PolynomialRow:
    n: int
    k: int
    i: int
    poly: IntPolynomial


def write_polynomial_rows(rows: Iterable[PolynomialRow], stream: TextIO) -> None:
    rows = list(rows)
    width = max((len(r.poly.coeffs) for r in rows), default=1) or 1
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "k", "i"] + [f"c{d}" for d in range(width)])
    for r in rows:
        writer.writerow([r.n, r.k, r.i] + [r.poly[d] for d in range(width)])


def polynomial_rows_to_csv(rows: Iterable[PolynomialRow]) -> str:
    buffer = io.StringIO()
    write_polynomial_rows(rows, buffer)
    return buffer.getvalue()


def read_polynomial_rows(stream: TextIO) -> list[PolynomialRow]:
    """Inverse of ``write_polynomial_rows``."""
    reader = csv.reader(stream)
    next(reader, None)
    out = []
    for record in reader:
        if not record:
            continue
        n, k, i, *coeffs = (int(v) for v in record)
        out.append(PolynomialRow(n, k, i, IntPolynomial(tuple(coeffs))))
    return out


def records_to_csv(header: Sequence[str], records: Iterable[Sequence[object]]) -> str:
    """Plain CSV for command outputs that are not polynomial families."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()
