"""Tests for the text, lattice-file and CSV formats."""
import io

import pytest

from chowlab.core.errors import InvalidObjectError, NotNormalError
from chowlab.core.ground import GroundSet, InversionSequence, Permutation
from chowlab.chow.rewrite import ZERO
from chowlab.oracle.lattice import uniform_lattice
from chowlab.oracle.ring import hilbert_series
from chowlab.parsing.csv import PolynomialRow, polynomial_rows_to_csv, read_polynomial_rows, records_to_csv
from chowlab.parsing.lattice_file import dump_lattice, load_lattice, parse_lattice_text
from chowlab.parsing.text import (
    format_rewrite_result,
    parse_int_list,
    parse_inversion_sequence,
    parse_monomial,
    parse_permutation,
    parse_polynomial,
    parse_range,
)
from chowlab.polyalg.polynomial import IntPolynomial


def P(*coeffs):
    return IntPolynomial(coeffs)


@pytest.mark.parametrize(
    "text, values",
    [("5,1,4,3,2", (5, 1, 4, 3, 2)), ("[1, 2]", (1, 2)), ("(3)", (3,)), ("", ())],
)
def test_parse_int_list(text, values):
    assert parse_int_list(text) == values


def test_parse_int_list_rejects_garbage():
    with pytest.raises(InvalidObjectError):
        parse_int_list("1;2")


def test_parse_permutation_and_sequence():
    assert parse_permutation("3,1,2") == Permutation((3, 1, 2))
    assert parse_inversion_sequence("0,1,0") == InversionSequence((0, 1, 0))
    with pytest.raises(InvalidObjectError):
        parse_permutation("1,1")
    with pytest.raises(InvalidObjectError):
        parse_inversion_sequence("0,2")


def test_parse_monomial():
    g = GroundSet.canonical(5)
    m = parse_monomial("h{1,4}*h{1,2,4,5}", g)
    assert m.text() == "h{1,2,4,5}*h{1,4}"
    assert parse_monomial("1", g).degree == 0
    with pytest.raises(InvalidObjectError):
        parse_monomial("h[1,2]", g)
    with pytest.raises(NotNormalError):
        parse_monomial("h{1,2}*h{1,3}", g)


@pytest.mark.parametrize(
    "text, poly",
    [
        ("1 + 4t + t^2", P(1, 4, 1)),
        ("t + 7t^2 + t^3", P(0, 1, 7, 1)),
        ("3t^2 - t", P(0, -1, 3)),
        ("4*t + 1", P(1, 4)),
        ("0", P()),
        ("-t", P(0, -1)),
    ],
)
def test_parse_polynomial(text, poly):
    assert parse_polynomial(text) == poly


@pytest.mark.parametrize("text", ["", "1 + x", "t^"])
def test_parse_polynomial_rejects_garbage(text):
    with pytest.raises(InvalidObjectError):
        parse_polynomial(text)


def test_parse_range():
    assert parse_range("4..7") == range(4, 8)
    assert parse_range("5") == range(5, 6)
    with pytest.raises(InvalidObjectError):
        parse_range("7..4")
    with pytest.raises(InvalidObjectError):
        parse_range("a..b")


def test_format_rewrite_result():
    assert format_rewrite_result(ZERO) == "ZERO"
    assert format_rewrite_result(InversionSequence((0, 1, 2))) == "0,1,2"


def test_lattice_text_round_trip():
    text = "# U_{2,4}\nn=4\n{1}\n{2}\n3\n4\n"
    lattice = parse_lattice_text(text, name="u24")
    assert lattice.masks == uniform_lattice(2, 4).masks
    assert hilbert_series(lattice) == P(1, 1)
    assert parse_lattice_text(dump_lattice(lattice)).masks == lattice.masks


def test_lattice_text_errors():
    with pytest.raises(InvalidObjectError):
        parse_lattice_text("{1}\n")
    with pytest.raises(InvalidObjectError):
        parse_lattice_text("n=3\n2,1\n")
    with pytest.raises(InvalidObjectError):
        parse_lattice_text("n=3\n{1,2}\n{2,3}\n")


def test_load_lattice(tmp_path):
    path = tmp_path / "parallel.txt"
    path.write_text("n=3\n{1,2}\n{3}\n", encoding="utf-8")
    lattice = load_lattice(path)
    assert lattice.name == "parallel"
    assert lattice.rank == 2
    with pytest.raises(InvalidObjectError):
        load_lattice(tmp_path / "missing.txt")


def test_polynomial_rows_csv():
    rows = [PolynomialRow(4, 2, 0, P(0, 0, 1)), PolynomialRow(4, 2, 3, P(0, 0, 0, 1))]
    text = polynomial_rows_to_csv(rows)
    assert text.splitlines()[0] == "n,k,i,c0,c1,c2,c3"
    assert text.splitlines()[1] == "4,2,0,0,0,1,0"
    assert read_polynomial_rows(io.StringIO(text)) == rows


def test_records_to_csv():
    assert records_to_csv(["n", "ok"], [(3, True)]) == "n,ok\n3,True\n"
