"""
Text, lattice-file and CSV formats.

- ``text``: permutations, inversion sequences, subsets, monomials,
  polynomials and integer ranges.
- ``lattice_file``: line-oriented lattice-of-flats files.
- ``csv``: polynomial family tables and plain record tables.
"""
from chowlab.parsing.csv import (
    PolynomialRow,
    polynomial_rows_to_csv,
    read_polynomial_rows,
    records_to_csv,
    write_polynomial_rows,
)
from chowlab.parsing.lattice_file import dump_lattice, load_lattice, parse_lattice_text
from chowlab.parsing.text import (
    format_polynomial,
    format_rewrite_result,
    format_sequence,
    parse_int_list,
    parse_inversion_sequence,
    parse_monomial,
    parse_permutation,
    parse_polynomial,
    parse_range,
    parse_subset,
)

__all__ = [
    "PolynomialRow",
    "dump_lattice",
    "format_polynomial",
    "format_rewrite_result",
    "format_sequence",
    "load_lattice",
    "parse_int_list",
    "parse_inversion_sequence",
    "parse_lattice_text",
    "parse_monomial",
    "parse_permutation",
    "parse_polynomial",
    "parse_range",
    "parse_subset",
    "polynomial_rows_to_csv",
    "read_polynomial_rows",
    "records_to_csv",
    "write_polynomial_rows",
]
