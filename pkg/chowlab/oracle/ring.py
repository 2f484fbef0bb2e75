"""
Exact linear-algebra model of the Chow ring of a loopless matroid.

Work happens modulo the incomparability ideal from the start: a degree-``d``
slice is spanned by the multichain monomials of length ``d``. The linear
ideal contributes, in degree ``d``, the products ``L_i * m`` of a linear form
``L_i = sum_{F ∋ i} x_F`` with a multichain monomial ``m`` of degree
``d - 1``, keeping only the terms that remain multichains. Row reduction of
those products over ``QQ`` (``sympy.polys.matrices.DomainMatrix``) fixes, per
degree, a set of pivot monomials; the remaining monomials form the quotient
basis and every element has unique coordinates on it.

The slices of ``B_6`` and larger are too big for that. ``Reduction.NESTED_BASIS``
skips the linear algebra and rewrites monomials with the Gröbner basis of the
nested-set presentation: for flats ``A < B`` (``A`` possibly empty) the
element ``x_A * h_B^(rk B - rk A)``, with ``h_B = sum_{C ⊇ B} x_C``, has leading
term ``x_A * x_B^(rk B - rk A)`` once smaller flats are the larger variables.
The standard monomials are the multichains ``x_{F_1}^{a_1} ... x_{F_k}^{a_k}``
with ``a_i < rk F_i - rk F_{i-1}``, the same ones ``fy_chain_count`` counts, so
this engine is never used to cross-check Hilbert series.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterable, Mapping

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from chowlab.core.errors import InvalidObjectError, ResourceGuardError
from chowlab.core.ground import Subset
from chowlab.oracle.chains import Monomial, chain_monomials, comparable_with_all, is_chain, sort_chain
from chowlab.oracle.lattice import FlatsLattice
from chowlab.polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)

Expression = Mapping[Monomial, Fraction | int]


class Reduction(str, Enum):
    """How a ``ChowRing`` reduces monomials to canonical coordinates."""
    ROW_ECHELON = "row-echelon"
    NESTED_BASIS = "nested-basis"


@dataclass(frozen=True)
class RingElement:
    """
    A homogeneous class in the Chow ring, in canonical coordinates.

    Attributes:
        degree: The degree of the class.
        coords: ``(basis monomial, coefficient)`` pairs with nonzero
            coefficients, sorted by monomial.
    """
    degree: int
    coords: tuple[tuple[Monomial, Fraction], ...] = ()

    def is_zero(self) -> bool:
        return not self.coords

    def as_expression(self) -> dict[Monomial, Fraction]:
        return dict(self.coords)


@dataclass
class _Slice:
    columns: list[Monomial]
    index: dict[Monomial, int]
    pivot_rows: dict[int, dict[int, Fraction]]
    basis: list[Monomial]


def _fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _rank(vectors: list[dict[int, Fraction]], width: int) -> int:
    rows = {r: {c: QQ(v.numerator, v.denominator) for c, v in vec.items()} for r, vec in enumerate(vectors) if vec}
    if not rows:
        return 0
    matrix = DomainMatrix(dict(enumerate(rows.values())), (len(rows), width), QQ)
    return matrix.rank()


class ChowRing:
    """
    The graded Chow ring of a ``FlatsLattice``, built slice by slice on
    demand and cached.

    Args:
        lattice: The lattice of flats.
        max_columns: Resource guard on the number of multichain monomials
            in a single slice.
        reduction: Row reduction of each slice, or rewriting by the
            nested-set Gröbner basis.
    """

    def __init__(
        self,
        lattice: FlatsLattice,
        max_columns: int = 200_000,
        reduction: Reduction = Reduction.ROW_ECHELON,
    ):
        self.lattice = lattice
        self.max_columns = max_columns
        self.reduction = Reduction(reduction)
        self._slices: dict[int, _Slice] = {}
        self._bases: dict[int, list[Monomial]] = {}
        self._indices: dict[int, dict[Monomial, int]] = {}
        self._forms: dict[Monomial, dict[Monomial, int]] = {}
        self._power_terms: dict[tuple[int, int], list[tuple[Monomial, int]]] = {}
        self._linear_forms = [
            [f for f in lattice.nonempty_masks if f >> i & 1] for i in range(lattice.ground.n)
        ]

    @property
    def top_degree(self) -> int:
        return self.lattice.rank - 1

    def _columns(self, degree: int) -> list[Monomial]:
        columns = chain_monomials(self.lattice, degree)
        if len(columns) > self.max_columns:
            raise ResourceGuardError(
                f"degree-{degree} slice of {self.lattice.name or 'lattice'} has {len(columns)} monomials "
                f"(limit {self.max_columns})"
            )
        return columns

    def _slice(self, degree: int) -> _Slice:
        cached = self._slices.get(degree)
        if cached is not None:
            return cached
        columns = self._columns(degree)
        columns.reverse()
        index = {m: c for c, m in enumerate(columns)}
        rows: dict[tuple[tuple[int, int], ...], None] = {}
        if degree >= 1:
            for m in chain_monomials(self.lattice, degree - 1):
                for form in self._linear_forms:
                    row = tuple(sorted(
                        (index[sort_chain(m + (f,))], 1) for f in form if comparable_with_all(f, m)
                    ))
                    if row:
                        rows[row] = None
        pivot_rows: dict[int, dict[int, Fraction]] = {}
        if rows:
            data = {r: {c: QQ(v) for c, v in row} for r, row in enumerate(rows)}
            reduced, pivots = DomainMatrix(data, (len(data), len(columns)), QQ).rref()
            sparse = reduced.to_sparse().rep
            for r, p in enumerate(pivots):
                pivot_rows[p] = {c: _fraction(v) for c, v in sparse.get(r, {}).items()}
        basis = [m for c, m in enumerate(columns) if c not in pivot_rows]
        basis.sort()
        built = _Slice(columns, index, pivot_rows, basis)
        self._slices[degree] = built
        logger.debug(
            "slice %s degree %d: %d monomials, %d relations, dimension %d",
            self.lattice.name, degree, len(columns), len(pivot_rows), len(basis),
        )
        return built

    # -- nested-set rewriting

    def _excess(self, monomial: Monomial) -> tuple[int, int] | None:
        """
        The first run ``x_F^a`` of a sorted multichain with
        ``a >= rk F - rk F_prev``, as ``(start, rk F - rk F_prev)``; ``None``
        for a standard monomial.
        """
        rank = self.lattice.rank_of
        previous = 0
        start = 0
        while start < len(monomial):
            flat = monomial[start]
            end = start
            while end < len(monomial) and monomial[end] == flat:
                end += 1
            gap = rank[flat] - rank[previous]
            if end - start >= gap:
                return start, gap
            previous = flat
            start = end
        return None

    def _tail_terms(self, flat: int, power: int) -> list[tuple[Monomial, int]]:
        """``h_F^power - x_F^power`` as chains of flats above ``F``, with multinomial coefficients."""
        key = (flat, power)
        cached = self._power_terms.get(key)
        if cached is not None:
            return cached
        above = [g for g in self.lattice.nonempty_masks if g & flat == flat]
        terms = []
        for combo in combinations_with_replacement(above, power):
            if combo[-1] == flat or not is_chain(combo):
                continue
            weight = factorial(power) // prod(factorial(c) for c in Counter(combo).values())
            terms.append((combo, weight))
        self._power_terms[key] = terms
        return terms

    def _normal_form(self, monomial: Monomial) -> dict[Monomial, int]:
        cached = self._forms.get(monomial)
        if cached is not None:
            return cached
        excess = self._excess(monomial)
        if excess is None:
            form = {monomial: 1}
        else:
            start, gap = excess
            flat = monomial[start]
            rest = monomial[:start] + monomial[start + gap:]
            form = {}
            for combo, weight in self._tail_terms(flat, gap):
                term = sort_chain(rest + combo)
                if not is_chain(term):
                    continue
                for m, c in self._normal_form(term).items():
                    form[m] = form.get(m, 0) - weight * c
            form = {m: c for m, c in form.items() if c}
        self._forms[monomial] = form
        return form

    # -- coordinates

    def basis(self, degree: int) -> list[Monomial]:
        if degree < 0:
            return []
        if self.reduction is Reduction.ROW_ECHELON:
            return list(self._slice(degree).basis)
        cached = self._bases.get(degree)
        if cached is None:
            cached = [m for m in self._columns(degree) if self._excess(m) is None]
            self._bases[degree] = cached
        return list(cached)

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def _index(self, degree: int) -> dict[Monomial, int]:
        cached = self._indices.get(degree)
        if cached is None:
            cached = {m: i for i, m in enumerate(self.basis(degree))}
            self._indices[degree] = cached
        return cached

    def hilbert_series(self) -> IntPolynomial:
        """``sum dim CH^d t^d`` for ``0 <= d <= rank - 1``."""
        return IntPolynomial(tuple(self.dimension(d) for d in range(self.top_degree + 1)))

    def canonical_form(self, expr: Expression) -> RingElement:
        """
        Reduces a homogeneous formal sum of x-monomials to canonical
        coordinates.

        Args:
            expr: Mapping from monomials (iterables of flat masks, in any
                order) to coefficients.

        Raises:
            InvalidObjectError: On inhomogeneous input or non-flat factors.
        """
        degrees = {len(m) for m, c in expr.items() if c}
        if not degrees:
            return RingElement(0 if not expr else len(next(iter(expr))))
        if len(degrees) > 1:
            raise InvalidObjectError(f"canonical_form needs a homogeneous expression, got degrees {sorted(degrees)}")
        degree = degrees.pop()
        if degree > self.top_degree:
            return RingElement(degree)
        flats = set(self.lattice.nonempty_masks)
        chains: dict[Monomial, Fraction] = {}
        for monomial, coeff in expr.items():
            if not coeff:
                continue
            monomial = sort_chain(monomial)
            if any(f not in flats for f in monomial):
                raise InvalidObjectError(f"monomial {monomial} uses a non-flat or the empty flat")
            if is_chain(monomial):
                chains[monomial] = chains.get(monomial, Fraction(0)) + Fraction(coeff)
        if self.reduction is Reduction.NESTED_BASIS:
            reduced: dict[Monomial, Fraction] = {}
            for monomial, coeff in chains.items():
                for m, c in self._normal_form(monomial).items():
                    reduced[m] = reduced.get(m, Fraction(0)) + coeff * c
            return RingElement(degree, tuple(sorted((m, v) for m, v in reduced.items() if v)))

        vector: dict[int, Fraction] = {}
        sl = self._slice(degree)
        for monomial, coeff in chains.items():
            c = sl.index[monomial]
            vector[c] = vector.get(c, Fraction(0)) + coeff
        for p in [p for p in vector if p in sl.pivot_rows]:
            factor = vector[p]
            for c, v in sl.pivot_rows[p].items():
                vector[c] = vector.get(c, Fraction(0)) - factor * v
        coords = sorted((sl.columns[c], v) for c, v in vector.items() if v)
        return RingElement(degree, tuple(coords))

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        product: dict[Monomial, Fraction] = {}
        for ma, ca in a.coords:
            for mb, cb in b.coords:
                m = sort_chain(ma + mb)
                product[m] = product.get(m, Fraction(0)) + ca * cb
        if not product:
            return RingElement(a.degree + b.degree)
        return self.canonical_form(product)

    def product(self, factors: Iterable[RingElement]) -> RingElement:
        result = self.one()
        for f in factors:
            result = self.multiply(result, f)
        return result

    def power(self, a: RingElement, m: int) -> RingElement:
        return self.product([a] * m)

    def one(self) -> RingElement:
        return RingElement(0, (((), Fraction(1)),))

    def add(self, a: RingElement, b: RingElement, scale: Fraction | int = 1) -> RingElement:
        """``a + scale * b``."""
        if a.degree != b.degree and not (a.is_zero() or b.is_zero()):
            raise InvalidObjectError("cannot add classes of different degrees")
        expr: dict[Monomial, Fraction] = dict(a.coords)
        for m, c in b.coords:
            expr[m] = expr.get(m, Fraction(0)) + c * scale
        return self.canonical_form(expr) if expr else RingElement(max(a.degree, b.degree))

    def _flat_mask(self, f: Subset) -> int:
        mask = f.relabel(self.lattice.ground).mask
        if mask == 0 or mask not in self.lattice.rank_of:
            raise InvalidObjectError(f"{f} is not a nonempty flat of {self.lattice.name or 'the lattice'}")
        return mask

    def x_element(self, f: Subset) -> RingElement:
        return self.canonical_form({(self._flat_mask(f),): 1})

    def h_expression(self, f: Subset) -> dict[Monomial, int]:
        """``h_F = sum_{G ⊇ F} x_G`` as a formal sum."""
        mask = self._flat_mask(f)
        return {(g,): 1 for g in self.lattice.nonempty_masks if g & mask == mask}

    def h_element(self, f: Subset) -> RingElement:
        return self.canonical_form(self.h_expression(f))

    def g_expression(self, f: Subset) -> dict[Monomial, int]:
        """
        ``g_F = sum_{S ⊆ E_{> max F}} x_{F ∪ S}``.

        Raises:
            InvalidObjectError: If the lattice is not boolean.
        """
        if not self.lattice.is_boolean():
            raise InvalidObjectError("g-generators are only defined here for boolean matroids")
        mask = self._flat_mask(f)
        above = self.lattice.full_mask & ~((1 << mask.bit_length()) - 1)
        out = {}
        sub = above
        while True:
            out[(mask | sub,)] = 1
            if sub == 0:
                break
            sub = (sub - 1) & above
        return out

    def g_element(self, f: Subset) -> RingElement:
        return self.canonical_form(self.g_expression(f))

    def g_monomial_x_expansion(self, parts: Iterable[Subset]) -> dict[Monomial, int]:
        """
        The x-expansion of ``prod g_S`` modulo incomparability: a formal sum
        over multichain monomials with integer coefficients.
        """
        expansion: dict[Monomial, int] = {(): 1}
        for s in parts:
            factor = self.g_expression(s)
            nxt: dict[Monomial, int] = {}
            for m, c in expansion.items():
                for (f,), d in factor.items():
                    if comparable_with_all(f, m):
                        key = sort_chain(m + (f,))
                        nxt[key] = nxt.get(key, 0) + c * d
            expansion = {m: c for m, c in nxt.items() if c}
        return expansion

    def g_monomial(self, parts: Iterable[Subset]) -> RingElement:
        parts = list(parts)
        expansion = self.g_monomial_x_expansion(parts)
        if not expansion:
            return RingElement(len(parts))
        return self.canonical_form(expansion)

    def simplicial_relation(self, f1: Subset, f2: Subset) -> RingElement:
        """
        ``(h_F - h_{F1})(h_F - h_{F2})`` with ``F`` the closure of
        ``F1 ∪ F2``; zero in a correct model.
        """
        join = self.lattice.closure(self._flat_mask(f1) | self._flat_mask(f2))
        ground = self.lattice.ground
        h = self.h_element(Subset(ground, join))
        a = self.add(h, self.h_element(f1), -1)
        b = self.add(h, self.h_element(f2), -1)
        return self.multiply(a, b)

    def principal_ideal_hilbert(self, power: int) -> IntPolynomial:
        """
        Graded dimensions of the ideal ``(h_E^power)``: in degree ``d`` the
        rank of multiplication by ``h_E^power`` on ``CH^{d - power}``.

        Raises:
            InvalidObjectError: Unless the lattice is boolean and
                ``0 <= power <= n - 1``.
        """
        n = self.lattice.ground.n
        if not self.lattice.is_boolean():
            raise InvalidObjectError("principal_ideal_hilbert is defined for boolean lattices")
        if not 0 <= power <= n - 1:
            raise InvalidObjectError(f"power must lie in [0, {n - 1}], got {power}")
        generator = self.power(self.h_element(self.lattice.ground.full()), power)
        coeffs = [0] * (self.top_degree + 1)
        for degree in range(power, self.top_degree + 1):
            index = self._index(degree)
            images = []
            for b in self.basis(degree - power):
                image = self.multiply(generator, RingElement(degree - power, ((b, Fraction(1)),)))
                images.append({index[m]: c for m, c in image.coords})
            coeffs[degree] = _rank(images, len(index))
        return IntPolynomial(tuple(coeffs))

    def span_dimension(self, elements: Iterable[RingElement], degree: int) -> int:
        """Dimension of the span of degree-``degree`` classes."""
        if degree > self.top_degree:
            return 0
        index = self._index(degree)
        vectors = []
        for element in elements:
            if element.degree != degree and not element.is_zero():
                raise InvalidObjectError(f"expected degree {degree}, got {element.degree}")
            vectors.append({index[m]: c for m, c in element.coords})
        return _rank(vectors, len(index))


def hilbert_series(lattice: FlatsLattice, max_columns: int = 200_000) -> IntPolynomial:
    """Chow polynomial of the matroid with lattice of flats ``lattice``."""
    return ChowRing(lattice, max_columns).hilbert_series()


def principal_ideal_hilbert(lattice: FlatsLattice, power: int, max_columns: int = 200_000) -> IntPolynomial:
    return ChowRing(lattice, max_columns).principal_ideal_hilbert(power)


def canonical_form(expr: Expression, lattice: FlatsLattice) -> RingElement:
    return ChowRing(lattice).canonical_form(expr)
