"""
The g-presentation layer for boolean matroids.

For a flat ``F`` of the boolean matroid on ``E`` the generator
``g_F = sum x_{F ∪ S}`` runs over ``S ⊆ E_{> max F}``; its generation is
``max F``. Multiplying a basis monomial by ``g_E`` and rewriting the product
to normal form is encoded on inversion sequences by ``g_map``, which either
returns the inversion sequence of the resulting basis monomial or ``ZERO``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, InversionSequence, Subset
from chowlab.chow.boolean import NormalMonomial


class Zero(enum.Enum):
    """Marker for a product that rewrites to zero."""
    ZERO = "ZERO"

    def __str__(self) -> str:
        return self.value


ZERO = Zero.ZERO

RewriteResult = Union[InversionSequence, Zero]


class RewriteCase(str, enum.Enum):
    """The branch of ``g_map`` applied at one step of the recursion."""
    BASE = "base"
    LAST_ZERO = "last-zero"
    NO_ZERO = "no-zero"
    INNER_ZERO = "inner-zero"


@dataclass(frozen=True)
class RewriteStep:
    case: RewriteCase
    sequence: InversionSequence


@dataclass(frozen=True)
class GGenerator:
    """
    A g-generator ``g_F`` of the boolean Chow ring.

    Attributes:
        flat: The nonempty indexing subset ``F``.
    """
    flat: Subset

    def __post_init__(self) -> None:
        if not self.flat:
            raise InvalidObjectError("g-generators are indexed by nonempty flats")

    @property
    def generation(self) -> int:
        """``Gen(F)``, which is ``max F`` for boolean matroids."""
        return self.flat.max

    def x_support(self) -> list[Subset]:
        return g_expand(self.flat, self.flat.ground)


def g_expand(f: Subset, g: GroundSet) -> list[Subset]:
    """
    Index set of the x-expansion of ``g_F``: ``{F ∪ S : S ⊆ E_{> max F}}``,
    ordered by bit mask.

    Raises:
        InvalidObjectError: If ``F`` is empty.
    """
    f = f.relabel(g)
    if not f:
        raise InvalidObjectError("g_F is only defined for nonempty F")
    above = g.above(f.max).mask
    out = []
    sub = above
    while True:
        out.append(Subset(g, f.mask | sub))
        if sub == 0:
            break
        sub = (sub - 1) & above
    return sorted(out, key=lambda s: s.mask)


def _g_map(e: tuple[int, ...], trace: list[RewriteStep] | None) -> tuple[int, ...] | None:
    n = len(e)
    if n == 1:
        if trace is not None:
            trace.append(RewriteStep(RewriteCase.BASE, InversionSequence._trusted(e)))
        return None
    if e[-1] == 0:
        if trace is not None:
            trace.append(RewriteStep(RewriteCase.LAST_ZERO, InversionSequence._trusted(e)))
        return (0,) + tuple(v + 1 for v in e[:-1])
    last_zero = max((i for i in range(1, n) if e[i] == 0), default=None)
    if last_zero is None:
        if trace is not None:
            trace.append(RewriteStep(RewriteCase.NO_ZERO, InversionSequence._trusted(e)))
        image = _g_map(tuple(v - 1 for v in e[1:]), trace)
        if image is None:
            return None
        return (0,) + tuple(v + 1 for v in image)
    if trace is not None:
        trace.append(RewriteStep(RewriteCase.INNER_ZERO, InversionSequence._trusted(e)))
    image = _g_map(e[:last_zero], trace)
    if image is None:
        return None
    return image + e[last_zero:]


def g_map(e: InversionSequence) -> RewriteResult:
    """
    Rewrites ``g_E`` times the basis monomial of ``e``.

    - ``n = 1``: ``ZERO``.
    - ``e_n = 0``: ``(0, e_1 + 1, ..., e_{n-1} + 1)``.
    - no zero after position 1: recurse on ``(e_2 - 1, ..., e_n - 1)`` and
      shift the image back up behind a leading zero.
    - otherwise, with ``k < n`` the last zero: recurse on ``e_1..e_{k-1}``
      and keep ``e_k..e_n``.

    Raises:
        InvalidObjectError: For the empty sequence.
    """
    if not e:
        raise InvalidObjectError("g_map needs n >= 1")
    image = _g_map(tuple(e), None)
    return ZERO if image is None else InversionSequence._trusted(image)


def rewrite_trace(e: InversionSequence) -> tuple[RewriteResult, list[RewriteStep]]:
    """``g_map(e)`` together with the case applied at each recursion level."""
    if not e:
        raise InvalidObjectError("g_map needs n >= 1")
    trace: list[RewriteStep] = []
    image = _g_map(tuple(e), trace)
    return (ZERO if image is None else InversionSequence._trusted(image)), trace


def rewrite_case(e: InversionSequence) -> RewriteCase:
    """The top-level branch ``g_map`` takes on ``e``."""
    return rewrite_trace(e)[1][0].case


def psi_f_image(f: Subset, m: NormalMonomial, g: GroundSet) -> NormalMonomial:
    """
    The image ``g_F * prod g_{S ∪ F_{<= max S}}`` of a normal monomial ``m``
    over ``E \\ F``, as a ``⊲``-sorted normal monomial over ``E``.

    Raises:
        InvalidObjectError: If ``F`` misses ``max E``, is ``{max E}`` or ``E``,
            or ``m`` is not over ``E \\ F``.
        NotNormalError: If the image is not normal, which cannot happen for a
            normal ``m``.
    """
    f = f.relabel(g)
    if g.max not in f:
        raise InvalidObjectError(f"F = {f} must contain max E = {g.max}")
    if len(f) < 2:
        raise InvalidObjectError(f"F = {f} must contain an element besides max E")
    if f == g.full():
        raise InvalidObjectError("F must be a proper subset of E")
    complement = g.without(f.labels)
    if any(label not in complement for s in m.parts for label in s.labels):
        raise InvalidObjectError(f"monomial {m} does not live on E \\ F = {complement.labels}")
    parts = [f]
    for s in m.parts:
        parts.append(s.relabel(g) | f.at_most(s.max))
    return NormalMonomial.from_parts(g, parts)
