"""
Line-oriented lattice files.

The first non-comment line is ``n=<n>``; every further line is one flat as
sorted comma-separated labels, optionally in braces. ``{}`` denotes the empty
flat. The empty flat and the ground set are added when missing, since every
loopless matroid has them. ``#`` starts a comment.
"""
from __future__ import annotations

import logging
from pathlib import Path

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet
from chowlab.oracle.lattice import FlatsLattice
from chowlab.parsing.text import parse_int_list

logger = logging.getLogger(__name__)


def parse_lattice_text(text: str, name: str = "") -> FlatsLattice:
    """
    Parses the contents of a lattice file.

    Raises:
        InvalidObjectError: On a missing header, malformed flats, or a flat
            collection that fails the lattice axioms.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise InvalidObjectError("lattice file must start with a line 'n=<n>'")
    try:
        n = int(lines[0].replace(" ", "")[2:])
    except ValueError:
        raise InvalidObjectError(f"bad header {lines[0]!r}") from None
    ground = GroundSet.canonical(n)
    flats = [()]
    for line in lines[1:]:
        labels = parse_int_list(line.strip("{}"))
        if list(labels) != sorted(set(labels)):
            raise InvalidObjectError(f"flat {line!r} must list distinct labels in increasing order")
        flats.append(labels)
    flats.append(ground.labels)
    return FlatsLattice.from_flats(ground, flats, name)


def load_lattice(path: str | Path) -> FlatsLattice:
    """Reads and validates a lattice file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InvalidObjectError(f"lattice file not found: {path}") from None
    lattice = parse_lattice_text(text, name=path.stem)
    logger.info("lattice_loaded", extra={"details": {"path": str(path), "flats": len(lattice)}})
    return lattice


def dump_lattice(lattice: FlatsLattice) -> str:
    """Serializes a lattice; flats are listed by cardinality, then mask."""
    lines = [f"n={lattice.ground.n}"]
    for flat in lattice.flats:
        lines.append("{" + ",".join(str(x) for x in flat.labels) + "}")
    return "\n".join(lines) + "\n"
