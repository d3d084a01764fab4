"""Value types for lottery schemes, blocks, and designs, and the design file format.

A block is a strictly ascending tuple of 1-based integers.  A design is an
ordered, duplicate-free collection of equal-sized blocks over a fixed
ground set.  Block order is preserved (construction order is meaningful
for greedy outputs), but design equality ignores it; use
``Design.equal_ordered`` for the strict comparison.

Design files are plain UTF-8 text: one block per line, elements separated
by single spaces in ascending order, ``#`` starts a comment line, blank
lines are ignored.  LF and CRLF are both accepted on input; LF is emitted.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

Block = tuple[int, ...]


class DesignFormatError(ValueError):
    """Raised for malformed design file content."""


class UnsortedBlockWarning(UserWarning):
    """Issued when an input line is accepted but had to be sorted."""


@dataclass(frozen=True)
class Scheme:
    """A p/n lottery with k-element tickets and hit threshold t.

    n numbers in the urn, p of them drawn without replacement, k numbers
    per ticket, and a ticket qualifies when it shares at least t numbers
    with the draw.  Covering problems use the (n, k, t) projection.
    t = 0 is permitted as a degenerate threshold (every ticket qualifies).
    """

    n: int
    k: int
    p: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"require 1 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.p <= self.n:
            raise ValueError(f"require 1 <= p <= n, got p={self.p}, n={self.n}")
        if not 0 <= self.t <= min(self.k, self.p):
            raise ValueError(
                f"require 0 <= t <= min(k, p), got t={self.t}, k={self.k}, p={self.p}"
            )


def validate_block(elements: Iterable[int], n: int, k: int | None = None) -> Block:
    """Canonicalize elements into a block over {1..n}, rejecting junk.

    Sorts the input; duplicates and out-of-range elements are errors, and
    so is a length mismatch when k is given.
    """
    elems = list(elements)
    if k is not None and len(elems) != k:
        raise ValueError(f"block has {len(elems)} elements, expected {k}")
    if not elems:
        raise ValueError("empty block")
    for e in elems:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise ValueError(f"element {e!r} outside [1, {n}]")
    block = tuple(sorted(elems))
    for a, b in zip(block, block[1:]):
        if a == b:
            raise ValueError(f"duplicate element {a} in block {block}")
    return block


class Design:
    """An ordered, duplicate-free collection of k-blocks over {1..n}.

    Immutable after construction.  Equality is order-insensitive set
    equality on (n, k, blocks); ``equal_ordered`` compares sequences.
    """

    __slots__ = ("n", "k", "_blocks", "_blockset")

    def __init__(self, n: int, k: int, blocks: Iterable[Iterable[int]] = ()):
        if not 1 <= k <= n:
            raise ValueError(f"require 1 <= k <= n, got n={n}, k={k}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        validated: list[Block] = []
        seen: set[Block] = set()
        for raw in blocks:
            block = validate_block(raw, n, k)
            if block in seen:
                raise ValueError(f"duplicate block {block}")
            seen.add(block)
            validated.append(block)
        object.__setattr__(self, "_blocks", tuple(validated))
        object.__setattr__(self, "_blockset", frozenset(validated))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Design is immutable")

    @property
    def blocks(self) -> tuple[Block, ...]:
        return self._blocks

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self._blocks)

    def __contains__(self, block: object) -> bool:
        return block in self._blockset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self._blockset == other._blockset
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self._blockset))

    def equal_ordered(self, other: "Design") -> bool:
        """Strict comparison: same parameters and same block sequence."""
        return (
            self.n == other.n and self.k == other.k and self._blocks == other._blocks
        )

    def with_block(self, block: Iterable[int]) -> "Design":
        """A new design with one block appended; adding an existing block is an error."""
        return Design(self.n, self.k, (*self._blocks, block))

    def __repr__(self) -> str:
        return f"Design(n={self.n}, k={self.k}, blocks={len(self._blocks)})"


def parse_design(text: str, n: int, k: int) -> Design:
    """Parse design file content into a validated Design.

    Each data line must hold exactly k integers in [1, n] with no
    repeats; line order becomes block order.  Unsorted lines are accepted,
    sorted, and reported through an UnsortedBlockWarning.
    """
    blocks: list[Block] = []
    seen: set[Block] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        values = []
        for tok in tokens:
            try:
                values.append(int(tok, 10))
            except ValueError:
                raise DesignFormatError(
                    f"line {lineno}: non-integer token {tok!r}"
                ) from None
        try:
            block = validate_block(values, n, k)
        except ValueError as exc:
            raise DesignFormatError(f"line {lineno}: {exc}") from None
        if values != sorted(values):
            warnings.warn(
                f"line {lineno}: block {tuple(values)} not in ascending order; sorted",
                UnsortedBlockWarning,
                stacklevel=2,
            )
        if block in seen:
            raise DesignFormatError(f"line {lineno}: duplicate block {block}")
        seen.add(block)
        blocks.append(block)
    return Design(n, k, blocks)


def serialize_design(design: Design) -> str:
    """Render a design in the canonical file format (inverse of parse_design)."""
    if not design.blocks:
        return ""
    return "\n".join(" ".join(map(str, b)) for b in design.blocks) + "\n"
