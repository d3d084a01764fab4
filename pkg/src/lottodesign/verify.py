"""Validity checks for covering designs and lottery designs.

Both checks reduce to one index: the set of all t-subsets contained in
some block.  A t-subset is covered iff it is in the index; a p-subset is
served iff at least one of its t-subsets is.  The index costs
len(design) * binomial(k, t) entries, after which each query is a lookup.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field

from .combinatorics import binomial
from .model import Block, Design, Scheme

DEFAULT_WITNESS_CAP = 10


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a coverage or lottery check.

    ``checked`` counts the subsets examined, ``deficient`` those found
    uncovered/unserved, and ``witnesses`` lists the first few offenders in
    lexicographic order.  ``valid`` holds exactly when ``deficient`` is 0;
    in early-exit mode ``checked`` and ``deficient`` stop at the first
    offender, so ``deficient`` is then a lower bound.
    """

    valid: bool
    checked: int
    deficient: int
    witnesses: tuple[Block, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.valid != (self.deficient == 0):
            raise ValueError("valid must hold exactly when deficient == 0")


def intersect_count(a: Iterable[int], b: Iterable[int]) -> int:
    """Number of common elements of two blocks."""
    return len(set(a) & set(b))


def _covered_index(design: Design, t: int) -> set[tuple[int, ...]]:
    covered: set[tuple[int, ...]] = set()
    for block in design:
        covered.update(itertools.combinations(block, t))
    return covered


def _census(
    subsets: Iterable[tuple[int, ...]],
    is_ok,
    total: int,
    witness_cap: int | None,
    early_exit: bool,
) -> VerifyReport:
    checked = 0
    deficient = 0
    witnesses: list[tuple[int, ...]] = []
    for sub in subsets:
        checked += 1
        if is_ok(sub):
            continue
        deficient += 1
        if witness_cap is None or len(witnesses) < witness_cap:
            witnesses.append(sub)
        if early_exit:
            return VerifyReport(False, checked, deficient, tuple(witnesses))
    if not early_exit:
        checked = total
    return VerifyReport(deficient == 0, checked, deficient, tuple(witnesses))


def verify_covering(
    design: Design,
    t: int,
    *,
    witness_cap: int | None = DEFAULT_WITNESS_CAP,
    early_exit: bool = False,
) -> VerifyReport:
    """Check that every t-subset of {1..n} lies inside at least one block.

    Witnesses are the uncovered t-subsets, in lexicographic order, capped
    at ``witness_cap`` (None keeps all).
    """
    if not 1 <= t <= design.k:
        raise ValueError(f"require 1 <= t <= k, got t={t}, k={design.k}")
    covered = _covered_index(design, t)
    return _census(
        itertools.combinations(range(1, design.n + 1), t),
        covered.__contains__,
        binomial(design.n, t),
        witness_cap,
        early_exit,
    )


def verify_lottery(
    design: Design,
    scheme: Scheme,
    *,
    witness_cap: int | None = DEFAULT_WITNESS_CAP,
    early_exit: bool = False,
) -> VerifyReport:
    """Check that every p-subset meets at least one block in >= t elements.

    Witnesses are the unserved p-subsets, in lexicographic order.
    """
    if scheme.n != design.n or scheme.k != design.k:
        raise ValueError(
            f"scheme ({scheme.n}, {scheme.k}, ...) does not match "
            f"design over n={design.n}, k={design.k}"
        )
    covered = _covered_index(design, scheme.t)
    t = scheme.t

    def served(psub: tuple[int, ...]) -> bool:
        return any(s in covered for s in itertools.combinations(psub, t))

    return _census(
        itertools.combinations(range(1, design.n + 1), scheme.p),
        served,
        binomial(design.n, scheme.p),
        witness_cap,
        early_exit,
    )
