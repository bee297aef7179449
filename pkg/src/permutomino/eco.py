"""Recursive growth of convex permutominoes.

Every convex permutomino of size n+1 is produced exactly once by applying
one of four local expansions to a convex permutomino of size n, always acting
on the rightmost column.  Each expansion is named after the reentrant corner
kind it creates at the new rightmost junction:

* ``EN``  append a column flush with the top (needs a top-flush parent);
* ``SE``  duplicate the row of the i-th rightmost-column cell and append a
  bottom-anchored column of i cells;
* ``WS``  duplicate the same row and append a top-anchored column of
  ``degree - i + 1`` cells;
* ``NW``  append a column hanging one row below the bottom (needs a
  bottom-flush parent), then renormalize.

The inverse map :func:`parent` reads the rightmost reentrant corner of a
shape and undoes the unique expansion that created it, which is what makes
the construction a bijection level by level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .grid import Interval, Permutomino, UNIT, boundary_word, corner_report


@dataclass(frozen=True)
class OperationTag:
    """Which expansion produced a child; ``cell`` is the 1-based index of
    the targeted rightmost-column cell for SE/WS and ``None`` otherwise."""

    kind: str
    cell: int | None = None

    def __str__(self) -> str:
        return self.kind if self.cell is None else f"{self.kind}:{self.cell}"


def _duplicate_row(cols: tuple[Interval, ...], r: int) -> tuple[Interval, ...]:
    # insert a copy of row r next to itself: rows above shift up, columns
    # through r stretch by one.
    return tuple(
        (lo + (lo > r), hi + (hi >= r))
        for lo, hi in cols
    )


def _remove_row(cols: tuple[Interval, ...], r: int) -> tuple[Interval, ...]:
    return tuple(
        (lo - (lo > r), hi - (hi >= r))
        for lo, hi in cols
    )


def expand_en(p: Permutomino) -> Permutomino:
    """Append a rightmost column one cell taller, flush with the top.

    Requires the parent's rightmost column to touch the top of the bounding
    box; the child keeps that property and its rightmost reentrant corner is
    of kind EN.
    """
    if not p.touches_top():
        raise ValueError("EN expansion needs a top-flush rightmost column")
    lo, hi = p.cols[-1]
    return Permutomino(p.cols + ((lo, hi + 1),))


def expand_nw(p: Permutomino) -> Permutomino:
    """Append a rightmost column one cell taller, hanging one row below the
    old bottom, and shift everything up to restore the normalization.

    Requires the parent's rightmost column to touch the bottom; the child
    keeps that property and its rightmost reentrant corner is of kind NW.
    """
    if not p.touches_bottom():
        raise ValueError("NW expansion needs a bottom-flush rightmost column")
    shifted = tuple((lo + 1, hi + 1) for lo, hi in p.cols)
    return Permutomino(shifted + ((1, p.cols[-1][1] + 1),))


def expand_se(p: Permutomino, i: int) -> Permutomino:
    """Duplicate the row of the i-th rightmost-column cell (from the bottom)
    and append a bottom-anchored column of exactly i cells.

    Valid for every shape and every ``1 <= i <= degree``; the child has
    degree i and its rightmost reentrant corner is of kind SE.
    """
    lo, hi = p.cols[-1]
    if not 1 <= i <= hi - lo + 1:
        raise ValueError(f"cell index {i} out of range 1..{hi - lo + 1}")
    r = lo + i - 1
    return Permutomino(_duplicate_row(p.cols, r) + ((lo, r),))


def expand_ws(p: Permutomino, i: int) -> Permutomino:
    """Duplicate the row of the i-th rightmost-column cell (from the bottom)
    and append a top-anchored column of exactly ``degree - i + 1`` cells.

    Valid for every shape and every ``1 <= i <= degree``; the child's
    rightmost reentrant corner is of kind WS.
    """
    lo, hi = p.cols[-1]
    if not 1 <= i <= hi - lo + 1:
        raise ValueError(f"cell index {i} out of range 1..{hi - lo + 1}")
    r = lo + i - 1
    return Permutomino(_duplicate_row(p.cols, r) + ((lo + i, hi + 1),))


def children(p: Permutomino) -> list[tuple[OperationTag, Permutomino]]:
    """All expansions of a shape, in the fixed emission order
    EN, SE(1..k), WS(1..k), NW (admissibility filtered by class).

    A class-B parent of degree k gets 2k+2 children, class R gets 2k+1 and
    class G gets 2k.
    """
    k = p.degree
    out: list[tuple[OperationTag, Permutomino]] = []
    if p.touches_top():
        out.append((OperationTag("EN"), expand_en(p)))
    for i in range(1, k + 1):
        out.append((OperationTag("SE", i), expand_se(p, i)))
    for i in range(1, k + 1):
        out.append((OperationTag("WS", i), expand_ws(p, i)))
    if p.touches_bottom():
        out.append((OperationTag("NW"), expand_nw(p)))
    return out


def parent(p: Permutomino) -> tuple[Permutomino, OperationTag]:
    """Undo the unique expansion that produced ``p`` (size must be >= 2).

    Dispatches on the kind of the rightmost reentrant corner: EN and NW drop
    the rightmost column (NW also shifts back down); SE and WS additionally
    delete one of the two identical rows created by the duplication, located
    just above the rightmost column's top (SE) or just below its bottom (WS).
    """
    if p.n < 2:
        raise ValueError("the single cell has no parent")
    _, kind = corner_report(boundary_word(p)).rightmost_reentrant()
    rest = p.cols[:-1]
    lo, hi = p.cols[-1]
    if kind == "EN":
        return Permutomino(rest), OperationTag("EN")
    if kind == "NW":
        shift = min(c_lo for c_lo, _ in rest) - 1
        return Permutomino(tuple((c_lo - shift, c_hi - shift) for c_lo, c_hi in rest)), OperationTag("NW")
    if kind == "SE":
        return Permutomino(_remove_row(rest, hi + 1)), OperationTag("SE", hi - lo + 1)
    if kind == "WS":
        parent_p = Permutomino(_remove_row(rest, lo - 1))
        return parent_p, OperationTag("WS", parent_p.degree - (hi - lo + 1) + 1)
    raise AssertionError(f"unexpected reentrant kind {kind}")


def iter_permutominoes(n: int) -> Iterator[Permutomino]:
    """Depth-first stream of all convex permutominoes of size n, each
    exactly once, in the deterministic child order.

    Memory stays bounded by the tree depth times the object size.
    """
    if n < 1:
        raise ValueError("size must be >= 1")

    def walk(p: Permutomino) -> Iterator[Permutomino]:
        if p.n == n:
            yield p
            return
        for _tag, child in children(p):
            yield from walk(child)

    return walk(UNIT)


def iter_with_paths(n: int) -> Iterator[tuple[Permutomino, tuple[str, ...]]]:
    """Like :func:`iter_permutominoes` but also yields the operation path
    from the single cell, as printable tags."""
    if n < 1:
        raise ValueError("size must be >= 1")

    def walk(p: Permutomino, path: tuple[str, ...]) -> Iterator[tuple[Permutomino, tuple[str, ...]]]:
        if p.n == n:
            yield p, path
            return
        for tag, child in children(p):
            yield from walk(child, path + (str(tag),))

    return walk(UNIT, ())


def generate(n: int, visitor: Callable[[Permutomino], None] | None = None) -> int:
    """Visit every convex permutomino of size n once; returns the count."""
    count = 0
    for p in iter_permutominoes(n):
        count += 1
        if visitor is not None:
            visitor(p)
    return count
