"""Deterministic motif packings and decompositions of TT_n.

Each construction is a pairing of dots in the grid view of the arc set
(see `ttmotifs.diagram`): a row pair is a fork, a column pair is a
collider, a diagonal pair is a chain.  Three of the constructions
maximise one kind and spend the unpairable remainder on a second kind;
the fourth mixes all three kinds.  All four are total: whenever n(n-1)/2
is odd one arc necessarily stays unpaired, and it is simply left in
`unused_arcs`, so the result degrades from a decomposition to a packing
exactly for n = 2, 3 (mod 4).

Every construction is a pure function of n, and emission order is the
construction's own sweep order, so repeated calls
produce identical motif lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .core import CHAIN, COLLIDER, FORK, Arc, Motif, chain, collider, fork, motif_arcs


class MotifCounts(NamedTuple):
    chains: int
    colliders: int
    forks: int


@dataclass(frozen=True)
class MotifCollection:
    """An ordered family of motifs over one TT_n.

    The container itself enforces nothing beyond the order being
    positive: arc-disjointness, canonical form, and vertex ranges are
    the business of `ttmotifs.analysis.verify`, which must be able to
    inspect broken collections instead of never seeing them.
    """

    n: int
    motifs: tuple[Motif, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be at least 1, got {self.n}")

    @cached_property
    def used_arcs(self) -> frozenset[Arc]:
        """Arcs appearing in at least one motif."""
        return frozenset(arc for motif in self.motifs for arc in motif_arcs(motif))

    @cached_property
    def unused_arcs(self) -> frozenset[Arc]:
        """Arcs of TT_n in no motif."""
        used = self.used_arcs
        return frozenset(
            (i, j)
            for i in range(1, self.n)
            for j in range(i + 1, self.n + 1)
            if (i, j) not in used
        )

    @cached_property
    def counts(self) -> MotifCounts:
        """Tally of the stored kind tags."""
        tally = {CHAIN: 0, COLLIDER: 0, FORK: 0}
        for motif in self.motifs:
            if motif.kind in tally:
                tally[motif.kind] += 1
        return MotifCounts(tally[CHAIN], tally[COLLIDER], tally[FORK])


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")


def construct_mixed(n: int) -> MotifCollection:
    """Mixed decomposition: diagonal chains, then row forks, then colliders.

    Consecutive main-diagonal dots pair into the chains
    (2m-1) -> 2m -> (2m+1); the dots remaining in each row pair off left
    to right into forks; the unpaired dots — all in column n — pair off
    top to bottom into colliders with head n.
    """
    _check_order(n)
    motifs: list[Motif] = []
    for m in range(1, (n - 1) // 2 + 1):
        motifs.append(chain(2 * m - 1, 2 * m, 2 * m + 1))
    leftover_rows: list[int] = []
    for i in range(1, n):
        if i <= n - 2:
            cols = list(range(i + 2, n + 1))
        elif n % 2 == 0:
            cols = [n]  # odd diagonal count: dot (n-1, n) survives the chains
        else:
            cols = []
        for p in range(0, len(cols) - 1, 2):
            motifs.append(fork(i, cols[p], cols[p + 1]))
        if len(cols) % 2 == 1:
            leftover_rows.append(i)  # the unpaired dot is (i, n)
    for p in range(0, len(leftover_rows) - 1, 2):
        motifs.append(collider(leftover_rows[p], leftover_rows[p + 1], n))
    return MotifCollection(n, tuple(motifs))


def construct_chain_max(n: int) -> MotifCollection:
    """Chain-maximal packing: saturate every interior centre with chains.

    High centres t (upper half, descending) host the chains
    i -> t -> i+t for i = 1..n-t; low centres t (descending) host
    i -> t -> n-i for i = 1..t-1.  That uses every arc except
    (i, n) for i = 1 and each low centre i; those pair into colliders
    with head n, tails taken in ascending consecutive pairs.
    """
    _check_order(n)
    motifs: list[Motif] = []
    mid = (n + 2) // 2  # smallest high centre
    for t in range(n - 1, mid - 1, -1):
        for i in range(1, n - t + 1):
            motifs.append(chain(i, t, i + t))
    for t in range(mid - 1, 1, -1):
        for i in range(1, t):
            motifs.append(chain(i, t, n - i))
    tails = list(range(1, mid)) if n >= 2 else []
    for p in range(0, len(tails) - 1, 2):
        motifs.append(collider(tails[p], tails[p + 1], n))
    return MotifCollection(n, tuple(motifs))


def construct_collider_max(n: int) -> MotifCollection:
    """Collider-maximal packing: pair every column bottom-up.

    Column j pairs (j-1, j) with (j-2, j), (j-3, j) with (j-4, j), and
    so on; the even columns are left with their top dot (1, j), and
    those pair into forks with tail 1, heads ascending.
    """
    _check_order(n)
    motifs: list[Motif] = []
    unpaired_heads: list[int] = []
    for j in range(2, n + 1):
        rows = list(range(j - 1, 0, -1))
        for p in range(0, len(rows) - 1, 2):
            motifs.append(collider(rows[p + 1], rows[p], j))
        if len(rows) % 2 == 1:
            unpaired_heads.append(j)  # the unpaired dot is (1, j)
    for p in range(0, len(unpaired_heads) - 1, 2):
        motifs.append(fork(1, unpaired_heads[p], unpaired_heads[p + 1]))
    return MotifCollection(n, tuple(motifs))


def construct_fork_max(n: int) -> MotifCollection:
    """Fork-maximal packing: pair every row left-to-right.

    Row i pairs (i, i+1) with (i, i+2), (i, i+3) with (i, i+4), and so
    on; rows of odd length are left with their last dot (i, n), and
    those pair into colliders with head n, tails ascending.
    """
    _check_order(n)
    motifs: list[Motif] = []
    unpaired_tails: list[int] = []
    for i in range(1, n):
        cols = list(range(i + 1, n + 1))
        for p in range(0, len(cols) - 1, 2):
            motifs.append(fork(i, cols[p], cols[p + 1]))
        if len(cols) % 2 == 1:
            unpaired_tails.append(i)  # the unpaired dot is (i, n)
    for p in range(0, len(unpaired_tails) - 1, 2):
        motifs.append(collider(unpaired_tails[p], unpaired_tails[p + 1], n))
    return MotifCollection(n, tuple(motifs))


STRATEGIES = {
    "mixed": construct_mixed,
    "chain-max": construct_chain_max,
    "collider-max": construct_collider_max,
    "fork-max": construct_fork_max,
}
