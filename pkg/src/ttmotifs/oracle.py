"""Exact search oracle for maximum motif packings.

A deliberately independent cross-check on the closed-form counts and
the constructions: depth-first branch and bound over the candidate
motifs of TT_n, in fixed lexicographic order, pruning with per-centre
capacity bounds recomputed on the residual arc supply.  The search is
fully deterministic under a node budget, and it is anytime-sound: the
reported optimum always comes with a witness packing, so even a
truncated run certifies a lower bound.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from itertools import combinations

from .constructions import MotifCollection
from .core import CHAIN, COLLIDER, FORK, MOTIF_KINDS, Motif, motif_arcs

DEFAULT_MAX_NODES = 10_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Limits on the search: node expansions and/or wall-clock seconds.

    None means unlimited for that field; a given limit must be positive.
    """

    max_nodes: int | None = DEFAULT_MAX_NODES
    max_time: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError(f"max_nodes must be positive, got {self.max_nodes}")
        if self.max_time is not None and self.max_time <= 0:
            raise ValueError(f"max_time must be positive, got {self.max_time}")


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one search.

    `optimum` is exact when `exhausted` is true and otherwise a lower
    bound; either way `witness` is a valid packing of that size.
    """

    optimum: int
    witness: MotifCollection
    exhausted: bool
    nodes: int


class _BudgetExhausted(Exception):
    pass


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")


def _kind_candidates(kind: str, n: int) -> list[Motif]:
    """All canonical motifs of one kind, lexicographic by vertex triple."""
    return [Motif(kind, triple) for triple in combinations(range(1, n + 1), 3)]


def _all_candidates(n: int) -> list[Motif]:
    """All canonical motifs of every kind, lexicographic by (triple, kind)."""
    return [
        Motif(kind, triple)
        for triple in combinations(range(1, n + 1), 3)
        for kind in MOTIF_KINDS
    ]


def _solve(n: int, candidates: list[Motif], bound_kind: str, budget: SearchBudget) -> OracleResult:
    """Shared branch-and-bound core.

    `bound_kind` picks the admissible upper bound recomputed at every
    node from the arcs still free: per-centre capacities for the pure
    kinds, per-component floor(arcs/2) for the mixed search.
    """
    arcs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    arc_index = {arc: k for k, arc in enumerate(arcs)}
    cand = [
        (motif, arc_index[pair[0]], arc_index[pair[1]])
        for motif in candidates
        for pair in [motif_arcs(motif)]
    ]
    used = [False] * len(arcs)
    free_in = [0] + [t - 1 for t in range(1, n + 1)]  # 1-indexed by vertex
    free_out = [0] + [n - t for t in range(1, n + 1)]

    if bound_kind == CHAIN:

        def bound() -> int:
            return sum(min(free_in[t], free_out[t]) for t in range(2, n))

    elif bound_kind == COLLIDER:

        def bound() -> int:
            return sum(free_in[t] // 2 for t in range(3, n + 1))

    elif bound_kind == FORK:

        def bound() -> int:
            return sum(free_out[t] // 2 for t in range(1, n - 1))

    else:  # mixed: each component of the free graph packs floor(edges/2) motifs

        def bound() -> int:
            parent = list(range(n + 1))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            edges = [0] * (n + 1)
            for k, (i, j) in enumerate(arcs):
                if not used[k]:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
                        edges[rj] += edges[ri]
                        edges[ri] = 0
                    edges[find(i)] += 1
            return sum(e // 2 for e in edges)

    max_nodes = budget.max_nodes if budget.max_nodes is not None else float("inf")
    deadline = time.monotonic() + budget.max_time if budget.max_time is not None else None

    nodes = 0
    best = 0
    best_selection: tuple[Motif, ...] = ()
    selection: list[Motif] = []

    def visit(start: int, size: int) -> None:
        nonlocal nodes, best, best_selection
        nodes += 1
        if nodes > max_nodes or (deadline is not None and time.monotonic() > deadline):
            raise _BudgetExhausted
        if size + bound() <= best:
            return
        index = start
        while index < len(cand) and (used[cand[index][1]] or used[cand[index][2]]):
            index += 1
        if index == len(cand):
            return
        motif, a, b = cand[index]
        (ta, ha), (tb, hb) = arcs[a], arcs[b]
        used[a] = used[b] = True
        free_out[ta] -= 1
        free_in[ha] -= 1
        free_out[tb] -= 1
        free_in[hb] -= 1
        selection.append(motif)
        if size + 1 > best:
            best = size + 1
            best_selection = tuple(selection)
        visit(index + 1, size + 1)
        selection.pop()
        used[a] = used[b] = False
        free_out[ta] += 1
        free_in[ha] += 1
        free_out[tb] += 1
        free_in[hb] += 1
        visit(index + 1, size)

    depth_headroom = len(cand) + 100
    old_limit = sys.getrecursionlimit()
    if old_limit < depth_headroom + 1000:
        sys.setrecursionlimit(depth_headroom + 1000)
    exhausted = True
    try:
        visit(0, 0)
    except _BudgetExhausted:
        exhausted = False
    finally:
        if sys.getrecursionlimit() != old_limit:
            sys.setrecursionlimit(old_limit)
    return OracleResult(
        optimum=best,
        witness=MotifCollection(n, best_selection),
        exhausted=exhausted,
        nodes=nodes,
    )


def max_packing(kind: str, n: int, budget: SearchBudget | None = None) -> OracleResult:
    """Maximum arc-disjoint packing of one motif kind, by exact search."""
    if kind not in MOTIF_KINDS:
        raise ValueError(f"unknown motif kind {kind!r}; expected one of {MOTIF_KINDS}")
    _check_order(n)
    return _solve(n, _kind_candidates(kind, n), kind, budget or SearchBudget())


def max_p3_packing_undirected(n: int, budget: SearchBudget | None = None) -> OracleResult:
    """Maximum packing into motifs of any kind — equivalently, the
    orientation-blind packing of K_n's edges into paths of two edges."""
    _check_order(n)
    return _solve(n, _all_candidates(n), "mixed", budget or SearchBudget())


def pure_decomposition_exists(kind: str, n: int, budget: SearchBudget | None = None) -> bool | None:
    """Whether TT_n decomposes into motifs of a single kind.

    Requires admissible n (otherwise no decomposition of any shape can
    exist and the question answers itself).  Returns True or False when
    the search settles it, None when the budget ran out first.
    """
    if n % 4 not in (0, 1):
        raise ValueError(f"n = {n} is not admissible (needs n = 0 or 1 mod 4)")
    target = n * (n - 1) // 4
    result = max_packing(kind, n, budget)
    if result.optimum == target:
        return True  # the witness itself is a decomposition
    if result.exhausted:
        return False
    return None
