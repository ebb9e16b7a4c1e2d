"""Closed-form counts and the collection verifier.

All arithmetic here is exact integer arithmetic; every division sits on
a guard that makes it exact, and that exactness is asserted rather than
assumed.  The verifier is deliberately independent of the constructions:
it re-derives each motif's kind from its two arcs and reports what it
finds instead of trusting the producer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import MotifCollection, MotifCounts
from .core import CHAIN, COLLIDER, FORK, MOTIF_KINDS, Arc, classify_arcs, motif_arcs

DUPLICATE_ARC = "duplicate_arc"
FOREIGN_ARC = "foreign_arc"
MISCLASSIFIED_MOTIF = "misclassified_motif"
COVERAGE_GAP = "coverage_gap"


def _check_kind(kind: str) -> None:
    if kind not in MOTIF_KINDS:
        raise ValueError(f"unknown motif kind {kind!r}; expected one of {MOTIF_KINDS}")


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")


def is_admissible(n: int) -> bool:
    """True iff n(n-1)/2 is even, i.e. n = 0 or 1 (mod 4), so the arc
    set can split into two-arc motifs without remainder."""
    _check_order(n)
    return n % 4 in (0, 1)


def packing_number(kind: str, n: int) -> int:
    """Maximum number of arc-disjoint motifs of one kind in TT_n:
    n(n-2)/4 for even n, (n-1)^2/4 for odd n — the same for all kinds."""
    _check_kind(kind)
    _check_order(n)
    numerator = n * (n - 2) if n % 2 == 0 else (n - 1) * (n - 1)
    assert numerator % 4 == 0
    return numerator // 4


def mixed_counts(n: int) -> MotifCounts:
    """Kind counts of the mixed decomposition for admissible n:
    floor((n-1)/2) chains, floor(n/4) colliders, the rest forks."""
    if not is_admissible(n):
        raise ValueError(f"n = {n} is not admissible (needs n = 0 or 1 mod 4)")
    assert n * (n - 1) % 4 == 0
    total = n * (n - 1) // 4
    chains = (n - 1) // 2
    colliders = n // 4
    return MotifCounts(chains, colliders, total - chains - colliders)


def center_capacity(kind: str, n: int, t: int) -> int:
    """Maximum number of kind-motifs that can be centred on vertex t:
    chains need an in- and an out-arc, colliders two in-arcs, forks two
    out-arcs, and vertex t has t-1 arcs in and n-t arcs out."""
    _check_kind(kind)
    _check_order(n)
    if not 1 <= t <= n:
        raise ValueError(f"vertex {t} outside 1..{n}")
    if kind == CHAIN:
        return min(t - 1, n - t)
    if kind == COLLIDER:
        return (t - 1) // 2
    return (n - t) // 2


def capacity_sum(kind: str, n: int) -> int:
    """Sum of per-centre capacities; an upper bound on any packing of
    the kind, and in fact equal to packing_number(kind, n)."""
    return sum(center_capacity(kind, n, t) for t in range(1, n + 1))


@dataclass(frozen=True)
class PackingNumberTable:
    """Packing numbers of one order, per kind, next to the count
    n(n-1)/4 that a full decomposition would need (None when that is
    not an integer)."""

    n: int
    per_kind: dict[str, int]
    total_motif_slots: int | None


def packing_number_table(n: int) -> PackingNumberTable:
    _check_order(n)
    slots = n * (n - 1) // 4 if n * (n - 1) % 4 == 0 else None
    return PackingNumberTable(
        n=n,
        per_kind={kind: packing_number(kind, n) for kind in MOTIF_KINDS},
        total_motif_slots=slots,
    )


@dataclass(frozen=True)
class Violation:
    """One structured verifier finding."""

    kind: str  # DUPLICATE_ARC | FOREIGN_ARC | MISCLASSIFIED_MOTIF | COVERAGE_GAP
    detail: str
    motifs: tuple[int, ...] = ()  # offending positions in the motif list
    arc: Arc | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Verdict on a motif collection.

    `valid` means no violations; `is_decomposition` additionally means
    the motifs' arcs cover every arc of TT_n exactly once.  Problems are
    reported, never thrown.
    """

    n: int
    valid: bool
    is_decomposition: bool
    counts: MotifCounts
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def verify(collection: MotifCollection) -> VerificationReport:
    """Check a collection bottom-up, trusting nothing about its origin.

    Each motif must be canonical (strictly ascending vertices whose
    derived kind matches its tag) and must use only arcs of TT_n; across
    motifs every arc may appear at most once.
    """
    n = collection.n
    violations: list[Violation] = []
    arc_users: dict[Arc, list[int]] = {}
    for index, motif in enumerate(collection.motifs):
        if motif.kind not in MOTIF_KINDS:
            violations.append(
                Violation(
                    MISCLASSIFIED_MOTIF,
                    f"motif {index} has unknown kind {motif.kind!r}",
                    motifs=(index,),
                )
            )
            continue
        a, b, c = motif.vertices
        if not a < b < c:
            violations.append(
                Violation(
                    MISCLASSIFIED_MOTIF,
                    f"motif {index} vertices ({a},{b},{c}) are not in canonical ascending order",
                    motifs=(index,),
                )
            )
            continue
        if a < 1 or c > n:
            violations.append(
                Violation(
                    FOREIGN_ARC,
                    f"motif {index} vertices ({a},{b},{c}) leave 1..{n}",
                    motifs=(index,),
                )
            )
            continue
        first, second = motif_arcs(motif)
        if classify_arcs(first, second) != motif:
            violations.append(
                Violation(
                    MISCLASSIFIED_MOTIF,
                    f"motif {index} arcs {first}, {second} re-classify to a different motif",
                    motifs=(index,),
                )
            )
            continue
        arc_users.setdefault(first, []).append(index)
        arc_users.setdefault(second, []).append(index)
    for arc in sorted(arc_users):
        users = arc_users[arc]
        if len(users) > 1:
            violations.append(
                Violation(
                    DUPLICATE_ARC,
                    f"duplicate arc ({arc[0]},{arc[1]})",
                    motifs=tuple(users),
                    arc=arc,
                )
            )
    valid = not violations
    covers_everything = len(arc_users) == n * (n - 1) // 2
    return VerificationReport(
        n=n,
        valid=valid,
        is_decomposition=valid and covers_everything,
        counts=collection.counts,
        violations=tuple(violations),
    )
