"""Shared fixtures: frozen golden motif tables for TT_8 and TT_9.

Each table is the known-good maximum-kind decomposition that the
matching construction must reproduce exactly (as a set of canonical
motifs).  These are data, not derived values: they were transcribed and
double-checked by hand, and the test suite additionally re-validates
each one as an arc-disjoint full decomposition before comparing.
"""

from __future__ import annotations

import pytest

from ttmotifs.core import Motif, chain, collider, fork


def _chains(*triples):
    return [chain(*t) for t in triples]


def _colliders(*triples):
    return [collider(*t) for t in triples]


def _forks(*triples):
    return [fork(*t) for t in triples]


GOLDEN_CHAIN_MAX_8: frozenset[Motif] = frozenset(
    _chains(
        (1, 7, 8),
        (1, 6, 7), (2, 6, 8),
        (1, 5, 6), (2, 5, 7), (3, 5, 8),
        (1, 4, 7), (2, 4, 6), (3, 4, 5),
        (1, 3, 7), (2, 3, 6),
        (1, 2, 7),
    )
    + _colliders((1, 2, 8), (3, 4, 8))
)

GOLDEN_CHAIN_MAX_9: frozenset[Motif] = frozenset(
    _chains(
        (1, 8, 9),
        (1, 7, 8), (2, 7, 9),
        (1, 6, 7), (2, 6, 8), (3, 6, 9),
        (1, 5, 6), (2, 5, 7), (3, 5, 8), (4, 5, 9),
        (1, 4, 8), (2, 4, 7), (3, 4, 6),
        (1, 3, 8), (2, 3, 7),
        (1, 2, 8),
    )
    + _colliders((1, 2, 9), (3, 4, 9))
)

GOLDEN_COLLIDER_MAX_8: frozenset[Motif] = frozenset(
    _colliders(
        (1, 2, 3),
        (2, 3, 4),
        (1, 2, 5), (3, 4, 5),
        (2, 3, 6), (4, 5, 6),
        (1, 2, 7), (3, 4, 7), (5, 6, 7),
        (2, 3, 8), (4, 5, 8), (6, 7, 8),
    )
    + _forks((1, 2, 4), (1, 6, 8))
)

GOLDEN_COLLIDER_MAX_9: frozenset[Motif] = frozenset(
    _colliders(
        (1, 2, 3),
        (2, 3, 4),
        (1, 2, 5), (3, 4, 5),
        (2, 3, 6), (4, 5, 6),
        (1, 2, 7), (3, 4, 7), (5, 6, 7),
        (2, 3, 8), (4, 5, 8), (6, 7, 8),
        (1, 2, 9), (3, 4, 9), (5, 6, 9), (7, 8, 9),
    )
    + _forks((1, 2, 4), (1, 6, 8))
)

GOLDEN_FORK_MAX_8: frozenset[Motif] = frozenset(
    _forks(
        (1, 2, 3), (1, 4, 5), (1, 6, 7),
        (2, 3, 4), (2, 5, 6), (2, 7, 8),
        (3, 4, 5), (3, 6, 7),
        (4, 5, 6), (4, 7, 8),
        (5, 6, 7),
        (6, 7, 8),
    )
    + _colliders((1, 3, 8), (5, 7, 8))
)

GOLDEN_FORK_MAX_9: frozenset[Motif] = frozenset(
    _forks(
        (1, 2, 3), (1, 4, 5), (1, 6, 7), (1, 8, 9),
        (2, 3, 4), (2, 5, 6), (2, 7, 8),
        (3, 4, 5), (3, 6, 7), (3, 8, 9),
        (4, 5, 6), (4, 7, 8),
        (5, 6, 7), (5, 8, 9),
        (6, 7, 8),
        (7, 8, 9),
    )
    + _colliders((2, 4, 9), (6, 8, 9))
)

GOLDEN_TABLES: dict[tuple[str, int], frozenset[Motif]] = {
    ("chain-max", 8): GOLDEN_CHAIN_MAX_8,
    ("chain-max", 9): GOLDEN_CHAIN_MAX_9,
    ("collider-max", 8): GOLDEN_COLLIDER_MAX_8,
    ("collider-max", 9): GOLDEN_COLLIDER_MAX_9,
    ("fork-max", 8): GOLDEN_FORK_MAX_8,
    ("fork-max", 9): GOLDEN_FORK_MAX_9,
}


@pytest.fixture(scope="session")
def golden_tables() -> dict[tuple[str, int], frozenset[Motif]]:
    return GOLDEN_TABLES
