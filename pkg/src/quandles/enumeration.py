"""Exhaustive generation of connected quandles up to isomorphism.

Search strategy: every connected quandle is isomorphic to a naturally
ordered one, so column n can be fixed to the block-form permutation of
each partition {l_1 <= ... <= l_k} of n-1.  Remaining columns are
assigned by backtracking.  Right-distributivity is propagated in the
equivalent form

    r_{b*c} = r_c r_b r_c^{-1}

so each assigned column forces further columns; contradictions prune the
branch.  Candidate columns are restricted to permutations with the same
pattern as column n, which is sound because in a connected quandle all
right translations are conjugate (disconnected tables are discarded at
the leaves anyway).  Leaves are deduplicated by canonical form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .canon import OrderTooLarge, automorphism_group, block_form_perm, canonical_form
from .perm import Perm
from .quandle import (
    Quandle,
    from_table,
    is_connected,
    is_latin,
    profile,
)

DEFAULT_MAX_ORDER = 8


def partitions(total: int) -> list[tuple[int, ...]]:
    """All nondecreasing partitions of total."""
    if total == 0:
        return [()]
    result = []

    def extend(prefix: list[int], remaining: int, minimum: int):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(minimum, remaining + 1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], total, 1)
    return result


@lru_cache(maxsize=None)
def _perms_by_pattern(n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """All permutations of {1..n} as image tuples, bucketed by pattern."""
    from .perm import pattern as perm_pattern

    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for image in permutations(range(1, n + 1)):
        buckets.setdefault(perm_pattern(Perm(image)), []).append(image)
    return buckets


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i] - 1] for i in range(len(p)))


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    image = [0] * len(p)
    for i, v in enumerate(p, start=1):
        image[v - 1] = i
    return tuple(image)


def _connected(cols: list[tuple[int, ...]]) -> bool:
    n = len(cols)
    seen = {1}
    stack = [1]
    gens = cols + [_inverse(c) for c in cols]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x - 1]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


class _Search:
    """Backtracking over columns with conjugation propagation."""

    def __init__(self, n: int, rn: tuple[int, ...], candidates):
        self.n = n
        self.cols: list[tuple[int, ...] | None] = [None] * n
        self.candidates = candidates
        self.found: list[tuple[tuple[int, ...], ...]] = []
        assigned = self._assign(n, rn, [])
        assert assigned  # column n alone cannot conflict

    def _assign(self, j: int, p: tuple[int, ...], trail: list[int]) -> bool:
        """Set column j to p and propagate; record assignments in trail."""
        stack = [(j, p)]
        while stack:
            j, p = stack.pop()
            current = self.cols[j - 1]
            if current is not None:
                if current != p:
                    return False
                continue
            self.cols[j - 1] = p
            trail.append(j)
            p_inv = _inverse(p)
            for c in range(1, self.n + 1):
                rc = self.cols[c - 1]
                if rc is None or c == j:
                    continue
                # r_{j*c} = r_c r_j r_c^{-1}
                stack.append((rc[j - 1], _compose(rc, _compose(p, _inverse(rc)))))
                # r_{c*j} = r_j r_c r_j^{-1}
                stack.append((p[c - 1], _compose(p, _compose(rc, p_inv))))
        return True

    def _undo(self, trail: list[int]):
        for j in trail:
            self.cols[j - 1] = None

    def run(self):
        self._branch()

    def _branch(self):
        j = next(
            (i for i in range(self.n, 0, -1) if self.cols[i - 1] is None), None
        )
        if j is None:
            self._leaf()
            return
        for p in self.candidates(j):
            trail: list[int] = []
            if self._assign(j, p, trail):
                self._branch()
            self._undo(trail)

    def _leaf(self):
        cols = [c for c in self.cols if c is not None]
        if not _connected(cols):
            return
        table = tuple(
            tuple(cols[j][i] for j in range(self.n)) for i in range(self.n)
        )
        self.found.append(table)


def enumerate_connected(
    n: int, max_order: int | None = None, progress=None
) -> list[Quandle]:
    """One representative per isomorphism class of connected quandles.

    Each representative is naturally ordered and equal to its own
    canonical form; the list is sorted lexicographically by table.
    Orders above 8 require an explicit max_order override.
    """
    limit = max_order if max_order is not None else DEFAULT_MAX_ORDER
    if n > limit:
        raise OrderTooLarge(n, limit)
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return [from_table(((1,),))]

    buckets = _perms_by_pattern(n)
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for part in partitions(n - 1):
        prof = tuple(sorted((1,) + part))
        if prof not in buckets:
            continue
        if progress is not None:
            progress(f"order {n}: searching partition {part}")
        rn = block_form_perm(prof).image
        pool = buckets[prof]

        def candidates(j, pool=pool):
            return [p for p in pool if p[j - 1] == j]

        search = _Search(n, rn, candidates)
        search.run()
        for table in search.found:
            q = Quandle(table)
            seen.add(canonical_form(q))
    result = [from_table(t) for t in sorted(seen)]
    for q in result:
        assert is_connected(q)
    return result


def filter_by_profile(
    quandles: list[Quandle], prof: tuple[int, ...]
) -> list[Quandle]:
    """The sublist whose profile equals the given multiset."""
    target = tuple(sorted(prof))
    return [q for q in quandles if profile(q) == target]


@dataclass
class CensusEntry:
    quandle: Quandle
    profile: tuple[int, ...]
    latin: bool
    aut_order: int


@dataclass
class Census:
    order: int
    entries: list[CensusEntry] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.entries)

    def by_profile(self) -> dict[tuple[int, ...], int]:
        counts: dict[tuple[int, ...], int] = {}
        for e in self.entries:
            counts[e.profile] = counts.get(e.profile, 0) + 1
        return counts


def census(n: int, max_order: int | None = None, progress=None) -> Census:
    """Class counts with profile, latin flag and |Aut| per class."""
    result = Census(order=n)
    for q in enumerate_connected(n, max_order=max_order, progress=progress):
        result.entries.append(
            CensusEntry(
                quandle=q,
                profile=profile(q),
                latin=is_latin(q),
                aut_order=len(automorphism_group(q)),
            )
        )
    return result
