"""Natural reorderings, canonical forms, automorphisms, isomorphism.

A relabeling nu applied to a quandle table puts nu(i*j) in row nu(i),
column nu(j).  A natural reordering with respect to r_q lays out some
disjoint-cycle presentation of r_q (cycle lengths nondecreasing)
consecutively and sends q to n; relabeling by one always brings column n
into the block form

    r_n = (1 ... l_1)(l_1+1 ... l_1+l_2) ... (n)

which we call the block form below.  Two connected quandles are
isomorphic iff the lexicographic minima over their relabelings by
natural reorderings coincide.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .perm import Perm, all_perms, compose, cycle_decomposition, inverse
from .quandle import (
    NotConnected,
    Quandle,
    QuandleError,
    Table,
    is_connected,
    profile,
    right_translation,
)


class NotNaturallyOrdered(QuandleError):
    def __init__(self):
        super().__init__("quandle elements are not naturally ordered")


class OrderTooLarge(QuandleError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"order {n} exceeds brute-force limit {limit}")


BRUTE_FORCE_LIMIT = 9


@dataclass(frozen=True)
class Reordering:
    """A relabeling bijection, optionally tagged as natural w.r.t. r_q."""

    perm: Perm
    natural_wrt: int | None = None

    def __post_init__(self):
        if self.natural_wrt is not None:
            assert self.perm(self.natural_wrt) == self.perm.n


def block_form_perm(prof: tuple[int, ...]) -> Perm:
    """The target shape of r_n for a given profile.

    The profile is the pattern of r_n and contains a 1 for the fixed
    point n; the remaining lengths l_1 <= ... <= l_k become consecutive
    blocks (1 ... l_1)(l_1+1 ... l_1+l_2)...(n).
    """
    lengths = list(prof)
    lengths.remove(1)
    n = sum(lengths) + 1
    cycles = []
    pos = 1
    for length in lengths:
        cycles.append(tuple(range(pos, pos + length)))
        pos += length
    cycles.append((n,))
    return Perm.from_cycles(n, cycles)


def apply_reordering(q: Quandle, nu: Reordering | Perm) -> Quandle:
    """Relabel the table: entry nu(i*j) moves to row nu(i), column nu(j)."""
    p = nu.perm if isinstance(nu, Reordering) else nu
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    n = q.n
    table = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[p(i) - 1][p(j) - 1] = p(q.table[i - 1][j - 1])
    return Quandle(tuple(tuple(row) for row in table))


def natural_reorderings_wrt(q: Quandle, elt: int) -> list[Reordering]:
    """All natural reorderings built from presentations of r_elt.

    Presentations vary over every ordering of equal-length cycles and
    every rotation of each cycle; each reordering sends elt to n.
    Enumeration order is deterministic: cycles sorted by (length, min
    element), equal-length blocks permuted lexicographically, rotations
    by starting element ascending.
    """
    if not is_connected(q):
        raise NotConnected()
    n = q.n
    cycles = [
        c for c in cycle_decomposition(right_translation(q, elt)) if c != (elt,)
    ]
    cycles.sort(key=lambda c: (len(c), min(c)))
    groups: list[list[tuple[int, ...]]] = []
    for _, grp in itertools.groupby(cycles, key=len):
        groups.append(list(grp))
    result = []
    for ordering_parts in itertools.product(
        *(itertools.permutations(g) for g in groups)
    ):
        ordered = [c for part in ordering_parts for c in part]
        rotations_per_cycle = [
            [c[c.index(s):] + c[:c.index(s)] for s in sorted(c)]
            for c in ordered
        ]
        for rotation_choice in itertools.product(*rotations_per_cycle):
            image = [0] * n
            pos = 1
            for cycle in rotation_choice:
                for x in cycle:
                    image[x - 1] = pos
                    pos += 1
            image[elt - 1] = n
            result.append(Reordering(Perm(tuple(image)), natural_wrt=elt))
    return result


def all_natural_reorderings(q: Quandle) -> list[Reordering]:
    """Natural reorderings with respect to every element, q ascending."""
    if not is_connected(q):
        raise NotConnected()
    return [
        nu
        for elt in range(1, q.n + 1)
        for nu in natural_reorderings_wrt(q, elt)
    ]


def is_naturally_ordered(q: Quandle) -> bool:
    """True iff r_n already is the block-form permutation of the profile."""
    rn = right_translation(q, q.n)
    return rn == block_form_perm(profile(q))


def naturalize(q: Quandle) -> tuple[Quandle, Reordering]:
    """Relabel by the first natural reordering w.r.t. r_n.

    The result is naturally ordered; the reordering used is returned so
    callers can transport other data through it.
    """
    nu = natural_reorderings_wrt(q, q.n)[0]
    relabeled = apply_reordering(q, nu)
    assert is_naturally_ordered(relabeled)
    return relabeled, nu


def canonical_set(q: Quandle) -> set[Table]:
    """All distinct tables reachable by natural reorderings."""
    return {apply_reordering(q, nu).table for nu in all_natural_reorderings(q)}


def canonical_form(q: Quandle) -> Table:
    """The row-major lexicographic minimum over the canonical set.

    This is a complete isomorphism invariant for connected quandles:
    relabeling q arbitrarily does not change it.
    """
    return min(canonical_set(q))


def are_isomorphic(q1: Quandle, q2: Quandle) -> bool:
    if q1.n != q2.n:
        return False
    return canonical_form(q1) == canonical_form(q2)


def automorphisms(q: Quandle) -> list[Reordering]:
    """All automorphisms of a naturally ordered connected quandle.

    Every automorphism is a natural reordering, so filtering the natural
    reorderings for table-preserving ones is exhaustive.  The result is
    a group (closure and inverses hold; verified in tests).
    """
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    return [
        nu
        for nu in all_natural_reorderings(q)
        if apply_reordering(q, nu).table == q.table
    ]


def automorphism_group(q: Quandle) -> list[Perm]:
    """Automorphisms of any connected quandle, as plain permutations.

    Naturalizes first, then conjugates the group back through the
    naturalizing reordering.  Sorted by image tuple.
    """
    if not is_connected(q):
        raise NotConnected()
    natural, nu = naturalize(q)
    back = inverse(nu.perm)
    perms = [
        compose(back, compose(a.perm, nu.perm)) for a in automorphisms(natural)
    ]
    return sorted(perms, key=lambda p: p.image)


def brute_force_automorphisms(q: Quandle) -> list[Perm]:
    """All bijections fixing the table, by exhaustive scan (n <= 9)."""
    if q.n > BRUTE_FORCE_LIMIT:
        raise OrderTooLarge(q.n, BRUTE_FORCE_LIMIT)
    return [
        p for p in all_perms(q.n) if apply_reordering(q, p).table == q.table
    ]


def brute_force_isomorphism(q1: Quandle, q2: Quandle) -> Perm | None:
    """Some bijection relabeling q1 into q2, or None (n <= 9)."""
    if q1.n != q2.n:
        return None
    if q1.n > BRUTE_FORCE_LIMIT:
        raise OrderTooLarge(q1.n, BRUTE_FORCE_LIMIT)
    for p in all_perms(q1.n):
        if apply_reordering(q1, p).table == q2.table:
            return p
    return None


def natural_reordering_count(q: Quandle) -> int:
    """Predicted size of all_natural_reorderings: n * prod(l_i) * prod(m_d!)."""
    lengths = list(profile(q))
    lengths.remove(1)
    count = q.n
    for length in lengths:
        count *= length
    for d in set(lengths):
        count *= math.factorial(lengths.count(d))
    return count
