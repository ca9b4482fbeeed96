"""Permutations on {1..n}: composition, cycles, patterns, conjugacy.

All permutations here are 1-based: a ``Perm`` of size ``n`` maps the set
{1, 2, ..., n} to itself.  ``image[i-1]`` is the image of ``i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Perm:
    """A bijection on {1..n}, stored by its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __str__(self) -> str:
        return cycle_notation(self)

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build a Perm from disjoint cycles; omitted elements are fixed."""
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for idx, a in enumerate(cycle):
                if a in seen:
                    raise ValueError(f"element {a} appears in two cycles")
                seen.add(a)
                image[a - 1] = cycle[(idx + 1) % len(cycle)]
        return Perm(tuple(image))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation x -> p(q(x))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Perm(tuple(p.image[q.image[i] - 1] for i in range(p.n)))


def inverse(p: Perm) -> Perm:
    image = [0] * p.n
    for i, pi in enumerate(p.image, start=1):
        image[pi - 1] = i
    return Perm(tuple(image))


def power(p: Perm, k: int) -> Perm:
    """k-fold composition of p; k may be zero or negative."""
    if k < 0:
        return power(inverse(p), -k)
    result = Perm.identity(p.n)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_decomposition(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles covering {1..n}, fixed points included as 1-cycles.

    Each cycle starts at its minimal element; cycles are sorted by minimal
    element.  This makes the decomposition a unique printable form.
    """
    seen = [False] * p.n
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        x = p(start)
        while x != start:
            cycle.append(x)
            seen[x - 1] = True
            x = p(x)
        cycles.append(tuple(cycle))
    return tuple(cycles)


def pattern(p: Perm) -> tuple[int, ...]:
    """The multiset of cycle lengths, sorted nondecreasing."""
    return tuple(sorted(len(c) for c in cycle_decomposition(p)))


def cycle_notation(p: Perm) -> str:
    """Render as e.g. "(1 6)(2 5)(3)(4)"; fixed points are printed."""
    return "".join(
        "(" + " ".join(str(x) for x in cycle) + ")"
        for cycle in cycle_decomposition(p)
    )


def are_conjugate(p: Perm, q: Perm) -> tuple[bool, Perm | None]:
    """Whether q = w^-1 p w for some w; returns (answer, witness w).

    Conjugacy holds iff the patterns coincide; the witness maps each cycle
    of q onto a cycle of p of the same length, elementwise in cycle order.
    """
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    if pattern(p) != pattern(q):
        return False, None
    key = lambda c: (len(c), c)
    p_cycles = sorted(cycle_decomposition(p), key=key)
    q_cycles = sorted(cycle_decomposition(q), key=key)
    image = [0] * p.n
    for pc, qc in zip(p_cycles, q_cycles):
        for a, b in zip(qc, pc):
            image[a - 1] = b
    w = Perm(tuple(image))
    assert compose(inverse(w), compose(p, w)) == q
    return True, w


def all_perms(n: int) -> Iterable[Perm]:
    """All n! permutations of {1..n}, in lexicographic image order."""
    for image in itertools.permutations(range(1, n + 1)):
        yield Perm(image)
