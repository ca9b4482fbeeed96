"""Finite quandles given by explicit operation tables.

A quandle is a set with a binary operation * such that a*a = a, every
right translation x -> x*b is a bijection, and (a*b)*c = (a*c)*(b*c).
Tables are n x n over {1..n}; the entry in row i, column j is i*j.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .perm import Perm, inverse, pattern

Table = tuple[tuple[int, ...], ...]


class QuandleError(Exception):
    """Base class for quandle construction and usage errors."""


class NotIdempotent(QuandleError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"axiom (1) fails: {i}*{i} != {i}")


class ColumnNotBijective(QuandleError):
    def __init__(self, j: int):
        self.j = j
        super().__init__(f"axiom (2) fails: column {j} is not a bijection")


class NotRightDistributive(QuandleError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(
            f"axiom (3) fails: ({a}*{b})*{c} != ({a}*{c})*({b}*{c})"
        )


class NotConnected(QuandleError):
    def __init__(self, msg: str = "quandle is not connected"):
        super().__init__(msg)


class NotAGroup(QuandleError):
    def __init__(self, reason: str):
        super().__init__(f"not a group table: {reason}")


@dataclass(frozen=True)
class Quandle:
    """A validated quandle operation table.

    Instances are only created through :func:`from_table` (or the
    generators below), so holding a Quandle means all three axioms hold.
    """

    table: Table

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        """a*b."""
        _check_range(self.n, a, b)
        return self.table[a - 1][b - 1]

    def inv_op(self, a: int, b: int) -> int:
        """The unique c with c*b = a (the dual operation)."""
        _check_range(self.n, a, b)
        col = [row[b - 1] for row in self.table]
        return col.index(a) + 1


def _check_range(n: int, *elements: int):
    for x in elements:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} out of range 1..{n}")


def from_table(matrix: Sequence[Sequence[int]]) -> Quandle:
    """Validate a matrix against the three quandle axioms.

    Raises NotIdempotent, ColumnNotBijective or NotRightDistributive with
    the first violating witness.
    """
    n = len(matrix)
    table = tuple(tuple(row) for row in matrix)
    for i, row in enumerate(table, start=1):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not 1 <= x <= n:
                raise ValueError(f"entry {x} in row {i} out of range 1..{n}")
    for i in range(1, n + 1):
        if table[i - 1][i - 1] != i:
            raise NotIdempotent(i)
    for j in range(1, n + 1):
        column = [table[i][j - 1] for i in range(n)]
        if len(set(column)) != n:
            raise ColumnNotBijective(j)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = table[a - 1][b - 1]
            for c in range(1, n + 1):
                if table[ab - 1][c - 1] != (
                    table[table[a - 1][c - 1] - 1][table[b - 1][c - 1] - 1]
                ):
                    raise NotRightDistributive(a, b, c)
    return Quandle(table)


def right_translation(q: Quandle, b: int) -> Perm:
    """The permutation r_b: x -> x*b, i.e. column b of the table."""
    _check_range(q.n, b)
    return Perm(tuple(row[b - 1] for row in q.table))


def dual(q: Quandle) -> Quandle:
    """The dual quandle: a *' b = r_b^{-1}(a).

    Column j of the dual is the inverse of column j; validity of the
    result is a theorem, so a failure here is an implementation bug.
    """
    cols = [inverse(right_translation(q, j)) for j in range(1, q.n + 1)]
    table = tuple(
        tuple(cols[j].image[i] for j in range(q.n)) for i in range(q.n)
    )
    return from_table(table)


def is_latin(q: Quandle) -> bool:
    """True iff every row of the table is also a bijection."""
    return all(len(set(row)) == q.n for row in q.table)


def _orbit(q: Quandle, seed: int) -> set[int]:
    cols = [right_translation(q, b) for b in range(1, q.n + 1)]
    inv_cols = [inverse(c) for c in cols]
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for p in cols + inv_cols:
            y = p(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_connected(q: Quandle) -> bool:
    """True iff the orbit of any element under all r_b^{+-1} is everything.

    One seed suffices: the generated group permutes the orbits
    transitively enough that the orbit partition is seed-independent.
    """
    return len(_orbit(q, 1)) == q.n


def pattern_sequence(q: Quandle) -> tuple[tuple[int, ...], ...]:
    """The patterns of r_1, ..., r_n in element order."""
    return tuple(
        pattern(right_translation(q, b)) for b in range(1, q.n + 1)
    )


def profile(q: Quandle) -> tuple[int, ...]:
    """The pattern of r_n; defined only for connected quandles."""
    if not is_connected(q):
        raise NotConnected("profile is only defined for connected quandles")
    return pattern(right_translation(q, q.n))


def check_formulas(q: Quandle) -> tuple[bool, tuple[int, int, int] | None]:
    """Exhaustively check the three dual-operation identities:

        (a*b) bar* c = (a bar* c) * (b bar* c)
        (a bar* b) * c = (a*c) bar* (b*c)
        a*(b*c) = ((a bar* c)*b)*c

    Returns (True, None) or (False, first counterexample triple).
    These hold on every valid quandle, so False indicates a bug.
    """
    n = q.n
    cols = [right_translation(q, b) for b in range(1, n + 1)]
    inv_cols = [inverse(c) for c in cols]
    star = lambda a, b: cols[b - 1](a)
    bar = lambda a, b: inv_cols[b - 1](a)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                if bar(star(a, b), c) != star(bar(a, c), bar(b, c)):
                    return False, (a, b, c)
                if star(bar(a, b), c) != bar(star(a, c), star(b, c)):
                    return False, (a, b, c)
                if star(a, star(b, c)) != star(star(bar(a, c), b), c):
                    return False, (a, b, c)
    return True, None


def conjugation_quandle(cayley: Sequence[Sequence[int]]) -> Quandle:
    """The quandle a*b = b^{-1} a b on a group given by its Cayley table.

    The table is 1-based with entries cayley[a-1][b-1] = a.b; the group
    axioms are checked before building the quandle.
    """
    m = len(cayley)
    table = tuple(tuple(row) for row in cayley)
    for i, row in enumerate(table, start=1):
        if len(row) != m or any(not 1 <= x <= m for x in row):
            raise NotAGroup(f"row {i} is not over 1..{m}")
    identity = None
    for e in range(1, m + 1):
        if all(
            table[e - 1][a - 1] == a and table[a - 1][e - 1] == a
            for a in range(1, m + 1)
        ):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    inv = [0] * (m + 1)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if table[a - 1][b - 1] == identity:
                inv[a] = b
                break
        else:
            raise NotAGroup(f"element {a} has no inverse")
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            ab = table[a - 1][b - 1]
            for c in range(1, m + 1):
                if table[ab - 1][c - 1] != table[a - 1][table[b - 1][c - 1] - 1]:
                    raise NotAGroup(f"associativity fails at ({a},{b},{c})")
    conj = tuple(
        tuple(
            table[table[inv[b] - 1][a - 1] - 1][b - 1]
            for b in range(1, m + 1)
        )
        for a in range(1, m + 1)
    )
    return from_table(conj)


def dihedral_quandle(n: int) -> Quandle:
    """The dihedral quandle i*j = 2j - i mod n, on representatives 1..n."""
    if n < 1:
        raise ValueError("order must be positive")
    table = tuple(
        tuple((2 * j - i) % n + 1 for j in range(n)) for i in range(n)
    )
    return from_table(table)


def inner_transport(q: Quandle, source: int, target: int) -> list[tuple[int, int]]:
    """A word of right translations carrying source to target.

    Returns [(b_1, e_1), ..., (b_m, e_m)] with e_j in {+1, -1}, meaning
    apply r_{b_1}^{e_1} first; the composite is an inner automorphism
    mapping source to target.  Found by BFS, so the word is shortest;
    positive exponents are preferred on ties.
    """
    _check_range(q.n, source, target)
    if not is_connected(q):
        raise NotConnected()
    if source == target:
        return []
    cols = [right_translation(q, b) for b in range(1, q.n + 1)]
    inv_cols = [inverse(c) for c in cols]
    parent: dict[int, tuple[int, int, int]] = {}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for sign, maps in ((1, cols), (-1, inv_cols)):
            for b in range(1, q.n + 1):
                y = maps[b - 1](x)
                if y != source and y not in parent:
                    parent[y] = (x, b, sign)
                    if y == target:
                        queue.clear()
                        break
                    queue.append(y)
            else:
                continue
            break
    word = []
    x = target
    while x != source:
        x, b, sign = parent[x]
        word.append((b, sign))
    word.reverse()
    y = source
    for b, sign in word:
        y = (cols if sign == 1 else inv_cols)[b - 1](y)
    assert y == target
    return word


def trivial_quandle(n: int) -> Quandle:
    """The quandle with i*j = i for all i, j."""
    return from_table(tuple(tuple(i for _ in range(n)) for i in range(1, n + 1)))
