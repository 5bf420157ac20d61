"""Integer arithmetic for dimension towers, ladders and conductor divisibility.

Every dimension d >= 4 determines the integer (d+1)(d-3) = m^2 * d0 with d0
square-free.  Dimensions sharing the same d0 form a *tower*; inside a tower
the substitution d -> d(d-2) generates vertical *ladders*.  Everything here
is exact (Python big ints), no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TowerEntry:
    """One dimension in a tower, with its ladder coordinates.

    Satisfies (d+1)(d-3) == m**2 * d0 with d0 square-free, and lifting
    ladder_base through rung applications of x -> x(x-2) gives d.
    """

    d: int
    m: int
    d0: int
    rung: int
    ladder_base: int

    def __post_init__(self) -> None:
        if (self.d + 1) * (self.d - 3) != self.m * self.m * self.d0:
            raise ValueError(f"inconsistent tower entry for d={self.d}")


@dataclass(frozen=True)
class PrimePowerSplit:
    """Prime-power factorization d = p1^n1 * ... * pr^nr, primes ascending."""

    d: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        for p, n in self.factors:
            prod *= p**n
        if prod != self.d:
            raise ValueError(f"factors do not multiply to {self.d}")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split n = m^2 * d0 with d0 square-free; returns (m, d0).

    Trial division up to sqrt(n); unique by prime factorization.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    m, d0 = 1, 1
    rem = n
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d0 *= p
        p += 1 if p == 2 else 2
    d0 *= rem  # leftover is prime (or 1), exponent one
    return m, d0


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_decompose(n)[0] == 1


def ladder_next(d: int) -> int:
    """One ladder step d -> d(d-2); keeps the square-free part of (d+1)(d-3).

    d = 3 is the fixed point (3*1 = 3).
    """
    if d < 3:
        raise ValueError("ladder requires d >= 3")
    return d * (d - 2)


def tower_enumerate(d0: int, bound: int) -> list[TowerEntry]:
    """All dimensions d in [4, bound] whose (d+1)(d-3) has square-free part d0.

    Entries come back sorted ascending.  Rung/ladder annotation follows the
    index rule: the i-th entry (1-based) with i = 2^r * (odd) sits on rung r
    of the ladder started by entry number (odd).  The annotation is
    cross-checked against explicit d -> d(d-2) lifting and a mismatch raises,
    rather than being silently patched.
    """
    if bound < 4:
        raise ValueError("bound must be >= 4")
    if not is_squarefree(d0):
        raise ValueError(f"d0={d0} is not square-free")

    found: list[tuple[int, int]] = []
    for d in range(4, bound + 1):
        m, part = squarefree_decompose((d + 1) * (d - 3))
        if part == d0:
            found.append((d, m))

    entries: list[TowerEntry] = []
    for idx, (d, m) in enumerate(found, start=1):
        rung = (idx & -idx).bit_length() - 1  # 2-adic valuation of the index
        base = found[(idx >> rung) - 1][0]
        lifted = base
        for _ in range(rung):
            lifted = ladder_next(lifted)
        if lifted != d:
            raise RuntimeError(
                f"rung bookkeeping broke at d={d}: index rule gives base "
                f"{base}, rung {rung}, but lifting yields {lifted}"
            )
        entries.append(TowerEntry(d=d, m=m, d0=d0, rung=rung, ladder_base=base))
    return entries


def crt_split(d: int) -> PrimePowerSplit:
    """Prime-power factorization of d (the relatively prime atoms of H(d))."""
    if d < 2:
        raise ValueError("d must be >= 2")
    factors: list[tuple[int, int]] = []
    rem = d
    p = 2
    while p * p <= rem:
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rem > 1:
        factors.append((rem, 1))
    return PrimePowerSplit(d=d, factors=tuple(factors))


def divisibility_graph(
    dims: list[int], transitive_reduction: bool = False
) -> list[tuple[int, int]]:
    """Edges (a, b) with a | b, a != b, over odd dimensions.

    Conductor containment: the field attached to a divides into the field
    attached to b exactly when a | b.  Even dimensions use conductor 2d and
    are rejected here.  With transitive_reduction=True, edges implied by a
    chain a | c | b are dropped.
    """
    if not dims:
        raise ValueError("dims must be non-empty")
    for d in dims:
        if d % 2 == 0:
            raise ValueError(f"even dimension {d} not supported (conductor 2d)")
    uniq = sorted(set(dims))
    edges = [(a, b) for a in uniq for b in uniq if a != b and b % a == 0]
    if transitive_reduction:
        edge_set = set(edges)
        edges = [
            (a, b)
            for a, b in edges
            if not any(
                (a, c) in edge_set and (c, b) in edge_set
                for c in uniq
                if c != a and c != b
            )
        ]
    return edges
