"""Signed permutations and the Weyl groups of types A, B/C and D.

Elements are plain tuples in one-line notation: ``perm[i-1]`` is the image of
i, a nonzero integer in {-d, ..., -1, 1, ..., d} whose absolute values form a
permutation of {1, ..., d}.  Type A is the subset of unsigned tuples, type D
the subset with an even number of negative entries.

Composition is (a o b)(i) = a(b(i)) with the sign rule a(-j) = -a(j), which
matches right-multiplication reduction tables: ``compose(sigma, s_i)`` applies
the generator s_i on positions.

The total order <_pm puts the positive integers (ascending) below the negative
integers (ascending): 1 < 2 < ... < -2 < -1.  An inversion of sigma is a pair
i < j with sigma(i) >_pm sigma(j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

SignedPerm = tuple[int, ...]

FAMILY_TAGS = ("A", "BC", "D")

# Enumeration caps per family; BFS additionally caps on group order.
ENUM_CAPS = {"A": 8, "BC": 6, "D": 6}
BFS_MAX_ORDER = 4_000_000


@dataclass(frozen=True)
class GroupFamily:
    """One of the three Weyl group families at a fixed rank."""

    tag: str
    d: int

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.d < 0:
            raise ValueError("rank must be >= 0")

    def order(self) -> int:
        if self.tag == "A":
            return factorial(self.d)
        if self.tag == "BC":
            return 2**self.d * factorial(self.d)
        return 2 ** max(self.d - 1, 0) * factorial(self.d)

    def generators(self) -> tuple[SignedPerm, ...]:
        """Coxeter generators s_1..s_{d-1} (adjacent swaps) plus the family twist.

        BC adds the sign change of d; D adds the signed swap d-1 -> -d,
        d -> -(d-1).
        """
        d = self.d
        gens = []
        for i in range(1, d):
            g = list(range(1, d + 1))
            g[i - 1], g[i] = g[i], g[i - 1]
            gens.append(tuple(g))
        if self.tag == "BC" and d >= 1:
            g = list(range(1, d + 1))
            g[d - 1] = -d
            gens.append(tuple(g))
        elif self.tag == "D" and d >= 2:
            g = list(range(1, d + 1))
            g[d - 2], g[d - 1] = -d, -(d - 1)
            gens.append(tuple(g))
        return tuple(gens)

    def contains(self, perm: SignedPerm) -> bool:
        if len(perm) != self.d or not is_signed_perm(perm):
            return False
        if self.tag == "A":
            return all(x > 0 for x in perm)
        if self.tag == "D":
            return negative_count(perm) % 2 == 0
        return True


def is_signed_perm(perm: SignedPerm) -> bool:
    return sorted(abs(x) for x in perm) == list(range(1, len(perm) + 1)) and 0 not in perm


def check_member(perm: SignedPerm, fam: GroupFamily) -> None:
    if not fam.contains(perm):
        raise ValueError(f"{perm} is not an element of type {fam.tag}, rank {fam.d}")


def identity(d: int) -> SignedPerm:
    return tuple(range(1, d + 1))


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """(a o b)(i) = a(b(i)) with a(-j) = -a(j)."""
    return tuple(a[j - 1] if j > 0 else -a[-j - 1] for j in b)


def inverse(a: SignedPerm) -> SignedPerm:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def pm_less(a: int, b: int) -> bool:
    """a <_pm b in the order 1 < 2 < ... < -2 < -1 on nonzero integers."""
    if a == 0 or b == 0:
        raise ValueError("pm order is only defined on nonzero integers")
    if (a > 0) != (b > 0):
        return a > 0
    return a < b


def inversions(perm: SignedPerm) -> int:
    """Number of pairs i < j with perm[i] >_pm perm[j]."""
    n = len(perm)
    count = 0
    for i in range(n):
        a = perm[i]
        for j in range(i + 1, n):
            if pm_less(perm[j], a):
                count += 1
    return count


def negative_count(perm: SignedPerm) -> int:
    return sum(1 for x in perm if x < 0)


def length(perm: SignedPerm, fam: GroupFamily) -> int:
    """Coxeter length: inversions plus the family's sign part.

    A: inversions only; BC: sum of d+1+sigma(i) over negative entries;
    D: sum of d+sigma(i) over negative entries.
    """
    check_member(perm, fam)
    inv = inversions(perm)
    if fam.tag == "A":
        return inv
    d = fam.d
    if fam.tag == "BC":
        return inv + sum(d + 1 + x for x in perm if x < 0)
    return inv + sum(d + x for x in perm if x < 0)


def wmaj(perm: SignedPerm) -> int:
    """Weyl-Major index: descent positions in the usual integer order, plus
    the number of negative entries.  Restricts to the classical Major index
    on unsigned permutations."""
    total = sum(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])
    return total + negative_count(perm)


def descent_count(perm: SignedPerm) -> int:
    """Descent statistic: pm-order descents among positions < d, plus one if
    the last entry is negative."""
    d = len(perm)
    count = sum(1 for i in range(d - 1) if pm_less(perm[i + 1], perm[i]))
    if d and perm[-1] < 0:
        count += 1
    return count


def enumerate_group(fam: GroupFamily) -> Iterator[SignedPerm]:
    """All elements in lexicographic one-line order."""
    if fam.d > ENUM_CAPS[fam.tag]:
        raise ValueError(f"rank {fam.d} over the type-{fam.tag} enumeration cap {ENUM_CAPS[fam.tag]}")
    yield from _enumerate(fam.tag, fam.d)


def _enumerate(tag: str, d: int) -> Iterator[SignedPerm]:
    prefix: list[int] = []
    used = [False] * (d + 1)

    def rec(neg: int) -> Iterator[SignedPerm]:
        pos = len(prefix)
        if pos == d:
            if tag != "D" or neg % 2 == 0:
                yield tuple(prefix)
            return
        if tag == "A":
            candidates = [v for v in range(1, d + 1) if not used[v]]
        else:
            candidates = [-v for v in range(d, 0, -1) if not used[v]]
            candidates += [v for v in range(1, d + 1) if not used[v]]
        for v in candidates:
            used[abs(v)] = True
            prefix.append(v)
            yield from rec(neg + (v < 0))
            prefix.pop()
            used[abs(v)] = False

    yield from rec(0)


# -- independent word-length oracle (Cayley graph BFS) -----------------------


def _rank(perm: SignedPerm, signed: bool) -> int:
    """Mixed-radix rank: Lehmer code of the absolute values, then sign bits."""
    d = len(perm)
    abs_vals = [abs(x) for x in perm]
    r = 0
    for i in range(d):
        smaller = sum(1 for j in range(i + 1, d) if abs_vals[j] < abs_vals[i])
        r = r * (d - i) + smaller
    if signed:
        bits = 0
        for x in perm:
            bits = bits * 2 + (1 if x < 0 else 0)
        r = r * 2**d + bits
    return r


@lru_cache(maxsize=None)
def _bfs_distances(fam: GroupFamily) -> list[int]:
    """Graph distances from the identity under right multiplication by the
    generators, stored in a flat table indexed by _rank."""
    size = factorial(fam.d) * (1 if fam.tag == "A" else 2**fam.d)
    if fam.order() > BFS_MAX_ORDER:
        raise ValueError(f"group of order {fam.order()} over the BFS cap {BFS_MAX_ORDER}")
    signed = fam.tag != "A"
    gens = fam.generators()
    dist = [-1] * size
    start = identity(fam.d)
    dist[_rank(start, signed)] = 0
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for perm in frontier:
            for g in gens:
                nb = compose(perm, g)
                r = _rank(nb, signed)
                if dist[r] < 0:
                    dist[r] = depth
                    nxt.append(nb)
        frontier = nxt
    return dist


def coxeter_word_length(perm: SignedPerm, fam: GroupFamily) -> int:
    """Distance from the identity in the Cayley graph; independent of length()."""
    check_member(perm, fam)
    d = _bfs_distances(fam)[_rank(perm, fam.tag != "A")]
    if d < 0:
        raise ValueError(f"{perm} not reached by BFS (not in the group?)")
    return d


def greedy_reduced_word(perm: SignedPerm, fam: GroupFamily) -> list[int]:
    """Reduced word for perm as generator indices, largest index first on ties.

    Repeatedly right-multiplies by the largest generator that shortens the
    element; reversing the reduction sequence yields the word, so composing
    s_{w[0]} o s_{w[1]} o ... reproduces perm with exactly length(perm) letters.
    """
    check_member(perm, fam)
    gens = fam.generators()
    word: list[int] = []
    current = perm
    cur_len = length(current, fam)
    while cur_len > 0:
        for idx in range(len(gens), 0, -1):
            shorter = compose(current, gens[idx - 1])
            if length(shorter, fam) < cur_len:
                word.append(idx)
                current = shorter
                cur_len -= 1
                break
        else:
            raise AssertionError(f"no descent generator at {current}")
    word.reverse()
    return word


def word_to_perm(word: list[int], fam: GroupFamily) -> SignedPerm:
    """Compose s_{word[0]} o s_{word[1]} o ... o s_{word[-1]}."""
    gens = fam.generators()
    out = identity(fam.d)
    for idx in reversed(word):
        out = compose(gens[idx - 1], out)
    return out


def central_element(d: int) -> SignedPerm:
    """The central sign change i -> -i of the hyperoctahedral group."""
    return tuple(-i for i in range(1, d + 1))


def max_length(fam: GroupFamily) -> int:
    """Length of the longest element."""
    d = fam.d
    if fam.tag == "A":
        return comb(d, 2)
    if fam.tag == "BC":
        return d * d
    return d * d - d
