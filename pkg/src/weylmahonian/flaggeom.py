"""Brute-force flag enumeration over prime fields: the geometric oracle.

Vectors are tuples of ints mod p; a subspace is the tuple of rows of its
reduced row echelon form (the unique canonical representative, rows ordered by
pivot).  Coordinates of the typed spaces are stored in <_pm index order:

  symplectic / hyperbolic (dim 2d):  x_1, ..., x_d, x_-d, ..., x_-1
  odd quadratic (dim 2d+1):          x_1, ..., x_d, x_0, x_-d, ..., x_-1

Forms:
  symplectic   w(b_i, b_-i) = 1 = -w(b_-i, b_i)
  quadratic    Q(x) = x_0^2 + sum x_i x_-i        (odd p only)
  hyperbolic   Q(x) = sum x_i x_-i, metabolizer I = span(b_1, ..., b_d)

A flag is a strictly increasing chain of nonzero subspaces (isotropic ones
for the typed spaces; for the hyperbolic space the *last* member must have
even parity dim(V) - dim(V & I)).  Weighted flags are never enumerated
weight by weight: each flag contributes the closed truncated factor
prod_i x*t^(dim V_i) / (1 - x*t^(dim V_i)) with x = s or 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .algebra import TruncSeries
from .weylgroups import GroupFamily, SignedPerm, check_member, pm_less

Vector = tuple[int, ...]
Subspace = tuple[Vector, ...]  # RREF rows
Flag = tuple[Subspace, ...]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def max_cells() -> int:
    """Enumeration safety valve, overridable via WM_MAX_CELLS."""
    return int(os.environ.get("WM_MAX_CELLS", "10000000"))


# -- GF(p) linear algebra on tuple vectors -----------------------------------


def rref(rows: Sequence[Sequence[int]], p: int) -> Subspace:
    """Reduced row echelon form; zero rows dropped, rows ordered by pivot."""
    mat = [[x % p for x in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        pr = next((r for r in mat if r[col]), None)
        if pr is None:
            continue
        mat.remove(pr)
        inv = pow(pr[col], -1, p)
        pr = [(x * inv) % p for x in pr]
        for r in mat:
            if r[col]:
                f = r[col]
                r[:] = [(x - f * y) % p for x, y in zip(r, pr)]
        for _, done in pivots:
            if done[col]:
                f = done[col]
                done[:] = [(x - f * y) % p for x, y in zip(done, pr)]
        pivots.append((col, pr))
        mat = [r for r in mat if any(r)]
        if not mat:
            break
    return tuple(tuple(r) for _, r in sorted(pivots))


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p))


def nullspace(constraints: Sequence[Sequence[int]], n: int, p: int) -> list[Vector]:
    """Basis of {x in F_p^n : c . x = 0 for every constraint row c}."""
    red = rref(constraints, p) if constraints else ()
    pivot_cols = []
    for row in red:
        pivot_cols.append(next(c for c in range(n) if row[c]))
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for row, pc in zip(red, pivot_cols):
            v[pc] = (-row[fc]) % p
        basis.append(tuple(v))
    return basis


def subspace_le(small: Subspace, big: Subspace, p: int) -> bool:
    """Containment test: every row of small reduces to zero against big."""
    pivots = [(next(c for c in range(len(row)) if row[c]), row) for row in big]
    for row in small:
        r = list(row)
        for pc, brow in pivots:
            if r[pc]:
                f = r[pc]
                r = [(x - f * y) % p for x, y in zip(r, brow)]
        if any(r):
            return False
    return True


# -- spaces -------------------------------------------------------------------

KINDS = ("linear", "symplectic", "quadratic", "hyperbolic")


@dataclass(frozen=True)
class FqSpace:
    """A finite-dimensional space over F_p with an attached form descriptor."""

    p: int
    kind: str
    d: int  # linear: dim; symplectic/hyperbolic: half-dim; quadratic: (dim-1)/2

    def __post_init__(self):
        if self.p not in _SMALL_PRIMES:
            raise ValueError(f"p must be a small prime, got {self.p}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.kind in ("quadratic", "hyperbolic") and self.p == 2:
            raise ValueError(f"{self.kind} spaces need odd characteristic")
        if self.d < 1:
            raise ValueError("d must be >= 1")

    @property
    def dim(self) -> int:
        if self.kind == "linear":
            return self.d
        if self.kind == "quadratic":
            return 2 * self.d + 1
        return 2 * self.d

    @property
    def iso_max(self) -> int:
        """Largest dimension of the subspaces a flag may contain."""
        return self.dim if self.kind == "linear" else self.d

    def signed_index(self, pos: int) -> int:
        """Signed coordinate index at a storage position (1-based for linear)."""
        d = self.d
        if self.kind == "linear":
            return pos + 1
        if self.kind == "quadratic":
            if pos < d:
                return pos + 1
            if pos == d:
                return 0
            return pos - (2 * d + 1)
        return pos + 1 if pos < d else pos - 2 * d

    def position(self, index: int) -> int:
        d = self.d
        if self.kind == "linear":
            return index - 1
        if self.kind == "quadratic":
            if index > 0:
                return index - 1
            if index == 0:
                return d
            return 2 * d + 1 + index
        return index - 1 if index > 0 else 2 * d + index

    def bilinear(self, u: Vector, v: Vector) -> int:
        """The symplectic form, or the polar form of Q, evaluated mod p."""
        d, p = self.d, self.p
        if self.kind == "linear":
            raise ValueError("linear spaces carry no form")
        if self.kind == "symplectic":
            total = sum(u[c] * v[2 * d - 1 - c] - u[2 * d - 1 - c] * v[c] for c in range(d))
        elif self.kind == "hyperbolic":
            total = sum(u[c] * v[2 * d - 1 - c] + u[2 * d - 1 - c] * v[c] for c in range(d))
        else:
            total = 2 * u[d] * v[d]
            total += sum(u[c] * v[2 * d - c] + u[2 * d - c] * v[c] for c in range(d))
        return total % p

    def quad(self, v: Vector) -> int:
        """The quadratic form Q (zero identically for symplectic spaces)."""
        d, p = self.d, self.p
        if self.kind == "linear":
            raise ValueError("linear spaces carry no form")
        if self.kind == "symplectic":
            return 0
        if self.kind == "hyperbolic":
            return sum(v[c] * v[2 * d - 1 - c] for c in range(d)) % p
        return (v[d] * v[d] + sum(v[c] * v[2 * d - c] for c in range(d))) % p

    def metabolizer(self) -> Subspace:
        if self.kind != "hyperbolic":
            raise ValueError("only the hyperbolic space carries a metabolizer")
        n = self.dim
        return tuple(tuple(1 if c == r else 0 for c in range(n)) for r in range(self.d))


def linear_space(p: int, n: int) -> FqSpace:
    return FqSpace(p, "linear", n)


def symplectic_space(p: int, d: int) -> FqSpace:
    return FqSpace(p, "symplectic", d)


def quadratic_space(p: int, d: int) -> FqSpace:
    return FqSpace(p, "quadratic", d)


def hyperbolic_space(p: int, d: int) -> FqSpace:
    return FqSpace(p, "hyperbolic", d)


def space_for_family(fam_tag: str, p: int, d: int) -> FqSpace:
    """The space whose flags realize the given Weyl family (C for tag BC)."""
    return {
        "A": linear_space,
        "C": symplectic_space,
        "BC": symplectic_space,
        "B": quadratic_space,
        "D": hyperbolic_space,
    }[fam_tag](p, d)


# -- subspace enumeration -----------------------------------------------------


def _row_candidates(dim: int, pivots: tuple[int, ...], r: int, p: int) -> list[Vector]:
    """All RREF rows with pivot pivots[r]: 1 at the pivot, 0 at the other
    pivot columns and left of the pivot, arbitrary elsewhere."""
    piv = pivots[r]
    pivot_set = set(pivots)
    free = [c for c in range(piv + 1, dim) if c not in pivot_set]
    base = [0] * dim
    base[piv] = 1
    out = []
    for vals in product(range(p), repeat=len(free)):
        row = base.copy()
        for c, v in zip(free, vals):
            row[c] = v
        out.append(tuple(row))
    return out


def _guard_cells(space: FqSpace) -> None:
    if space.p**space.dim > max_cells():
        raise ValueError(
            f"p^dim = {space.p}^{space.dim} exceeds the cell cap {max_cells()} (WM_MAX_CELLS)"
        )


def enumerate_subspaces(space: FqSpace, k: int, isotropic_only: bool = False) -> Iterator[Subspace]:
    """Deterministic stream of all k-dimensional subspaces, as RREF row tuples.

    With isotropic_only the stream is restricted to totally isotropic
    subspaces of the space's form (rows pairwise orthogonal, and Q = 0 on the
    rows for the quadratic kinds).
    """
    if not 0 <= k <= space.dim:
        raise ValueError(f"need 0 <= k <= {space.dim}, got {k}")
    if isotropic_only and space.kind == "linear":
        raise ValueError("linear spaces carry no form to be isotropic for")
    _guard_cells(space)
    if k == 0:
        yield ()
        return
    if isotropic_only and k > space.d:
        return
    dim, p = space.dim, space.p
    needs_quad = isotropic_only and space.kind in ("quadratic", "hyperbolic")
    for pivots in combinations(range(dim), k):
        cands = [_row_candidates(dim, pivots, r, p) for r in range(k)]
        if not isotropic_only:
            yield from product(*cands)
            continue
        if needs_quad:
            cands = [[v for v in rows if space.quad(v) == 0] for rows in cands]
        yield from _isotropic_dfs(space, cands, k)


def _isotropic_dfs(space: FqSpace, cands: list[list[Vector]], k: int) -> Iterator[Subspace]:
    chosen: list[Vector] = []

    def rec(r: int) -> Iterator[Subspace]:
        if r == k:
            yield tuple(chosen)
            return
        for v in cands[r]:
            if all(space.bilinear(v, u) == 0 for u in chosen):
                chosen.append(v)
                yield from rec(r + 1)
                chosen.pop()

    yield from rec(0)


def is_isotropic(space: FqSpace, rows: Subspace) -> bool:
    if space.kind in ("quadratic", "hyperbolic") and any(space.quad(v) for v in rows):
        return False
    return all(
        space.bilinear(rows[i], rows[j]) == 0 for i in range(len(rows)) for j in range(i, len(rows))
    )


def metabolizer_excess(space: FqSpace, rows: Subspace) -> int:
    """dim(V / (V & I)): the rank of the negative-coordinate block."""
    if space.kind != "hyperbolic":
        raise ValueError("parity is only defined for the hyperbolic space")
    if not rows:
        return 0
    return rank([row[space.d :] for row in rows], space.p)


# -- flags ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _subspaces_by_dim(space: FqSpace) -> tuple[tuple[Subspace, ...], ...]:
    iso = space.kind != "linear"
    return tuple(
        tuple(enumerate_subspaces(space, m, isotropic_only=iso))
        for m in range(space.iso_max + 1)
    )


def enumerate_flags(space: FqSpace, even_only: bool | None = None) -> Iterator[Flag]:
    """All flags (strictly increasing chains of nonzero subspaces), the empty
    flag first.  Typed spaces restrict members to isotropic subspaces; for the
    hyperbolic space even_only (the default) keeps only chains whose last
    member has even parity."""
    if even_only is None:
        even_only = space.kind == "hyperbolic"
    if even_only and space.kind != "hyperbolic":
        raise ValueError("parity filtering needs the hyperbolic space")
    levels = _subspaces_by_dim(space)
    p = space.p

    def ok_last(sub: Subspace) -> bool:
        return not even_only or metabolizer_excess(space, sub) % 2 == 0

    def rec(chain: list[Subspace], top: Subspace) -> Iterator[Flag]:
        if ok_last(top):
            yield tuple(chain)
        for m in range(len(top) + 1, space.iso_max + 1):
            for sub in levels[m]:
                if subspace_le(top, sub, p):
                    chain.append(sub)
                    yield from rec(chain, sub)
                    chain.pop()

    yield ()
    for m in range(1, space.iso_max + 1):
        for sub in levels[m]:
            yield from rec([sub], sub)


def flag_series(space: FqSpace, bound: int, with_alpha: bool = False) -> TruncSeries:
    """Generating series of weighted flags: sum over flags of
    prod_i (x t^(dim V_i) + x^2 t^(2 dim V_i) + ...) with x = s if with_alpha.

    For the hyperbolic space the sum runs over even flags.
    """
    _guard_cells(space)
    factors = [
        TruncSeries.geometric_factor(m, with_alpha, bound) - TruncSeries.one(bound)
        for m in range(1, space.iso_max + 1)
    ]
    total = TruncSeries.zero(bound)
    for chain in enumerate_flags(space):
        term = TruncSeries.one(bound)
        for sub in chain:
            term = term * factors[len(sub) - 1]
        total = total + term
    return total


# -- canonical bases ------------------------------------------------------------


def _subspace_with_zeros(rows: Sequence[Vector], zero_cols: Sequence[int], p: int) -> list[Vector]:
    """Basis of {v in rowspan(rows) : v[c] = 0 for c in zero_cols}."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return []
    if not zero_cols:
        return list(rows)
    constraints = [[row[c] for row in rows] for c in zero_cols]
    out = []
    n = len(rows[0])
    for x in nullspace(constraints, len(rows), p):
        v = [0] * n
        for c, row in zip(x, rows):
            if c:
                v = [(a + c * b) % p for a, b in zip(v, row)]
        if any(v):
            out.append(tuple(v))
    return out


def _perp_space(space: FqSpace, vectors: Sequence[Vector]) -> list[Vector]:
    """Basis of the orthogonal complement of the given vectors."""
    n, p = space.dim, space.p
    if not vectors:
        return [tuple(1 if c == r else 0 for c in range(n)) for r in range(n)]
    constraints = []
    for f in vectors:
        constraints.append([space.bilinear(f, tuple(1 if c == a else 0 for c in range(n))) for a in range(n)])
    return nullspace(constraints, n, p)


def _minimal_vector(
    rows: Sequence[Vector], ordered_cols: Sequence[int], n_primary: int, p: int
) -> tuple[Vector, int]:
    """The unique (normalized) vector of the span whose last nonzero primary
    coordinate comes earliest in priority.

    ordered_cols lists columns worst-first: the primary columns (those that
    count towards the "length" of a vector) in decreasing badness, then the
    ignored secondary columns.  Eliminating in that order leaves each pivot
    row zeroed at every worse column, so the last primary pivot row is the
    minimum; a pivot inside the secondary block means the span contains a
    vector supported on ignored columns only, which the constructions here
    never produce.
    """
    pool = [list(r) for r in rows if any(r)]
    if not pool:
        raise ValueError("empty span has no minimal vector")
    best: tuple[Vector, int] | None = None
    for idx, col in enumerate(ordered_cols):
        pr = next((r for r in pool if r[col]), None)
        if pr is None:
            continue
        pool.remove(pr)
        inv = pow(pr[col], -1, p)
        pr = [(x * inv) % p for x in pr]
        for r in pool:
            if r[col]:
                f = r[col]
                r[:] = [(x - f * y) % p for x, y in zip(r, pr)]
        pool = [r for r in pool if any(r)]
        if idx >= n_primary:
            raise ValueError("degenerate span: vector supported on ignored columns")
        best = (tuple(pr), col)
        if not pool:
            break
    if pool or best is None:
        raise ValueError("span not exhausted by the given columns")
    return best


def validate_flag(space: FqSpace, chain: Sequence[Sequence[Sequence[int]]]) -> Flag:
    """Canonicalize a chain to RREF members and check it is a flag of the space."""
    canon = tuple(rref(member, space.p) for member in chain)
    prev_dim = 0
    for i, member in enumerate(canon):
        if len(member) <= prev_dim:
            raise ValueError("flag members must have strictly increasing dimensions")
        if i and not subspace_le(canon[i - 1], member, space.p):
            raise ValueError("flag members must be nested")
        if space.kind != "linear":
            if len(member) > space.d or not is_isotropic(space, member):
                raise ValueError("typed flags must consist of isotropic subspaces")
        prev_dim = len(member)
    return canon


def canonical_basis(space: FqSpace, chain: Sequence[Sequence[Sequence[int]]]) -> tuple[tuple[Vector, ...], SignedPerm]:
    """The canonical (half-)basis adapted to a flag, and its length-permutation.

    Each step finds the unique shortest vector, with last nonzero coordinate 1,
    inside the first flag member not yet spanned, subject to zero coordinates
    at the previously used positions.  "Shortest" ignores the coordinates at
    the mirror positions -sigma(1), ..., -sigma(i-1), which are determined by
    orthogonality (and, for the quadratic kinds, isotropy) rather than free.
    Once the flag is exhausted, construction continues in the orthogonal
    complement of the vectors found so far (the full space in the linear
    case), producing a basis of a canonically chosen maximal isotropic
    subspace containing the flag.
    """
    chain = validate_flag(space, chain)
    p, n = space.p, space.dim
    linear = space.kind == "linear"
    steps = n if linear else space.d
    flag_top = len(chain[-1]) if chain else 0

    full = [tuple(1 if c == r else 0 for c in range(n)) for r in range(n)]
    fs: list[Vector] = []
    sigma: list[int] = []
    bullet_cols: list[int] = []
    mirror_cols: list[int] = []

    for i in range(steps):
        if i < flag_top:
            target = next(m for m in chain if len(m) > i)
            w_rows = _subspace_with_zeros(target, bullet_cols, p)
        elif linear:
            w_rows = _subspace_with_zeros(full, bullet_cols, p)
        else:
            w_rows = _subspace_with_zeros(_perp_space(space, fs), bullet_cols, p)
        used = set(bullet_cols) | set(mirror_cols)
        avail = [c for c in range(n) if c not in used]
        ordered = sorted(avail, reverse=True) + sorted(mirror_cols, reverse=True)
        vec, col = _minimal_vector(w_rows, ordered, len(avail), p)
        fs.append(vec)
        idx = space.signed_index(col)
        sigma.append(idx)
        bullet_cols.append(col)
        if not linear:
            mirror_cols.append(space.position(-idx))

    if sorted(abs(x) for x in sigma) != list(range(1, steps + 1)):
        raise AssertionError(f"extraction produced a non-permutation {sigma}")
    return tuple(fs), tuple(sigma)


@lru_cache(maxsize=None)
def _complete_flag_tally(space: FqSpace) -> dict[SignedPerm, int]:
    """Length-permutation tally over all complete flags of the space."""
    levels = _subspaces_by_dim(space)
    p = space.p
    steps = space.iso_max
    tally: dict[SignedPerm, int] = {}

    def rec(chain: list[Subspace]) -> None:
        m = len(chain)
        if m == steps:
            _, perm = canonical_basis(space, chain)
            tally[perm] = tally.get(perm, 0) + 1
            return
        top = chain[-1] if chain else ()
        for sub in levels[m + 1]:
            if not chain or subspace_le(top, sub, p):
                chain.append(sub)
                rec(chain)
                chain.pop()

    rec([])
    return tally


def count_canonical_bases(space: FqSpace, perm: SignedPerm) -> int:
    """Number of canonical bases with the given length-permutation, counted by
    enumerating complete flags and extracting their bases (canonical bases of
    a space are in bijection with its complete flags)."""
    return _complete_flag_tally(space).get(tuple(perm), 0)


# -- standard flags --------------------------------------------------------------


def standard_flag(perm: SignedPerm, fam: GroupFamily) -> tuple[tuple[int, ...], int]:
    """Dimension sequence and standard weight of the standard flags whose
    length-permutation is perm.

    The dimensions are the pm-order descent positions, plus d itself when the
    last entry is negative (the flag is then maximal); the weight is their sum.
    On unsigned permutations this reduces to the classical descent set.
    """
    check_member(perm, fam)
    d = fam.d
    dims = [i for i in range(1, d) if pm_less(perm[i], perm[i - 1])]
    if d and perm[-1] < 0:
        dims.append(d)
    return tuple(dims), sum(dims)


def refinement_count(perm: SignedPerm, fam: GroupFamily) -> int:
    """Number of flags sharing a canonical basis with length-permutation perm
    (type A): 2^(d-k) with k the number of descents."""
    if fam.tag != "A":
        raise ValueError("refinement counts are a type A statement")
    check_member(perm, fam)
    k = sum(1 for i in range(1, fam.d) if perm[i - 1] > perm[i])
    return 2 ** (fam.d - k)


def flag_to_lists(chain: Flag) -> list[list[list[int]]]:
    """JSON-ready encoding of a flag: a list of RREF row lists."""
    return [[list(row) for row in member] for member in chain]


def flag_from_lists(space: FqSpace, data: Sequence[Sequence[Sequence[int]]]) -> Flag:
    return validate_flag(space, data)


def flags_by_canonical_basis(space: FqSpace) -> dict[tuple[Vector, ...], list[Flag]]:
    """Bucket every flag of a linear space by its canonical basis."""
    if space.kind != "linear":
        raise ValueError("refinement enumeration is implemented for linear spaces")
    buckets: dict[tuple[Vector, ...], list[Flag]] = {}
    for chain in enumerate_flags(space):
        basis, _ = canonical_basis(space, chain)
        buckets.setdefault(basis, []).append(chain)
    return buckets
