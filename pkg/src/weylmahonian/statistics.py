"""Mahonian and Weyl-Mahonian polynomials by direct enumeration and recursion.

The central objects are the bivariate generating polynomials of
(length, Weyl-Major index) over a Weyl group family, optionally refined by a
third variable s marking the descent statistic.  Two independent routes are
provided for each: a direct sum over the enumerated group, and the
flag-counting recursions; the two agreeing is a core correctness check.

All divisions appearing in quoted closed forms are exact polynomial divisions
that raise on a nonzero remainder, so evaluating a closed form doubles as a
check of its divisibility claim.  Empty products are 1 and empty sums 0
throughout.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import ONE, ZERO, MultiPoly
from .weylgroups import (
    GroupFamily,
    descent_count,
    enumerate_group,
    length,
    wmaj,
)

_Q = MultiPoly.var("q")
_T = MultiPoly.var("t")
_S = MultiPoly.var("s")


def _qpow(n: int) -> MultiPoly:
    return MultiPoly.monomial(1, eq=n)


def _tpow(n: int) -> MultiPoly:
    return MultiPoly.monomial(1, et=n)


@lru_cache(maxsize=None)
def q_binomial(d: int, k: int) -> MultiPoly:
    """Gaussian binomial via the Pascal-type recursion; zero outside 0 <= k <= d."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if k < 0 or k > d:
        return ZERO
    if k == 0 or k == d:
        return ONE
    return q_binomial(d - 1, k - 1) + _qpow(k) * q_binomial(d - 1, k)


def q_binomial_product(d: int, k: int) -> MultiPoly:
    """Gaussian binomial via the closed product formula (exact division route)."""
    if k < 0 or k > d:
        return ZERO
    num = ONE
    den = ONE
    for j in range(1, k + 1):
        num = num * (_qpow(d + 1 - j) - 1)
        den = den * (_qpow(j) - 1)
    return num.exact_div(den)


def symplectic_isotropic_count(d: int, k: int) -> MultiPoly:
    """Number of isotropic k-subspaces of a 2d-dimensional symplectic space
    (equals the count for a (2d+1)-dimensional odd quadratic space)."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    num = ONE
    den = ONE
    for j in range(k):
        num = num * (1 - _qpow(2 * d - 2 * j))
        den = den * (1 - _qpow(k - j))
    return num.exact_div(den)


def hyperbolic_isotropic_count(d: int, k: int, l: int) -> MultiPoly:
    """Isotropic k-subspaces V of the d-fold hyperbolic sum with
    dim(V / (V intersect I)) = l, for the fixed metabolizer I."""
    if not 0 <= k <= d or not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k <= d, got d={d}, k={k}, l={l}")
    e2 = l * (2 * d + l - 2 * k - 1)
    if e2 % 2 or e2 < 0:
        raise ValueError(f"exponent l(2d+l-2k-1)/2 not a nonnegative integer for {(d, k, l)}")
    return _qpow(e2 // 2) * q_binomial(d, k) * q_binomial(k, l)


def isotropic_subspace_count(kind: str, d: int, k: int, l: int | None = None) -> MultiPoly:
    """Dispatch on the space type; for D, l=None sums over all l."""
    if kind == "BC":
        if l is not None:
            raise ValueError("parameter l only applies to type D")
        return symplectic_isotropic_count(d, k)
    if kind == "D":
        if l is not None:
            return hyperbolic_isotropic_count(d, k, l)
        total = ZERO
        for ll in range(k + 1):
            total = total + hyperbolic_isotropic_count(d, k, ll)
        return total
    raise ValueError(f"unknown space kind {kind!r}")


def even_isotropic_count(d: int, k: int) -> MultiPoly:
    """Even-parity isotropic k-subspaces of the d-fold hyperbolic sum:
    C(d,k)_q * sum_l q^{l(2d+2l-2k-1)} C(k,2l)_q, the l -> 2l reindexing of the
    per-parity count."""
    total = ZERO
    for l in range(k // 2 + 1):
        total = total + _qpow(l * (2 * d + 2 * l - 2 * k - 1)) * q_binomial(k, 2 * l)
    return q_binomial(d, k) * total


def mahonian_direct(fam: GroupFamily, euler: bool = False) -> MultiPoly:
    """Sum of q^length * t^wmaj (times s^descents if euler) over the group."""
    terms: dict[tuple[int, int, int], int] = {}
    for perm in enumerate_group(fam):
        key = (length(perm, fam), wmaj(perm), descent_count(perm) if euler else 0)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)


@lru_cache(maxsize=None)
def _mahonian_a(d: int) -> MultiPoly:
    # M_d = sum_i t^i (prod_{j=i+1}^{d-1} (1-t^j)) C(d,i)_q M_i, M_0 = 1
    if d == 0:
        return ONE
    total = ZERO
    for i in range(d):
        prod = ONE
        for j in range(i + 1, d):
            prod = prod * (1 - _tpow(j))
        total = total + _tpow(i) * prod * q_binomial(d, i) * _mahonian_a(i)
    return total


@lru_cache(maxsize=None)
def _mahonian_a_euler(d: int) -> MultiPoly:
    if d == 0:
        return ONE
    base = ONE
    for j in range(1, d):
        base = base * (1 - _S * _tpow(j))
    total = base
    for k in range(1, d):
        prod = ONE
        for j in range(k + 1, d):
            prod = prod * (1 - _S * _tpow(j))
        total = total + _S * _tpow(k) * q_binomial(d, k) * prod * _mahonian_a_euler(k)
    return total


def _mahonian_signed(d: int, count_factor, euler: bool) -> MultiPoly:
    """Shared shape of the BC and D recursions: sort weighted flags by their
    largest subspace (count_factor(k) choices in dimension k) and recurse into
    a type A interior; the s-marked variant pulls the empty-flag term out of
    the sum."""
    if not euler:
        total = ZERO
        for k in range(d + 1):
            prod = ONE
            for j in range(k + 1, d + 1):
                prod = prod * (1 - _tpow(j))
            total = total + _tpow(k) * count_factor(k) * prod * _mahonian_a(k)
        return total
    total = ONE
    for j in range(1, d + 1):
        total = total * (1 - _S * _tpow(j))
    for k in range(1, d + 1):
        prod = ONE
        for j in range(k + 1, d + 1):
            prod = prod * (1 - _S * _tpow(j))
        total = total + _S * _tpow(k) * count_factor(k) * prod * _mahonian_a_euler(k)
    return total


def mahonian_recursive(fam: GroupFamily, euler: bool = False) -> MultiPoly:
    """Recursion route for the same polynomial as mahonian_direct."""
    d = fam.d
    if fam.tag == "A":
        return _mahonian_a_euler(d) if euler else _mahonian_a(d)
    if fam.tag == "BC":
        return _mahonian_signed(d, lambda k: symplectic_isotropic_count(d, k), euler)
    return _mahonian_signed(d, lambda k: even_isotropic_count(d, k), euler)


def qbinomial_theorem_sides(d: int, a: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the q-binomial theorem
    sum_j C(d,j)_q q^{C(j+a,2)} t^j = q^{C(a,2)} prod_{j<d} (1 + t q^{j+a})."""
    if d < 0 or a < 0:
        raise ValueError("need d >= 0 and a >= 0")
    lhs = ZERO
    for j in range(d + 1):
        lhs = lhs + q_binomial(d, j) * _qpow((j + a) * (j + a - 1) // 2) * _tpow(j)
    rhs = _qpow(a * (a - 1) // 2)
    for j in range(d):
        rhs = rhs * (1 + _T * _qpow(j + a))
    return lhs, rhs


def _prod_ratio_t(d: int) -> MultiPoly:
    # prod_{j=1}^{d} (1-t^j)/(1-t)
    num = ONE
    for j in range(1, d + 1):
        num = num * (1 - _tpow(j))
    return num.exact_div((1 - _T) ** d)


CLOSED_FORM_NAMES = (
    "a_length",
    "a_wmaj",
    "bc_length",
    "bc_wmaj",
    "d_length",
    "d_wmaj",
)


def closed_form(name: str, d: int) -> MultiPoly:
    """Closed-form specializations of the Mahonian polynomials.

    a_length:  sum of q^length over type A       = prod (1-q^j)/(1-q)
    a_wmaj:    type A polynomial at q=1          = prod (1-t^j)/(1-t)
    bc_length: type BC at t=1                    = prod (1-q^2j)/(1-q)
    bc_wmaj:   type BC at q=1                    = (1+t)^d prod (t^j-1)/(t-1)
    d_length:  type D at t=1                     = (1-q^d)/(1-q) prod_{j<d} (1-q^2j)/(1-q)
    d_wmaj:    sum of t^wmaj over type D         = ((1-t)^d+(1+t)^d)/2 prod (1-t^j)/(1-t)
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    if name == "a_length":
        num = ONE
        for j in range(1, d + 1):
            num = num * (1 - _qpow(j))
        return num.exact_div((1 - _Q) ** d)
    if name == "a_wmaj":
        return _prod_ratio_t(d)
    if name == "bc_length":
        num = ONE
        for j in range(1, d + 1):
            num = num * (1 - _qpow(2 * j))
        return num.exact_div((1 - _Q) ** d)
    if name == "bc_wmaj":
        num = (1 + _T) ** d
        for j in range(1, d + 1):
            num = num * (_tpow(j) - 1)
        return num.exact_div((_T - 1) ** d)
    if name == "d_length":
        if d == 0:
            return ONE
        num = ONE
        for j in range(1, d):
            num = num * (1 - _qpow(2 * j))
        num = num * (1 - _qpow(d))
        return num.exact_div((1 - _Q) ** d)
    if name == "d_wmaj":
        half = ((1 - _T) ** d + (1 + _T) ** d).exact_div(2)
        return half * _prod_ratio_t(d)
    raise ValueError(f"unknown closed form {name!r}; known: {CLOSED_FORM_NAMES}")
