"""Named identity checks: every verifiable statement gets a stable name.

Each check computes its two sides independently and returns a CheckReport
with the exact values and the first discrepancy on failure.  The registry
maps check names to (function, default parameter grid); the CLI ``verify``
command runs grids from here, and the acceptance suite calls the functions
directly with its own grids.

The single non-gating check is d_euler_direct_vs_recursive: whether the
descent statistic used for the s-marking makes the direct type-D sum match
the type-D recursion is deliberately reported rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .algebra import MultiPoly, TruncSeries, poly_text
from . import flaggeom, statistics
from .rothe import rothe_diagram
from .weylgroups import (
    GroupFamily,
    central_element,
    compose,
    coxeter_word_length,
    descent_count,
    enumerate_group,
    greedy_reduced_word,
    inversions,
    length,
    negative_count,
    wmaj,
    word_to_perm,
)


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool
    lhs: str
    rhs: str
    discrepancy: str | None = None
    gating: bool = True

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "discrepancy": self.discrepancy,
            "gating": self.gating,
        }

    def label(self) -> str:
        inner = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({inner})"


def _poly_discrepancy(a: MultiPoly, b: MultiPoly) -> str | None:
    diff = a - b
    if not diff:
        return None
    e = min(diff.terms)
    return f"first differing term q^{e[0]} t^{e[1]} s^{e[2]}: {a.coefficient(*e)} vs {b.coefficient(*e)}"


def _series_discrepancy(a: TruncSeries, b: TruncSeries) -> str | None:
    for n, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        if ca != cb:
            inner = _poly_discrepancy(ca, cb)
            return f"coefficient of t^{n}: {inner}"
    return None


def _poly_report(name: str, params: dict, lhs: MultiPoly, rhs: MultiPoly, gating=True) -> CheckReport:
    disc = _poly_discrepancy(lhs, rhs)
    return CheckReport(name, params, disc is None, poly_text(lhs), poly_text(rhs), disc, gating)


def _series_report(name: str, params: dict, lhs: TruncSeries, rhs: TruncSeries) -> CheckReport:
    disc = _series_discrepancy(lhs, rhs)
    return CheckReport(name, params, disc is None, str(lhs), str(rhs), disc)


def _scan_report(name: str, params: dict, total: int, failures: list[str]) -> CheckReport:
    return CheckReport(
        name,
        params,
        not failures,
        f"{total - len(failures)} of {total} cases agree",
        f"{total} cases expected",
        failures[0] if failures else None,
    )


# -- polynomial identities ----------------------------------------------------


def direct_vs_recursive(family: str, d: int, euler: bool = False) -> CheckReport:
    fam = GroupFamily(family, d)
    lhs = statistics.mahonian_direct(fam, euler=euler)
    rhs = statistics.mahonian_recursive(fam, euler=euler)
    return _poly_report("direct_vs_recursive", {"family": family, "d": d, "euler": euler}, lhs, rhs)


def d_euler_direct_vs_recursive(d: int) -> CheckReport:
    fam = GroupFamily("D", d)
    lhs = statistics.mahonian_direct(fam, euler=True)
    rhs = statistics.mahonian_recursive(fam, euler=True)
    rep = _poly_report("d_euler_direct_vs_recursive", {"d": d}, lhs, rhs)
    rep.gating = False
    return rep


def symmetry_qt_a(d: int) -> CheckReport:
    m = statistics.mahonian_recursive(GroupFamily("A", d))
    return _poly_report("symmetry_qt_a", {"d": d}, m, m.specialize(q="t", t="q"))


def low_degree_agreement(d: int) -> CheckReport:
    ma = statistics.mahonian_recursive(GroupFamily("A", d))
    mbc = statistics.mahonian_recursive(GroupFamily("BC", d))
    cut = lambda p: MultiPoly({e: c for e, c in p.terms.items() if e[0] + e[1] <= d})
    return _poly_report("low_degree_agreement", {"d": d}, cut(ma), cut(mbc))


def a_major_equidistribution(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("A", d)).specialize(q=1)
    return _poly_report("a_major_equidistribution", {"d": d}, lhs, statistics.closed_form("a_wmaj", d))


def a_length_factorization(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("A", d)).specialize(t=1)
    return _poly_report("a_length_factorization", {"d": d}, lhs, statistics.closed_form("a_length", d))


def bc_length_factorization(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("BC", d)).specialize(t=1)
    return _poly_report("bc_length_factorization", {"d": d}, lhs, statistics.closed_form("bc_length", d))


def bc_major_factorization(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("BC", d)).specialize(q=1)
    return _poly_report("bc_major_factorization", {"d": d}, lhs, statistics.closed_form("bc_wmaj", d))


def d_length_factorization(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("D", d)).specialize(t=1)
    return _poly_report("d_length_factorization", {"d": d}, lhs, statistics.closed_form("d_length", d))


def d_wmaj_factorization(d: int) -> CheckReport:
    lhs = statistics.mahonian_direct(GroupFamily("D", d)).specialize(q=1)
    return _poly_report("d_wmaj_factorization", {"d": d}, lhs, statistics.closed_form("d_wmaj", d))


def bc_reciprocal_symmetry(d: int) -> CheckReport:
    m = statistics.mahonian_direct(GroupFamily("BC", d))
    conj = m.reciprocal_conjugate(d * d, comb(d + 1, 2))
    return _poly_report("bc_reciprocal_symmetry", {"d": d}, conj, m)


def bc_restriction_to_unsigned(d: int) -> CheckReport:
    fam = GroupFamily("BC", d)
    terms: dict[tuple[int, int, int], int] = {}
    for perm in enumerate_group(fam):
        if all(x > 0 for x in perm):
            key = (length(perm, fam), wmaj(perm), 0)
            terms[key] = terms.get(key, 0) + 1
    lhs = MultiPoly(terms)
    rhs = statistics.mahonian_direct(GroupFamily("A", d))
    return _poly_report("bc_restriction_to_unsigned", {"d": d}, lhs, rhs)


def qbinomial_theorem(d: int, a: int) -> CheckReport:
    lhs, rhs = statistics.qbinomial_theorem_sides(d, a)
    return _poly_report("qbinomial_theorem", {"d": d, "a": a}, lhs, rhs)


def qbinomial_recursion_vs_product(d: int) -> CheckReport:
    failures = []
    for k in range(d + 1):
        if statistics.q_binomial(d, k) != statistics.q_binomial_product(d, k):
            failures.append(f"k={k}")
    return _scan_report("qbinomial_recursion_vs_product", {"d": d}, d + 1, failures)


def qbinomial_special_case(d: int) -> CheckReport:
    """sum_j C(d,j)_q q^C(j,2) = prod_{j<d} (1+q^j): the a=0, t=1 case of the
    q-binomial theorem."""
    lhs, rhs = statistics.qbinomial_theorem_sides(d, 0)
    return _poly_report(
        "qbinomial_special_case", {"d": d}, lhs.specialize(t=1), rhs.specialize(t=1)
    )


def euler_specialize_s1(family: str, d: int) -> CheckReport:
    fam = GroupFamily(family, d)
    lhs = statistics.mahonian_recursive(fam, euler=True).specialize(s=1)
    rhs = statistics.mahonian_recursive(fam)
    return _poly_report("euler_specialize_s1", {"family": family, "d": d}, lhs, rhs)


# -- group scans ----------------------------------------------------------------


def central_element_identities(d: int) -> CheckReport:
    fam = GroupFamily("BC", d)
    c = central_element(d)
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        other = compose(c, perm)
        if length(perm, fam) + length(other, fam) != d * d:
            failures.append(f"length identity fails at {perm}")
        elif wmaj(perm) + wmaj(other) != comb(d + 1, 2):
            failures.append(f"wmaj identity fails at {perm}")
    return _scan_report("central_element_identities", {"d": d}, total, failures)


def bc_vs_d_length_difference(d: int) -> CheckReport:
    fam_d = GroupFamily("D", d)
    fam_bc = GroupFamily("BC", d)
    failures = []
    total = 0
    for perm in enumerate_group(fam_d):
        total += 1
        if length(perm, fam_bc) - length(perm, fam_d) != negative_count(perm):
            failures.append(f"difference wrong at {perm}")
    return _scan_report("bc_vs_d_length_difference", {"d": d}, total, failures)


def generator_length_step(family: str, d: int) -> CheckReport:
    fam = GroupFamily(family, d)
    gens = fam.generators()
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        for g in gens:
            total += 1
            if abs(length(compose(perm, g), fam) - length(perm, fam)) != 1:
                failures.append(f"step not +-1 at {perm}")
    return _scan_report("generator_length_step", {"family": family, "d": d}, total, failures)


def length_vs_bfs(family: str, d: int) -> CheckReport:
    fam = GroupFamily(family, d)
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        if length(perm, fam) != coxeter_word_length(perm, fam):
            failures.append(f"closed form != BFS at {perm}")
    return _scan_report("length_vs_bfs", {"family": family, "d": d}, total, failures)


def greedy_word_valid(family: str, d: int) -> CheckReport:
    fam = GroupFamily(family, d)
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        word = greedy_reduced_word(perm, fam)
        if len(word) != length(perm, fam) or word_to_perm(word, fam) != perm:
            failures.append(f"bad word at {perm}")
    return _scan_report("greedy_word_valid", {"family": family, "d": d}, total, failures)


def standard_weight_identity(family: str, d: int) -> CheckReport:
    fam = GroupFamily(family, d)
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        _, weight = flaggeom.standard_flag(perm, fam)
        if weight != wmaj(perm):
            failures.append(f"standard weight != wmaj at {perm}")
    return _scan_report("standard_weight_identity", {"family": family, "d": d}, total, failures)


def descent_statistic_matches_coxeter(family: str, d: int) -> CheckReport:
    """For types A and BC the descent statistic counts generators that shorten
    the element (not asserted for type D, where it differs)."""
    fam = GroupFamily(family, d)
    gens = fam.generators()
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        l0 = length(perm, fam)
        cox = sum(1 for g in gens if length(compose(perm, g), fam) < l0)
        if cox != descent_count(perm):
            failures.append(f"descent count mismatch at {perm}: {descent_count(perm)} vs {cox}")
    return _scan_report(
        "descent_statistic_matches_coxeter", {"family": family, "d": d}, total, failures
    )


# -- geometric oracle ------------------------------------------------------------


_FLAG_KIND_FAMILY = {"A": "A", "C": "BC", "B": "BC", "D": "D"}


def _space(kind: str, p: int, d: int) -> flaggeom.FqSpace:
    return flaggeom.space_for_family(kind, p, d)


def flag_series_theorem(kind: str, p: int, d: int, trunc: int, alpha: bool = False) -> CheckReport:
    """Flag-series oracle against the group-statistics side.

    Types A, C, D compare the enumerated series with mahonian * product of
    geometric factors at q=p; type B compares with the type-C series.
    """
    params = {"kind": kind, "p": p, "d": d, "trunc": trunc, "alpha": alpha}
    space = _space(kind, p, d)
    lhs = flaggeom.flag_series(space, trunc, with_alpha=alpha)
    if kind == "B":
        rhs = flaggeom.flag_series(flaggeom.symplectic_space(p, d), trunc, with_alpha=alpha)
    else:
        fam = GroupFamily(_FLAG_KIND_FAMILY[kind], d)
        m = statistics.mahonian_recursive(fam, euler=alpha).specialize(q=p)
        rhs = TruncSeries.from_poly(m, trunc)
        for j in range(1, d + 1):
            rhs = rhs * TruncSeries.geometric_factor(j, alpha, trunc)
    return _series_report("flag_series_theorem", params, lhs, rhs)


def subspace_count_grassmann(p: int, d: int) -> CheckReport:
    space = flaggeom.linear_space(p, d)
    failures = []
    for k in range(d + 1):
        got = sum(1 for _ in flaggeom.enumerate_subspaces(space, k))
        want = statistics.q_binomial(d, k).evaluate(q=p)
        if got != want:
            failures.append(f"k={k}: {got} vs {want}")
    return _scan_report("subspace_count_grassmann", {"p": p, "d": d}, d + 1, failures)


def subspace_count_isotropic(kind: str, p: int, d: int) -> CheckReport:
    """Isotropic counts in symplectic (kind C) and odd quadratic (kind B)
    spaces against the shared closed formula."""
    space = _space(kind, p, d)
    failures = []
    for k in range(d + 1):
        got = sum(1 for _ in flaggeom.enumerate_subspaces(space, k, isotropic_only=True))
        want = statistics.symplectic_isotropic_count(d, k).evaluate(q=p)
        if got != want:
            failures.append(f"k={k}: {got} vs {want}")
    return _scan_report("subspace_count_isotropic", {"kind": kind, "p": p, "d": d}, d + 1, failures)


def subspace_count_hyperbolic(p: int, d: int) -> CheckReport:
    """Isotropic counts in the hyperbolic space, broken down by the
    metabolizer excess l."""
    space = flaggeom.hyperbolic_space(p, d)
    failures = []
    cases = 0
    for k in range(d + 1):
        tally: dict[int, int] = {}
        for rows in flaggeom.enumerate_subspaces(space, k, isotropic_only=True):
            l = flaggeom.metabolizer_excess(space, rows)
            tally[l] = tally.get(l, 0) + 1
        for l in range(k + 1):
            cases += 1
            got = tally.get(l, 0)
            want = statistics.hyperbolic_isotropic_count(d, k, l).evaluate(q=p)
            if got != want:
                failures.append(f"k={k} l={l}: {got} vs {want}")
    return _scan_report("subspace_count_hyperbolic", {"p": p, "d": d}, cases, failures)


def canonical_cell_counts(kind: str, p: int, d: int) -> CheckReport:
    """Canonical bases with a given length-permutation number p^length.

    For the hyperbolic space the complete flags of both parity classes are
    tallied, against the type-D length formula extended to all signed
    permutations."""
    space = _space(kind, p, d)
    failures = []
    total = 0
    seen = 0
    if kind == "D":
        for perm in enumerate_group(GroupFamily("BC", d)):
            total += 1
            got = flaggeom.count_canonical_bases(space, perm)
            seen += got
            want = p ** (inversions(perm) + sum(d + x for x in perm if x < 0))
            if got != want:
                failures.append(f"{perm}: {got} vs {want}")
    else:
        fam = GroupFamily(_FLAG_KIND_FAMILY[kind], d)
        for perm in enumerate_group(fam):
            total += 1
            got = flaggeom.count_canonical_bases(space, perm)
            seen += got
            want = p ** length(perm, fam)
            if got != want:
                failures.append(f"{perm}: {got} vs {want}")
    if seen != sum(flaggeom._complete_flag_tally(space).values()):
        failures.append("tally contains permutations outside the family")
    return _scan_report("canonical_cell_counts", {"kind": kind, "p": p, "d": d}, total, failures)


def standard_flag_generating_function(kind: str, p: int, d: int) -> CheckReport:
    """Sum of count_canonical_bases * t^standard_weight over the family equals
    the Mahonian polynomial at q=p."""
    space = _space(kind, p, d)
    fam = GroupFamily(_FLAG_KIND_FAMILY[kind], d)
    lhs = MultiPoly.zero()
    for perm in enumerate_group(fam):
        _, weight = flaggeom.standard_flag(perm, fam)
        lhs = lhs + MultiPoly.monomial(flaggeom.count_canonical_bases(space, perm), et=weight)
    rhs = statistics.mahonian_direct(fam).specialize(q=p)
    return _poly_report("standard_flag_generating_function", {"kind": kind, "p": p, "d": d}, lhs, rhs)


def standard_weight_flags(kind: str, p: int, d: int) -> CheckReport:
    """For every enumerated flag: the canonical basis reproduces the flag by
    prefix spans, and the standard weight of its standard flag equals the
    (Weyl-)Major index of the length-permutation."""
    space = _space(kind, p, d)
    fam = GroupFamily(_FLAG_KIND_FAMILY[kind], d)
    failures = []
    total = 0
    for chain in flaggeom.enumerate_flags(space):
        total += 1
        basis, perm = flaggeom.canonical_basis(space, chain)
        for member in chain:
            if flaggeom.rref(basis[: len(member)], p) != member:
                failures.append(f"prefix spans do not reproduce {chain}")
                break
        else:
            _, weight = flaggeom.standard_flag(perm, fam)
            if weight != wmaj(perm):
                failures.append(f"standard weight != wmaj for {chain} (perm {perm})")
            elif kind == "D" and negative_count(perm) % 2:
                failures.append(f"even flag {chain} extracted an odd permutation {perm}")
    return _scan_report("standard_weight_flags", {"kind": kind, "p": p, "d": d}, total, failures)


def standard_fiber_series(p: int, d: int, trunc: int) -> CheckReport:
    """Weighted flags sharing a canonical basis sum to t^w_st * prod 1/(1-t^j)."""
    space = flaggeom.linear_space(p, d)
    failures = []
    buckets = flaggeom.flags_by_canonical_basis(space)
    factors = [
        TruncSeries.geometric_factor(m, False, trunc) - TruncSeries.one(trunc)
        for m in range(1, d + 1)
    ]
    for basis, chains in buckets.items():
        got = TruncSeries.zero(trunc)
        for chain in chains:
            term = TruncSeries.one(trunc)
            for sub in chain:
                term = term * factors[len(sub) - 1]
            got = got + term
        perm_of_basis = _basis_length_perm(space, basis)
        _, weight = flaggeom.standard_flag(perm_of_basis, GroupFamily("A", d))
        want = TruncSeries.from_poly(MultiPoly.monomial(1, et=weight), trunc)
        for j in range(1, d + 1):
            want = want * TruncSeries.geometric_factor(j, False, trunc)
        if got != want:
            failures.append(f"fiber series mismatch for basis {basis}")
    return _scan_report("standard_fiber_series", {"p": p, "d": d, "trunc": trunc}, len(buckets), failures)


def _basis_length_perm(space: flaggeom.FqSpace, basis) -> tuple[int, ...]:
    complete = tuple(flaggeom.rref(basis[: i + 1], space.p) for i in range(len(basis)))
    _, perm = flaggeom.canonical_basis(space, complete)
    return perm


def refinement_counts(p: int, d: int) -> CheckReport:
    """Bucket all flags of F_p^d by canonical basis; bucket sizes must be
    2^(d-k) with k the descent count of the basis' length-permutation."""
    space = flaggeom.linear_space(p, d)
    fam = GroupFamily("A", d)
    buckets = flaggeom.flags_by_canonical_basis(space)
    failures = []
    for basis, chains in buckets.items():
        perm = _basis_length_perm(space, basis)
        want = flaggeom.refinement_count(perm, fam)
        if len(chains) != want:
            failures.append(f"basis {basis}: {len(chains)} flags vs {want}")
    return _scan_report("refinement_counts", {"p": p, "d": d}, len(buckets), failures)


def rothe_tallies(kind: str, d: int) -> CheckReport:
    """Cross count = inversions, tensors per tag = the sign part summands, for
    every element of the matching group."""
    fam = GroupFamily(_FLAG_KIND_FAMILY[kind], d)
    failures = []
    total = 0
    for perm in enumerate_group(fam):
        total += 1
        diag = rothe_diagram(perm, kind)
        if diag.cross_count() != inversions(perm):
            failures.append(f"cross count wrong at {perm}")
            continue
        base = d + 1 if kind in ("C", "B") else d
        want_tags = {i: base + perm[i - 1] for i in range(1, d + 1) if perm[i - 1] < 0}
        want_tags = {i: n for i, n in want_tags.items() if n}
        if kind != "A" and diag.tensor_counts() != want_tags:
            failures.append(f"tensor tags wrong at {perm}: {diag.tensor_counts()} vs {want_tags}")
    return _scan_report("rothe_tallies", {"kind": kind, "d": d}, total, failures)


def rothe_worked_examples() -> CheckReport:
    """The two printed diagrams: 18 crosses for the type A example, 7 crosses
    with tensor tallies 2/6/5 for the type C example."""
    failures = []
    a = rothe_diagram((6, 3, 8, 1, 4, 9, 7, 2, 5), "A")
    if a.cross_count() != 18:
        failures.append(f"type A example: {a.cross_count()} crosses")
    c = rothe_diagram((-5, 3, -1, 6, 4, -2), "C")
    if c.cross_count() != 7 or c.tensor_counts() != {1: 2, 3: 6, 6: 5}:
        failures.append(f"type C example: {c.cross_count()} crosses, {c.tensor_counts()}")
    dd = rothe_diagram((-5, 3, -1, -6, 4, -2), "D")
    want_d = {i: 6 + v for i, v in enumerate((-5, 3, -1, -6, 4, -2), start=1) if v < 0 and 6 + v}
    if dd.cross_count() != 7 or dd.tensor_counts() != want_d:
        failures.append(f"type D example: {dd.cross_count()} crosses, {dd.tensor_counts()}")
    return _scan_report("rothe_worked_examples", {}, 3, failures)


# -- registry ---------------------------------------------------------------------


def _grid(**lists) -> Callable[..., list[dict]]:
    def build(max_d: int | None, primes: list[int] | None, trunc: int | None) -> list[dict]:
        out: list[dict] = [{}]
        for key, values in lists.items():
            if key == "d" and max_d is not None:
                values = [v for v in values if v <= max_d]
            if key == "p" and primes is not None:
                values = [v for v in values if v in primes]
            if key == "trunc" and trunc is not None:
                values = [trunc]
            out = [dict(item, **{key: v}) for item in out for v in values]
        return out

    return build


def _fixed(*param_dicts) -> Callable[..., list[dict]]:
    def build(max_d, primes, trunc):
        out = []
        for params in param_dicts:
            if max_d is not None and params.get("d", 0) > max_d:
                continue
            if primes is not None and "p" in params and params["p"] not in primes:
                continue
            p2 = dict(params)
            if trunc is not None and "trunc" in p2:
                p2["trunc"] = trunc
            out.append(p2)
        return out

    return build


REGISTRY: dict[str, tuple[Callable[..., CheckReport], Callable[..., list[dict]]]] = {
    "direct_vs_recursive": (
        direct_vs_recursive,
        _fixed(
            *[{"family": "A", "d": d, "euler": e} for d in range(8) for e in (False, True)],
            *[{"family": "BC", "d": d, "euler": e} for d in range(6) for e in (False, True)],
            *[{"family": "D", "d": d, "euler": False} for d in range(6)],
        ),
    ),
    "d_euler_direct_vs_recursive": (
        d_euler_direct_vs_recursive,
        _grid(d=[0, 1, 2, 3, 4]),
    ),
    "symmetry_qt_a": (symmetry_qt_a, _grid(d=list(range(8)))),
    "low_degree_agreement": (low_degree_agreement, _grid(d=[1, 2, 3, 4, 5])),
    "a_major_equidistribution": (a_major_equidistribution, _grid(d=list(range(1, 8)))),
    "a_length_factorization": (a_length_factorization, _grid(d=list(range(1, 8)))),
    "bc_length_factorization": (bc_length_factorization, _grid(d=[1, 2, 3, 4, 5])),
    "bc_major_factorization": (bc_major_factorization, _grid(d=[1, 2, 3, 4, 5])),
    "d_length_factorization": (d_length_factorization, _grid(d=[1, 2, 3, 4, 5])),
    "d_wmaj_factorization": (d_wmaj_factorization, _grid(d=[1, 2, 3, 4, 5, 6])),
    "bc_reciprocal_symmetry": (bc_reciprocal_symmetry, _grid(d=[1, 2, 3, 4, 5])),
    "bc_restriction_to_unsigned": (bc_restriction_to_unsigned, _grid(d=[1, 2, 3, 4, 5])),
    "qbinomial_theorem": (qbinomial_theorem, _grid(d=list(range(9)), a=[0, 1, 2, 3, 4])),
    "qbinomial_recursion_vs_product": (qbinomial_recursion_vs_product, _grid(d=list(range(9)))),
    "qbinomial_special_case": (qbinomial_special_case, _grid(d=list(range(9)))),
    "euler_specialize_s1": (
        euler_specialize_s1,
        _grid(family=["A", "BC", "D"], d=[0, 1, 2, 3, 4, 5]),
    ),
    "central_element_identities": (central_element_identities, _grid(d=[1, 2, 3, 4, 5])),
    "bc_vs_d_length_difference": (bc_vs_d_length_difference, _grid(d=[1, 2, 3, 4, 5])),
    "generator_length_step": (
        generator_length_step,
        _grid(family=["A", "BC", "D"], d=[1, 2, 3, 4]),
    ),
    "length_vs_bfs": (
        length_vs_bfs,
        _fixed(
            *[{"family": "A", "d": d} for d in range(1, 7)],
            *[{"family": "BC", "d": d} for d in range(1, 6)],
            *[{"family": "D", "d": d} for d in range(1, 6)],
        ),
    ),
    "greedy_word_valid": (greedy_word_valid, _grid(family=["A", "BC", "D"], d=[1, 2, 3, 4])),
    "standard_weight_identity": (
        standard_weight_identity,
        _grid(family=["A", "BC", "D"], d=[1, 2, 3, 4, 5]),
    ),
    "descent_statistic_matches_coxeter": (
        descent_statistic_matches_coxeter,
        _grid(family=["A", "BC"], d=[1, 2, 3, 4]),
    ),
    "flag_series_theorem": (
        flag_series_theorem,
        _fixed(
            *[
                {"kind": "A", "p": p, "d": d, "trunc": 12, "alpha": a}
                for p in (2, 3)
                for d in (1, 2, 3)
                for a in (False, True)
            ],
            *[
                {"kind": k, "p": p, "d": d, "trunc": 12, "alpha": a}
                for k in ("C", "B", "D")
                for p in (3, 5)
                for d in (1, 2)
                for a in (False, True)
            ],
        ),
    ),
    "subspace_count_grassmann": (
        subspace_count_grassmann,
        _grid(p=[2, 3], d=[1, 2, 3, 4]),
    ),
    "subspace_count_isotropic": (
        subspace_count_isotropic,
        _fixed(
            *[{"kind": "C", "p": p, "d": d} for p in (3, 5) for d in (1, 2)],
            *[{"kind": "B", "p": p, "d": d} for p in (3, 5) for d in (1, 2)],
        ),
    ),
    "subspace_count_hyperbolic": (
        subspace_count_hyperbolic,
        _grid(p=[3, 5], d=[1, 2]),
    ),
    "canonical_cell_counts": (
        canonical_cell_counts,
        _fixed(
            *[{"kind": "A", "p": p, "d": d} for p in (2, 3) for d in (1, 2, 3)],
            *[{"kind": k, "p": 3, "d": d} for k in ("C", "B", "D") for d in (1, 2)],
        ),
    ),
    "standard_flag_generating_function": (
        standard_flag_generating_function,
        _fixed(
            *[{"kind": "A", "p": p, "d": d} for p in (2, 3) for d in (1, 2, 3)],
            {"kind": "C", "p": 3, "d": 2},
        ),
    ),
    "standard_weight_flags": (
        standard_weight_flags,
        _fixed(
            *[{"kind": "A", "p": 3, "d": d} for d in (1, 2, 3)],
            {"kind": "C", "p": 3, "d": 2},
            {"kind": "B", "p": 3, "d": 2},
            {"kind": "D", "p": 3, "d": 2},
        ),
    ),
    "standard_fiber_series": (
        standard_fiber_series,
        _fixed(
            {"p": 2, "d": 2, "trunc": 12},
            {"p": 2, "d": 3, "trunc": 12},
            {"p": 3, "d": 2, "trunc": 12},
        ),
    ),
    "refinement_counts": (refinement_counts, _grid(p=[2], d=[1, 2, 3])),
    "rothe_tallies": (
        rothe_tallies,
        _fixed(
            *[{"kind": "A", "d": d} for d in (1, 2, 3, 4)],
            *[{"kind": k, "d": d} for k in ("C", "B", "D") for d in (1, 2, 3, 4)],
        ),
    ),
    "rothe_worked_examples": (rothe_worked_examples, _fixed({})),
}


def run_identity_check(name: str, params: dict) -> CheckReport:
    """Run one named check with explicit parameters."""
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(REGISTRY)}")
    fn, _ = REGISTRY[name]
    return fn(**params)


def default_grid(name: str, max_d=None, primes=None, trunc=None) -> list[dict]:
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(REGISTRY)}")
    _, grid = REGISTRY[name]
    return grid(max_d, primes, trunc)


def run_all(
    names: Iterable[str] | None = None, max_d=None, primes=None, trunc=None
) -> list[CheckReport]:
    reports = []
    for name in names if names is not None else REGISTRY:
        fn, grid = REGISTRY[name]
        for params in grid(max_d, primes, trunc):
            reports.append(fn(**params))
    return reports
