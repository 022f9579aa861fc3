"""Exact integer polynomial arithmetic in q, t, s and truncated power series in t.

A polynomial is a finite map from exponent triples to nonzero integer
coefficients:

  MultiPoly.terms : dict[(eq, et, es), int]

with (eq, et, es) the degrees of q, t, s in the monomial.  Zero coefficients
are never stored, so two polynomials are equal iff their term dicts are equal.
All coefficients are Python ints (arbitrary precision); no floats anywhere.

A TruncSeries is a power series in t truncated at a fixed degree ``bound``:
a list of bound+1 coefficients, each a MultiPoly in q and s only (t-degree 0).
Arithmetic never reads or writes t-degrees above the bound, which makes
products of the geometric factors 1/(1-t^j) and 1/(1-s*t^j) finite objects.

Term order everywhere (iteration, text, JSON, LaTeX) is lexicographic on
(eq, et, es), so all emitted output is byte-stable.
"""

from __future__ import annotations

from typing import Iterator, Mapping

VARS = ("q", "t", "s")
_VAR_INDEX = {"q": 0, "t": 1, "s": 2}

Exponent = tuple[int, int, int]


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


class MultiPoly:
    """Integer polynomial in q, t, s with canonical (zero-free) term storage."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if not coeff:
                    continue
                eq, et, es = exp
                if eq < 0 or et < 0 or es < 0:
                    raise ValueError(f"negative exponent in {exp}")
                clean[(eq, et, es)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls.monomial(1, **{"e" + name: 1})

    @classmethod
    def monomial(cls, coeff: int, eq: int = 0, et: int = 0, es: int = 0) -> "MultiPoly":
        return cls({(eq, et, es): coeff})

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == MultiPoly.const(other).terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = _coerce(other)
        if not self.terms or not other.terms:
            return MultiPoly()
        out: dict[Exponent, int] = {}
        for (aq, at, as_), ac in self.terms.items():
            for (bq, bt, bs), bc in other.terms.items():
                e = (aq + bq, at + bt, as_ + bs)
                out[e] = out.get(e, 0) + ac * bc
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries -----------------------------------------------------------

    def degree(self, name: str) -> int:
        """Maximal exponent of the named variable (0 for the zero polynomial)."""
        i = _VAR_INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def coefficient(self, eq: int = 0, et: int = 0, es: int = 0) -> int:
        return self.terms.get((eq, et, es), 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in lexicographic (eq, et, es) order."""
        return sorted(self.terms.items())

    def evaluate(self, q: int = 1, t: int = 1, s: int = 1) -> int:
        total = 0
        for (eq, et, es), c in self.terms.items():
            total += c * q**eq * t**et * s**es
        return total

    # -- substitutions -----------------------------------------------------

    def specialize(self, **assignment: int | str) -> "MultiPoly":
        """Substitute variables by integer constants or by other variables.

        Keyword names are variable names; values are either ints or one of
        "q", "t", "s".  Unmentioned variables are left alone, so
        ``p.specialize(q="t", t="q")`` swaps q and t.
        """
        for name, val in assignment.items():
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
            if isinstance(val, str) and val not in _VAR_INDEX:
                raise ValueError(f"unknown target variable {val!r}")
        out: dict[Exponent, int] = {}
        for exp, coeff in self.terms.items():
            new = [0, 0, 0]
            c = coeff
            for name, i in _VAR_INDEX.items():
                e = exp[i]
                if name not in assignment:
                    new[i] += e
                    continue
                val = assignment[name]
                if isinstance(val, str):
                    new[_VAR_INDEX[val]] += e
                else:
                    c *= val**e
            if c:
                key = (new[0], new[1], new[2])
                out[key] = out.get(key, 0) + c
        return MultiPoly(out)

    def reciprocal_conjugate(self, dq: int, dt: int) -> "MultiPoly":
        """Return q^dq * t^dt * p(1/q, 1/t); s is untouched.

        Requires dq >= deg_q(p) and dt >= deg_t(p), otherwise the result would
        have negative exponents and a ValueError is raised.
        """
        if dq < self.degree("q") or dt < self.degree("t"):
            raise ValueError(
                f"conjugation degrees ({dq}, {dt}) below polynomial degrees "
                f"({self.degree('q')}, {self.degree('t')})"
            )
        return MultiPoly({(dq - eq, dt - et, es): c for (eq, et, es), c in self.terms.items()})

    def exact_div(self, divisor: "MultiPoly | int") -> "MultiPoly":
        """Exact polynomial division; raises ExactDivisionError on any remainder.

        Reduction is against the lexicographically leading term of the divisor,
        which strictly decreases the leading term of the remainder, so the loop
        terminates; exactness does not depend on the monomial order.
        """
        divisor = _coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lead = max(divisor.terms)
        lead_c = divisor.terms[lead]
        rem = dict(self.terms)
        out: dict[Exponent, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            shift = (e[0] - lead[0], e[1] - lead[1], e[2] - lead[2])
            if min(shift) < 0 or c % lead_c:
                raise ExactDivisionError(f"nonzero remainder at term {e}")
            f = c // lead_c
            out[shift] = out.get(shift, 0) + f
            for de, dc in divisor.terms.items():
                k = (shift[0] + de[0], shift[1] + de[1], shift[2] + de[2])
                nc = rem.get(k, 0) - f * dc
                if nc:
                    rem[k] = nc
                else:
                    rem.pop(k, None)
        return MultiPoly(out)

    # -- emitters ----------------------------------------------------------

    def __str__(self) -> str:
        return poly_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly({poly_text(self)})"


def _coerce(x: "MultiPoly | int") -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


Q = MultiPoly.var("q")
T = MultiPoly.var("t")
S = MultiPoly.var("s")
ONE = MultiPoly.one()
ZERO = MultiPoly.zero()


def poly_text(p: MultiPoly) -> str:
    """Plain-text form, terms in lexicographic order: ``1 + q*t - 2*q^2``."""
    if not p.terms:
        return "0"
    parts: list[str] = []
    for (eq, et, es), c in p.sorted_terms():
        factors = []
        for name, e in zip(VARS, (eq, et, es)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def poly_to_json(p: MultiPoly) -> dict:
    """JSON-ready encoding; coefficients as decimal strings, lex term order."""
    return {
        "vars": list(VARS),
        "terms": [{"e": list(e), "c": str(c)} for e, c in p.sorted_terms()],
    }


def poly_from_json(obj: dict) -> MultiPoly:
    if obj.get("vars") != list(VARS):
        raise ValueError(f"unexpected variable list {obj.get('vars')!r}")
    terms: dict[Exponent, int] = {}
    for item in obj["terms"]:
        eq, et, es = (int(x) for x in item["e"])
        terms[(eq, et, es)] = int(item["c"])
    return MultiPoly(terms)


def poly_latex_table(p: MultiPoly) -> str:
    """LaTeX coefficient table: rows are t-powers, columns are q-powers.

    Cells hold the integer coefficient, or a polynomial in s when the
    s-marked statistics are tabulated; zero cells are left empty.
    """
    dq = p.degree("q")
    dt = p.degree("t")
    cells: dict[tuple[int, int], MultiPoly] = {}
    for (eq, et, es), c in p.terms.items():
        key = (et, eq)
        cells[key] = cells.get(key, ZERO) + MultiPoly.monomial(c, es=es)
    lines = [r"\begin{array}{c|" + "c" * (dq + 1) + "}"]
    header = [""] + ["1" if j == 0 else ("q" if j == 1 else f"q^{{{j}}}") for j in range(dq + 1)]
    lines.append("&".join(header) + r"\\")
    lines.append(r"\hline")
    for i in range(dt + 1):
        label = "1" if i == 0 else ("t" if i == 1 else f"t^{{{i}}}")
        row = [label]
        for j in range(dq + 1):
            c = cells.get((i, j))
            row.append("" if c is None else poly_text(c).replace("*", ""))
        lines.append("&".join(row) + r"\\")
    lines.append(r"\end{array}")
    return "\n".join(lines)


class TruncSeries:
    """Power series in t truncated at ``bound``; coefficients live in Z[q, s]."""

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound: int, coeffs: list[MultiPoly] | None = None):
        if bound < 0:
            raise ValueError("truncation bound must be >= 0")
        self.bound = bound
        cs = list(coeffs) if coeffs is not None else []
        if len(cs) > bound + 1:
            raise ValueError("more coefficients than the bound allows")
        cs += [ZERO] * (bound + 1 - len(cs))
        for c in cs:
            if c.degree("t"):
                raise ValueError("series coefficients must be free of t")
        self.coeffs = cs

    @classmethod
    def zero(cls, bound: int) -> "TruncSeries":
        return cls(bound)

    @classmethod
    def one(cls, bound: int) -> "TruncSeries":
        return cls(bound, [ONE])

    @classmethod
    def from_poly(cls, p: MultiPoly, bound: int) -> "TruncSeries":
        """Truncate a polynomial, splitting off powers of t."""
        coeffs = [ZERO] * (bound + 1)
        for (eq, et, es), c in p.terms.items():
            if et <= bound:
                coeffs[et] = coeffs[et] + MultiPoly.monomial(c, eq=eq, es=es)
        return cls(bound, coeffs)

    @classmethod
    def geometric_factor(cls, j: int, with_s: bool, bound: int) -> "TruncSeries":
        """1 + x*t^j + x^2*t^2j + ... truncated, with x = s if with_s else 1."""
        if j < 1:
            raise ValueError("geometric factor needs j >= 1")
        coeffs = [ZERO] * (bound + 1)
        m = 0
        while m * j <= bound:
            coeffs[m * j] = MultiPoly.monomial(1, es=m if with_s else 0)
            m += 1
        return cls(bound, coeffs)

    def coefficient(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def _check_bound(self, other: "TruncSeries") -> None:
        if self.bound != other.bound:
            raise ValueError(f"series bounds differ: {self.bound} vs {other.bound}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_bound(other)
        return TruncSeries(self.bound, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_bound(other)
        return TruncSeries(self.bound, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_bound(other)
        out = [ZERO] * (self.bound + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.bound + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.bound, out)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.coeffs)

    def __str__(self) -> str:
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            ctext = poly_text(c)
            tpow = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if not tpow:
                parts.append(ctext)
            elif c == ONE:
                parts.append(tpow)
            elif len(c.terms) == 1 and not ctext.startswith("-"):
                parts.append(f"{ctext}*{tpow}")
            else:
                parts.append(f"({ctext})*{tpow}")
        parts.append(f"O(t^{self.bound + 1})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TruncSeries({self})"


DEFAULT_BOUND = 12
