"""Exact sparse arithmetic for Laurent polynomials in q and t.

Coefficients are arbitrary-precision integers and exponents are plain ints.
t-exponents are routinely negative; q-exponents go negative only inside the
Laurent intermediates of the monomial-expansion formulas, and every
user-facing result is asserted back into N[q,t].
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class QtPoly:
    """Sparse Laurent polynomial in q, t: a map (q_exp, t_exp) -> coefficient.

    Zero coefficients are never stored.  Instances are immutable by
    convention: no method mutates ``terms``, so values may be shared freely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (qe, te), c in items:
                if c:
                    c = data.get((qe, te), 0) + c
                    if c:
                        data[(qe, te)] = c
                    else:
                        del data[(qe, te)]
        self.terms = data

    @classmethod
    def zero(cls) -> "QtPoly":
        return cls()

    @classmethod
    def one(cls) -> "QtPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, q: int = 0, t: int = 0) -> "QtPoly":
        return cls({(q, t): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QtPoly.monomial(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QtPoly.monomial(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        res = QtPoly.__new__(QtPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QtPoly.__new__(QtPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = QtPoly.monomial(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QtPoly.zero()
            res = QtPoly.__new__(QtPoly)
            res.terms = {k: c * other for k, c in self.terms.items()}
            return res
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                key = (qa + qb, ta + tb)
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        res = QtPoly.__new__(QtPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def shift(self, q: int = 0, t: int = 0) -> "QtPoly":
        """Multiply by the monomial q^q t^t."""
        res = QtPoly.__new__(QtPoly)
        res.terms = {(qe + q, te + t): c for (qe, te), c in self.terms.items()}
        return res

    def substitute_t_inverse(self) -> "QtPoly":
        """Negate every t-exponent (an involution)."""
        res = QtPoly.__new__(QtPoly)
        res.terms = {(qe, -te): c for (qe, te), c in self.terms.items()}
        return res

    def substitute_q_inverse(self) -> "QtPoly":
        res = QtPoly.__new__(QtPoly)
        res.terms = {(-qe, te): c for (qe, te), c in self.terms.items()}
        return res

    def evaluate(self, q: int, t: int) -> int:
        """Exact integer evaluation; inverse powers require |base| = 1."""
        total = 0
        for (qe, te), c in self.terms.items():
            total += c * _int_pow(q, qe) * _int_pow(t, te)
        return total

    def is_positive_normal(self) -> bool:
        """True when all coefficients are positive and all exponents >= 0."""
        return all(c > 0 and qe >= 0 and te >= 0 for (qe, te), c in self.terms.items())

    def key(self):
        """Canonical hashable form, used to compare summand multisets."""
        return tuple(sorted(self.terms.items()))

    def to_obj(self) -> list:
        return [
            {"q": qe, "t": te, "c": str(c)}
            for (qe, te), c in sorted(self.terms.items())
        ]

    @classmethod
    def from_obj(cls, obj: Iterable[dict]) -> "QtPoly":
        return cls({(int(d["q"]), int(d["t"])): int(d["c"]) for d in obj})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, te), c in sorted(self.terms.items()):
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"QtPoly({self})"


def _int_pow(base: int, exp: int) -> int:
    if exp >= 0:
        return base**exp
    if base == 1:
        return 1
    if base == -1:
        return -1 if exp % 2 else 1
    raise ValueError(f"cannot raise {base} to negative power exactly")


@lru_cache(maxsize=None)
def t_binomial(n: int, k: int) -> QtPoly:
    """The t-analogue of the binomial coefficient, by the Pascal recurrence.

    Returns the zero polynomial when k < 0 or k > n; division-free and exact.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return QtPoly.zero()
    if k == 0 or k == n:
        return QtPoly.one()
    return t_binomial(n - 1, k - 1) + t_binomial(n - 1, k).shift(t=k)


def t_multinomial(n: int, parts: Iterable[int]) -> QtPoly:
    """The t-multinomial coefficient as a product of t-binomials."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    out = QtPoly.one()
    remaining = n
    for p in parts:
        out = out * t_binomial(remaining, p)
        remaining -= p
    return out


def substitute_t_inverse(p: QtPoly) -> QtPoly:
    return p.substitute_t_inverse()


class MonomialSym:
    """A symmetric function in the monomial basis: partition -> QtPoly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for mu, poly in items:
                mu = tuple(mu)
                if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)) or (
                    mu and mu[-1] <= 0
                ):
                    raise ValueError(f"{mu} is not a partition")
                if poly:
                    data[mu] = poly
        self.coeffs = data

    def add_term(self, mu, poly: QtPoly) -> None:
        # construction-time helper; treat finished instances as immutable
        mu = tuple(mu)
        s = self.coeffs.get(mu, QtPoly.zero()) + poly
        if s:
            self.coeffs[mu] = s
        else:
            self.coeffs.pop(mu, None)

    def __eq__(self, other):
        if not isinstance(other, MonomialSym):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def items(self) -> Iterator:
        return iter(sorted(self.coeffs.items()))

    def to_obj(self) -> list:
        return [
            {"mu": list(mu), "poly": poly.to_obj()} for mu, poly in self.items()
        ]

    @classmethod
    def from_obj(cls, obj) -> "MonomialSym":
        return cls({tuple(d["mu"]): QtPoly.from_obj(d["poly"]) for d in obj})

    def __str__(self):
        if not self.coeffs:
            return "0"
        lines = []
        for mu, poly in self.items():
            lines.append(f"m{list(mu)}: {poly}")
        return "\n".join(lines)

    def __repr__(self):
        return f"MonomialSym({dict(self.coeffs)!r})"


def coefficient_of(f: MonomialSym, mu) -> QtPoly:
    """Coefficient of the monomial symmetric function indexed by mu."""
    return f.coeffs.get(tuple(mu), QtPoly.zero())
