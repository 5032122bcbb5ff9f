"""Brute-force sums over all fillings, used as the independent oracle."""

from __future__ import annotations

from .diagrams import Filling, enumerate_fillings
from .qt import MonomialSym, QtPoly
from .stats import EtaStatistic, eta, inv, maj, quinv


def statistic_value(f: Filling, statistic, alphabet: int | None = None) -> int:
    """Evaluate a statistic given by name ('inv', 'quinv') or EtaStatistic."""
    if isinstance(statistic, EtaStatistic):
        return eta(f, statistic, alphabet)
    if statistic == "inv":
        return inv(f)
    if statistic == "quinv":
        return quinv(f)
    raise ValueError(f"unknown statistic {statistic!r}")


def htilde_direct(lam, alphabet: int, statistic="inv") -> MonomialSym:
    """Sum q^maj t^stat x^f over every filling, collected in the monomial basis."""
    acc: dict[tuple[int, ...], QtPoly] = {}
    for f in enumerate_fillings(lam, alphabet):
        key = f.content(alphabet)
        term = QtPoly.monomial(1, maj(f), statistic_value(f, statistic, alphabet))
        acc[key] = acc.get(key, QtPoly.zero()) + term
    out = MonomialSym()
    for content, poly in acc.items():
        if all(content[i] >= content[i + 1] for i in range(len(content) - 1)):
            out.add_term(tuple(x for x in content if x), poly)
    return out


def class_generating_poly(fillings, statistic, alphabet: int | None = None) -> QtPoly:
    """Sum q^maj t^stat over an explicit collection of fillings."""
    total = QtPoly.zero()
    for f in fillings:
        total = total + QtPoly.monomial(
            1, maj(f), statistic_value(f, statistic, alphabet)
        )
    return total
