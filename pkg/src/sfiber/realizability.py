"""Brute-force realizability oracle for gamma vectors.

A vector (g1,...,gr) of rationals in (0,1) is realizable if r >= 3 and
there are coprime integers m > a > 0 and a permutation s with

    g_{s(1)} < a/m,   g_{s(2)} < (m-a)/m,   g_{s(j)} < 1/m  for j >= 3.

Sorting the entries in descending order is no loss of generality: the
first two slots carry the weakest bounds, so the two largest entries go
there.  Any certificate forces g_(3) < 1/m, which bounds the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class RealizabilityCertificate:
    """Witness (m, a) plus the slot assignment, as original indices."""

    m: int
    a: int
    assignment: tuple[int, ...]


def _check_entries(gammas) -> None:
    for g in gammas:
        if not 0 < g < 1:
            raise ValueError(f"gamma entries must lie in (0,1), got {g}")


def is_realizable(gammas) -> RealizabilityCertificate | None:
    """Search for a certificate; None if none exists (or r < 3).

    Deterministic: m ascending, then a ascending, entries assigned in
    stable descending order.
    """
    gammas = tuple(Fraction(g) for g in gammas)
    _check_entries(gammas)
    if len(gammas) < 3:
        return None
    order = sorted(range(len(gammas)), key=lambda i: -gammas[i])
    n1, d1 = gammas[order[0]].numerator, gammas[order[0]].denominator
    n2, d2 = gammas[order[1]].numerator, gammas[order[1]].denominator
    n3, d3 = gammas[order[2]].numerator, gammas[order[2]].denominator
    m = 2
    while m * n3 < d3:  # m < 1/g_(3), exclusive
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            if n1 * m < a * d1 and n2 * m < (m - a) * d2:
                return RealizabilityCertificate(m, a, tuple(order))
        m += 1
    return None


def verify_certificate(gammas, cert: RealizabilityCertificate) -> bool:
    """Exact check of the three inequality families under cert.assignment."""
    gammas = tuple(Fraction(g) for g in gammas)
    if sorted(cert.assignment) != list(range(len(gammas))):
        return False
    if len(gammas) < 3:
        return False
    m, a = cert.m, cert.a
    if not (m > a > 0 and gcd(m, a) == 1):
        return False
    slots = [gammas[i] for i in cert.assignment]
    if not slots[0] < Fraction(a, m):
        return False
    if not slots[1] < Fraction(m - a, m):
        return False
    return all(g < Fraction(1, m) for g in slots[2:])
