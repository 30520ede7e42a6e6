"""Linear chain analytics.

A chain [b1,...,bl] records the negated self-intersections of a linear chain
of smooth rational curves (bi >= 2, consecutive curves meeting once).  This
module evaluates its minus continued fraction, recognizes the chains whose
contraction admits a rational one-parameter smoothing (cyclic quotient of
order d*n^2 with rotation d*n*a - 1), generates that family recursively as an
independent oracle, and solves for discrepancies and the contraction's
contribution to the selfintersection of the canonical class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernel
from .errors import InvalidFractionError, NotClassTError
from .ratlin import RatMatrix, solve_unique

Chain = tuple[int, ...]


def as_chain(entries) -> Chain:
    chain = tuple(int(b) for b in entries)
    if not chain:
        raise ValueError("a chain needs at least one entry")
    if any(b < 2 for b in chain):
        raise ValueError("chain entries must all be >= 2")
    return chain


@dataclass(frozen=True)
class ClassTData:
    """Recognized singularity data for a contractible chain.

    The contracted point is the cyclic quotient of order m = d*n^2 with
    rotation q = d*n*a - 1; its index (least r with r*K Cartier) is n.
    """

    d: int
    n: int
    a: int

    @property
    def m(self) -> int:
        return self.d * self.n * self.n

    @property
    def q(self) -> int:
        return self.d * self.n * self.a - 1

    @property
    def index(self) -> int:
        return self.n


def hj_value(entries) -> Fraction:
    """Value of b1 - 1/(b2 - 1/(... - 1/bl)) in lowest terms."""
    chain = as_chain(entries)
    m, q = chain[-1], 1
    for b in reversed(chain[:-1]):
        m, q = b * m - q, m
    return Fraction(m, q)


def chain_from_fraction(m: int, q: int) -> Chain:
    """The unique chain with hj_value = m/q (m > q >= 1, coprime)."""
    if q < 1 or m <= q or gcd(m, q) != 1:
        raise InvalidFractionError(f"need m > q >= 1 coprime, got {m}/{q}")
    digits = []
    while q > 0:
        b = -(-m // q)
        digits.append(b)
        m, q = q, b * q - m
    return tuple(digits)


def recognize_class_T(entries) -> ClassTData | None:
    """Accept iff hj_value = (d*n^2)/(d*n*a - 1) for some valid (d, n, a).

    Writing m/q for the value, any solution has d*n = gcd(m, q+1), which
    makes (d, n, a) unique; du Val chains (n = 1) are rejected.
    """
    value = hj_value(entries)
    m, q = value.numerator, value.denominator
    g = gcd(m, q + 1)
    n = m // g
    a = (q + 1) // g
    if n >= 2 and a < n and g % n == 0:
        return ClassTData(d=g // n, n=n, a=a)
    return None


def index(entries) -> int:
    """Index of the contracted singular point (the n of the recognizer)."""
    data = recognize_class_T(entries)
    if data is None:
        raise NotClassTError(f"chain {tuple(entries)} is not of the smoothable family")
    return data.index


def _seeds(max_len: int, max_entry: int):
    if max_entry >= 4:
        yield (4,)
    if max_entry >= 3:
        for d in range(2, max_len + 1):
            yield (3,) + (2,) * (d - 2) + (3,)


def generate_class_T(max_len: int, max_entry: int) -> set[Chain]:
    """All smoothable chains within bounds, by recursive generation.

    Closure of the seeds [4] and [3,2,...,2,3] under the two growth steps
    [b1,...,bl] -> [b1+1,...,bl,2] and [2,b1,...,bl+1], deduplicated.  This
    is the independent oracle against which the arithmetic recognizer is
    cross-validated.
    """
    if max_len < 1 or max_entry < 1:
        raise ValueError("bounds must be >= 1")
    found: set[Chain] = set()
    frontier = [s for s in _seeds(max_len, max_entry) if len(s) <= max_len]
    found.update(frontier)
    while frontier:
        fresh = []
        for chain in frontier:
            if len(chain) + 1 > max_len:
                continue
            left = (chain[0] + 1,) + chain[1:] + (2,)
            right = (2,) + chain[:-1] + (chain[-1] + 1,)
            for child in (left, right):
                if max(child) <= max_entry and child not in found:
                    found.add(child)
                    fresh.append(child)
        frontier = fresh
    return found


def canonical_order(chains) -> list[Chain]:
    """Stable listing order: by length, then lexicographically."""
    return sorted(chains, key=lambda c: (len(c), c))


def chain_gram(entries) -> RatMatrix:
    """Intersection matrix of the chain: diagonal -bi, adjacent entries 1."""
    chain = as_chain(entries)
    size = len(chain)
    return RatMatrix(
        [
            [
                -chain[i] if i == j else (1 if abs(i - j) == 1 else 0)
                for j in range(size)
            ]
            for i in range(size)
        ]
    )


def discrepancies(entries) -> tuple[Fraction, ...]:
    """Coefficients a with Gram . a = (b1-2, ..., bl-2), solved exactly.

    The chain Gram matrix is negative definite, hence nonsingular, so the
    solution exists and is unique; for smoothable chains every coefficient
    lies in (-1, 0).
    """
    chain = as_chain(entries)
    rhs = [Fraction(b - 2) for b in chain]
    return solve_unique(chain_gram(chain), rhs)


def k2_contribution(entries) -> Fraction:
    """Gain of the canonical self-intersection when the chain is contracted.

    Equals -a . k for a = discrepancies, k = (b1-2, ..., bl-2); nonnegative,
    and equal to l + 1 - d on recognized chains.
    """
    chain = as_chain(entries)
    disc = discrepancies(chain)
    return -sum(
        (a * (b - 2) for a, b in zip(disc, chain)),
        Fraction(0),
    )


def exhaustive_scan(max_len: int, max_entry: int):
    """Kernel-backed scan of every chain within bounds.

    Returns (total, accepted, negdef_failures, roundtrip_failures): the
    number of chains visited, the recognizer-accepted ones (DFS order), and
    the counts of negative-definiteness / continued-fraction round-trip
    failures (both 0 unless something is deeply wrong).
    """
    return kernel.scan_chains(max_len, max_entry)
