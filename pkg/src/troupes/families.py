"""Worked moment/cumulant families and the brute-force polynomial oracles.

Everything analytic is replaced by formal moment sequences: a "distribution"
here is just its sequence of moments with m_0 = 1, over the rationals or over
polynomials in q.  Each named family carries a closed form for its classical
cumulants, against which the generating-function route is checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .cumulants import classical_via_egf
from .partitions import descents
from .rings import QPoly, RingElem, q, to_poly
from .series import Series
from .trees import iter_bpt, right_edges


@lru_cache(maxsize=None)
def eulerian_polynomial(n: int) -> QPoly:
    """Descent-generating polynomial of all permutations of 1..n, by brute
    force."""
    if n < 1:
        raise ValueError("n must be positive")
    counts = [0] * n
    for sigma in itertools.permutations(range(1, n + 1)):
        counts[len(descents(sigma))] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def narayana_polynomial(n: int) -> QPoly:
    """Right-edge-generating polynomial of size-n trees, by brute-force
    enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    counts = [0] * n
    for t in iter_bpt(n):
        counts[right_edges(t)] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def alternating_count(n: int) -> int:
    """Number of alternating permutations of size n (up-down convention),
    by brute force.  Odd entries are the tangent numbers."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for sigma in itertools.permutations(range(1, n + 1)):
        if all(
            (sigma[i - 1] < sigma[i]) == (i % 2 == 1)
            for i in range(1, n)
        ):
            count += 1
    return count


@dataclass(frozen=True)
class NamedSequence:
    """A named moment sequence with its classical-cumulant closed form."""

    name: str
    moments: Callable[[int], list[RingElem]]  # m_0..m_N
    expected_classical: Callable[[int], list[RingElem]]  # K_1..K_N

    def classical_cumulants(self, order: int) -> list[RingElem]:
        return classical_via_egf(self.moments(order))


def _gamma_minus_one_moments(order: int) -> list[RingElem]:
    return [Fraction(1 - n) for n in range(order + 1)]


def _gamma_minus_one_cumulants(order: int) -> list[RingElem]:
    out: list[RingElem] = [Fraction(0)]
    fact = 1
    for n in range(2, order + 1):
        fact *= n - 1
        out.append(Fraction(-fact))
    return out[:order]


def _factorial_cumulant_egf(order: int, scale: int) -> list[RingElem]:
    """Moments of the sequence whose cumulants are scale*(n-1)! for n >= 2."""
    coeffs: list[RingElem] = [Fraction(0), Fraction(0)]
    for n in range(2, order + 1):
        coeffs.append(Fraction(scale, n))  # (n-1)!/n! = 1/n
    egf = Series(coeffs[: order + 1], order=order + 1).exp()
    fact = 1
    out: list[RingElem] = [Fraction(1)]
    for n in range(1, order + 1):
        fact *= n
        out.append(egf.coeffs[n] * fact)
    return out


def _shifted_exponential_moments(order: int) -> list[RingElem]:
    return _factorial_cumulant_egf(order, 1)


def _shifted_exponential_cumulants(order: int) -> list[RingElem]:
    return [-k for k in _gamma_minus_one_cumulants(order)]


def _two_atom_moments(order: int) -> list[RingElem]:
    # m_n = (q^n - q)/(1 - q) written as the polynomial -q(1 + q + ... + q^(n-2))
    out: list[RingElem] = [QPoly((1,)), QPoly()]
    for n in range(2, order + 1):
        out.append(QPoly([0] + [-1] * (n - 1)))
    return out[: order + 1]


def _two_atom_cumulants(order: int) -> list[RingElem]:
    out: list[RingElem] = [QPoly()]
    for n in range(2, order + 1):
        out.append(-(q * eulerian_polynomial(n - 1)))
    return out[:order]


def _geometric_like_moments(order: int) -> list[RingElem]:
    coeffs: list[RingElem] = [QPoly(), QPoly()]
    fact = 1
    for n in range(2, order + 1):
        fact *= n
        coeffs.append(q * eulerian_polynomial(n - 1) / fact)
    egf = Series(coeffs[: order + 1], order=order + 1).exp()
    fact = 1
    out: list[RingElem] = [QPoly((1,))]
    for n in range(1, order + 1):
        fact *= n
        out.append(egf.coeffs[n] * fact)
    return out


def _geometric_like_cumulants(order: int) -> list[RingElem]:
    return [-k for k in _two_atom_cumulants(order)]


def _secant_moments(order: int) -> list[RingElem]:
    # reciprocal of the cosine series: sec t as an EGF
    cos = [Fraction(0)] * (order + 1)
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        if n % 2 == 0:
            cos[n] = Fraction((-1) ** (n // 2), fact)
    sec = Series.one(order + 1) / Series(cos)
    fact = 1
    out: list[RingElem] = [Fraction(1)]
    for n in range(1, order + 1):
        fact *= n
        out.append(sec.coeffs[n] * fact)
    return out


def _secant_cumulants(order: int) -> list[RingElem]:
    # K_n is the tangent number a_(n-1) for even n: differentiating the log
    # of the moment EGF gives the tangent series, shifting indices by one.
    return [
        Fraction(alternating_count(n - 1)) if n % 2 == 0 else Fraction(0)
        for n in range(1, order + 1)
    ]


NAMED_SEQUENCES = {
    "gamma_minus_one": NamedSequence(
        "gamma_minus_one", _gamma_minus_one_moments, _gamma_minus_one_cumulants
    ),
    "shifted_exponential": NamedSequence(
        "shifted_exponential",
        _shifted_exponential_moments,
        _shifted_exponential_cumulants,
    ),
    "two_atom": NamedSequence("two_atom", _two_atom_moments, _two_atom_cumulants),
    "geometric_like": NamedSequence(
        "geometric_like", _geometric_like_moments, _geometric_like_cumulants
    ),
    "secant": NamedSequence("secant", _secant_moments, _secant_cumulants),
}


def named_sequence(name: str) -> NamedSequence:
    try:
        return NAMED_SEQUENCES[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}; choose from "
                         f"{sorted(NAMED_SEQUENCES)}") from None


def convolution_additivity_check(f: NamedSequence, g: NamedSequence,
                                 order: int) -> bool:
    """Multiply the two moment EGFs and check that classical cumulants add.

    For convolution-inverse pairs the product EGF is 1 and all cumulants of
    the product vanish.
    """
    mf = f.moments(order)
    mg = g.moments(order)
    fact = [1]
    for k in range(1, order + 1):
        fact.append(fact[-1] * k)
    ef = Series([m * Fraction(1, fact[n]) for n, m in enumerate(mf)])
    eg = Series([m * Fraction(1, fact[n]) for n, m in enumerate(mg)])
    if ef.is_poly_ring != eg.is_poly_ring:
        ef = Series([to_poly(c) for c in ef.coeffs])
        eg = Series([to_poly(c) for c in eg.coeffs])
    product = ef * eg
    conv_moments = [product.coeffs[n] * fact[n] for n in range(order + 1)]
    kf = classical_via_egf(mf)
    kg = classical_via_egf(mg)
    kfg = classical_via_egf(conv_moments)
    return all(kfg[i] == kf[i] + kg[i] for i in range(order))
