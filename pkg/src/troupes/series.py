"""Truncated formal power series with exact coefficients.

A :class:`Series` holds coefficients of ``t^0 .. t^(order-1)`` drawn from one
of the two supported coefficient rings (rationals or polynomials in ``q``).
Everything is exact; truncation order is the only approximation anywhere, and
binary operations truncate to the smaller operand order.

The branch-to-tree generating function transform (:func:`troupe_transform`)
solves ``T(t) = B(t / (1 - t*T(t)))`` degree by degree: the coefficient of
``t^n`` on the right depends only on coefficients of ``T`` below ``n``, which
also makes the solution manifestly unique.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .rings import (
    QPoly,
    RingElem,
    RingMismatchError,
    as_ring_elem,
    format_ring_elem,
    is_poly,
    parse_ring_elem,
    ring_inverse,
    to_poly,
)


class Series:
    """A formal power series truncated at an exclusive order.

    ``Series([1, 2, 3])`` is ``1 + 2t + 3t^2 + O(t^3)``.  All coefficients
    share one ring; supplying any polynomial coefficient promotes the rest.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_ring_elem(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("order must be a positive integer")
            cs = cs[:order]
        if not cs and order is None:
            raise ValueError("a series needs an order")
        if any(is_poly(c) for c in cs):
            cs = [to_poly(c) for c in cs]
        if order is not None and len(cs) < order:
            zero = self._zero_for(cs)
            cs.extend([zero] * (order - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def _zero_for(cs) -> RingElem:
        if any(is_poly(c) for c in cs):
            return QPoly()
        return Fraction(0)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- construction helpers

    @classmethod
    def zero(cls, order: int, poly: bool = False) -> Series:
        c = QPoly() if poly else Fraction(0)
        return cls([c] * order)

    @classmethod
    def one(cls, order: int, poly: bool = False) -> Series:
        c = QPoly((1,)) if poly else Fraction(1)
        return cls([c], order=order)

    @classmethod
    def t(cls, order: int, poly: bool = False) -> Series:
        one = QPoly((1,)) if poly else Fraction(1)
        return cls([one * 0, one], order=order)

    # -- basic structure

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def is_poly_ring(self) -> bool:
        return any(is_poly(c) for c in self.coeffs)

    def __getitem__(self, n: int) -> RingElem:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Series({[format_ring_elem(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order])

    def _zero(self) -> RingElem:
        return QPoly() if self.is_poly_ring else Fraction(0)

    def _one(self) -> RingElem:
        return QPoly((1,)) if self.is_poly_ring else Fraction(1)

    def _common(self, other: Series) -> int:
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if self.is_poly_ring != other.is_poly_ring:
            raise RingMismatchError(
                "cannot combine a rational series with a polynomial series"
            )
        return min(self.order, other.order)

    # -- ring operations (exact, truncated to the common order)

    def __add__(self, other: Series) -> Series:
        n = self._common(other)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: Series) -> Series:
        n = self._common(other)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def __mul__(self, other: Series) -> Series:
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [self._zero() for _ in range(n)]
        for i in range(n):
            if a[i] == 0:
                continue
            for j in range(n - i):
                if b[j] != 0:
                    out[i + j] = out[i + j] + a[i] * b[j]
        return Series(out)

    def __truediv__(self, other: Series) -> Series:
        n = self._common(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        inv = ring_inverse(b0)
        a, b = self.coeffs, other.coeffs
        out: list[RingElem] = []
        for k in range(n):
            acc = a[k]
            for j in range(1, k + 1):
                acc = acc - b[j] * out[k - j]
            out.append(acc * inv)
        return Series(out)

    def scale(self, c) -> Series:
        c = as_ring_elem(c)
        return Series([c * x for x in self.coeffs])

    def shift(self) -> Series:
        """Multiply by t, keeping the truncation order."""
        return Series((self._zero(),) + self.coeffs[: self.order - 1])

    # -- composition

    def compose(self, inner: Series) -> Series:
        """Exact Taylor composition ``self(inner(t))``.

        The inner series must have zero constant term.
        """
        n = self._common(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        # Horner evaluation: ((a_{n-1} inner + a_{n-2}) inner + ...) + a_0
        result = Series([self._zero()] * n)
        inner_n = inner.truncate(n)
        for k in range(n - 1, -1, -1):
            result = result * inner_n
            ck = self.coeffs[k]
            if ck != 0:
                result = Series(
                    [result.coeffs[0] + ck] + list(result.coeffs[1:])
                )
        return result

    def compositional_inverse(self) -> Series:
        """The series ``v`` with ``self(v(t)) = v(self(t)) = t``.

        Requires zero constant term and invertible linear coefficient.
        """
        n = self.order
        if self.coeffs[0] != 0:
            raise ValueError("compositional inverse needs zero constant term")
        w1 = self.coeffs[1] if n > 1 else self._zero()
        inv_w1 = ring_inverse(w1)  # raises if not invertible
        out = [self._zero(), inv_w1]
        for m in range(2, n):
            partial = Series(out, order=n)
            residue = self.compose(partial).coeffs[m]
            out.append(-residue * inv_w1)
        return Series(out, order=n)

    # -- transcendental operations (ring contains the rationals)

    def log(self) -> Series:
        """Formal logarithm; the constant term must be 1."""
        if self.coeffs[0] != self._one():
            raise ValueError("log needs constant term 1")
        n = self.order
        h = self - Series.one(n, poly=self.is_poly_ring)
        out = Series([self._zero()] * n)
        power = Series.one(n, poly=self.is_poly_ring)
        for k in range(1, n):
            power = power * h
            sign = 1 if k % 2 == 1 else -1
            out = out + Series([c * Fraction(sign, k) for c in power.coeffs])
        return out

    def exp(self) -> Series:
        """Formal exponential; the constant term must be 0."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs constant term 0")
        n = self.order
        out = Series.one(n, poly=self.is_poly_ring)
        power = Series.one(n, poly=self.is_poly_ring)
        kfact = 1
        for k in range(1, n):
            power = power * self
            kfact *= k
            out = out + Series([c * Fraction(1, kfact) for c in power.coeffs])
        return out


def troupe_transform(branch_series: Series) -> Series:
    """Solve ``T(t) = B(t / (1 - t*T(t)))`` for ``T`` to the truncation order.

    ``branch_series`` must have zero constant term; so does the result.  The
    solve proceeds degree by degree, with no rounding anywhere.
    """
    b = branch_series
    if b.coeffs[0] != 0:
        raise ValueError("the branch series must have zero constant term")
    n = b.order
    one = Series.one(n, poly=b.is_poly_ring)
    t = Series.t(n, poly=b.is_poly_ring)
    coeffs = [b._zero() for _ in range(n)]
    for m in range(1, n):
        partial = Series(coeffs)
        inner = t / (one - partial.shift())
        coeffs[m] = b.compose(inner).coeffs[m]
    return Series(coeffs)


def inverse_troupe_transform(tree_series: Series) -> Series:
    """Invert :func:`troupe_transform`: recover ``B`` from ``T``.

    Uses ``W = t/(1 - t*T)`` and ``B = T(W^<-1>(t))``.
    """
    ts = tree_series
    if ts.coeffs[0] != 0:
        raise ValueError("the tree series must have zero constant term")
    n = ts.order
    one = Series.one(n, poly=ts.is_poly_ring)
    t = Series.t(n, poly=ts.is_poly_ring)
    w = t / (one - ts.shift())
    return ts.compose(w.compositional_inverse())


def boolean_free_series_check(boolean_cumulants: Series, free_cumulants: Series) -> bool:
    """Check ``1 - B(t/(1 + R(t))) = 1/(1 + R(t))`` exactly.

    Both arguments are ordinary generating functions of cumulant sequences and
    must have zero constant term.
    """
    bc, rc = boolean_cumulants, free_cumulants
    if bc.coeffs[0] != 0 or rc.coeffs[0] != 0:
        raise ValueError("cumulant series must have zero constant term")
    n = min(bc.order, rc.order)
    bc, rc = bc.truncate(n), rc.truncate(n)
    poly = bc.is_poly_ring or rc.is_poly_ring
    if bc.is_poly_ring != rc.is_poly_ring:
        bc = Series([to_poly(c) for c in bc.coeffs])
        rc = Series([to_poly(c) for c in rc.coeffs])
    one = Series.one(n, poly=poly)
    t = Series.t(n, poly=poly)
    denom = one + rc
    lhs = one - bc.compose(t / denom)
    rhs = one / denom
    return lhs == rhs


def format_series(s: Series) -> str:
    """Serialize as an ``order N`` header plus one ``n: coeff`` line per term."""
    lines = [f"order {s.order}"]
    lines.extend(f"{n}: {format_ring_elem(c)}" for n, c in enumerate(s.coeffs))
    return "\n".join(lines) + "\n"


def parse_series(text: str) -> Series:
    """Parse the output of :func:`format_series`."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("order "):
        raise ValueError("series text must start with an 'order N' line")
    try:
        order = int(lines[0][len("order "):])
    except ValueError as exc:
        raise ValueError(f"bad order line {lines[0]!r}") from exc
    coeffs: list[RingElem] = [Fraction(0)] * order
    seen = set()
    for ln in lines[1:]:
        idx_text, sep, value_text = ln.partition(":")
        if not sep:
            raise ValueError(f"bad series line {ln!r}")
        n = int(idx_text)
        if n < 0 or n >= order or n in seen:
            raise ValueError(f"bad coefficient index in line {ln!r}")
        seen.add(n)
        coeffs[n] = parse_ring_elem(value_text)
    return Series(coeffs)
