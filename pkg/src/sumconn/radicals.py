"""Exact arithmetic on rational combinations of square roots.

Connectivity-index values are finite sums of reciprocal square roots of
small integers, i.e. numbers of the form ``sum q_s * sqrt(s)`` with
rational ``q_s``.  Keeping every ``s`` squarefree makes such sums a
canonical form: square roots of distinct squarefree integers are linearly
independent over the rationals, so two values are equal exactly when
their term maps coincide, and the sign of a nonzero value can always be
pinned down by refining integer-square-root intervals.  That is what lets
argmax ties and "equality iff" claims be decided without floating-point
tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from math import fsum, isqrt, sqrt
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]

# Interval refinement doubles the working precision each round; values in
# this package are nonzero sums of a handful of small radicals, so a few
# rounds always suffice.  The cap only guards against misuse.
_MAX_SIGN_BITS = 1 << 13


def squarefree_decompose(value: int) -> tuple[int, int]:
    """Split a positive integer as ``a*a*b`` with ``b`` squarefree.

    Returns ``(a, b)``; e.g. ``12 -> (2, 3)`` since ``sqrt(12) = 2*sqrt(3)``.
    """
    if value <= 0:
        raise ValueError(f"expected a positive integer, got {value}")
    a, b = 1, value
    p = 2
    while p * p <= b:
        while b % (p * p) == 0:
            b //= p * p
            a *= p
        p += 1 if p == 2 else 2
    return a, b


class RadicalValue:
    """An exact number ``sum q_s * sqrt(s)`` with squarefree ``s``.

    Immutable.  Supports exact addition, subtraction, scaling by
    rationals, and exact comparison against other values or rationals.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for s, q in items:
            a, b = squarefree_decompose(s)
            q = Fraction(q) * a
            if q:
                total = acc.get(b, Fraction(0)) + q
                if total:
                    acc[b] = total
                else:
                    acc.pop(b, None)
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "RadicalValue":
        return cls()

    @classmethod
    def from_rational(cls, q: Rational) -> "RadicalValue":
        return cls(((1, q),))

    @classmethod
    def sqrt(cls, s: int) -> "RadicalValue":
        return cls(((s, 1),))

    @classmethod
    def reciprocal_sqrt(cls, s: int) -> "RadicalValue":
        """Exact ``1/sqrt(s)``, stored as ``(1/s)*sqrt(s)``."""
        if s <= 0:
            raise ValueError(f"expected a positive integer, got {s}")
        return cls(((s, Fraction(1, s)),))

    # -- views -------------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        """Term map ``{s: q_s}`` (a fresh dict; the value is immutable)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(s == 1 for s, _ in self._terms)

    def __float__(self) -> float:
        return fsum(float(q) * sqrt(s) for s, q in self._terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: "RadicalValue" | Rational) -> "RadicalValue | None":
        if isinstance(other, RadicalValue):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalValue.from_rational(other)
        return None

    def __add__(self, other: "RadicalValue" | Rational) -> "RadicalValue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RadicalValue(tuple(self._terms) + tuple(rhs._terms))

    __radd__ = __add__

    def __neg__(self) -> "RadicalValue":
        return RadicalValue(tuple((s, -q) for s, q in self._terms))

    def __sub__(self, other: "RadicalValue" | Rational) -> "RadicalValue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Rational) -> "RadicalValue":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, scalar: Rational) -> "RadicalValue":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return RadicalValue(tuple((s, q * scalar) for s, q in self._terms))

    __rmul__ = __mul__

    # -- exact comparison ----------------------------------------------------

    def sign(self) -> int:
        """Exact sign (-1, 0, +1), decided without floating point."""
        if not self._terms:
            return 0
        if all(q > 0 for _, q in self._terms):
            return 1
        if all(q < 0 for _, q in self._terms):
            return -1
        bits = 32
        while bits <= _MAX_SIGN_BITS:
            lo = Fraction(0)
            hi = Fraction(0)
            unit = 1 << bits
            for s, q in self._terms:
                root = isqrt(s << (2 * bits))
                r_lo = Fraction(root, unit)
                r_hi = Fraction(root + 1, unit)
                if q >= 0:
                    lo += q * r_lo
                    hi += q * r_hi
                else:
                    lo += q * r_hi
                    hi += q * r_lo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        # Unreachable for genuinely nonzero values: independence of the
        # radicals guarantees only the empty sum is zero.
        raise AssertionError("sign refinement did not converge")

    def _cmp(self, other: "RadicalValue" | Rational) -> int | None:
        rhs = self._coerce(other)
        if rhs is None:
            return None
        if self._terms == rhs._terms:
            return 0
        return (self - rhs).sign()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other) if isinstance(other, (RadicalValue, int, Fraction)) else None
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __lt__(self, other: "RadicalValue" | Rational) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other: "RadicalValue" | Rational) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other: "RadicalValue" | Rational) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other: "RadicalValue" | Rational) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    def __hash__(self) -> int:
        return hash(self._terms)

    # -- formatting / serialization -------------------------------------------

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for s, q in self._terms:
            if s == 1:
                body = _frac_str(abs(q))
            elif abs(q) == 1:
                body = f"sqrt({s})"
            else:
                body = f"{_frac_str(abs(q))}*sqrt({s})"
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if q > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RadicalValue({str(self)!r})"

    def to_json_dict(self) -> dict:
        """JSON form: ``{"terms": [[s, "p/q"], ...], "float": x}``."""
        return {
            "terms": [[s, f"{q.numerator}/{q.denominator}"] for s, q in self._terms],
            "float": float(self),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "RadicalValue":
        return cls(tuple((int(s), Fraction(q)) for s, q in data["terms"]))


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
