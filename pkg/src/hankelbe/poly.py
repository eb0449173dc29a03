"""Exact univariate polynomial arithmetic over the rationals.

Scalars are ``fractions.Fraction`` throughout: arbitrary precision, always
stored fully reduced, denominator positive, zero represented as 0/1.  Nothing
in this package ever touches floating point, so every equality test below is
a genuine identity check.

A :class:`UniPoly` is a dense, immutable tuple of ``Fraction`` coefficients in
ascending powers of the indeterminate.  The zero polynomial is the empty
tuple; its degree is minus infinity, which makes
``deg(p*q) == deg(p) + deg(q)`` hold with no special cases.

Serialization: rationals print as ``p/q`` (or ``p`` when the denominator is
one) and polynomials as lists of such strings in ascending power.  Both
round-trip bit exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


class NotDivisibleError(ArithmeticError):
    """Polynomial division was requested but the divisor does not divide."""


class PoleAtLimitError(ArithmeticError):
    """The limit num/den does not exist: num vanishes to lower order than den."""


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


class UniPoly:
    """Immutable dense polynomial in one variable over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree of the polynomial; minus infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant polynomial")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        # Constant polynomials hash like their scalar value so that
        # p == Fraction(c) implies equal hashes.
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        q = self._coerce(other)
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        q = self._coerce(other)
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = UniPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- the operations the rest of the package is built on ------------

    def eval(self, v: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        v = _as_fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def affine_substitute(self, alpha: Scalar, beta: Scalar) -> "UniPoly":
        """Return q with q(x) = p(alpha*x + beta), expanded and normalized."""
        arg = UniPoly((_as_fraction(beta), _as_fraction(alpha)))
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def divide_exact(self, den: "UniPoly") -> "UniPoly":
        """Exact division in Q[x]; raises NotDivisibleError on a remainder."""
        if not isinstance(den, UniPoly):
            den = UniPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return UniPoly.zero()
        num = list(self.coeffs)
        d = den.coeffs
        dd = len(d) - 1
        lead = d[-1]
        if len(num) - 1 < dd:
            raise NotDivisibleError(f"degree {len(num)-1} < {dd}")
        q = [Fraction(0)] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c == 0:
                continue
            f = c / lead
            q[i - dd] = f
            for j, dc in enumerate(d):
                num[i - dd + j] -= f * dc
        if any(c != 0 for c in num):
            raise NotDivisibleError("division leaves a nonzero remainder")
        return UniPoly(q)

    # -- rendering ------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# ----------------------------------------------------------------------
# Function-style surface used throughout the package.
# ----------------------------------------------------------------------


def poly_eval(p: UniPoly, v: Scalar) -> Fraction:
    """p(v), computed exactly."""
    return p.eval(v)


def poly_affine_substitute(p: UniPoly, alpha: Scalar, beta: Scalar) -> UniPoly:
    """The polynomial x -> p(alpha*x + beta)."""
    return p.affine_substitute(alpha, beta)


def poly_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def poly_divide_exact(num: UniPoly, den: UniPoly) -> UniPoly:
    return num.divide_exact(den)


def cancel_and_eval_limit(num: UniPoly, den: UniPoly, x0: Scalar) -> Fraction:
    """lim_{x -> x0} num(x)/den(x) for a removable singularity.

    Factors of (x - x0) are divided out of both numerator and denominator
    until den(x0) != 0; raises PoleAtLimitError when num vanishes to strictly
    lower order than den at x0.
    """
    if den.is_zero():
        raise ZeroDivisionError("denominator is the zero polynomial")
    x0 = _as_fraction(x0)
    factor = UniPoly((-x0, 1))
    while den.eval(x0) == 0:
        if not num.is_zero():
            if num.eval(x0) != 0:
                raise PoleAtLimitError(
                    f"numerator does not vanish at {x0} while denominator does"
                )
            num = num.divide_exact(factor)
        den = den.divide_exact(factor)
    return num.eval(x0) / den.eval(x0)


# ----------------------------------------------------------------------
# Serialization: "p/q" strings and ascending coefficient arrays.
# ----------------------------------------------------------------------

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def rat_to_str(v: Scalar) -> str:
    return str(_as_fraction(v))


def rat_from_str(s: str) -> Fraction:
    s = s.strip()
    if not _RAT_RE.match(s):
        raise ValueError(f"not a rational literal: {s!r}")
    return Fraction(s)


def poly_to_strs(p: UniPoly) -> list[str]:
    return [rat_to_str(c) for c in p.coeffs]


def poly_from_strs(coeffs: Iterable[str]) -> UniPoly:
    return UniPoly(tuple(rat_from_str(c) for c in coeffs))
