"""Hankel matrices and exact determinant engines.

A Hankel matrix is stored as its defining term list c_0..c_2n, so
persymmetry (entry (i,j) depends only on i+j) holds by construction.  Four
determinant routes are available and cross-checked against each other:

* ``gauss``: ordinary Gaussian elimination over the rationals,
* ``bareiss``: fraction-free elimination, the default for polynomial
  entries; every division it performs is exact in the coefficient ring and
  is verified, a failure indicating an implementation bug,
* ``checkerboard``: factorization of matrices whose entries vanish on one
  parity of i+j into two half-size determinants,
* ``recurrence``: the product of three-term recurrence coefficients
  extracted from the moment sequence (requires nonvanishing leading minors).

Zero pivots are handled by searching down the column and tracking the sign;
if a column tail is entirely zero the determinant is zero.  The empty matrix
(order -1) has determinant 1 by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Optional, Sequence

from .poly import (
    NotDivisibleError,
    UniPoly,
    poly_from_strs,
    poly_to_strs,
    rat_from_str,
    rat_to_str,
)
from .sequences import SequenceSpec, Term, resolve

if TYPE_CHECKING:
    from .orthopoly import RecurrenceCoeffs


class InternalInexactDivisionError(ArithmeticError):
    """A fraction-free elimination step failed to divide exactly."""


class NotCheckerboardError(ValueError):
    """The matrix does not vanish on either parity of i+j."""


class InsufficientCoefficientsError(ValueError):
    """A recurrence-coefficient list is too short for the requested order."""


ALGORITHMS = ("gauss", "bareiss", "checkerboard", "recurrence")


def term_to_str(v: Term) -> str:
    if isinstance(v, UniPoly):
        return "poly:" + ",".join(poly_to_strs(v))
    return rat_to_str(v)


def term_from_str(s: str) -> Term:
    if s.startswith("poly:"):
        body = s[len("poly:") :]
        return poly_from_strs(body.split(",")) if body else UniPoly.zero()
    return rat_from_str(s)


@dataclass(frozen=True)
class HankelMatrix:
    """The (n+1)x(n+1) matrix (c_{i+j}) built from terms c_0..c_2n."""

    terms: tuple[Term, ...]

    def __post_init__(self):
        if len(self.terms) % 2 == 0 and self.terms:
            raise ValueError("a Hankel matrix needs an odd number of terms c_0..c_2n")
        kinds = {isinstance(t, UniPoly) for t in self.terms}
        if len(kinds) > 1:
            raise ValueError("matrix entries must all be rational or all polynomial")

    @property
    def order(self) -> int:
        return (len(self.terms) - 1) // 2 if self.terms else -1

    @property
    def kind(self) -> str:
        return "poly" if self.terms and isinstance(self.terms[0], UniPoly) else "rational"

    def entry(self, i: int, j: int) -> Term:
        return self.terms[i + j]

    def rows(self) -> list[list[Term]]:
        n = self.order
        return [[self.terms[i + j] for j in range(n + 1)] for i in range(n + 1)]

    @classmethod
    def from_terms(cls, terms: Sequence[Term]) -> "HankelMatrix":
        return cls(tuple(terms))

    @classmethod
    def from_spec(cls, spec: SequenceSpec, n: int) -> "HankelMatrix":
        if n < -1:
            raise ValueError("order must be >= -1")
        return cls(tuple(resolve(spec, k) for k in range(2 * n + 1)))

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "kind": self.kind,
            "terms": [term_to_str(t) for t in self.terms],
        }


def hankel_matrix(spec: SequenceSpec, n: int) -> HankelMatrix:
    return HankelMatrix.from_spec(spec, n)


@dataclass(frozen=True)
class DetResult:
    value: Term
    algorithm: str
    elimination_steps: int

    def to_dict(self) -> dict:
        return {
            "value": term_to_str(self.value),
            "algorithm": self.algorithm,
            "elimination_steps": self.elimination_steps,
        }


def _zero_like(rows) -> Term:
    if rows and isinstance(rows[0][0], UniPoly):
        return UniPoly.zero()
    return Fraction(0)


def det_gauss(rows) -> tuple[Fraction, int]:
    """Ordinary elimination over the rationals; returns (det, step count)."""
    n = len(rows)
    if n == 0:
        return Fraction(1), 0
    if any(isinstance(v, UniPoly) for row in rows for v in row):
        raise TypeError("gauss elimination needs rational entries; use bareiss")
    m = [list(row) for row in rows]
    sign = 1
    steps = 0
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0), steps
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for i in range(col + 1, n):
            if m[i][col] == 0:
                continue
            f = m[i][col] / m[col][col]
            for j in range(col, n):
                m[i][j] -= f * m[col][j]
            steps += 1
    det = Fraction(sign)
    for i in range(n):
        det *= m[i][i]
    return det, steps


def _exact_div(num: Term, den: Term) -> Term:
    if isinstance(num, UniPoly) or isinstance(den, UniPoly):
        num = num if isinstance(num, UniPoly) else UniPoly.constant(num)
        try:
            return num.divide_exact(den)
        except NotDivisibleError as exc:
            raise InternalInexactDivisionError(str(exc)) from exc
    return num / den


def det_bareiss(rows) -> tuple[Term, int]:
    """Fraction-free elimination; valid over any integral domain of entries.

    After step k every entry is a (k+1)-minor of the row-permuted input, so
    the division by the previous pivot is exact; it is performed by verified
    exact division when the entries are polynomials.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1), 0
    m = [list(row) for row in rows]
    sign = 1
    steps = 0
    prev: Optional[Term] = None
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return _zero_like(rows), steps
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                if prev is not None:
                    elt = _exact_div(elt, prev)
                m[i][j] = elt
                steps += 1
        prev = m[k][k]
    val = m[n - 1][n - 1]
    return (val if sign == 1 else -val), steps


def det_cofactor(rows) -> Term:
    """Brute-force cofactor expansion; the small-size test oracle."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = _zero_like(rows)
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        piece = rows[0][j] * det_cofactor(minor)
        total = total + piece if j % 2 == 0 else total - piece
    return total


@dataclass(frozen=True)
class CheckerboardFactorization:
    """det M = sign * first_minor * second_minor for a checkerboard matrix."""

    support: str  # "even" (entries vanish for odd i+j) or "odd"
    sign: int
    first_minor: Optional[Term]
    second_minor: Optional[Term]
    total: Term


def _det_auto(rows) -> Term:
    if any(isinstance(v, UniPoly) for row in rows for v in row):
        return det_bareiss(rows)[0]
    return det_gauss(rows)[0]


def checkerboard_det(rows) -> CheckerboardFactorization:
    """Factor the determinant of a general square checkerboard matrix."""
    n = len(rows)
    even_support = all(
        not rows[i][j] for i in range(n) for j in range(n) if (i + j) % 2 == 1
    )
    odd_support = all(
        not rows[i][j] for i in range(n) for j in range(n) if (i + j) % 2 == 0
    )
    if not even_support and not odd_support:
        raise NotCheckerboardError("entries do not vanish on a parity class of i+j")
    if even_support:
        a = [[rows[2 * i][2 * j] for j in range((n + 1) // 2)] for i in range((n + 1) // 2)]
        b = [[rows[2 * i + 1][2 * j + 1] for j in range(n // 2)] for i in range(n // 2)]
        da, db = _det_auto(a), _det_auto(b)
        return CheckerboardFactorization("even", 1, da, db, da * db)
    if n % 2 == 1:
        return CheckerboardFactorization("odd", 0, None, None, _zero_like(rows))
    half = n // 2
    a = [[rows[2 * i + 1][2 * j] for j in range(half)] for i in range(half)]
    b = [[rows[2 * i][2 * j + 1] for j in range(half)] for i in range(half)]
    da, db = _det_auto(a), _det_auto(b)
    sign = -1 if half % 2 == 1 else 1
    return CheckerboardFactorization("odd", sign, da, db, sign * da * db)


def checkerboard_split(m: HankelMatrix) -> CheckerboardFactorization:
    return checkerboard_det(m.rows())


def det_exact(m: HankelMatrix, algorithm: Optional[str] = None) -> DetResult:
    """Exact determinant of a Hankel matrix by the chosen algorithm."""
    if algorithm is None:
        algorithm = "bareiss" if m.kind == "poly" else "gauss"
    if algorithm == "gauss":
        value, steps = det_gauss(m.rows())
    elif algorithm == "bareiss":
        value, steps = det_bareiss(m.rows())
    elif algorithm == "checkerboard":
        value, steps = checkerboard_split(m).total, 0
    elif algorithm == "recurrence":
        from .orthopoly import det_via_recurrence

        value, steps = det_via_recurrence(m.terms), 0
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    return DetResult(value=value, algorithm=algorithm, elimination_steps=steps)


@lru_cache(maxsize=None)
def hankel_det(spec: SequenceSpec, n: int, algorithm: Optional[str] = None) -> DetResult:
    """H_n of the sequence, algorithm auto-selected unless given."""
    return det_exact(hankel_matrix(spec, n), algorithm)


# ----------------------------------------------------------------------
# Shift factors d_n linking H_n(c_{k+1}) to H_n(c_k).
# ----------------------------------------------------------------------


def shift_factor_dn(coeffs: "RecurrenceCoeffs", n: int) -> Term:
    """d_n from the tridiagonal recurrence d_{m+1} = -s_{m+1} d_m - t_{m+1} d_{m-1}.

    Needs s_0..s_n and t_1..t_n; d_0 = -s_0.
    """
    if n < 0:
        raise InsufficientCoefficientsError("n must be nonnegative")
    if coeffs.order < n:
        raise InsufficientCoefficientsError(
            f"need coefficients through order {n}, have {coeffs.order}"
        )
    prev = Fraction(1)  # d_{-1}
    cur: Term = -coeffs.s_at(0)
    for m in range(1, n + 1):
        prev, cur = cur, -coeffs.s_at(m) * cur - coeffs.t_at(m) * prev
    return cur


def shift_factor_dn_via_det(coeffs: "RecurrenceCoeffs", n: int) -> Term:
    """d_n as the explicit (n+1)x(n+1) tridiagonal determinant (cross-check)."""
    if coeffs.order < n:
        raise InsufficientCoefficientsError(
            f"need coefficients through order {n}, have {coeffs.order}"
        )
    size = n + 1
    poly_entries = any(
        isinstance(v, UniPoly)
        for v in [coeffs.s_at(m) for m in range(n + 1)] + [coeffs.t_at(m) for m in range(1, n + 1)]
    )
    zero: Term = UniPoly.zero() if poly_entries else Fraction(0)
    one: Term = UniPoly.one() if poly_entries else Fraction(1)

    def cast(v):
        return UniPoly.constant(v) if poly_entries and not isinstance(v, UniPoly) else v

    rows = [[zero] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = cast(-coeffs.s_at(i))
        if i + 1 < size:
            rows[i][i + 1] = one
            rows[i + 1][i] = cast(coeffs.t_at(i + 1))
    return det_bareiss(rows)[0] if poly_entries else det_gauss(rows)[0]
