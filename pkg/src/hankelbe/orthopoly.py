"""Moment-functional machinery for Hankel sequences.

Given a moment sequence c_0, c_1, ... (the formal functional y^k -> c_k),
the monic orthogonal polynomials P_n satisfy the three-term recurrence

    P_0 = 1,  P_1(y) = y + s_0,  P_{n+1}(y) = (y + s_n) P_n(y) - t_n P_{n-1}(y),

and the Hankel determinants factor as H_n = c_0^{n+1} t_1^n t_2^{n-1} ... t_n.
Coefficients are recovered iteratively from the orthogonality conditions
<y^r P_n> = 0 (0 <= r <= n-1) rather than from determinant ratios; the
bordered-determinant construction of P_n is kept as a small test oracle.

Extraction needs every leading Hankel minor to be nonzero; a vanishing H_n
is a common and meaningful outcome here (many of the catalog's sequences are
checkerboard-degenerate), so it aborts with DegenerateMomentsError carrying
the failing order.

Extraction works on rational moments.  Polynomial-valued sequences must be
evaluated at a rational point first, with one exception: the odd-index
Bernoulli half-shift family has known closed-form coefficients, available
symbolically from :func:`builtin_recurrence_bern_odd`.

The derivative-limit route: when every A_k vanishes at x0, the sequence of
derivatives A_k'(x0) has Hankel determinant

    H_n(A_k'(x0)) = A_0'(x0)^{n+1} * lim_{x->x0} H_n(A_k(x)) / A_0(x)^{n+1},

computed here entirely inside Q[x] by exact cancellation of (x - x0) factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from .hankel import (
    HankelMatrix,
    InsufficientCoefficientsError,
    det_bareiss,
    det_gauss,
    hankel_det,
    shift_factor_dn,
    term_to_str,
)
from .poly import UniPoly, cancel_and_eval_limit
from .sequences import InvalidParametersError, SequenceSpec, Term, resolve


class DegenerateMomentsError(ArithmeticError):
    """A leading Hankel minor vanished, so extraction stops at that order."""

    def __init__(self, order: int):
        self.order = order
        super().__init__(f"Hankel determinant H_{order} vanishes; cannot extract further")


class CommonRootViolatedError(ValueError):
    """The derivative-limit method needs A_k(x0) = 0 for every k in range."""


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """s_0..s_N, t_1..t_N and the normalizations zeta_n.

    zeta_0 = 1 by convention; zeta_n = H_n/H_{n-1} for n >= 1.
    """

    s: tuple[Term, ...]
    t: tuple[Term, ...]  # t[i] holds t_{i+1}
    zeta: tuple[Term, ...]

    @property
    def order(self) -> int:
        return len(self.s) - 1

    def s_at(self, n: int) -> Term:
        return self.s[n]

    def t_at(self, n: int) -> Term:
        if n < 1:
            raise IndexError("t_n is defined for n >= 1")
        return self.t[n - 1]

    def zeta_at(self, n: int) -> Term:
        return self.zeta[n]

    def to_dict(self) -> dict:
        return {
            "s": [term_to_str(v) for v in self.s],
            "t": [term_to_str(v) for v in self.t],
            "zeta": [term_to_str(v) for v in self.zeta],
        }


def _pair(pcoeffs: Sequence[Fraction], moments: Sequence[Fraction], r: int) -> Fraction:
    """<y^r P> under y^k -> c_k for P given by its coefficient list."""
    return sum((pc * moments[r + j] for j, pc in enumerate(pcoeffs)), Fraction(0))


def _extract(moments: Sequence[Fraction], order: int, want_last_s: bool):
    """Shared extraction core.

    Builds P_0..P_order plus s_0..s_{order-1}, t_1..t_order and nu_n =
    <y^n P_n>; with want_last_s also s_order (which needs c_{2*order+1} and
    nu_order != 0).
    """
    c = list(moments)
    if not c or c[0] == 0:
        raise DegenerateMomentsError(0)
    ps: list[list[Fraction]] = [[Fraction(1)]]
    nu = [c[0]]
    s: list[Fraction] = []
    t: list[Fraction] = []
    if order >= 1 or want_last_s:
        s.append(-c[1] / c[0])
        ps.append([s[0], Fraction(1)])
    for n in range(1, order + 1):
        pn, pm = ps[n], ps[n - 1]
        nu.append(_pair(pn, c, n))
        t.append(nu[n] / nu[n - 1])
        if n == order and not want_last_s:
            break
        if nu[n] == 0:
            raise DegenerateMomentsError(n)
        sn = (t[n - 1] * _pair(pm, c, n) - _pair(pn, c, n + 1)) / nu[n]
        s.append(sn)
        nxt = [Fraction(0)] * (n + 2)
        for j, pc in enumerate(pn):
            nxt[j + 1] += pc
            nxt[j] += sn * pc
        for j, pc in enumerate(pm):
            nxt[j] -= t[n - 1] * pc
        ps.append(nxt)
    return s, t, nu, ps


def recurrence_from_moments(spec: SequenceSpec, N: int) -> RecurrenceCoeffs:
    """Extract s_0..s_N, t_1..t_N from a rational-valued sequence."""
    if spec.term_kind != "poly":
        c = [resolve(spec, k) for k in range(2 * N + 2)]
    else:
        raise InvalidParametersError(
            f"{spec.name} is polynomial-valued; evaluate it at a rational point first"
        )
    s, t, nu, _ = _extract(c, N, want_last_s=True)
    zeta = (Fraction(1),) + tuple(nu[1 : N + 1])
    return RecurrenceCoeffs(s=tuple(s[: N + 1]), t=tuple(t), zeta=zeta)


@dataclass(frozen=True)
class MonicOPS:
    """Monic orthogonal polynomials P_0..P_N in the auxiliary variable y."""

    polys: tuple[UniPoly, ...]


def monic_ops(spec: SequenceSpec, N: int) -> MonicOPS:
    if spec.term_kind == "poly":
        raise InvalidParametersError(
            f"{spec.name} is polynomial-valued; evaluate it at a rational point first"
        )
    c = [resolve(spec, k) for k in range(2 * N + 1)]
    _, _, _, ps = _extract(c, N, want_last_s=False)
    return MonicOPS(polys=tuple(UniPoly(p) for p in ps[: N + 1]))


def apply_moments(p: UniPoly, spec: SequenceSpec, r: int = 0) -> Fraction:
    """<y^r p(y)> under the substitution y^k -> c_k."""
    return sum(
        (pc * resolve(spec, r + j) for j, pc in enumerate(p.coeffs)), Fraction(0)
    )


def monic_op_bordered(spec: SequenceSpec, n: int) -> UniPoly:
    """P_n via the bordered moment determinant; test oracle for n <= 6."""
    if n > 6:
        raise ValueError("the bordered-determinant oracle is desk-scale only (n <= 6)")
    if n == 0:
        return UniPoly.one()
    h_prev = hankel_det(spec, n - 1).value
    if h_prev == 0:
        raise DegenerateMomentsError(n - 1)
    coeffs = []
    for j in range(n + 1):
        rows = [
            [resolve(spec, i + k) for k in range(n + 1) if k != j] for i in range(n)
        ]
        minor = det_gauss(rows)[0]
        coeffs.append((-1) ** (n + j) * minor / h_prev)
    return UniPoly(coeffs)


def hankel_from_recurrence(c0: Term, coeffs: RecurrenceCoeffs, n: int) -> Term:
    """H_n = c_0^{n+1} t_1^n t_2^{n-1} ... t_n."""
    if n < 0:
        return Fraction(1)
    if len(coeffs.t) < n:
        raise InsufficientCoefficientsError(f"need t_1..t_{n}, have {len(coeffs.t)}")
    acc: Term = c0 ** (n + 1)
    for ell in range(1, n + 1):
        acc = acc * coeffs.t_at(ell) ** (n + 1 - ell)
    return acc


def det_via_recurrence(terms: Sequence[Term]) -> Term:
    """Hankel determinant of c_0..c_2n through the recurrence product."""
    n = (len(terms) - 1) // 2 if terms else -1
    if n <= 0:
        return Fraction(1) if n < 0 else terms[0]
    if any(isinstance(v, UniPoly) for v in terms):
        raise InvalidParametersError("recurrence route needs rational entries")
    _, t, nu, _ = _extract(terms, n, want_last_s=False)
    acc: Term = terms[0] ** (n + 1)
    for ell in range(1, n + 1):
        acc = acc * t[ell - 1] ** (n + 1 - ell)
    return acc


def builtin_recurrence_bern_odd(N: int, x=None) -> RecurrenceCoeffs:
    """Closed-form coefficients for the moment sequence B_{2k+1}((x+1)/2).

    s_n = C(n+1,2) - (x^2-1)/4 and t_n = n^4 (n^2 - x^2) / (4(2n+1)(2n-1)),
    as polynomials in x, or evaluated when a rational x is supplied.
    """
    quarter = Fraction(1, 4)
    s: list[Term] = []
    t: list[Term] = []
    for n in range(N + 1):
        sn = UniPoly((comb(n + 1, 2) + quarter, 0, -quarter))
        s.append(sn if x is None else sn.eval(x))
    for n in range(1, N + 1):
        den = Fraction(1, 4 * (2 * n + 1) * (2 * n - 1))
        tn = UniPoly((n**6 * den, 0, -(n**4) * den))
        t.append(tn if x is None else tn.eval(x))
    c0: Term = UniPoly((0, Fraction(1, 2)))  # B_1((x+1)/2) = x/2
    if x is not None:
        c0 = c0.eval(x)
    zeta: list[Term] = [Fraction(1)]
    acc: Term = c0
    for tn in t:
        acc = acc * tn
        zeta.append(acc)
    return RecurrenceCoeffs(s=tuple(s), t=tuple(t), zeta=tuple(zeta))


def derivative_limit_hankel(spec: SequenceSpec, x0, n: int) -> Fraction:
    """H_n of the derivative sequence A_k'(x0) via the exact limit formula."""
    if spec.term_kind != "poly":
        raise InvalidParametersError(f"{spec.name} must be polynomial-valued")
    x0 = Fraction(x0)
    terms = [resolve(spec, k) for k in range(2 * n + 1)]
    for k, p in enumerate(terms):
        if p.eval(x0) != 0:
            raise CommonRootViolatedError(
                f"term {k} of {spec.name} does not vanish at x = {x0}"
            )
    hn = det_bareiss(HankelMatrix(tuple(terms)).rows())[0]
    den = terms[0] ** (n + 1)
    limit = cancel_and_eval_limit(hn, den, x0)
    a0_prime = terms[0].derivative().eval(x0)
    return a0_prime ** (n + 1) * limit


@dataclass(frozen=True)
class ShiftRelationReport:
    """The relation H_n(c_{k+1}) = d_n * H_n(c_k), checked exactly."""

    shifted_det: Term
    d_n: Term
    base_det: Term
    ok: bool

    def to_dict(self) -> dict:
        return {
            "shifted_det": term_to_str(self.shifted_det),
            "d_n": term_to_str(self.d_n),
            "base_det": term_to_str(self.base_det),
            "ok": self.ok,
        }


def shift_relation_check(
    spec: SequenceSpec, n: int, coeffs: Optional[RecurrenceCoeffs] = None
) -> ShiftRelationReport:
    """Verify the d_n shift identity for a sequence (symbolic or rational)."""
    if coeffs is None:
        coeffs = recurrence_from_moments(spec, n)
    d = shift_factor_dn(coeffs, n)
    base = hankel_det(spec, n).value
    shifted = hankel_det(spec.shifted(), n).value
    expected = d * base
    return ShiftRelationReport(
        shifted_det=shifted, d_n=d, base_det=base, ok=shifted == expected
    )
