"""Registry of closed-form Hankel determinant identities.

Most identities come in one of two product formats.  Those nonzero for
every n are stored as

    H_n(b_k) = (-1)^eps(n) * a^(n+1) * prod_{l=1..n} b(l)^(n+1-l),

and those vanishing at every even index as H_2m = 0 together with

    H_{2m+1}(b_k) = (-1)^(m+1) * a^(2m+2) * prod_{l=1..m} b(l)^(2(m+1-l)).

Everything that does not fit (both-parity formulas with different shapes,
parity-dependent binomial prefactors, bordered polynomial prefactors) is a
``custom`` identity with its own exact evaluator.  Empty products are 1 and
prefactors are taken to exact integer powers, so the n = 0 rows of every
table come out right.

Each identity carries the sequence it speaks about (the determinant side is
always recomputed from scratch by the verification harness; nothing here
ever computes a determinant except the explicitly paired general umbral
check :func:`fk_general`), a citation or derivation note, a status flag
(``report_only`` rows are compared index by index but never asserted), and
display strings for the table emitter.

Symbolic identities (prefactor or factor containing the variable x) evaluate
to polynomials and are compared coefficientwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from .poly import UniPoly
from .sequences import (
    InvalidParametersError,
    SequenceSpec,
    Term,
    alt_power_sum_seq,
    bern_diff_sum,
    bernoulli_number,
    char_bernoulli_norm_seq,
    char_bernoulli_seq,
    euler_diff_sum,
    get_spec,
    power_sum_seq,
)
from .characters import BUILTIN_CHARACTERS

F = Fraction
X = UniPoly.x()


class OutOfRangeError(ValueError):
    """The identity was evaluated outside its validity range."""


class UnknownIdentityError(KeyError):
    """No identity with the requested id exists in the registry."""


class NegativeUmbralExponentError(ArithmeticError):
    """A negative umbral exponent survived expansion."""


_SIGN_EXPONENTS: dict[str, Callable[[int], int]] = {
    "zero": lambda n: 0,
    "n+1": lambda n: n + 1,
    "C(n+1,2)": lambda n: comb(n + 1, 2),
    "C(n+2,2)": lambda n: comb(n + 2, 2),
}


@dataclass(frozen=True)
class ClosedFormIdentity:
    id: str
    sequence: SequenceSpec
    format: str  # "all_n" | "odd_only" | "custom"
    sign_pattern: str = "zero"
    prefactor: Optional[Callable[[int], Term]] = None
    factor: Optional[Callable[[int], Term]] = None
    evaluator: Optional[Callable[[int], Term]] = None
    status: str = "asserted"
    kind: str = "scalar"  # "poly" when the sequence is polynomial-valued
    default_max_index: int = 8
    source: str = ""
    display: tuple[str, str, str] = ("", "", "")
    table: str = ""
    params: tuple = ()
    validity_note: str = ""

    def eval(self, index: int) -> Term:
        return eval_closed_form(self, index)

    def to_catalog_entry(self) -> dict:
        return {
            "id": self.id,
            "sequence": self.sequence.name,
            "format": self.format,
            "sign": self.sign_pattern if self.format == "all_n" else "m+1",
            "status": self.status,
            "kind": self.kind,
            "default_max_index": self.default_max_index,
            "source": self.source,
            "params": dict(self.params),
            "validity": self.validity_note,
        }


def eval_closed_form(identity: ClosedFormIdentity, index: int) -> Term:
    """Exact value of the identity's closed form at the given Hankel order."""
    if index < 0:
        raise OutOfRangeError("Hankel index must be nonnegative")
    n = index
    if identity.format == "custom":
        return identity.evaluator(n)
    if identity.format == "all_n":
        eps = _SIGN_EXPONENTS[identity.sign_pattern](n)
        val: Term = identity.prefactor(n) ** (n + 1)
        for ell in range(1, n + 1):
            val = val * identity.factor(ell) ** (n + 1 - ell)
        return -val if eps % 2 else val
    if identity.format == "odd_only":
        if n % 2 == 0:
            return F(0)
        m = (n - 1) // 2
        val = identity.prefactor(m) ** (2 * (m + 1))
        for ell in range(1, m + 1):
            val = val * identity.factor(ell) ** (2 * (m + 1 - ell))
        return -val if (m + 1) % 2 else val
    raise ValueError(f"unknown format {identity.format!r}")


def _const(a: Term) -> Callable[[int], Term]:
    return lambda _n: a


def _all_n(ident_id, seq, sign, a, b, *, kind="scalar", maxi=8, status="asserted",
           source="", display=("", "", ""), table="7.1", params=(), validity=""):
    return ClosedFormIdentity(
        id=ident_id,
        sequence=get_spec(seq) if isinstance(seq, str) else seq,
        format="all_n",
        sign_pattern=sign,
        prefactor=a if callable(a) else _const(a),
        factor=b,
        kind=kind,
        default_max_index=maxi,
        status=status,
        source=source,
        display=display,
        table=table,
        params=params,
        validity_note=validity,
    )


def _odd_only(ident_id, seq, a, b, *, kind="scalar", maxi=9, status="asserted",
              source="", display=("", "", ""), table="", params=(), validity=""):
    return ClosedFormIdentity(
        id=ident_id,
        sequence=get_spec(seq) if isinstance(seq, str) else seq,
        format="odd_only",
        prefactor=a if callable(a) else _const(a),
        factor=b,
        kind=kind,
        default_max_index=maxi,
        status=status,
        source=source,
        display=display,
        table=table,
        params=params,
        validity_note=validity,
    )


def _custom(ident_id, seq, evaluator, *, kind="scalar", maxi=8, status="asserted",
            source="", display=("", "", "custom"), table="", params=(), validity=""):
    return ClosedFormIdentity(
        id=ident_id,
        sequence=get_spec(seq) if isinstance(seq, str) else seq,
        format="custom",
        evaluator=evaluator,
        kind=kind,
        default_max_index=maxi,
        status=status,
        source=source,
        display=display,
        table=table,
        params=params,
        validity_note=validity,
    )


# ----------------------------------------------------------------------
# The all-n table.
# ----------------------------------------------------------------------


def _table_all_n() -> list[ClosedFormIdentity]:
    rows = [
        _all_n("Hn_Bk", "B_k", "C(n+1,2)", F(1),
               lambda l: F(l**4, 4 * (2 * l + 1) * (2 * l - 1)),
               source="determinant-calculus survey",
               display=("C(n+1,2)", "1", "l^4/(4(2l+1)(2l-1))")),
        _all_n("Hn_Bk+1", "B_k+1", "C(n+2,2)", F(1, 2),
               lambda l: F(l**2 * (l + 1) ** 2, 4 * (2 * l + 1) ** 2),
               source="determinant-calculus survey",
               display=("C(n+2,2)", "1/2", "l^2(l+1)^2/(4(2l+1)^2)")),
        _all_n("Hn_Bk+2", "B_k+2", "C(n+1,2)", F(1, 6),
               lambda l: F(l * (l + 1) ** 2 * (l + 2), 4 * (2 * l + 1) * (2 * l + 3)),
               source="determinant-calculus survey",
               display=("C(n+1,2)", "1/6", "l(l+1)^2(l+2)/(4(2l+1)(2l+3))")),
        _all_n("Hn_B2k+2", "B_2k+2", "zero", F(1, 6),
               lambda l: F(l**3 * (l + 1) * (2 * l - 1) * (2 * l + 1) ** 3,
                           (4 * l - 1) * (4 * l + 1) ** 2 * (4 * l + 3)),
               source="determinant-calculus survey",
               display=("0", "1/6", "l^3(l+1)(2l-1)(2l+1)^3/((4l-1)(4l+1)^2(4l+3))")),
        _all_n("Hn_B2k+4", "B_2k+4", "n+1", F(1, 30),
               lambda l: F(l * (l + 1) ** 3 * (2 * l + 1) ** 3 * (2 * l + 3),
                           (4 * l + 1) * (4 * l + 3) ** 2 * (4 * l + 5)),
               source="determinant-calculus survey",
               display=("n+1", "1/30", "l(l+1)^3(2l+1)^3(2l+3)/((4l+1)(4l+3)^2(4l+5))")),
        _all_n("Hn_B2k(1/2)", "B_2k(1/2)", "zero", F(1),
               lambda l: F(l**4 * (2 * l - 1) ** 4,
                           (4 * l - 3) * (4 * l - 1) ** 2 * (4 * l + 1)),
               source="median Bernoulli literature",
               display=("0", "1", "l^4(2l-1)^4/((4l-3)(4l-1)^2(4l+1))")),
        _all_n("Hn_(2^{2k+2}-1)B2k+2", "(2^{2k+2}-1)B_2k+2", "zero", F(1, 2),
               lambda l: F(l**3 * (l + 1)),
               source="derivative-limit method",
               display=("0", "1/2", "l^3(l+1)")),
        _all_n("Hn_(2k+1)B2k(1/2)", "(2k+1)B_2k(1/2)", "zero", F(1),
               lambda l: F(l**6, 4 * (2 * l + 1) * (2 * l - 1)),
               source="derivative-limit method",
               display=("0", "1", "l^6/(4(2l+1)(2l-1))")),
        _all_n("Hn_(2k+3)B2k+2", "(2k+3)B_2k+2", "zero", F(1, 2),
               lambda l: F(l**3 * (l + 1) ** 3, 4 * (2 * l + 1) ** 2),
               source="derivative-limit method on the shifted sequence",
               display=("0", "1/2", "l^3(l+1)^3/(4(2l+1)^2)")),
        _all_n("Hn_B2k+1_poly", "B_2k+1((x+1)/2)", "C(n+1,2)", X * F(1, 2),
               lambda l: (X * X - l * l) * F(l**4, 4 * (2 * l + 1) * (2 * l - 1)),
               kind="poly", maxi=5,
               source="orthogonal-polynomial route for the half-shift family",
               display=("C(n+1,2)", "x/2", "l^4(x^2-l^2)/(4(2l+1)(2l-1))")),
        _all_n("Hn_Ek", "E_k", "C(n+1,2)", F(1), lambda l: F(l**2),
               source="Al-Salam-Carlitz",
               display=("C(n+1,2)", "1", "l^2")),
        _all_n("Hn_Ek_poly", "E_k(x)", "C(n+1,2)", F(1), lambda l: F(l**2, 4),
               kind="poly", maxi=5, source="Al-Salam-Carlitz",
               display=("C(n+1,2)", "1", "l^2/4")),
        _all_n("Hn_Ek+1(1)", "E_k+1(1)", "C(n+1,2)", F(1, 2),
               lambda l: F(l * (l + 1), 4),
               source="Han's tangent/secant catalog",
               display=("C(n+1,2)", "1/2", "l(l+1)/4")),
        _all_n("Hn_E2k", "E_2k", "zero", F(1),
               lambda l: F((2 * l - 1) ** 2 * (2 * l) ** 2),
               source="determinant-calculus survey",
               display=("0", "1", "(2l-1)^2(2l)^2")),
        _all_n("Hn_E2k+1(1)", "E_2k+1(1)", "zero", F(1, 2),
               lambda l: F(l**2 * (2 * l - 1) * (2 * l + 1), 4),
               source="Milne's continued-fraction catalog",
               display=("0", "1/2", "l^2(2l-1)(2l+1)/4")),
        _all_n("Hn_E2k+2", "E_2k+2", "n+1", F(1),
               lambda l: F((2 * l) ** 2 * (2 * l + 1) ** 2),
               source="determinant-calculus survey",
               display=("n+1", "1", "(2l)^2(2l+1)^2")),
        _all_n("Hn_E2k+3(1)", "E_2k+3(1)", "n+1", F(1, 4),
               lambda l: F(l * (l + 1) * (2 * l + 1) ** 2, 4),
               source="Milne's continued-fraction catalog",
               display=("n+1", "1/4", "l(l+1)(2l+1)^2/4")),
        _all_n("Hn_(2k+1)E2k", "(2k+1)E_2k", "zero", F(1),
               lambda l: F((2 * l) ** 4),
               source="derivative-limit method",
               display=("0", "1", "(2l)^4")),
        _all_n("Hn_(2k+2)E2k+1(1)", "(2k+2)E_2k+1(1)", "zero", F(1),
               lambda l: F(l**3 * (l + 1)),
               source="derivative-limit method",
               display=("0", "1", "l^3(l+1)")),
        _all_n("Hn_Ek+1(1)/(k+1)!", "E_k+1(1)/(k+1)!", "C(n+1,2)", F(1, 2),
               lambda l: F(1, 4 * (2 * l - 1) * (2 * l + 1)),
               source="Han's tangent/secant catalog",
               display=("C(n+1,2)", "1/2", "1/(4(2l-1)(2l+1))")),
        _all_n("Hn_E2k+1(1)/(2k+1)!", "E_2k+1(1)/(2k+1)!", "zero", F(1, 2),
               lambda l: F(1, 16 * (4 * l - 3) * (4 * l - 1) ** 2 * (4 * l + 1)),
               source="Han's tangent/secant catalog",
               display=("0", "1/2", "1/(16(4l-3)(4l-1)^2(4l+1))")),
        _all_n("Hn_E2k+3(1)/(2k+3)!", "E_2k+3(1)/(2k+3)!", "n+1", F(1, 24),
               lambda l: F(1, 16 * (4 * l - 1) * (4 * l + 1) ** 2 * (4 * l + 3)),
               source="Han's tangent/secant catalog",
               display=("n+1", "1/24", "1/(16(4l-1)(4l+1)^2(4l+3))")),
        _all_n("Hn_E2k_poly", "E_2k((x+1)/2)", "C(n+1,2)", F(1),
               lambda l: (X * X - (2 * l - 1) ** 2) * F(l**2, 4),
               kind="poly", maxi=5,
               source="orthogonal-polynomial route for the half-shift family",
               display=("C(n+1,2)", "1", "(l^2/4)(x^2-(2l-1)^2)")),
        _all_n("Hn_E2k+1_poly", "E_2k+1((x+1)/2)", "C(n+1,2)", X * F(1, 2),
               lambda l: (X * X - (2 * l) ** 2) * F(l**2, 4),
               kind="poly", maxi=5,
               source="orthogonal-polynomial route for the half-shift family",
               display=("C(n+1,2)", "x/2", "(l^2/4)(x^2-(2l)^2)")),
        _all_n("Hn_E2k+2_poly", "E_2k+2((x+1)/2)", "C(n+1,2)", (X * X - 1) * F(1, 4),
               lambda l: (X * X - (2 * l + 1) ** 2) * F(l**2, 4),
               kind="poly", maxi=5,
               source="orthogonal-polynomial route for the half-shift family",
               display=("C(n+1,2)", "(x^2-1)/4", "(l^2/4)(x^2-(2l+1)^2)")),
    ]
    return rows


# ----------------------------------------------------------------------
# The odd-only table.
# ----------------------------------------------------------------------


def _table_odd_only() -> list[ClosedFormIdentity]:
    rows = [
        _odd_only("H_Ek+1", "E_k+1", F(1),
                  lambda l: F((2 * l) ** 2 * (2 * l + 1) ** 2),
                  table="7.2", source="Han's tangent/secant catalog",
                  display=("m+1", "1", "(2l)^2(2l+1)^2")),
        _odd_only("H_Ek+2(1)", "E_k+2(1)", F(1, 4),
                  lambda l: F(l * (l + 1) * (2 * l + 1) ** 2, 4),
                  status="report_only", table="7.2",
                  source="Han's tangent/secant catalog (index convention unclear in the source)",
                  display=("m+1", "1/4", "l(l+1)(2l+1)^2/4")),
        _odd_only("H_(0,Ek(1))", "(0,E_k(1))", F(1, 2),
                  lambda l: F(l**2 * (2 * l - 1) * (2 * l + 1), 4),
                  table="7.2", source="Han's tangent/secant catalog",
                  display=("m+1", "1/2", "l^2(2l-1)(2l+1)/4")),
        _odd_only("H_kEk-1_poly", "kE_{k-1}(x)", F(1), lambda l: F(l**4),
                  kind="poly", maxi=5, table="7.2",
                  source="difference-family factorization",
                  display=("m+1", "1", "l^4")),
        _odd_only("H_kEk-1", "kE_{k-1}", F(1), lambda l: F((2 * l) ** 4),
                  table="7.2", source="difference-family factorization",
                  display=("m+1", "1", "(2l)^4")),
        _odd_only("H_(0,Ek(1)/k!)", "(0,E_k(1)/k!)", F(1, 2),
                  lambda l: F(1, 16 * (4 * l - 3) * (4 * l - 1) ** 2 * (4 * l + 1)),
                  table="7.2", source="Han's tangent/secant catalog",
                  display=("m+1", "1/2", "1/(16(4l-3)(4l-1)^2(4l+1))")),
        _odd_only("H_Ek+2(1)/(k+2)!", "E_k+2(1)/(k+2)!", F(1, 24),
                  lambda l: F(1, 16 * (4 * l - 1) * (4 * l + 1) ** 2 * (4 * l + 3)),
                  table="7.2", source="Han's tangent/secant catalog",
                  display=("m+1", "1/24", "1/(16(4l-1)(4l+1)^2(4l+3))")),
    ]
    return rows


# ----------------------------------------------------------------------
# Parameterized families.
# ----------------------------------------------------------------------


def diff_bernoulli_identity(q: int, r: int, s: int, table: str = "") -> ClosedFormIdentity:
    """H of B_k((x+r)/q) - B_k((x+s)/q); vanishes at even index."""
    d = s - r
    zero_note = f"H_{{2m+1}} = 0 for m >= {d // q}" if d % q == 0 else "never zero at odd index"
    return _odd_only(
        f"H_diffB(q={q},r={r},s={s})",
        bern_diff_sum(q, r, s, "-"),
        lambda m: F(d) * F(1, q) ** (m + 1),
        lambda l: F(l**4 * (d * d - (q * l) ** 2), 4 * (2 * l - 1) * (2 * l + 1)),
        kind="poly", maxi=5, table=table,
        source="checkerboard split of the Bernoulli difference family",
        display=("m+1", f"({s}-{r})/{q}^(m+1)",
                 f"l^4(({d})^2-({q}l)^2)/(4(2l-1)(2l+1))"),
        params=(("q", q), ("r", r), ("s", s)),
        validity=zero_note,
    )


def diff_euler_identity(q: int, r: int, s: int, table: str = "") -> ClosedFormIdentity:
    """H of E_k((x+r)/q) - E_k((x+s)/q); vanishes at even index."""
    d = s - r
    return _odd_only(
        f"H_diffE(q={q},r={r},s={s})",
        euler_diff_sum(q, r, s, "-"),
        _const(F(d, q)),
        lambda l: F(l**2 * (d * d - (2 * q * l) ** 2), 4 * q * q),
        kind="poly", maxi=5, table=table,
        source="checkerboard split of the Euler difference family",
        display=("m+1", f"({s}-{r})/{q}", f"l^2(({d})^2-(2*{q}l)^2)/(4*{q}^2)"),
        params=(("q", q), ("r", r), ("s", s)),
    )


def sum_euler_identity(q: int, r: int, s: int) -> ClosedFormIdentity:
    """H of E_k((x+r)/q) + E_k((x+s)/q); nonzero at both parities."""
    w = F(s - r, q)

    def ev(n: int) -> Fraction:
        if n % 2 == 0:
            m = n // 2
            val = F((-1) ** m * 2 ** (2 * m + 1), factorial(m) ** 2)
            for l in range(1, m + 1):
                val *= (F(l**2, 4) * (w * w - (2 * l - 1) ** 2)) ** (2 * (m + 1 - l))
            return val
        m = (n - 1) // 2
        val = F(1)
        for l in range(0, m + 1):
            val *= F(factorial(l) ** 4, 16**l) * (w * w - (2 * l + 1) ** 2) ** (
                2 * (m - l) + 1
            )
        return val

    return _custom(
        f"H_sumE(q={q},r={r},s={s})",
        euler_diff_sum(q, r, s, "+"),
        ev,
        kind="poly", maxi=5,
        source="checkerboard split of the Euler sum family",
        display=("(-1)^m / m+1 branches", "", "two-parity product"),
        params=(("q", q), ("r", r), ("s", s)),
    )


def char_bernoulli_identity(q: int) -> ClosedFormIdentity:
    """H of the generalized Bernoulli numbers for conductor q in {3, 4, 6}."""
    if q not in (3, 4, 6):
        raise InvalidParametersError("character Bernoulli closed form needs q in {3, 4, 6}")
    chi = BUILTIN_CHARACTERS[f"chi{q}"]
    return _odd_only(
        f"H_B_{chi.label}",
        char_bernoulli_seq(chi),
        lambda m: F(q) ** (m - 1) * (q - 2),
        lambda l: F(l**4 * ((q - 2) ** 2 - (q * l) ** 2), 4 * (2 * l + 1) * (2 * l - 1)),
        maxi=9,
        source="two-term character written as a Bernoulli difference",
        display=("m+1", f"{q}^(m-1)({q}-2)",
                 f"l^4(({q}-2)^2-({q}l)^2)/(4(2l+1)(2l-1))"),
        params=(("q", q),),
    )


def char_pair_identity(modulus: int, which: int) -> ClosedFormIdentity:
    """H of B_{k+1,chi}(x)/(k+1) for the modulo-8/12 character tables."""
    if modulus not in (8, 12) or which not in (1, 2):
        raise InvalidParametersError("need modulus in {8, 12} and which in {1, 2}")
    q = modulus // 2
    qt = F(q - 2, q)
    seq = char_bernoulli_norm_seq(modulus, which)
    if which == 1:
        return _odd_only(
            f"H_charBnorm({modulus},1)",
            seq,
            lambda m: F(q - 2, 2) * F(q) ** (2 * m),
            lambda l: F(l**2, 4) * (qt * qt - (2 * l) ** 2),
            kind="poly", maxi=5,
            source="character sum reduced to an Euler difference family",
            display=("m+1", f"(({q}-2)/2){q}^(2m)", "(l^2/4)(qt^2-(2l)^2)"),
            params=(("modulus", modulus), ("which", which)),
        )

    def ev(n: int) -> Fraction:
        if n % 2 == 0:
            m = n // 2
            val = F((-1) ** (m + 1)) * F(q) ** (2 * m * (2 * m + 1)) / factorial(m) ** 2
            for l in range(1, m + 1):
                val *= (F(l**2, 4) * (qt * qt - (2 * l - 1) ** 2)) ** (2 * (m + 1 - l))
            return val
        m = (n - 1) // 2
        val = (F(1, 2) * F(q) ** (2 * m + 1)) ** (2 * m + 2)
        for l in range(0, m + 1):
            val *= F(factorial(l) ** 4, 16**l) * (qt * qt - (2 * l + 1) ** 2) ** (
                2 * (m - l) + 1
            )
        return val

    return _custom(
        f"H_charBnorm({modulus},2)",
        seq,
        ev,
        kind="poly", maxi=5,
        source="character sum reduced to an Euler sum family",
        display=("two-parity", "", "custom"),
        params=(("modulus", modulus), ("which", which)),
    )


def power_sum_identity(s: int) -> ClosedFormIdentity:
    """H of S_k(s) = k(1^(k-1) + ... + s^(k-1))."""
    return _odd_only(
        f"H_Sk(s={s})",
        power_sum_seq(s),
        _const(F(s)),
        lambda l: F(l**4 * (s * s - l * l), 4 * (2 * l + 1) * (2 * l - 1)),
        maxi=9,
        source="power sums as a q=1 Bernoulli difference",
        display=("m+1", f"{s}", f"l^4({s}^2-l^2)/(4(2l+1)(2l-1))"),
        params=(("s", s),),
        validity=f"H_{{2m+1}} = 0 for m >= {s}",
    )


def alt_power_sum_identity(s: int) -> ClosedFormIdentity:
    """H of T_k(s) = 1 - 2^k + ... +- s^k; shape depends on the parity of s."""
    if s % 2 == 0:
        t = s // 2
        return _odd_only(
            f"H_Tk(s={s})",
            alt_power_sum_seq(s),
            _const(F(t)),
            lambda l: F(l**2 * (t * t - l * l)),
            maxi=9,
            source="alternating power sums as a q=1 Euler difference",
            display=("m+1", f"{t}", f"l^2({t}^2-l^2)"),
            params=(("s", s),),
            validity=f"H_{{2m+1}} = 0 for m >= {t}",
        )

    def ev(n: int) -> Fraction:
        if n % 2 == 0:
            m = n // 2
            val = F((-1) ** m, factorial(m) ** 2)
            for l in range(1, m + 1):
                val *= (F(l**2, 4) * (s * s - (2 * l - 1) ** 2)) ** (2 * (m + 1 - l))
            return val
        m = (n - 1) // 2
        val = F(1, 4 ** (m + 1))
        for l in range(0, m + 1):
            val *= F(factorial(l) ** 4, 16**l) * (s * s - (2 * l + 1) ** 2) ** (
                2 * (m - l) + 1
            )
        return val

    return _custom(
        f"H_Tk(s={s})",
        alt_power_sum_seq(s),
        ev,
        maxi=9,
        source="alternating power sums as a q=1 Euler sum",
        display=("two-parity", "", "custom"),
        params=(("s", s),),
        validity=f"H_{{2m}} = 0 for m >= {(s + 1) // 2}; H_{{2m+1}} = 0 for m >= {(s - 1) // 2}",
    )


# ----------------------------------------------------------------------
# Miscellaneous identities outside the two standard formats.
# ----------------------------------------------------------------------


def _misc_bk_fact(n: int) -> Fraction:
    val = F((-1) ** comb(n + 1, 2)) * (n + 1)
    for l in range(1, n + 1):
        val *= F(1, 4 * (2 * l - 1) * (2 * l + 1)) ** (n + 1 - l)
    return val


def _misc_b2k2_fact(n: int) -> Fraction:
    val = F(1, 4) ** ((n + 1) ** 2)
    for l in range(1, 2 * n + 2):
        val *= F(1, 2 * l + 1) ** (2 * n + 2 - l)
    return val


def _misc_b2k4_fact(n: int) -> Fraction:
    val = F(-1, 36) ** (n + 1) * F(1, 4) ** ((n + 1) ** 2)
    for l in range(1, 2 * n + 2):
        val *= F(1, 2 * l + 3) ** (2 * n + 2 - l)
    return val


def _misc_b2k6_fact(n: int) -> Fraction:
    val = F((n + 2) * (2 * n + 5), 3) * F(1, 60) ** (2 * n + 2) * F(1, 4) ** ((n + 1) ** 2)
    for l in range(1, 2 * n + 2):
        val *= F(1, 2 * l + 5) ** (2 * n + 2 - l)
    return val


def _misc_ek3_fact(n: int) -> Fraction:
    val = F((-1) ** comb(n + 2, 2)) * F(1, 24) ** (n + 1)
    for l in range(1, n + 1):
        val *= F(1, 4 * (2 * l + 1) * (2 * l + 3)) ** (n + 1 - l)
    val *= comb(n + 3, 2) if n % 2 == 1 else comb(n + 2, 2)
    return val


def _misc_e2k5_fact(n: int) -> Fraction:
    val = F(1, 2 * factorial(6)) ** (n + 1) * comb(2 * n + 4, 2)
    for l in range(1, n + 1):
        val *= F(1, 16 * (4 * l + 1) * (4 * l + 3) ** 2 * (4 * l + 5)) ** (n + 1 - l)
    return val


def _misc_e2k7_fact(n: int) -> Fraction:
    val = F(-1, 5 * factorial(8)) ** (n + 1)
    val *= F(4 * n * n + 18 * n + 17, 3) * comb(2 * n + 6, 4)
    for l in range(1, n + 1):
        val *= F(1, 16 * (4 * l + 3) * (4 * l + 5) ** 2 * (4 * l + 7)) ** (n + 1 - l)
    return val


def _misc_bk2_at_minus1(n: int) -> Fraction:
    val = F((-1) ** comb(n + 1, 2)) * F(1, 6) ** (n + 1)
    val *= (n + 1) * (n + 2) ** 2 * (n + 3) + 1
    for l in range(1, n + 1):
        val *= F(l * (l + 1) ** 2 * (l + 2), 4 * (2 * l + 1) * (2 * l + 3)) ** (n + 1 - l)
    return val


def _misc_identities() -> list[ClosedFormIdentity]:
    return [
        _custom("Hn_Bk/k!", "B_k/k!", _misc_bk_fact,
                source="Andrews-Wimp adaptation",
                display=("C(n+1,2)", "(n+1) prefactor", "1/(4(2l-1)(2l+1))")),
        _custom("Hn_B2k+2/(2k+2)!", "B_2k+2/(2k+2)!", _misc_b2k2_fact,
                source="Krattenthaler, via factorial normalization",
                display=("0", "(1/4)^((n+1)^2)", "1/(2l+1), l to 2n+1")),
        _custom("Hn_B2k+4/(2k+4)!", "B_2k+4/(2k+4)!", _misc_b2k4_fact,
                source="Krattenthaler, via factorial normalization",
                display=("n+1", "(1/36)^(n+1)(1/4)^((n+1)^2)", "1/(2l+3), l to 2n+1")),
        _custom("Hn_B2k+6/(2k+6)!", "B_2k+6/(2k+6)!", _misc_b2k6_fact,
                source="Krattenthaler, via factorial normalization",
                display=("0", "(n+2)(2n+5)/(3*60^(2n+2))", "1/(2l+5), l to 2n+1")),
        _custom("Hn_Ek+3(1)/(k+3)!", "E_k+3(1)/(k+3)!", _misc_ek3_fact,
                source="Han's tangent/secant catalog",
                display=("C(n+2,2)", "(1/24)^(n+1) with parity binomial",
                         "1/(4(2l+1)(2l+3))")),
        _custom("Hn_E2k+5(1)/(2k+5)!", "E_2k+5(1)/(2k+5)!", _misc_e2k5_fact,
                source="Han's tangent/secant catalog",
                display=("0", "(1/1440)^(n+1) C(2n+4,2)",
                         "1/(16(4l+1)(4l+3)^2(4l+5))")),
        _custom("Hn_E2k+7(1)/(2k+7)!", "E_2k+7(1)/(2k+7)!", _misc_e2k7_fact,
                source="Han's tangent/secant catalog",
                display=("n+1", "(1/403200)^(n+1)(4n^2+18n+17)/3 C(2n+6,4)",
                         "1/(16(4l+3)(4l+5)^2(4l+7))")),
        _custom("Hn_Bk+2(-1)", "B_k+2(-1)", _misc_bk2_at_minus1,
                source="Fulmek-Krattenthaler",
                display=("C(n+1,2)", "(1/6)^(n+1)((n+1)(n+2)^2(n+3)+1)",
                         "l(l+1)^2(l+2)/(4(2l+1)(2l+3))")),
    ]


MISC_IDS = frozenset(
    {
        "Hn_Bk/k!",
        "Hn_B2k+2/(2k+2)!",
        "Hn_B2k+4/(2k+4)!",
        "Hn_B2k+6/(2k+6)!",
        "Hn_Ek+3(1)/(k+3)!",
        "Hn_E2k+5(1)/(2k+5)!",
        "Hn_E2k+7(1)/(2k+7)!",
        "Hn_Bk+2(-1)",
    }
)


QRS_GRID = ((1, 0, 1), (1, 0, 3), (2, 0, 1), (3, 1, 2), (4, 1, 3), (6, 1, 5))
POWER_SUM_GRID = (1, 2, 3, 4)


def _build_registry() -> tuple[ClosedFormIdentity, ...]:
    items: list[ClosedFormIdentity] = []
    items += _table_all_n()
    items += _table_odd_only()
    for q, r, s in QRS_GRID:
        # one representative instantiation stands in for each family row
        table = "7.2" if (q, r, s) == (2, 0, 1) else ""
        items.append(diff_bernoulli_identity(q, r, s, table=table))
        items.append(diff_euler_identity(q, r, s, table=table))
        items.append(sum_euler_identity(q, r, s))
    for q in (3, 4, 6):
        items.append(char_bernoulli_identity(q))
    for modulus in (8, 12):
        for which in (1, 2):
            items.append(char_pair_identity(modulus, which))
    for s in POWER_SUM_GRID:
        items.append(power_sum_identity(s))
        items.append(alt_power_sum_identity(s))
    items += _misc_identities()
    ids = [it.id for it in items]
    assert len(ids) == len(set(ids)), "identity ids must be unique"
    return tuple(items)


_REGISTRY: tuple[ClosedFormIdentity, ...] = _build_registry()
_REGISTRY_BY_ID = {it.id: it for it in _REGISTRY}

_ID_QRS_RE = re.compile(r"^H_(diffB|diffE|sumE)\(q=(\d+),r=(\d+),s=(\d+)\)$")
_ID_PS_RE = re.compile(r"^H_(S|T)k\(s=(\d+)\)$")


def registry() -> tuple[ClosedFormIdentity, ...]:
    """The full immutable identity catalog."""
    return _REGISTRY


def get_identity(ident_id: str) -> ClosedFormIdentity:
    """Look up an identity, instantiating parameterized families on demand."""
    ident = _REGISTRY_BY_ID.get(ident_id)
    if ident is not None:
        return ident
    m = _ID_QRS_RE.match(ident_id)
    if m:
        q, r, s = int(m.group(2)), int(m.group(3)), int(m.group(4))
        maker = {
            "diffB": diff_bernoulli_identity,
            "diffE": diff_euler_identity,
            "sumE": sum_euler_identity,
        }[m.group(1)]
        return maker(q, r, s)
    m = _ID_PS_RE.match(ident_id)
    if m:
        maker = power_sum_identity if m.group(1) == "S" else alt_power_sum_identity
        return maker(int(m.group(2)))
    raise UnknownIdentityError(ident_id)


def eval_misc(ident_id: str, n: int) -> Term:
    """Evaluate one of the non-standard-format identities."""
    if ident_id not in MISC_IDS:
        raise UnknownIdentityError(ident_id)
    return eval_closed_form(_REGISTRY_BY_ID[ident_id], n)


def catalog() -> list[dict]:
    """Machine-readable export of the registry."""
    return [it.to_catalog_entry() for it in _REGISTRY]


# ----------------------------------------------------------------------
# Product-form conversions (used to move between equivalent displays).
# ----------------------------------------------------------------------


def conv_factorials(n: int) -> tuple[int, int]:
    """(prod l!, prod l^(n+1-l)) for l = 1..n; the two are equal."""
    lhs = 1
    rhs = 1
    for l in range(1, n + 1):
        lhs *= factorial(l)
        rhs *= l ** (n + 1 - l)
    return lhs, rhs


def conv_even_factorials(n: int, nu: int) -> tuple[int, int]:
    """(prod (2l+nu)!, nu!^n prod ((2l-1+nu)(2l+nu))^(n+1-l)) for nu = 0..2."""
    if nu not in (0, 1, 2):
        raise InvalidParametersError("nu must be 0, 1 or 2")
    lhs = 1
    rhs = factorial(nu) ** n
    for l in range(1, n + 1):
        lhs *= factorial(2 * l + nu)
        rhs *= ((2 * l - 1 + nu) * (2 * l + nu)) ** (n + 1 - l)
    return lhs, rhs


def conv_quad_factorials(n: int, nu: int) -> tuple[int, int]:
    """(prod (4l+nu)!, nu!^n prod ((4l-3+nu)...(4l+nu))^(n+1-l)) for nu = 0..3."""
    if nu not in (0, 1, 2, 3):
        raise InvalidParametersError("nu must be 0..3")
    lhs = 1
    rhs = factorial(nu) ** n
    for l in range(1, n + 1):
        lhs *= factorial(4 * l + nu)
        block = 1
        for d in range(4):
            block *= 4 * l - 3 + nu + d
        rhs *= block ** (n + 1 - l)
    return lhs, rhs


# ----------------------------------------------------------------------
# Umbral machinery: powers of the symbol substitute to Bernoulli numbers.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class UmbralExpr:
    """A Laurent polynomial in the umbral symbol, exponent -> coefficient.

    Negative exponents are transient artifacts of the 1/(-symbol) convention
    for the degenerate shifted factorial; they must cancel before evaluation.
    """

    coeffs: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, d: dict[int, Fraction]) -> "UmbralExpr":
        return cls(tuple(sorted((e, F(c)) for e, c in d.items() if c != 0)))

    @classmethod
    def power(cls, j: int) -> "UmbralExpr":
        return cls.from_dict({j: F(1)})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def __add__(self, other: "UmbralExpr") -> "UmbralExpr":
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, F(0)) + c
        return UmbralExpr.from_dict(out)

    def __mul__(self, other) -> "UmbralExpr":
        if isinstance(other, (int, Fraction)):
            return UmbralExpr.from_dict({e: c * other for e, c in self.coeffs})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                out[e] = out.get(e, F(0)) + c1 * c2
        return UmbralExpr.from_dict(out)

    __rmul__ = __mul__


def umbral_shifted_factorial(sign: int, j: int) -> UmbralExpr:
    """(sign*symbol + 1)_j; j = -1 is allowed only as 1/(-symbol)."""
    if j == -1:
        if sign != -1:
            raise InvalidParametersError("the 1/(-symbol) convention needs the minus sign")
        return UmbralExpr.from_dict({-1: F(-1)})
    if j < -1:
        raise InvalidParametersError("shifted factorial index must be >= -1 here")
    acc = UmbralExpr.power(0)
    for i in range(j):
        acc = acc * UmbralExpr.from_dict({1: F(sign), 0: F(1 + i)})
    return acc


def umbral_eval(expr: UmbralExpr) -> Fraction:
    """Replace each power of the symbol by the Bernoulli number of its index."""
    total = F(0)
    for e, c in expr.coeffs:
        if e < 0:
            raise NegativeUmbralExponentError(
                f"exponent {e} survived expansion; the cancellation convention failed"
            )
        total += c * bernoulli_number(e)
    return total


def fk_sequence_term(a: int, b: int, c: int, d: int, k: int) -> Fraction:
    """Term k of the general umbral product sequence."""
    if a < 1 or b < 1 or c < 0 or d < 0:
        raise InvalidParametersError("need a, b >= 1 and c, d >= 0")
    expr = UmbralExpr.power(k + 2)
    expr = expr * umbral_shifted_factorial(1, a - 1)
    expr = expr * umbral_shifted_factorial(1, b - 1)
    expr = expr * umbral_shifted_factorial(-1, c - 1)
    expr = expr * umbral_shifted_factorial(-1, d - 1)
    return umbral_eval(expr)


def fk_closed_form(a: int, b: int, c: int, d: int, n: int) -> Fraction:
    """The product-format right-hand side of the general umbral identity."""
    pref = F(
        factorial(a + c - 1) * factorial(b + c - 1) * factorial(a + d - 1) * factorial(b + d - 1),
        factorial(a + b + c + d - 1),
    )
    val = F((-1) ** comb(n + 1, 2)) * pref ** (n + 1)
    tot = a + b + c + d
    for l in range(1, n + 1):
        num = (
            l
            * (a + c + l - 1)
            * (b + c + l - 1)
            * (a + d + l - 1)
            * (b + d + l - 1)
            * (tot + l - 2)
        )
        den = (tot + 2 * l - 3) * (tot + 2 * l - 2) ** 2 * (tot + 2 * l - 1)
        val *= F(num, den) ** (n + 1 - l)
    return val


def fk_general(a: int, b: int, c: int, d: int, n: int) -> tuple[Fraction, Fraction]:
    """(brute-force Hankel determinant, closed form) for the umbral family."""
    from .hankel import HankelMatrix, det_gauss

    terms = tuple(fk_sequence_term(a, b, c, d, k) for k in range(2 * n + 1))
    lhs = det_gauss(HankelMatrix(terms).rows())[0]
    return lhs, fk_closed_form(a, b, c, d, n)
