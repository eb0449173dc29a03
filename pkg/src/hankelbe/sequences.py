"""Exact generators for Bernoulli/Euler-type moment sequences.

Every sequence the determinant layer consumes is described by a
:class:`SequenceSpec`: a base family (Bernoulli numbers, Euler polynomials,
difference families, power sums, ...) combined with purely declarative
transforms (an affine index map k -> a*k + b, an optional k-dependent
multiplier, an optional argument substitution or evaluation point, and an
optional list of prepended terms).  ``resolve(spec, k)`` produces the k-th
term, either a ``Fraction`` or a ``UniPoly``; all terms of one spec share a
single kind.

Spec names form a flat ASCII grammar (see README): base families are written
the way the sequences are usually displayed, e.g. ``B_k``, ``E_2k+1(1)``,
``(2k+1)E_2k``, ``B_k/k!``, ``B_2k+1((x+1)/2)``, ``kE_{k-1}``; parameterized
families are spelled ``diffB(q=2,r=0,s=1)``, ``sumE(q=4,r=1,s=3)``,
``S(s=2)``, ``T(s=3)``, ``charB(chi3)`` and ``charBnorm(8,1)``.  A trailing
``@x0`` with a rational x0 evaluates a polynomial family at a point.

Number caches behave as write-once tables: entries are only ever appended,
never mutated, so concurrent readers are safe under the GIL.  They can be
dumped to / loaded from a plain-text cache directory (one ``n value`` line
per entry) for reuse across runs.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Union

from .characters import BUILTIN_CHARACTERS, DirichletCharacter
from .poly import UniPoly, rat_from_str, rat_to_str

Term = Union[Fraction, UniPoly]


class InvalidParametersError(ValueError):
    """A sequence was requested with parameters outside its domain."""


# ----------------------------------------------------------------------
# Base number generators (memoized, write-once caches).
# ----------------------------------------------------------------------

_BERNOULLI: list[Fraction] = [Fraction(1)]
_EULER: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B_n, by the recurrence sum_{j<=n} C(n+1, j) B_j = 0 with B_0 = 1."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def euler_number(n: int) -> Fraction:
    """E_n; zero for odd n, even values by sum_{k<=m} C(2m, 2k) E_2k = 0."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    while len(_EULER) <= m:
        mm = len(_EULER)
        acc = Fraction(0)
        for k in range(mm):
            acc += comb(2 * mm, 2 * k) * _EULER[k]
        _EULER.append(-acc)
    return _EULER[m]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> UniPoly:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * bernoulli_number(j)
    return UniPoly(coeffs)


@lru_cache(maxsize=None)
def euler_poly(n: int) -> UniPoly:
    """E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^(n-j)."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * euler_number(j) / 2**j
    return UniPoly(coeffs).affine_substitute(1, Fraction(-1, 2))


def gen_bernoulli_poly(n: int, chi: DirichletCharacter) -> UniPoly:
    """Generalized Bernoulli polynomial: q^(n-1) sum_a chi(a) B_n((a+x)/q)."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    q = chi.modulus
    total = UniPoly.zero()
    base = bernoulli_poly(n)
    for a in range(1, q + 1):
        v = chi(a)
        if v == 0:
            continue
        total = total + v * base.affine_substitute(Fraction(1, q), Fraction(a, q))
    return total * Fraction(q) ** (n - 1)


def gen_bernoulli_number(n: int, chi: DirichletCharacter) -> Fraction:
    return gen_bernoulli_poly(n, chi).eval(0)


def _check_qrs(q: int, r: int, s: int) -> None:
    if q < 1 or not (0 <= r < s):
        raise InvalidParametersError(f"need q >= 1 and 0 <= r < s, got {(q, r, s)}")


def bern_diff_sum_term(q: int, r: int, s: int, sign: str, k: int) -> UniPoly:
    """B_k((x+r)/q) +- B_k((x+s)/q)."""
    _check_qrs(q, r, s)
    base = bernoulli_poly(k)
    first = base.affine_substitute(Fraction(1, q), Fraction(r, q))
    second = base.affine_substitute(Fraction(1, q), Fraction(s, q))
    return first + second if sign == "+" else first - second


def euler_diff_sum_term(q: int, r: int, s: int, sign: str, k: int) -> UniPoly:
    """E_k((x+r)/q) +- E_k((x+s)/q)."""
    _check_qrs(q, r, s)
    base = euler_poly(k)
    first = base.affine_substitute(Fraction(1, q), Fraction(r, q))
    second = base.affine_substitute(Fraction(1, q), Fraction(s, q))
    return first + second if sign == "+" else first - second


def power_sum(s: int, k: int) -> Fraction:
    """S_k(s) = k * (1^(k-1) + 2^(k-1) + ... + s^(k-1)); S_0 = 0."""
    if s < 1:
        raise InvalidParametersError("s must be >= 1")
    if k == 0:
        return Fraction(0)
    return Fraction(k * sum(i ** (k - 1) for i in range(1, s + 1)))


def alt_power_sum(s: int, k: int) -> Fraction:
    """T_k(s) = 1 - 2^k + 3^k - ... + (-1)^(s-1) s^k."""
    if s < 1:
        raise InvalidParametersError("s must be >= 1")
    return Fraction(sum((-1) ** (i - 1) * i**k for i in range(1, s + 1)))


def zigzag_number(n: int) -> Fraction:
    """Up/down numbers 1, 1, 1, 2, 5, 16, 61, ... (secant/tangent numbers)."""
    if n < 0:
        raise InvalidParametersError("n must be nonnegative")
    if n % 2 == 0:
        k = n // 2
        return (-1) ** k * euler_number(n)
    k = (n - 1) // 2
    return (-1) ** k * Fraction(2) ** n * euler_poly(n).eval(1)


def tangent_number(k: int) -> Fraction:
    """Tangent numbers 1, 2, 16, 272, ...

    Computed as (-1)^(k-1) 2^(2k) (2^(2k) - 1) B_2k / (2k); equal to
    (-1)^(k-1) 2^(2k-1) E_(2k-1)(1) and to the odd-index zigzag numbers.
    """
    if k < 1:
        raise InvalidParametersError("k must be >= 1")
    tk = (-1) ** (k - 1) * Fraction(2) ** (2 * k) * (2 ** (2 * k) - 1)
    return tk * bernoulli_number(2 * k) / (2 * k)


# ----------------------------------------------------------------------
# Declarative sequence transforms.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Multiplier:
    """A k-dependent scalar multiplier, stored as data.

    kinds: ``affine`` a*k+b; ``inv_affine`` 1/(a*k+b); ``geometric`` b*a^k;
    ``pow2_minus_1`` 2^(a*k+b) - 1; ``inv_factorial`` 1/(a*k+b)!.
    """

    kind: str
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)

    def value(self, k: int) -> Fraction:
        a, b = self.a, self.b
        if self.kind == "affine":
            return a * k + b
        if self.kind == "inv_affine":
            return 1 / (a * k + b)
        if self.kind == "geometric":
            return b * a**k
        if self.kind == "pow2_minus_1":
            e = a * k + b
            if e.denominator != 1:
                raise InvalidParametersError("2^e - 1 needs an integer exponent")
            return Fraction(2) ** int(e) - 1
        if self.kind == "inv_factorial":
            e = a * k + b
            if e.denominator != 1 or e < 0:
                raise InvalidParametersError("factorial index must be a nonnegative integer")
            return Fraction(1, factorial(int(e)))
        raise InvalidParametersError(f"unknown multiplier kind {self.kind!r}")

    def shifted(self) -> "Multiplier":
        """The multiplier of k+1 as a multiplier of k."""
        if self.kind == "geometric":
            return replace(self, b=self.b * self.a)
        return replace(self, b=self.b + self.a)


def affine_mult(a, b) -> Multiplier:
    return Multiplier("affine", Fraction(a), Fraction(b))


def inv_affine_mult(a, b) -> Multiplier:
    return Multiplier("inv_affine", Fraction(a), Fraction(b))


def inv_factorial_mult(a, b) -> Multiplier:
    return Multiplier("inv_factorial", Fraction(a), Fraction(b))


def pow2m1_mult(a, b) -> Multiplier:
    return Multiplier("pow2_minus_1", Fraction(a), Fraction(b))


_POLY_FAMILIES = {"bernoulli_poly", "euler_poly", "bern_diff_sum", "euler_diff_sum", "gen_bernoulli"}
_FAMILIES = _POLY_FAMILIES | {
    "bernoulli_number",
    "euler_number",
    "power_sum",
    "alt_power_sum",
    "zigzag",
}


@dataclass(frozen=True)
class SequenceSpec:
    """A named, fully parameterized moment sequence."""

    name: str
    family: str
    q: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    sign: Optional[str] = None
    character: Optional[DirichletCharacter] = None
    subst: Optional[tuple[Fraction, Fraction]] = None
    at: Optional[Fraction] = None
    index_a: int = 1
    index_b: int = 0
    multiplier: Optional[Multiplier] = None
    prepend: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidParametersError(f"unknown family {self.family!r}")
        if self.index_a < 1 or self.index_b < 0:
            raise InvalidParametersError("index map needs a >= 1 and b >= 0")
        if self.family in ("bern_diff_sum", "euler_diff_sum"):
            _check_qrs(self.q, self.r, self.s)
            if self.sign not in ("+", "-"):
                raise InvalidParametersError("sign must be '+' or '-'")
        if self.family in ("power_sum", "alt_power_sum") and (self.s is None or self.s < 1):
            raise InvalidParametersError("power sums need s >= 1")
        if self.family == "gen_bernoulli" and self.character is None:
            raise InvalidParametersError("gen_bernoulli needs a character")

    @property
    def term_kind(self) -> str:
        if self.family in _POLY_FAMILIES and self.at is None:
            return "poly"
        return "rational"

    def shifted(self) -> "SequenceSpec":
        """The spec resolving to c_{k+1} where this spec resolves to c_k."""
        if self.prepend:
            return replace(self, name=f"shift({self.name})", prepend=self.prepend[1:])
        mult = self.multiplier.shifted() if self.multiplier else None
        return replace(
            self,
            name=f"shift({self.name})",
            index_b=self.index_b + self.index_a,
            multiplier=mult,
        )

    def evaluated_at(self, x0) -> "SequenceSpec":
        if self.term_kind != "poly":
            raise InvalidParametersError(f"{self.name} is not polynomial-valued")
        x0 = Fraction(x0)
        return replace(self, name=f"{self.name}@{x0}", at=x0)


def _base_term(spec: SequenceSpec, j: int) -> Term:
    fam = spec.family
    if fam == "bernoulli_number":
        return bernoulli_number(j)
    if fam == "euler_number":
        return euler_number(j)
    if fam == "power_sum":
        return power_sum(spec.s, j)
    if fam == "alt_power_sum":
        return alt_power_sum(spec.s, j)
    if fam == "zigzag":
        return zigzag_number(j)
    if fam == "bernoulli_poly":
        p = bernoulli_poly(j)
    elif fam == "euler_poly":
        p = euler_poly(j)
    elif fam == "bern_diff_sum":
        p = bern_diff_sum_term(spec.q, spec.r, spec.s, spec.sign, j)
    elif fam == "euler_diff_sum":
        p = euler_diff_sum_term(spec.q, spec.r, spec.s, spec.sign, j)
    else:
        p = gen_bernoulli_poly(j, spec.character)
    if spec.subst is not None:
        p = p.affine_substitute(*spec.subst)
    if spec.at is not None:
        return p.eval(spec.at)
    return p


@lru_cache(maxsize=None)
def resolve(spec: SequenceSpec, k: int) -> Term:
    """The k-th term of the fully transformed sequence."""
    if k < 0:
        raise InvalidParametersError("k must be nonnegative")
    poly_valued = spec.term_kind == "poly"
    if k < len(spec.prepend):
        v = spec.prepend[k]
        return UniPoly.constant(v) if poly_valued else Fraction(v)
    kk = k - len(spec.prepend)
    term = _base_term(spec, spec.index_a * kk + spec.index_b)
    if spec.multiplier is not None:
        term = term * spec.multiplier.value(kk)
    if poly_valued and not isinstance(term, UniPoly):
        term = UniPoly.constant(term)
    return term


# ----------------------------------------------------------------------
# Named built-in specs and the name grammar.
# ----------------------------------------------------------------------


def _spec(name, family, **kw) -> SequenceSpec:
    return SequenceSpec(name=name, family=family, **kw)


_HALF_SHIFT = (Fraction(1, 2), Fraction(1, 2))  # x -> (x+1)/2


def bern_diff_sum(q: int, r: int, s: int, sign: str) -> SequenceSpec:
    """The family b_k^{sign}(q,r,s;x) as a resolvable spec."""
    tag = "sumB" if sign == "+" else "diffB"
    return _spec(f"{tag}(q={q},r={r},s={s})", "bern_diff_sum", q=q, r=r, s=s, sign=sign)


def euler_diff_sum(q: int, r: int, s: int, sign: str) -> SequenceSpec:
    """The family e_k^{sign}(q,r,s;x) as a resolvable spec."""
    tag = "sumE" if sign == "+" else "diffE"
    return _spec(f"{tag}(q={q},r={r},s={s})", "euler_diff_sum", q=q, r=r, s=s, sign=sign)


def power_sum_seq(s: int) -> SequenceSpec:
    return _spec(f"S(s={s})", "power_sum", s=s)


def alt_power_sum_seq(s: int) -> SequenceSpec:
    return _spec(f"T(s={s})", "alt_power_sum", s=s)


def char_bernoulli_seq(chi: DirichletCharacter) -> SequenceSpec:
    """B_{k,chi}: generalized Bernoulli numbers of chi."""
    return _spec(f"charB({chi.label})", "gen_bernoulli", character=chi, at=Fraction(0))


def char_bernoulli_norm_seq(modulus: int, which: int) -> SequenceSpec:
    """B_{k+1,chi}(x)/(k+1) for chi one of the modulo-8/12 characters."""
    try:
        chi = BUILTIN_CHARACTERS[f"chi{modulus}_{which}"]
    except KeyError:
        raise InvalidParametersError(f"no built-in character chi{modulus}_{which}")
    return _spec(
        f"charBnorm({modulus},{which})",
        "gen_bernoulli",
        character=chi,
        index_b=1,
        multiplier=inv_affine_mult(1, 1),
    )


def _builtin_specs() -> dict[str, SequenceSpec]:
    F = Fraction
    half = F(1, 2)
    specs = [
        # plain number families and their index-mapped variants
        _spec("B_k", "bernoulli_number"),
        _spec("B_k+1", "bernoulli_number", index_b=1),
        _spec("B_k+2", "bernoulli_number", index_b=2),
        _spec("B_2k", "bernoulli_number", index_a=2),
        _spec("B_2k+1", "bernoulli_number", index_a=2, index_b=1),
        _spec("B_2k+2", "bernoulli_number", index_a=2, index_b=2),
        _spec("B_2k+4", "bernoulli_number", index_a=2, index_b=4),
        _spec("E_k", "euler_number"),
        _spec("E_k+1", "euler_number", index_b=1),
        _spec("E_k+2", "euler_number", index_b=2),
        _spec("E_2k", "euler_number", index_a=2),
        _spec("E_2k+1", "euler_number", index_a=2, index_b=1),
        _spec("E_2k+2", "euler_number", index_a=2, index_b=2),
        _spec("E_2k+3", "euler_number", index_a=2, index_b=3),
        # evaluated polynomial families
        _spec("B_2k(1/2)", "bernoulli_poly", index_a=2, at=half),
        _spec("B_2k+1(3/4)", "bernoulli_poly", index_a=2, index_b=1, at=F(3, 4)),
        _spec("B_k+2(-1)", "bernoulli_poly", index_b=2, at=F(-1)),
        _spec("E_k+1(1)", "euler_poly", index_b=1, at=F(1)),
        _spec("E_k+2(1)", "euler_poly", index_b=2, at=F(1)),
        _spec("E_2k+1(1)", "euler_poly", index_a=2, index_b=1, at=F(1)),
        _spec("E_2k+3(1)", "euler_poly", index_a=2, index_b=3, at=F(1)),
        # multiplier-dressed families
        _spec("(2^{2k+2}-1)B_2k+2", "bernoulli_number", index_a=2, index_b=2,
              multiplier=pow2m1_mult(2, 2)),
        _spec("(2k+1)B_2k(1/2)", "bernoulli_poly", index_a=2, at=half,
              multiplier=affine_mult(2, 1)),
        _spec("(2k+3)B_2k+2", "bernoulli_number", index_a=2, index_b=2,
              multiplier=affine_mult(2, 3)),
        _spec("(2k+1)E_2k", "euler_number", index_a=2, multiplier=affine_mult(2, 1)),
        _spec("(2k+2)E_2k+1(1)", "euler_poly", index_a=2, index_b=1, at=F(1),
              multiplier=affine_mult(2, 2)),
        _spec("kE_{k-1}", "euler_number", multiplier=affine_mult(1, 1), prepend=(F(0),)),
        _spec("kE_{k-1}(x)", "euler_poly", multiplier=affine_mult(1, 1), prepend=(F(0),)),
        # factorial-normalized families
        _spec("B_k/k!", "bernoulli_number", multiplier=inv_factorial_mult(1, 0)),
        _spec("B_2k+2/(2k+2)!", "bernoulli_number", index_a=2, index_b=2,
              multiplier=inv_factorial_mult(2, 2)),
        _spec("B_2k+4/(2k+4)!", "bernoulli_number", index_a=2, index_b=4,
              multiplier=inv_factorial_mult(2, 4)),
        _spec("B_2k+6/(2k+6)!", "bernoulli_number", index_a=2, index_b=6,
              multiplier=inv_factorial_mult(2, 6)),
        _spec("E_k+1(1)/(k+1)!", "euler_poly", index_b=1, at=F(1),
              multiplier=inv_factorial_mult(1, 1)),
        _spec("E_k+2(1)/(k+2)!", "euler_poly", index_b=2, at=F(1),
              multiplier=inv_factorial_mult(1, 2)),
        _spec("E_k+3(1)/(k+3)!", "euler_poly", index_b=3, at=F(1),
              multiplier=inv_factorial_mult(1, 3)),
        _spec("E_2k+1(1)/(2k+1)!", "euler_poly", index_a=2, index_b=1, at=F(1),
              multiplier=inv_factorial_mult(2, 1)),
        _spec("E_2k+3(1)/(2k+3)!", "euler_poly", index_a=2, index_b=3, at=F(1),
              multiplier=inv_factorial_mult(2, 3)),
        _spec("E_2k+5(1)/(2k+5)!", "euler_poly", index_a=2, index_b=5, at=F(1),
              multiplier=inv_factorial_mult(2, 5)),
        _spec("E_2k+7(1)/(2k+7)!", "euler_poly", index_a=2, index_b=7, at=F(1),
              multiplier=inv_factorial_mult(2, 7)),
        # sequences with a prepended zero
        _spec("(0,E_k(1))", "euler_poly", index_b=1, at=F(1), prepend=(F(0),)),
        _spec("(0,E_k(1)/k!)", "euler_poly", index_b=1, at=F(1), prepend=(F(0),),
              multiplier=inv_factorial_mult(1, 1)),
        # symbolic polynomial families
        _spec("B_k(x)", "bernoulli_poly"),
        _spec("E_k(x)", "euler_poly"),
        _spec("B_2k+1((x+1)/2)", "bernoulli_poly", index_a=2, index_b=1, subst=_HALF_SHIFT),
        _spec("B_2k+3((x+1)/2)", "bernoulli_poly", index_a=2, index_b=3, subst=_HALF_SHIFT),
        _spec("E_2k((x+1)/2)", "euler_poly", index_a=2, subst=_HALF_SHIFT),
        _spec("E_2k+1((x+1)/2)", "euler_poly", index_a=2, index_b=1, subst=_HALF_SHIFT),
        _spec("E_2k+2((x+1)/2)", "euler_poly", index_a=2, index_b=2, subst=_HALF_SHIFT),
        # zigzag numbers
        _spec("zigzag", "zigzag"),
    ]
    return {sp.name: sp for sp in specs}


BUILTIN_SPECS: dict[str, SequenceSpec] = _builtin_specs()

_ALIASES: dict[str, str] = {}
for _name in BUILTIN_SPECS:
    _flat = _name.replace("{", "").replace("}", "")
    if _flat != _name:
        _ALIASES[_flat] = _name

_PARAM_RE = re.compile(
    r"^(diffB|sumB|diffE|sumE)\(q=(-?\d+),r=(-?\d+),s=(-?\d+)\)$"
)
_PSUM_RE = re.compile(r"^(S|T)\(s=(-?\d+)\)$")
_CHARB_RE = re.compile(r"^charB\((\w+)\)$")
_CHARBN_RE = re.compile(r"^charBnorm\((\d+),(\d+)\)$")


def get_spec(name: str) -> SequenceSpec:
    """Look up a built-in spec or construct a parameterized one by name."""
    name = name.strip()
    at = None
    if "@" in name:
        name, at_str = name.rsplit("@", 1)
        at = rat_from_str(at_str)
    spec = BUILTIN_SPECS.get(name) or BUILTIN_SPECS.get(_ALIASES.get(name, ""))
    if spec is None:
        m = _PARAM_RE.match(name)
        if m:
            tag, q, r, s = m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4))
            sign = "+" if tag.startswith("sum") else "-"
            maker = bern_diff_sum if tag.endswith("B") else euler_diff_sum
            spec = maker(q, r, s, sign)
        elif m := _PSUM_RE.match(name):
            spec = (power_sum_seq if m.group(1) == "S" else alt_power_sum_seq)(int(m.group(2)))
        elif m := _CHARB_RE.match(name):
            try:
                chi = BUILTIN_CHARACTERS[m.group(1)]
            except KeyError:
                raise InvalidParametersError(f"unknown character {m.group(1)!r}")
            spec = char_bernoulli_seq(chi)
        elif m := _CHARBN_RE.match(name):
            spec = char_bernoulli_norm_seq(int(m.group(1)), int(m.group(2)))
        else:
            raise InvalidParametersError(f"unknown sequence name {name!r}")
    if at is not None:
        spec = spec.evaluated_at(at)
    return spec


def catalog() -> list[dict]:
    """Machine-readable description of every built-in spec."""
    out = []
    for name, sp in sorted(BUILTIN_SPECS.items()):
        entry = {
            "name": name,
            "family": sp.family,
            "kind": sp.term_kind,
            "index_map": f"{sp.index_a}k+{sp.index_b}",
        }
        if sp.q is not None:
            entry["q"], entry["r"], entry["s"] = sp.q, sp.r, sp.s
        if sp.sign:
            entry["sign"] = sp.sign
        if sp.character is not None:
            entry["character"] = sp.character.label
        if sp.at is not None:
            entry["at"] = rat_to_str(sp.at)
        if sp.subst is not None:
            entry["subst"] = [rat_to_str(sp.subst[0]), rat_to_str(sp.subst[1])]
        if sp.multiplier is not None:
            entry["multiplier"] = {
                "kind": sp.multiplier.kind,
                "a": rat_to_str(sp.multiplier.a),
                "b": rat_to_str(sp.multiplier.b),
            }
        if sp.prepend:
            entry["prepend"] = [rat_to_str(v) for v in sp.prepend]
        out.append(entry)
    out.append({"name": "diffB(q=..,r=..,s=..)", "family": "bern_diff_sum", "kind": "poly",
                "note": "parameterized; also sumB, diffE, sumE"})
    out.append({"name": "S(s=..)", "family": "power_sum", "kind": "rational",
                "note": "parameterized; also T(s=..)"})
    out.append({"name": "charB(<chi>)", "family": "gen_bernoulli", "kind": "rational",
                "note": "parameterized; also charBnorm(8|12,1|2)"})
    return out


# ----------------------------------------------------------------------
# Optional plain-text cache for the memoized number tables.
# ----------------------------------------------------------------------

CACHE_ENV_VAR = "HANKELBE_CACHE_DIR"


def load_number_caches(directory: str) -> None:
    for fname, table in (("bernoulli.txt", _BERNOULLI), ("euler_even.txt", _EULER)):
        path = os.path.join(directory, fname)
        if not os.path.exists(path):
            continue
        entries = {}
        with open(path, encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                idx, val = line.split()
                entries[int(idx)] = rat_from_str(val)
        # extend the write-once table only with a contiguous prefix
        n = len(table)
        while n in entries:
            table.append(entries[n])
            n += 1


def save_number_caches(directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    for fname, table in (("bernoulli.txt", _BERNOULLI), ("euler_even.txt", _EULER)):
        with open(os.path.join(directory, fname), "w", encoding="ascii") as fh:
            for i, v in enumerate(table):
                fh.write(f"{i} {rat_to_str(v)}\n")
