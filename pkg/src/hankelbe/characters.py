"""Real Dirichlet characters stored as explicit value tables.

Only values in {-1, 0, +1} are supported, which covers every character this
package needs: the trivial character, the quadratic characters of conductor
3, 4 and 6, the two characters modulo 8, and the two modulo 12.  Arbitrary
user tables may be supplied as long as they pass the invariants (zero off the
units, completely multiplicative on the units).

``chi12_2`` deserves a note.  Its table here is (1, 1, -1, -1) on the
residues (1, 5, 7, 11), which is the character induced by the conductor-4
character; it is imprimitive and is flagged as such.  The conductor-3
character is available separately as ``chi3``.  This package always applies
the defining sum for generalized Bernoulli polynomials with q equal to the
stored modulus, which is exactly what the modulo-8/12 determinant identities
use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True)
class DirichletCharacter:
    """A completely multiplicative periodic map Z -> {-1, 0, +1}.

    ``values[i]`` is the value at residue i+1, so the last entry is the value
    at residue 0 (always 0 for modulus > 1).
    """

    modulus: int
    values: tuple[int, ...]
    label: str
    primitive: bool = field(default=True, compare=False)

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise ValueError("modulus must be positive")
        if len(self.values) != m:
            raise ValueError(f"need {m} values, got {len(self.values)}")
        if any(v not in (-1, 0, 1) for v in self.values):
            raise ValueError("character values must lie in {-1, 0, +1}")
        for a in range(1, m + 1):
            if gcd(a, m) > 1 and self.values[a - 1] != 0:
                raise ValueError(f"value at non-unit residue {a} must be 0")
            if gcd(a, m) == 1 and self.values[a - 1] == 0:
                raise ValueError(f"value at unit residue {a} must be nonzero")
        units = [a for a in range(1, m + 1) if gcd(a, m) == 1]
        for a in units:
            for b in units:
                lhs = self(a * b)
                if lhs != self(a) * self(b):
                    raise ValueError(
                        f"not multiplicative at ({a}, {b}) for {self.label}"
                    )

    def __call__(self, a: int) -> int:
        r = a % self.modulus
        if r == 0:
            r = self.modulus
        return self.values[r - 1]


def _chi(modulus: int, nonzero: dict[int, int], label: str, primitive: bool = True):
    values = [0] * modulus
    for residue, v in nonzero.items():
        values[residue - 1] = v
    return DirichletCharacter(modulus, tuple(values), label, primitive)


chi0 = DirichletCharacter(1, (1,), "chi0")
chi3 = _chi(3, {1: 1, 2: -1}, "chi3")
chi4 = _chi(4, {1: 1, 3: -1}, "chi4")
chi6 = _chi(6, {1: 1, 5: -1}, "chi6")
chi8_1 = _chi(8, {1: 1, 3: -1, 5: -1, 7: 1}, "chi8_1")
chi8_2 = _chi(8, {1: 1, 3: 1, 5: -1, 7: -1}, "chi8_2")
chi12_1 = _chi(12, {1: 1, 5: -1, 7: -1, 11: 1}, "chi12_1")
chi12_2 = _chi(12, {1: 1, 5: 1, 7: -1, 11: -1}, "chi12_2", primitive=False)

BUILTIN_CHARACTERS: dict[str, DirichletCharacter] = {
    c.label: c
    for c in (chi0, chi3, chi4, chi6, chi8_1, chi8_2, chi12_1, chi12_2)
}
