"""
The analytic representation of G on the holomorphic differentials of X.

For every irreducible ρ the Chevalley-Weil formula counts how often ρ occurs:

    n_ρ = −d_ρ + [ρ trivial] + Σᵢ Σ_α N_{i,α} · frac(s·α/mᵢ)

where N_{i,α} is the multiplicity of exp(2πiα/mᵢ) as an eigenvalue of ρ(gᵢ) and s = −1 fixes the
orientation convention for the local monodromy.
"""

import logging
from fractions import Fraction
from typing import List

from cmkit.core.characters import Character, CharacterTable
from cmkit.core.errors import GroupMismatch, NonIntegralMultiplicity
from cmkit.surfaces.surface import QuasiplatonicSurface

logger = logging.getLogger(__name__)

ORIENTATION = -1


def _frac(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


def chevalley_weil_multiplicities(X: QuasiplatonicSurface, T: CharacterTable) -> List[int]:
    """
    Multiplicity of each irreducible of T (in table order) in the analytic representation of X.
    """
    if T.group is not X.group:
        raise GroupMismatch('character table belongs to a different group than the surface')

    key = ('chevalley_weil', id(T))
    if key in X.cache:
        return X.cache[key]

    vector = X.vector
    multiplicities = []
    for i, chi in enumerate(T):
        total = Fraction(-chi.degree) + (1 if i == 0 else 0)
        for g, m in zip(vector.indices, vector.periods):
            spectrum = T.eigenvalue_multiplicities(i, g)
            for alpha in range(1, m):
                if spectrum[alpha]:
                    total += spectrum[alpha] * _frac(Fraction(ORIENTATION * alpha, m))
        if total.denominator != 1 or total < 0:
            raise NonIntegralMultiplicity(f'irreducible {i} gets the multiplicity {total}')
        multiplicities.append(int(total))

    dimension = sum(n * d for n, d in zip(multiplicities, T.degrees))
    if dimension != X.genus:
        raise NonIntegralMultiplicity(f'analytic representation has dimension {dimension}, genus is {X.genus}')

    logger.debug('Chevalley-Weil multiplicities for %r: %s', X, multiplicities)
    X.cache[key] = multiplicities
    return multiplicities


def analytic_character(X: QuasiplatonicSurface, T: CharacterTable) -> Character:
    """
    The character of G on H⁰(X, Ω¹).
    """
    return T.combine(chevalley_weil_multiplicities(X, T))


def rational_character(X: QuasiplatonicSurface, T: CharacterTable) -> Character:
    """
    The character of G on H¹(X, Q) ⊗ C, the analytic character plus its conjugate.
    """
    chi = analytic_character(X, T)
    return chi + chi.conjugate()
