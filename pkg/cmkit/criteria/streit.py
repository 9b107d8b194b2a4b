"""
Streit's test: for a quasiplatonic X with analytic character χ_a, ⟨S²χ_a, 1⟩_G = 0 implies that JX
has complex multiplication. A positive value decides nothing.
"""

import logging

from cmkit.core.characters import CharacterTable, inner_product, multiplicity_as_int, symmetric_square, trivial_character
from cmkit.core.errors import InvalidParameter
from cmkit.surfaces.chevalley_weil import analytic_character
from cmkit.surfaces.surface import QuasiplatonicSurface

logger = logging.getLogger(__name__)


def streit_test(X: QuasiplatonicSurface, T: CharacterTable) -> int:
    if X.genus < 1:
        raise InvalidParameter('Streit\'s test needs a surface of positive genus')

    key = ('streit', id(T))
    if key not in X.cache:
        chi = analytic_character(X, T)
        value = inner_product(symmetric_square(chi), trivial_character(X.group))
        X.cache[key] = multiplicity_as_int(value)
        logger.debug('Streit value of %r: %d', X, X.cache[key])
    return X.cache[key]
