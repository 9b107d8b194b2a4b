from functools import lru_cache

import pytest

from cmkit.core.characters import character_table
from cmkit.core.groups import FiniteGroup
from cmkit.surfaces.gm_family import build_gm
from cmkit.surfaces.surface import GeneratingVector, QuasiplatonicSurface


@lru_cache(maxsize=None)
def gm_instance(m):
    return build_gm(m)


@lru_cache(maxsize=None)
def gm_surface(m):
    return gm_instance(m).surface()


def gm_table(m):
    return character_table(gm_instance(m).group)


@pytest.fixture(scope='session')
def gm():
    """
    (instance, surface, table) for G_m, built once per m for the whole session.
    """
    def get(m):
        return gm_instance(m), gm_surface(m), gm_table(m)

    return get


@pytest.fixture(scope='session')
def klein():
    return FiniteGroup.from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]])


@pytest.fixture(scope='session')
def s3():
    return FiniteGroup.from_generators(3, [[1, 0, 2], [1, 2, 0]])


@pytest.fixture(scope='session')
def c6():
    return FiniteGroup.from_generators(6, [[1, 2, 3, 4, 5, 0]])


@pytest.fixture(scope='session')
def c6_surface(c6):
    """
    Genus 2 with C₆ acting over four branch values marked (2, 2, 3, 3).
    """
    c = c6.generators[0]
    return QuasiplatonicSurface(GeneratingVector(c6, [c ** 3, c ** 3, c ** 2, c ** 4]))


@pytest.fixture(scope='session')
def hyperelliptic():
    """
    y² = f(x) with deg f = 2g + 2, as C₂ acting over 2g + 2 branch values.
    """
    def build(genus):
        G = FiniteGroup.from_generators(2, [[1, 0]])
        s = G.generators[0]
        return QuasiplatonicSurface(GeneratingVector(G, [s] * (2 * genus + 2)))

    return build


@pytest.fixture(scope='session')
def klein_genus3(klein):
    """
    Genus 3 with C₂ × C₂ acting over six branch values, a family without complex multiplication.
    """
    a, b = klein.generators
    return QuasiplatonicSurface(GeneratingVector(klein, [a, a, b, b, a * b, a * b]))
