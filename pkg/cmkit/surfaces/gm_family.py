"""
The groups G_m = ⟨a, b, t : a² = b² = (ab)² = tᵐ = 1, tat⁻¹ = a, tbt⁻¹ = ab⟩ ≅ C₂² ⋊ C_m, m ≥ 6 even,
and the regular Belyi pairs they cover.

Elements are pairs (v, k) with v ∈ F₂² standing for a^v₀ b^v₁ and k ∈ Z/m standing for tᵏ, with
(v, k)(w, l) = (v + φᵏ(w), k + l) where φ(a) = a and φ(b) = ab. The group acts on its own 4m
elements by right multiplication, which is faithful and a homomorphism in sympy's convention.
"""

import logging
from typing import Dict, Optional, Tuple

from sympy.combinatorics import Permutation

from cmkit.core.errors import InvalidParameter, InvalidVector, VectorNotFound
from cmkit.core.groups import FiniteGroup, Subgroup
from cmkit.criteria.relations import IsogenyRelation
from cmkit.surfaces.surface import GeneratingVector, QuasiplatonicSurface, Signature, find_generating_vectors

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ('a', 'b', 't')

PROVENANCE = {
    2: 'JX ~ JY^2 with Y = X/<a> (m = 2 mod 4)',
    0: 'JX ~ JY x JZ^2 with Y = X/<a>, Z = X/<b> (m = 0 mod 4)',
}


def _phi(v: Tuple[int, int], k: int) -> Tuple[int, int]:
    if k % 2:
        return (v[0] ^ v[1], v[1])
    return v


def _point(v: Tuple[int, int], k: int) -> int:
    return 4 * k + v[0] + 2 * v[1]


def _right_multiplication(m: int, g: Tuple[Tuple[int, int], int]) -> Permutation:
    w, l = g
    images = [0] * (4 * m)
    for k in range(m):
        for v0 in (0, 1):
            for v1 in (0, 1):
                u = _phi(w, k)
                images[_point((v0, v1), k)] = _point((v0 ^ u[0], v1 ^ u[1]), (k + l) % m)
    return Permutation(images)


class GmInstance:

    """
    G_m as a permutation group with its distinguished generators and the values known for its surfaces.
    """

    def __init__(self, m: int, group: FiniteGroup, a: Permutation, b: Permutation, t: Permutation):
        self.m = m
        self.group = group
        self.a, self.b, self.t = a, b, t
        self._vector: Optional[GeneratingVector] = None

    @property
    def case(self) -> str:
        return 'A' if self.m % 4 == 2 else 'B'

    @property
    def expected(self) -> Dict:
        m = self.m
        if self.case == 'A':
            return {
                'genus': m - 2,
                'signature': [2, m, 2 * m],
                'g_Y': m // 2 - 1,
                'curves': {'Y': f'y^2 = x^{m} - 1'},
            }
        return {
            'genus': m - 3,
            'signature': [2, m, m],
            'g_Y': m // 2 - 1,
            'g_Z': m // 4 - 1,
            'curves': {'Y': f'y^2 = x^{m} - 1', 'Z': f'y^2 = x^{m // 2} - 1'},
        }

    def subgroup(self, *names: str) -> Subgroup:
        return self.group.subgroup([self.group.evaluate_word(name) for name in names])

    def surface(self) -> QuasiplatonicSurface:
        return QuasiplatonicSurface(canonical_vector(self))

    def __repr__(self):
        return f'GmInstance(m={self.m})'


def _check_relations(G: FiniteGroup, m: int):
    a, b, t = G.generator_indices
    ab = G.mul(a, b)
    t_inv = G.inv(t)
    for name, i, k in (('a', a, 2), ('b', b, 2), ('ab', ab, 2), ('t', t, m)):
        if G.order_of(i) != k:
            raise InvalidParameter(f'{name} has order {G.order_of(i)} instead of {k} in G_{m}')
    if G.product((t, a, t_inv)) != a or G.product((t, b, t_inv)) != ab:
        raise InvalidParameter(f'conjugation by t does not act as a ↦ a, b ↦ ab in G_{m}')


def build_gm(m: int) -> GmInstance:
    """
    G_m for an even m ≥ 6, with its defining relations checked.
    """
    if not isinstance(m, int) or m < 6 or m % 2:
        raise InvalidParameter(f'G_m needs an even m >= 6, got {m}')

    gens = [
        _right_multiplication(m, ((1, 0), 0)),
        _right_multiplication(m, ((0, 1), 0)),
        _right_multiplication(m, ((0, 0), 1)),
    ]
    G = FiniteGroup.from_generators(4 * m, gens, generator_names=GENERATOR_NAMES)
    if G.order != 4 * m:
        raise InvalidParameter(f'G_{m} came out with order {G.order}')
    _check_relations(G, m)

    logger.debug('built G_%d of order %d', m, G.order)
    return GmInstance(m, G, *gens)


def canonical_vector(inst: GmInstance) -> GeneratingVector:
    """
    (b, t, (bt)⁻¹) with periods (2, m, 2m) when m ≡ 2 mod 4, and (ab, t, (abt)⁻¹) with periods
    (2, m, m) when m ≡ 0 mod 4.

    The signature is also searched for independently, so a missing cover is reported as an error.
    """
    if inst._vector is not None:
        return inst._vector

    G, m = inst.group, inst.m
    if inst.case == 'A':
        first, periods = 'b', (2, m, 2 * m)
    else:
        first, periods = 'a*b', (2, m, m)

    if not find_generating_vectors(G, Signature(periods), limit=1):
        raise VectorNotFound(f'G_{m} has no generating vector of signature {periods}')

    x = G.evaluate_word(first)
    t = G.evaluate_word('t')
    try:
        vector = GeneratingVector(G, [x, t, (x * t) ** -1])
    except InvalidVector as exc:
        raise VectorNotFound(f'the witness vector of G_{m} is not valid: {exc}')
    if tuple(sorted(vector.periods)) != periods:
        raise VectorNotFound(f'the witness vector of G_{m} has periods {vector.periods}, not {periods}')

    inst._vector = vector
    return vector


def known_subgroup_collection(inst: GmInstance) -> IsogenyRelation:
    """
    The subgroups in the known decompositions JX ~ JY² (m ≡ 2 mod 4) and JX ~ JY × JZ² (m ≡ 0 mod 4).
    """
    a = inst.subgroup('a')
    if inst.case == 'A':
        return IsogenyRelation(1, [(a, 2)], provenance=PROVENANCE[2])
    return IsogenyRelation(1, [(a, 1), (inst.subgroup('b'), 2)], provenance=PROVENANCE[0])
