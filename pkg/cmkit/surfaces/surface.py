"""
Compact Riemann surfaces given by a finite group and a generating vector.

A generating vector (g₁, …, g_r) with g₁⋯g_r = 1 that generates G describes a Galois cover
X → P¹ branched over r points, the local monodromy at the i-th point being gᵢ. Everything about
intermediate covers X/H → P¹ is read off the action of the gᵢ on the cosets of H.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from cmkit.core.errors import (InconsistentRamification, InvalidSignature, InvalidVector, NegativeGenus,
                               NonIntegerGenus, NotNormalInN, SubgroupMismatch)
from cmkit.core.groups import CosetAction, FiniteGroup, Subgroup, coset_action, conjugacy_classes

logger = logging.getLogger(__name__)


class Signature:

    """
    Orbit genus and sorted branch orders (periods) of a Galois cover.
    """

    def __init__(self, periods: Sequence[int], orbit_genus: int = 0):
        periods = tuple(sorted(int(m) for m in periods))
        if any(m < 2 for m in periods):
            raise InvalidSignature(f'periods must be at least 2, got {periods}')
        if orbit_genus < 0:
            raise InvalidSignature(f'orbit genus must be non-negative, got {orbit_genus}')
        self.periods: Tuple[int, ...] = periods
        self.orbit_genus = orbit_genus

    @property
    def is_hyperbolic(self) -> bool:
        return 2 * self.orbit_genus - 2 + sum(1 - Fraction(1, m) for m in self.periods) > 0

    @property
    def is_triangle(self) -> bool:
        return self.orbit_genus == 0 and len(self.periods) == 3

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.orbit_genus, self.periods) == (other.orbit_genus, other.periods)

    def __hash__(self):
        return hash((self.orbit_genus, self.periods))

    def __repr__(self):
        return f'Signature({self.orbit_genus}; {", ".join(str(m) for m in self.periods)})'


class GeneratingVector:

    """
    A tuple of group elements with product one that generates the group.
    """

    def __init__(self, group: FiniteGroup, entries: Sequence[Permutation]):
        self.group = group
        self.indices: Tuple[int, ...] = tuple(group.index(g) for g in entries)

        if group.product(self.indices) != group.identity_index:
            raise InvalidVector('the entries of a generating vector must multiply to the identity')
        if len(group.closure(self.indices)) != group.order:
            raise InvalidVector('the entries of a generating vector must generate the group')
        if any(p < 2 for p in self.periods):
            raise InvalidVector('entries of a generating vector cannot be the identity')

    @classmethod
    def from_indices(cls, group: FiniteGroup, indices: Sequence[int]) -> 'GeneratingVector':
        return cls(group, [group.element(i) for i in indices])

    @property
    def entries(self) -> List[Permutation]:
        return [self.group.element(i) for i in self.indices]

    @property
    def periods(self) -> Tuple[int, ...]:
        return tuple(self.group.order_of(i) for i in self.indices)

    @property
    def signature(self) -> Signature:
        return Signature(self.periods)

    @property
    def is_belyi(self) -> bool:
        return len(self.indices) <= 3

    def conjugate(self, g) -> 'GeneratingVector':
        """
        The vector (g⁻¹g₁g, …, g⁻¹g_rg), which describes the same surface.
        """
        G = self.group
        gi = g if isinstance(g, int) else G.index(g)
        return GeneratingVector.from_indices(G, [G.conjugate(i, gi) for i in self.indices])

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        if not isinstance(other, GeneratingVector):
            return NotImplemented
        return self.group is other.group and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f'GeneratingVector(periods={self.periods})'


def riemann_hurwitz_genus(order: int, periods: Sequence[int], orbit_genus: int = 0) -> int:
    """
    Genus g of a Galois cover with the given group order and signature:
    2g − 2 = |G| (2γ − 2 + Σ (1 − 1/mᵢ)).
    """
    twice_euler = order * (2 * orbit_genus - 2 + sum((1 - Fraction(1, m) for m in periods), Fraction(0)))
    genus = 1 + twice_euler / 2
    if genus.denominator != 1:
        raise NonIntegerGenus(f'Riemann-Hurwitz gives the non-integral genus {genus}')
    if genus < 0:
        raise NegativeGenus(f'Riemann-Hurwitz gives the negative genus {genus}')
    return int(genus)


def genus_from_vector(v: GeneratingVector) -> int:
    return riemann_hurwitz_genus(v.group.order, v.periods)


class QuasiplatonicSurface:

    """
    The surface X described by a generating vector, with its genus and signature.
    """

    def __init__(self, vector: GeneratingVector):
        self.vector = vector
        self.genus = genus_from_vector(vector)
        self.signature = vector.signature
        self.cache: dict = {}

    @property
    def group(self) -> FiniteGroup:
        return self.vector.group

    @property
    def is_quasiplatonic(self) -> bool:
        return self.vector.is_belyi

    def __repr__(self):
        return f'QuasiplatonicSurface(genus={self.genus}, signature={self.signature})'


class QuotientSurface:

    """
    X/H together with the branch data of X/H → P¹.

    ``branch_data`` has one entry per branch point of X → P¹: its period and the ramification
    indices (cycle lengths on the cosets of H) of the points above it.
    """

    def __init__(self, surface: QuasiplatonicSurface, subgroup: Subgroup, genus: int,
                 branch_data: Sequence[Tuple[int, List[int]]]):
        self.surface = surface
        self.subgroup = subgroup
        self.genus = genus
        self.branch_data = list(branch_data)

    @property
    def degree(self) -> int:
        return self.subgroup.index

    @property
    def branch_values(self) -> int:
        """
        Number of points of P¹ over which X/H → P¹ actually ramifies.
        """
        return sum(1 for _, lengths in self.branch_data if any(length > 1 for length in lengths))

    def __repr__(self):
        return f'QuotientSurface(index={self.degree}, genus={self.genus})'


def _actions(X: QuasiplatonicSurface, H: Subgroup) -> CosetAction:
    key = ('coset_action', H.members)
    if key not in X.cache:
        X.cache[key] = coset_action(X.group, H)
    return X.cache[key]


def quotient_surface(X: QuasiplatonicSurface, H: Subgroup) -> QuotientSurface:
    """
    X/H, with its genus from counting cycles on the cosets:
    2g_Y − 2 = −2n + Σᵢ (n − cᵢ), n = |G:H|, cᵢ = number of cycles of gᵢ.
    """
    G = X.group
    G.check_subgroup(H)
    H = G.adopt(H)

    action = _actions(X, H)
    n = action.degree
    branch_data = []
    ramification = 0
    for g, period in zip(X.vector.indices, X.vector.periods):
        lengths = action.cycles(g)
        branch_data.append((period, lengths))
        ramification += n - len(lengths)

    twice = -2 * n + ramification + 2
    if twice % 2:
        raise NonIntegerGenus(f'quotient by a subgroup of index {n} has odd Euler characteristic')
    if twice < 0:
        raise NegativeGenus(f'quotient by a subgroup of index {n} has negative genus')
    return QuotientSurface(X, H, twice // 2, branch_data)


def galois_quotient_signature(X: QuasiplatonicSurface, H: Subgroup, N: Subgroup) -> Signature:
    """
    Signature of the Galois cover X/H → X/N with group N/H, for H normal in N.

    Points of X/N above the i-th branch value are the cycles of gᵢ on G/N; over a cycle of length ℓ′
    every point of X/H lies on a cycle of length ℓ on G/H, and ramifies with index ℓ/ℓ′.
    """
    G = X.group
    G.check_subgroup(H)
    G.check_subgroup(N)
    H, N = G.adopt(H), G.adopt(N)
    if not H.issubset(N):
        raise SubgroupMismatch('the smaller subgroup must be contained in the larger one')
    if not all(H.has_index(G.conjugate(h, n)) for n in (N.generator_indices or N.members) for h in H.members):
        raise NotNormalInN('the smaller subgroup is not normal in the larger one')

    small, large = _actions(X, H), _actions(X, N)
    below = [large.coset_of[r] for r in small.representatives]

    periods = []
    for g in X.vector.indices:
        large_cycle_of = {}
        large_length = {}
        for cycle in large.cycle_list(g):
            for point in cycle:
                large_cycle_of[point] = cycle[0]
            large_length[cycle[0]] = len(cycle)

        ratio: Dict[int, int] = {}
        for cycle in small.cycle_list(g):
            label = large_cycle_of[below[cycle[0]]]
            length, quotient = divmod(len(cycle), large_length[label])
            if quotient or ratio.setdefault(label, length) != length:
                raise InconsistentRamification('ramification above a point of X/N is not uniform')
        periods.extend(r for _, r in sorted(ratio.items()) if r > 1)

    orbit_genus = quotient_surface(X, N).genus
    return Signature(periods, orbit_genus)


def find_generating_vectors(G: FiniteGroup, sig: Signature, limit: Optional[int] = None) -> List[GeneratingVector]:
    """
    Up to ``limit`` generating vectors of G whose entries have the periods of ``sig``, in that order.

    The first entry only runs over class representatives: conjugating a vector gives another vector
    for the same surface.
    """
    if sig.orbit_genus != 0:
        raise InvalidSignature('only covers of the sphere are searched')

    periods = sig.periods
    r = len(periods)
    found: List[GeneratingVector] = []
    if r == 0:
        return [GeneratingVector(G, [])] if G.order == 1 else []

    by_order: Dict[int, List[int]] = {}
    for i in range(G.order):
        by_order.setdefault(G.order_of(i), []).append(i)
    first = [c.representative_index for c in conjugacy_classes(G) if c.order == periods[0]]
    tried = 0

    def extend(prefix: List[int], partial: int):
        nonlocal tried
        if limit is not None and len(found) >= limit:
            return
        if len(prefix) == r - 1:
            last = G.inv(partial)
            tried += 1
            if G.order_of(last) == periods[-1] and len(G.closure(prefix + [last])) == G.order:
                found.append(GeneratingVector.from_indices(G, prefix + [last]))
            return
        for x in by_order.get(periods[len(prefix)], []):
            extend(prefix + [x], G.mul(partial, x))
            if limit is not None and len(found) >= limit:
                return

    if r == 1:
        return []
    for x in first:
        extend([x], x)
        if limit is not None and len(found) >= limit:
            break

    logger.debug('generating vectors for %s: %d found after %d candidates', sig, len(found), tried)
    return found
