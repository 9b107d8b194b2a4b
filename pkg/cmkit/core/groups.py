"""
Finite permutation groups.

Elements are sympy permutations. Products follow sympy: ``p*q`` applies ``p`` first, then ``q``.
Internally every element is addressed by its index in the sorted element list, which keeps the
subgroup and coset machinery cheap and every ordering deterministic.
"""

import logging
import re
from collections.abc import Mapping
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

import cmkit.core.primitives as primitives
from cmkit.core.errors import (ElementNotInGroup, GroupTooLarge, InvalidParameter, InvalidPermutation, NotNormal,
                               SubgroupMismatch)

logger = logging.getLogger(__name__)


def make_permutation(images: Sequence[int], degree: Optional[int] = None) -> Permutation:
    """
    Build a permutation from a 0-based image array, checking that it is a bijection.
    """
    try:
        images = [int(i) for i in images]
    except (TypeError, ValueError):
        raise InvalidPermutation(f'image array {images!r} is not a list of integers')

    if degree is not None and len(images) != degree:
        raise InvalidPermutation(f'image array of length {len(images)} given for degree {degree}')
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutation(f'image array {images} is not a bijection on 0..{len(images) - 1}')

    return Permutation(images)


def cycle_notation(p: Permutation) -> str:
    """
    Disjoint-cycle text form, singletons omitted. The identity prints as ``()``.
    """
    cycles = p.cyclic_form
    if not cycles:
        return '()'
    return ''.join('(' + ' '.join(str(i) for i in cycle) + ')' for cycle in cycles)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class ConjugacyClass:

    """
    A conjugacy class, stored as element indices of its parent group.
    """

    def __init__(self, group: 'FiniteGroup', members: Iterable[int]):
        self.group = group
        self.members: Tuple[int, ...] = tuple(sorted(members))
        self.representative_index = self.members[0]
        self.order = group.order_of(self.representative_index)

    @property
    def representative(self) -> Permutation:
        return self.group.element(self.representative_index)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def elements(self) -> List[Permutation]:
        return [self.group.element(i) for i in self.members]

    def __contains__(self, g: Permutation) -> bool:
        return self.group.index(g) in self.members

    def __repr__(self):
        return f'ConjugacyClass({cycle_notation(self.representative)}, size={self.size}, order={self.order})'


class Subgroup:

    """
    A subgroup of a FiniteGroup, stored as a sorted tuple of element indices.
    """

    def __init__(self, parent: 'FiniteGroup', members: Iterable[int], generators: Iterable[int] = ()):
        self.parent = parent
        self.members: Tuple[int, ...] = tuple(sorted(set(members)))
        self._member_set = frozenset(self.members)
        self.generator_indices: Tuple[int, ...] = tuple(generators)
        self._as_group = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def elements(self) -> List[Permutation]:
        return [self.parent.element(i) for i in self.members]

    @property
    def generators(self) -> List[Permutation]:
        return [self.parent.element(i) for i in self.generator_indices]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def has_index(self, i: int) -> bool:
        return i in self._member_set

    def __contains__(self, g: Permutation) -> bool:
        i = self.parent.find(g)
        return i is not None and i in self._member_set

    def issubset(self, other: 'Subgroup') -> bool:
        return self._member_set <= other._member_set

    def as_group(self) -> 'FiniteGroup':
        """
        The subgroup as a FiniteGroup in its own right, on the same points.
        """
        if self._as_group is None:
            self._as_group = FiniteGroup.from_generators(self.parent.degree, self.generators)
        return self._as_group

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        gens = ', '.join(cycle_notation(g) for g in self.generators) or '()'
        return f'Subgroup(<{gens}>, order={self.order})'


class FiniteGroup:

    """
    A finite permutation group with its complete, sorted element list.

    Use ``from_generators`` to build one; the element list is computed eagerly and bounded by the
    ``max_order`` control variable.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Sequence[Tuple[int, ...]],
                 generator_names: Optional[Sequence[str]] = None):
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self._arrays: List[Tuple[int, ...]] = list(elements)
        self._index: Dict[Tuple[int, ...], int] = {af: i for i, af in enumerate(self._arrays)}
        self._elements: List[Optional[Permutation]] = [None] * len(self._arrays)
        self._products: Dict[int, int] = {}
        self._cache_products = len(self._arrays) <= primitives.get_table_order()
        self._orders: Optional[List[int]] = None
        self.cache: dict = {}

        if generator_names is None:
            generator_names = [f'g{i}' for i in range(len(self.generators))]
        self.generator_names: Tuple[str, ...] = tuple(generator_names)

        self.generator_indices: Tuple[int, ...] = tuple(self.index(g) for g in self.generators)
        self._inverses = [self._index[self._invert(af)] for af in self._arrays]

    @classmethod
    def from_generators(cls, degree: int, gens: Sequence, max_order: Optional[int] = None,
                        generator_names: Optional[Sequence[str]] = None) -> 'FiniteGroup':
        """
        Returns the group generated by the given permutations (or image arrays) of the given degree.
        """
        if degree < 1:
            raise InvalidParameter(f'degree must be positive, got {degree}')
        if max_order is None:
            max_order = primitives.get_max_order()

        perms = []
        for g in gens:
            images = g.array_form if isinstance(g, Permutation) else g
            perms.append(make_permutation(images, degree))

        # Schreier-Sims gives the order cheaply, before we commit to enumerating anything.
        identity = Permutation(list(range(degree)))
        pgroup = PermutationGroup(perms or [identity])
        order = pgroup.order()
        if order > max_order:
            raise GroupTooLarge(f'group of order {order} exceeds the bound {max_order}')

        elements = sorted(tuple(af) for af in pgroup.generate(af=True))
        if len(elements) != order:
            # Bulletproofing: sympy reported one order and enumerated another.
            elements = sorted(set(elements))

        logger.debug('built group of order %d on %d points from %d generators', order, degree, len(perms))
        return cls(degree, perms, elements, generator_names)

    # Element access.

    @property
    def order(self) -> int:
        return len(self._arrays)

    @property
    def identity_index(self) -> int:
        return 0

    @property
    def identity(self) -> Permutation:
        return self.element(0)

    def element(self, i: int) -> Permutation:
        p = self._elements[i]
        if p is None:
            p = self._elements[i] = Permutation(list(self._arrays[i]))
        return p

    @property
    def elements(self) -> List[Permutation]:
        return [self.element(i) for i in range(self.order)]

    def find(self, g) -> Optional[int]:
        af = tuple(g.array_form) if isinstance(g, Permutation) else tuple(g)
        if len(af) != self.degree:
            return None
        return self._index.get(af)

    def index(self, g) -> int:
        i = self.find(g)
        if i is None:
            raise ElementNotInGroup(f'{g} is not an element of this group')
        return i

    def __contains__(self, g) -> bool:
        return self.find(g) is not None

    # Arithmetic on indices.

    @staticmethod
    def _invert(af: Tuple[int, ...]) -> Tuple[int, ...]:
        inverse = [0] * len(af)
        for i, j in enumerate(af):
            inverse[j] = i
        return tuple(inverse)

    def mul(self, i: int, j: int) -> int:
        """
        Index of element(i) * element(j), i.e. apply element(i) first.
        """
        key = i * len(self._arrays) + j
        k = self._products.get(key)
        if k is None:
            a, b = self._arrays[i], self._arrays[j]
            k = self._index[tuple(b[x] for x in a)]
            if self._cache_products:
                self._products[key] = k
        return k

    def inv(self, i: int) -> int:
        return self._inverses[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv(i), -k
        result, base = 0, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conjugate(self, i: int, g: int) -> int:
        """
        Index of g⁻¹ * element(i) * g.
        """
        return self.mul(self.mul(self.inv(g), i), g)

    def product(self, indices: Iterable[int]) -> int:
        return reduce(self.mul, indices, 0)

    def order_of(self, i: int) -> int:
        if self._orders is None:
            self._orders = [int(Permutation(list(af)).order()) for af in self._arrays]
        return self._orders[i]

    @property
    def exponent(self) -> int:
        return reduce(_lcm, (self.order_of(i) for i in range(self.order)), 1)

    def closure(self, generators: Iterable[int], start: Iterable[int] = (0,)) -> frozenset:
        """
        The subgroup generated by the given indices together with the (closed) start set.
        """
        generators = list(generators)
        members = set(start)
        members.add(0)
        frontier = list(members)
        while frontier:
            fresh = []
            for x in frontier:
                for s in generators:
                    y = self.mul(x, s)
                    if y not in members:
                        members.add(y)
                        fresh.append(y)
            frontier = fresh
        return frozenset(members)

    # Subgroups.

    def subgroup(self, gens: Iterable) -> Subgroup:
        """
        The subgroup generated by the given elements (permutations or indices).
        """
        indices = [g if isinstance(g, int) else self.index(g) for g in gens]
        return Subgroup(self, self.closure(indices), _reduce_generators(self, indices))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (0,), ())

    def whole(self) -> Subgroup:
        return Subgroup(self, range(self.order), self.generator_indices)

    def check_subgroup(self, H: Subgroup):
        if H.parent is not self:
            if H.parent.degree == self.degree and all(g in self for g in H.elements):
                return
            raise SubgroupMismatch('subgroup does not belong to this group')

    def adopt(self, H: Subgroup) -> Subgroup:
        """
        Re-express a subgroup given on the same points in terms of this group's element indices.
        """
        if H.parent is self:
            return H
        self.check_subgroup(H)
        return Subgroup(self, (self.index(g) for g in H.elements), (self.index(g) for g in H.generators))

    # Words over the named generators.

    _TOKEN = re.compile(r'^\s*([A-Za-z_]\w*)\s*(?:\^\s*(-?\d+))?\s*$')

    def evaluate_word(self, word: str) -> Permutation:
        """
        Evaluate a ``*``-separated word such as ``t^-1*b`` over the named generators.
        ``1`` or ``e`` stand for the identity.
        """
        result = 0
        for token in word.split('*'):
            token = token.strip()
            if token in ('1', 'e', ''):
                continue
            match = self._TOKEN.match(token)
            if match is None or match.group(1) not in self.generator_names:
                raise ElementNotInGroup(f'cannot read {token!r} as a power of one of {", ".join(self.generator_names)}')
            g = self.generator_indices[self.generator_names.index(match.group(1))]
            k = int(match.group(2)) if match.group(2) is not None else 1
            result = self.mul(result, self.power(g, k))
        return self.element(result)

    def __repr__(self):
        return f'FiniteGroup(order={self.order}, degree={self.degree})'


def _reduce_generators(G: FiniteGroup, indices: Sequence[int]) -> Tuple[int, ...]:
    """
    Drop generators that already lie in the span of the earlier ones.
    """
    kept = []
    span = frozenset((0,))
    for i in indices:
        if i not in span:
            kept.append(i)
            span = G.closure(kept)
    return tuple(kept)


def from_generators(degree: int, gens: Sequence, max_order: Optional[int] = None) -> FiniteGroup:
    return FiniteGroup.from_generators(degree, gens, max_order)


def conjugacy_classes(G: FiniteGroup) -> List[ConjugacyClass]:
    """
    The conjugacy classes of G, identity class first, sorted by (element order, class size, minimal member).
    """
    if 'classes' not in G.cache:
        if G.order == 1:
            raw = [frozenset((0,))]
        else:
            pgroup = PermutationGroup(list(G.generators))
            raw = [frozenset(G.index(p) for p in cls) for cls in pgroup.conjugacy_classes()]
        classes = [ConjugacyClass(G, members) for members in raw]
        classes.sort(key=lambda c: (c.order, c.size, c.members[0]))

        class_of = [0] * G.order
        for k, c in enumerate(classes):
            for i in c.members:
                class_of[i] = k

        G.cache['classes'] = classes
        G.cache['class_of'] = class_of
    return G.cache['classes']


def class_index(G: FiniteGroup, g) -> int:
    """
    Position in conjugacy_classes(G) of the class containing g (a permutation or an element index).
    """
    conjugacy_classes(G)
    i = g if isinstance(g, int) else G.index(g)
    return G.cache['class_of'][i]


def all_subgroups(G: FiniteGroup, max_order: Optional[int] = None) -> List[Subgroup]:
    """
    Every subgroup of G exactly once, trivial and whole group included, sorted by (order, members).

    Built by cyclic extension: every subgroup is the join of the cyclic subgroups it contains, so
    repeatedly joining known subgroups with cyclic ones reaches all of them.
    """
    if max_order is None:
        max_order = primitives.get_max_subgroup_order()
    if G.order > max_order:
        raise GroupTooLarge(f'subgroup enumeration is bounded at order {max_order}, got {G.order}')

    if 'subgroups' in G.cache:
        return G.cache['subgroups']

    cyclic: Dict[frozenset, int] = {}
    for i in range(G.order):
        members = G.closure((i,))
        if members not in cyclic:
            cyclic[members] = i
    cyclic_list = sorted(cyclic.items(), key=lambda item: (len(item[0]), min(item[0] - {0}, default=0)))

    found: Dict[frozenset, Tuple[int, ...]] = {frozenset((0,)): ()}
    layer = []
    for members, gen in cyclic_list:
        if members not in found:
            found[members] = (gen,)
            layer.append(members)

    while layer:
        fresh = []
        for members in layer:
            gens = found[members]
            for c_members, c in cyclic_list:
                if c in members:
                    continue
                joined = G.closure(gens + (c,), start=members)
                if joined not in found:
                    found[joined] = gens + (c,)
                    fresh.append(joined)
        layer = fresh

    subgroups = [Subgroup(G, members, _reduce_generators(G, gens)) for members, gens in found.items()]
    subgroups.sort(key=lambda H: (H.order, H.members))
    logger.debug('group of order %d has %d subgroups', G.order, len(subgroups))
    G.cache['subgroups'] = subgroups
    return subgroups


def _normalizes(G: FiniteGroup, g: int, H: Subgroup) -> bool:
    return all(H.has_index(G.conjugate(h, g)) for h in (H.generator_indices or H.members))


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """
    True iff g⁻¹Hg = H for every g in G. Checking the generators of G suffices.
    """
    G.check_subgroup(H)
    H = G.adopt(H)
    return all(_normalizes(G, g, H) for g in G.generator_indices)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """
    The largest subgroup of G in which H is normal.
    """
    G.check_subgroup(H)
    H = G.adopt(H)
    members = [g for g in range(G.order) if _normalizes(G, g, H)]
    return Subgroup(G, members, _reduce_generators(G, members))


def is_abelian(G: FiniteGroup) -> bool:
    gens = G.generator_indices
    return all(G.mul(x, y) == G.mul(y, x) for n, x in enumerate(gens) for y in gens[n + 1:])


def abelian_invariants(G: FiniteGroup) -> List[int]:
    """
    Prime-power orders of the cyclic factors of the abelianization of G, sorted.
    For an abelian group this is a complete isomorphism fingerprint.
    """
    if G.order == 1:
        return []
    return sorted(int(n) for n in PermutationGroup(list(G.generators)).abelian_invariants())


class CosetAction(Mapping):

    """
    The action of G on the right cosets Hx of a subgroup, by right multiplication.

    Point 0 is the coset H itself; the other cosets are numbered by their smallest element.
    Behaves as a read-only mapping from group elements to permutations of the cosets.
    """

    def __init__(self, G: FiniteGroup, H: Subgroup):
        self.group = G
        self.subgroup = H
        self.coset_of = [-1] * G.order
        self.representatives: List[int] = []
        for x in range(G.order):
            if self.coset_of[x] >= 0:
                continue
            c = len(self.representatives)
            self.representatives.append(x)
            for h in H.members:
                self.coset_of[G.mul(h, x)] = c
        self._images: Dict[int, Tuple[int, ...]] = {}

    @property
    def degree(self) -> int:
        return len(self.representatives)

    def images(self, g: int) -> Tuple[int, ...]:
        """
        Image array of the element with index g.
        """
        images = self._images.get(g)
        if images is None:
            G = self.group
            images = tuple(self.coset_of[G.mul(r, g)] for r in self.representatives)
            self._images[g] = images
        return images

    def cycle_list(self, g: int) -> List[List[int]]:
        """
        The cycles of the element with index g on the cosets, each starting at its smallest point.
        """
        images = self.images(g)
        seen = [False] * len(images)
        cycles = []
        for start in range(len(images)):
            if seen[start]:
                continue
            cycle, x = [], start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = images[x]
            cycles.append(cycle)
        return cycles

    def cycles(self, g: int) -> List[int]:
        """
        Sorted cycle lengths of the element with index g on the cosets.
        """
        return sorted(len(cycle) for cycle in self.cycle_list(g))

    def __getitem__(self, g) -> Permutation:
        return Permutation(list(self.images(self.group.index(g))))

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.group.elements)

    def __len__(self) -> int:
        return self.group.order

    def kernel(self) -> Subgroup:
        identity = tuple(range(self.degree))
        members = [g for g in range(self.group.order) if self.images(g) == identity]
        return Subgroup(self.group, members, _reduce_generators(self.group, members))


def coset_action(G: FiniteGroup, H: Subgroup) -> CosetAction:
    G.check_subgroup(H)
    return CosetAction(G, G.adopt(H))


def quotient_group(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """
    G/N realized by the regular action of G on the cosets of N.
    """
    if not is_normal(G, N):
        raise NotNormal('cannot form a quotient by a subgroup that is not normal')
    action = coset_action(G, N)
    gens = [Permutation(list(action.images(g))) for g in G.generator_indices]
    return FiniteGroup.from_generators(action.degree, gens, generator_names=G.generator_names)


def element_order(G: FiniteGroup, g: Permutation) -> int:
    return G.order_of(G.index(g))


def subgroup_classes(G: FiniteGroup) -> List[List[Subgroup]]:
    """
    all_subgroups(G) grouped into conjugacy classes. Each class is sorted and the classes are
    ordered by their first member.
    """
    if 'subgroup_classes' in G.cache:
        return G.cache['subgroup_classes']

    subgroups = all_subgroups(G)
    position = {H.members: n for n, H in enumerate(subgroups)}
    assigned = [False] * len(subgroups)
    classes = []
    for n, H in enumerate(subgroups):
        if assigned[n]:
            continue
        orbit = set()
        for g in range(G.order):
            conj = tuple(sorted(G.conjugate(h, g) for h in H.members))
            orbit.add(position[conj])
        for k in orbit:
            assigned[k] = True
        classes.append([subgroups[k] for k in sorted(orbit)])
    G.cache['subgroup_classes'] = classes
    return classes
