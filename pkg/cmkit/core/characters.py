"""
Complex characters of finite permutation groups, computed exactly.

The irreducible characters come from Dixon's modular version of Burnside's algorithm: the class
multiplication matrices are diagonalized simultaneously over GF(p) for a prime p ≡ 1 (mod exponent),
and every character value is then lifted back to Q(ζₑ) through the exact eigenvalue multiplicities
of ρ(g), which are small non-negative integers.
"""

import logging
from math import isqrt
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.ntheory import isprime, primitive_root
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

import cmkit.core.primitives as primitives
from cmkit.core.cyclotomic import Cyclotomic
from cmkit.core.errors import GroupMismatch, GroupTooLarge, NonIntegralResult, TableConstructionError
from cmkit.core.groups import FiniteGroup, Subgroup, class_index, conjugacy_classes

logger = logging.getLogger(__name__)


class Character:

    """
    A class function of a group, one exact value per conjugacy class (in class order).
    """

    def __init__(self, group: FiniteGroup, values: Sequence[Cyclotomic]):
        self.group = group
        self.values: Tuple[Cyclotomic, ...] = tuple(values)

    @property
    def conductor(self) -> int:
        return self.values[0].conductor

    @property
    def degree(self):
        q = self.values[0].to_fraction()
        return q.numerator if q.denominator == 1 else q

    def __call__(self, g) -> Cyclotomic:
        return self.values[class_index(self.group, g)]

    def _check(self, other: 'Character'):
        if other.group is not self.group:
            raise GroupMismatch('characters of different groups cannot be combined')

    def __add__(self, other: 'Character') -> 'Character':
        self._check(other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: 'Character') -> 'Character':
        self._check(other)
        return Character(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> 'Character':
        if isinstance(other, Character):
            self._check(other)
            return Character(self.group, [a * b for a, b in zip(self.values, other.values)])
        return Character(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> 'Character':
        return Character(self.group, [a.conjugate() for a in self.values])

    @property
    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return 'Character(' + ', '.join(str(v) for v in self.values) + ')'


class CharacterTable:

    """
    The complex irreducible characters of a group.

    ``spectra[i][t]`` lists, for each k in 0..e−1, how often ζₑᵏ occurs as an eigenvalue of
    ρᵢ(g) for g in class t. The trivial character is row 0.
    """

    def __init__(self, group: FiniteGroup, irreducibles: Sequence[Character], spectra: Sequence[Sequence[Tuple[int, ...]]],
                 prime: int):
        self.group = group
        self.irreducibles: Tuple[Character, ...] = tuple(irreducibles)
        self.spectra = tuple(tuple(row) for row in spectra)
        self.prime = prime
        self.conductor = group.exponent

    @property
    def classes(self):
        return conjugacy_classes(self.group)

    @property
    def degrees(self) -> List[int]:
        return [chi.degree for chi in self.irreducibles]

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self) -> Iterator[Character]:
        return iter(self.irreducibles)

    def __getitem__(self, i: int) -> Character:
        return self.irreducibles[i]

    def index(self, chi: Character) -> int:
        return self.irreducibles.index(chi)

    def decompose(self, chi: Character) -> List[int]:
        """
        Multiplicities of the irreducibles in a virtual character.
        """
        multiplicities = []
        for irr in self.irreducibles:
            m = inner_product(chi, irr)
            if not m.is_integer:
                raise NonIntegralResult(f'{chi} is not a virtual character: inner product {m}')
            multiplicities.append(m.to_int())
        return multiplicities

    def combine(self, multiplicities: Sequence[int]) -> Character:
        """
        Σ nᵢ χᵢ for the given multiplicities.
        """
        zero = Cyclotomic.rational(self.conductor, 0)
        values = [zero] * len(self.classes)
        for n, irr in zip(multiplicities, self.irreducibles):
            if n:
                values = [v + n * w for v, w in zip(values, irr.values)]
        return Character(self.group, values)

    def eigenvalue_multiplicities(self, i: int, g) -> List[int]:
        """
        For ρ = irreducible i and an element g of order o, entry α counts the eigenvalue exp(2πiα/o) of ρ(g).
        """
        G = self.group
        gi = g if isinstance(g, int) else G.index(g)
        o = G.order_of(gi)
        step = self.conductor // o
        spectrum = self.spectra[i][class_index(G, gi)]
        return [spectrum[alpha * step] for alpha in range(o)]


def power_class_map(G: FiniteGroup, k: int) -> List[int]:
    """
    For each class index, the class index of gᵏ for a representative g.
    """
    key = ('power_map', k % G.exponent)
    if key not in G.cache:
        classes = conjugacy_classes(G)
        G.cache[key] = [class_index(G, G.power(c.representative_index, k)) for c in classes]
    return G.cache[key]


def _choose_prime(order: int, exponent: int) -> int:
    # p > 2√|G| keeps the degrees and the eigenvalue multiplicities recoverable from their residues.
    bound = 2 * isqrt(order) + 1
    k = 1
    while True:
        p = k * exponent + 1
        if p > bound and isprime(p):
            return p
        k += 1


def _class_matrices(G: FiniteGroup) -> List[List[List[int]]]:
    """
    M[r][s][t] = #{(x, y) ∈ Cᵣ × Cₛ : xy = zₜ} for fixed representatives zₜ.
    """
    classes = conjugacy_classes(G)
    k = len(classes)
    reps = [c.representative_index for c in classes]
    matrices = []
    for c in classes:
        M = [[0] * k for _ in range(k)]
        for x in c.members:
            x_inv = G.inv(x)
            for t, z in enumerate(reps):
                M[class_index(G, G.mul(x_inv, z))][t] += 1
        matrices.append(M)
    return matrices


class _ModularSplitter:

    """
    Splits GF(p)^k into the common eigenspaces of commuting matrices.
    """

    def __init__(self, p: int, k: int):
        self.p = p
        self.K = GF(p)
        self.k = k

    def matrix(self, rows: Sequence[Sequence[int]]) -> DomainMatrix:
        K = self.K
        return DomainMatrix([[K(x % self.p) for x in row] for row in rows], (len(rows), len(rows[0])), K)

    def ints(self, M: DomainMatrix) -> List[List[int]]:
        return [[int(x) % self.p for x in row] for row in M.to_list()]

    def echelon(self, rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], Tuple[int, ...]]:
        reduced, pivots = self.matrix(rows).rref()
        return self.ints(reduced)[:len(pivots)], tuple(pivots)

    def roots(self, coeffs: Sequence[int]) -> List[int]:
        p = self.p
        found = []
        for lam in range(p):
            value = 0
            for c in coeffs:
                value = (value * lam + c) % p
            if value == 0:
                found.append(lam)
        return found

    def split(self, space: Tuple[List[List[int]], Tuple[int, ...]], M: Sequence[Sequence[int]]):
        """
        The eigenspaces of M restricted to the invariant subspace ``space`` (rows in echelon form).
        """
        p = self.p
        basis, pivots = space
        d = len(basis)

        # Coordinates of M·b in the echelon basis are its entries at the pivot positions.
        images = [[sum(M[s][t] * b[t] for t in range(self.k)) % p for s in range(self.k)] for b in basis]
        A = [[images[j][pivots[i]] for j in range(d)] for i in range(d)]

        charpoly = [int(c) % p for c in self.matrix(A).charpoly()]
        pieces = []
        total = 0
        for lam in self.roots(charpoly):
            shifted = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
            null = self.ints(self.matrix(shifted).nullspace())
            vectors = [[sum(c[j] * basis[j][t] for j in range(d)) % p for t in range(self.k)] for c in null if any(c)]
            if vectors:
                pieces.append(self.echelon(vectors))
                total += len(pieces[-1][0])
        if total != d:
            raise TableConstructionError(f'class matrices do not diagonalize over GF({p})')
        return pieces


def character_table(G: FiniteGroup, max_order: Optional[int] = None) -> CharacterTable:
    """
    The complete table of complex irreducible characters of G.

    Rows are ordered trivial character first, then by degree, then by exact values.
    """
    if max_order is None:
        max_order = primitives.get_max_subgroup_order()
    if G.order > max_order:
        raise GroupTooLarge(f'character tables are bounded at order {max_order}, got {G.order}')
    if 'table' in G.cache:
        return G.cache['table']

    classes = conjugacy_classes(G)
    k = len(classes)
    sizes = [c.size for c in classes]
    e = G.exponent
    p = _choose_prime(G.order, e)
    logger.debug('character table of a group of order %d: %d classes, exponent %d, prime %d', G.order, k, e, p)

    splitter = _ModularSplitter(p, k)
    spaces = [splitter.echelon([[int(i == j) for j in range(k)] for i in range(k)])]
    for r, M in enumerate(_class_matrices(G)):
        if all(len(basis) == 1 for basis, _ in spaces):
            break
        if r == 0:
            continue
        refined = []
        for space in spaces:
            refined.extend([space] if len(space[0]) == 1 else splitter.split(space, M))
        spaces = refined
    if len(spaces) != k or any(len(basis) != 1 for basis, _ in spaces):
        raise TableConstructionError(f'could not separate the {k} central characters modulo {p}')

    inverse_class = [class_index(G, G.inv(c.representative_index)) for c in classes]
    z = pow(primitive_root(p), (p - 1) // e, p)
    power_maps = {}

    rows = []
    for basis, _ in spaces:
        v = basis[0]
        omega = [x * pow(v[0], -1, p) % p for x in v]

        # Σₜ |Cₜ| χ(gₜ) χ(gₜ⁻¹) = |G| rewritten with ωₜ = |Cₜ| χ(gₜ) / χ(1).
        s = sum(omega[t] * omega[inverse_class[t]] * pow(sizes[t], -1, p) for t in range(k)) % p
        target = G.order * pow(s, -1, p) % p
        degree = next((d for d in range(1, isqrt(G.order) + 1) if d * d % p == target), None)
        if degree is None:
            raise TableConstructionError(f'no degree fits the central character {omega} modulo {p}')
        chi_mod_p = [omega[t] * degree * pow(sizes[t], -1, p) % p for t in range(k)]

        spectra = []
        for t, c in enumerate(classes):
            o = c.order
            step = e // o
            w = pow(z, step, p)
            if o not in power_maps:
                power_maps[o] = [power_class_map(G, l) for l in range(o)]
            values = [chi_mod_p[power_maps[o][l][t]] for l in range(o)]
            spectrum = [0] * e
            o_inv = pow(o, -1, p)
            for j in range(o):
                w_inv = pow(w, -j, p)
                mu = sum(values[l] * pow(w_inv, l, p) for l in range(o)) * o_inv % p
                if mu > degree:
                    raise TableConstructionError(f'eigenvalue multiplicity residue {mu} exceeds the degree {degree}')
                spectrum[j * step] = mu
            if sum(spectrum) != degree:
                raise TableConstructionError('eigenvalue multiplicities do not add up to the degree')
            spectra.append(tuple(spectrum))

        values = [Cyclotomic.from_spectrum(e, spectrum) for spectrum in spectra]
        rows.append((Character(G, values), spectra))

    if sum(chi.degree ** 2 for chi, _ in rows) != G.order:
        raise TableConstructionError('sum of squared degrees differs from the group order')

    rows.sort(key=lambda row: (not row[0].is_trivial, row[0].degree, tuple(v.sort_key() for v in row[0].values)))
    table = CharacterTable(G, [chi for chi, _ in rows], [spectra for _, spectra in rows], p)
    G.cache['table'] = table
    return table


def trivial_character(G: FiniteGroup) -> Character:
    e = G.exponent
    return Character(G, [Cyclotomic.rational(e, 1)] * len(conjugacy_classes(G)))


def regular_character(G: FiniteGroup) -> Character:
    e = G.exponent
    return Character(G, [Cyclotomic.rational(e, G.order if t == 0 else 0) for t in range(len(conjugacy_classes(G)))])


def inner_product(chi: Character, psi: Character) -> Cyclotomic:
    """
    ⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g)), summed class by class.
    """
    if chi.group is not psi.group or len(chi.values) != len(psi.values):
        raise GroupMismatch('inner product of characters of different groups')
    G = chi.group
    classes = conjugacy_classes(G)
    total = Cyclotomic.rational(chi.conductor, 0)
    for c, a, b in zip(classes, chi.values, psi.values):
        total = total + c.size * (a * b.conjugate())
    return total / G.order


def symmetric_square(chi: Character) -> Character:
    """
    S²χ(g) = (χ(g)² + χ(g²)) / 2.
    """
    squares = power_class_map(chi.group, 2)
    return Character(chi.group, [(v * v + chi.values[squares[t]]) / 2 for t, v in enumerate(chi.values)])


def exterior_square(chi: Character) -> Character:
    """
    Λ²χ(g) = (χ(g)² − χ(g²)) / 2.
    """
    squares = power_class_map(chi.group, 2)
    return Character(chi.group, [(v * v - chi.values[squares[t]]) / 2 for t, v in enumerate(chi.values)])


def fixed_space_dimension(chi: Character, H: Subgroup) -> int:
    """
    dim V^H = (1/|H|) Σ_{h∈H} χ(h).
    """
    G = chi.group
    G.check_subgroup(H)
    H = G.adopt(H)

    counts = {}
    for h in H.members:
        t = class_index(G, h)
        counts[t] = counts.get(t, 0) + 1
    total = Cyclotomic.rational(chi.conductor, 0)
    for t, n in sorted(counts.items()):
        total = total + n * chi.values[t]
    total = total / H.order

    if not total.is_integer or total.to_int() < 0:
        raise NonIntegralResult(f'fixed-space dimension {total} is not a non-negative integer')
    return total.to_int()


def eigenvalue_multiplicities(chi: Character, g) -> List[int]:
    """
    For g of order o, entry α is the multiplicity of exp(2πiα/o) as an eigenvalue of ρ(g), recovered
    exactly from χ(gˡ) as (1/o) Σₗ χ(gˡ) ζₒ^(−αl).
    """
    G = chi.group
    gi = g if isinstance(g, int) else G.index(g)
    o = G.order_of(gi)
    e = chi.conductor
    step = e // o
    powers = [chi.values[class_index(G, G.power(gi, l))] for l in range(o)]

    multiplicities = []
    for alpha in range(o):
        total = Cyclotomic.rational(e, 0)
        for l, value in enumerate(powers):
            total = total + value * Cyclotomic.zeta(e, -alpha * l * step)
        total = total / o
        if not total.is_integer:
            raise NonIntegralResult(f'eigenvalue multiplicity {total} is not an integer')
        multiplicities.append(total.to_int())
    return multiplicities


def multiplicity_as_int(value: Cyclotomic) -> int:
    """
    An inner product of genuine characters, as a non-negative int.
    """
    if not value.is_integer or value.to_int() < 0:
        raise NonIntegralResult(f'{value} is not a non-negative integer')
    return value.to_int()
