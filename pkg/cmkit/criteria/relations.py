"""
Isogeny relations JXⁿ ~ JY₁^n₁ × … × JY_s^n_s between a Jacobian and Jacobians of quotients Yᵢ = X/Hᵢ.

A relation is verified isotypically: on the ρ-isotypic part of H¹(X) it reads n·d_ρ = Σ nᵢ·dim V_ρ^Hᵢ,
which has to hold for every irreducible ρ occurring in H¹(X).
"""

import logging
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from cmkit.core.characters import CharacterTable, fixed_space_dimension
from cmkit.core.errors import ComputationError, GroupMismatch, InvalidParameter, NotProperNontrivial
from cmkit.core.groups import Subgroup
from cmkit.surfaces.chevalley_weil import chevalley_weil_multiplicities
from cmkit.surfaces.surface import QuasiplatonicSurface, quotient_surface

logger = logging.getLogger(__name__)


class IsogenyRelation:

    """
    n together with the factors (Hᵢ, nᵢ). ``provenance`` names a published decomposition the relation
    was taken from, if any.
    """

    def __init__(self, n: int, factors: Sequence[Tuple[Subgroup, int]], provenance: Optional[str] = None):
        if n < 1:
            raise InvalidParameter(f'the exponent of JX must be positive, got {n}')
        if not factors:
            raise InvalidParameter('an isogeny relation needs at least one factor')
        for H, k in factors:
            if k < 1:
                raise InvalidParameter(f'factor multiplicities must be positive, got {k}')
            if H.is_trivial or H.is_whole:
                raise NotProperNontrivial('isogeny factors must come from proper non-trivial subgroups')
        self.n = n
        self.factors: List[Tuple[Subgroup, int]] = list(factors)
        self.provenance = provenance

    @property
    def subgroups(self) -> List[Subgroup]:
        return [H for H, _ in self.factors]

    @property
    def multiplicities(self) -> List[int]:
        return [k for _, k in self.factors]

    def __repr__(self):
        return f'IsogenyRelation(n={self.n}, multiplicities={self.multiplicities})'


class RelationCheck:

    """
    Outcome of verify_isogeny_relation. ``basis`` is 'isotypic' or 'cited' when the relation holds.
    """

    def __init__(self, holds: bool, basis: Optional[str], report: List[Dict], genera: List[int], genus: int):
        self.holds = holds
        self.basis = basis
        self.report = report
        self.genera = genera
        self.genus = genus

    def __bool__(self):
        return self.holds


def h1_multiplicities(X: QuasiplatonicSurface, T: CharacterTable) -> List[int]:
    """
    Multiplicity of each irreducible in H¹(X, C) = H⁰(X, Ω) ⊕ conj(H⁰(X, Ω)).
    """
    analytic = chevalley_weil_multiplicities(X, T)
    conjugates = [T.index(chi.conjugate()) for chi in T]
    return [analytic[i] + analytic[conjugates[i]] for i in range(len(T))]


def fixed_dimensions(T: CharacterTable, H: Subgroup) -> List[int]:
    """
    dim V_ρ^H for every irreducible ρ, in table order.
    """
    G = T.group
    H = G.adopt(H)
    key = ('fixed_dimensions', H.members)
    if key not in G.cache:
        G.cache[key] = [fixed_space_dimension(chi, H) for chi in T]
    return G.cache[key]


def verify_isogeny_relation(X: QuasiplatonicSurface, T: CharacterTable, R: IsogenyRelation) -> RelationCheck:
    G = X.group
    if T.group is not G:
        raise GroupMismatch('character table belongs to a different group than the surface')
    for H in R.subgroups:
        if H.parent is not G:
            G.check_subgroup(H)

    h1 = h1_multiplicities(X, T)
    dims = [fixed_dimensions(T, H) for H in R.subgroups]
    report = []
    isotypic = True
    for i, chi in enumerate(T):
        if not h1[i]:
            continue
        lhs = R.n * chi.degree
        rhs = sum(k * d[i] for k, d in zip(R.multiplicities, dims))
        report.append({'irreducible': i, 'degree': chi.degree, 'h1_multiplicity': h1[i], 'lhs': lhs, 'rhs': rhs})
        isotypic = isotypic and lhs == rhs

    genera = [quotient_surface(X, H).genus for H in R.subgroups]
    balanced = R.n * X.genus == sum(k * g for k, g in zip(R.multiplicities, genera))
    if isotypic and not balanced:
        raise ComputationError(f'isotypic relation {R!r} does not balance the genera {genera} against {X.genus}')

    if isotypic:
        return RelationCheck(True, 'isotypic', report, genera, X.genus)
    if R.provenance is not None and balanced:
        logger.debug('relation %r accepted on its provenance: %s', R, R.provenance)
        return RelationCheck(True, 'cited', report, genera, X.genus)
    return RelationCheck(False, None, report, genera, X.genus)


def solve_relation(T: CharacterTable, h1: Sequence[int], subgroups: Sequence[Subgroup],
                   bound: Optional[int] = None) -> Optional[IsogenyRelation]:
    """
    The smallest positive (n, n₁, …, n_s) satisfying the isotypic identities for these subgroups, or None.

    When the identities leave some nᵢ/n free, those are set to zero and the rest must stay positive.
    """
    if bound is None:
        bound = T.group.order
    rows = [i for i in range(len(T)) if h1[i]]
    if not rows:
        return None

    dims = [fixed_dimensions(T, H) for H in subgroups]
    A = Matrix([[d[i] for d in dims] for i in rows])
    b = Matrix([T[i].degree for i in rows])
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})

    ratios = [Rational(x) for x in solution]
    if any(x <= 0 for x in ratios):
        return None
    n = lcm(*(int(x.q) for x in ratios))
    multiplicities = [int(x * n) for x in ratios]
    if n > bound or max(multiplicities) > bound:
        return None
    return IsogenyRelation(n, list(zip(subgroups, multiplicities)))
