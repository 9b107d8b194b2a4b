"""
The combined complex multiplication verdict for a quasiplatonic surface.

Routes are tried in order: an abelian covering group, Streit's test, then a search over collections
of subgroups {H₁, …, H_s} for an isogeny relation whose factors X/Hᵢ are each certified by a
per-factor rule (genus zero, Statement A, Statement B).
"""

import itertools
import logging
from enum import Enum
from typing import Dict, List, Optional

import cmkit.core.primitives as primitives
from cmkit.core.characters import CharacterTable
from cmkit.core.errors import InvalidParameter
from cmkit.core.groups import Subgroup, is_abelian, subgroup_classes
from cmkit.core.threading import parallel_map
from cmkit.criteria.certificates import Criteria, FactorCertificate, Route
from cmkit.criteria.relations import (IsogenyRelation, RelationCheck, h1_multiplicities, solve_relation,
                                      verify_isogeny_relation)
from cmkit.criteria.streit import streit_test
from cmkit.surfaces.surface import QuasiplatonicSurface, quotient_surface

logger = logging.getLogger(__name__)


class Status(Enum):
    CM_CERTIFIED = 1
    INCONCLUSIVE = 2


class CMVerdict:

    """
    The verdict, the route that decided it and everything needed to re-check it.
    """

    def __init__(self, status: Status, route: Optional[Route] = None, streit_value: Optional[int] = None,
                 relation: Optional[IsogenyRelation] = None, certificates: Optional[List[FactorCertificate]] = None,
                 check: Optional[RelationCheck] = None, attempts: Optional[List[Dict]] = None):
        self.status = status
        self.route = route
        self.streit_value = streit_value
        self.relation = relation
        self.certificates = certificates or []
        self.check = check
        self.attempts = attempts or []
        self.truncated = False

    @property
    def certified(self) -> bool:
        return self.status is Status.CM_CERTIFIED

    def __repr__(self):
        route = self.route.name if self.route else None
        return f'CMVerdict({self.status.name}, route={route}, streit={self.streit_value})'


def candidate_subgroups(X: QuasiplatonicSurface) -> List[Subgroup]:
    """
    One representative per conjugacy class of proper non-trivial subgroups with X/H of positive genus.
    """
    candidates = []
    for cls in subgroup_classes(X.group):
        H = cls[0]
        if H.is_trivial or H.is_whole:
            continue
        if quotient_surface(X, H).genus > 0:
            candidates.append(H)
    return candidates


def candidate_collections(subgroups: List[Subgroup], max_size: int):
    """
    Collections by size, then by total index, then by position of the subgroups in the list.
    """
    positions = list(range(len(subgroups)))
    for size in range(1, max_size + 1):
        combos = list(itertools.combinations(positions, size))
        combos.sort(key=lambda c: (sum(subgroups[i].index for i in c), c))
        for combo in combos:
            yield [subgroups[i] for i in combo]


class _FactorCache:

    def __init__(self, X: QuasiplatonicSurface):
        self.X = X
        self._certificates: Dict = {}

    def certify(self, H: Subgroup, multiplicity: int) -> Optional[FactorCertificate]:
        if H.members not in self._certificates:
            genus = quotient_surface(self.X, H).genus
            self._certificates[H.members] = Criteria.certify_factor(self.X, H, genus)
        certificate = self._certificates[H.members]
        if certificate is None:
            return None
        return FactorCertificate(H, certificate.route, certificate.genus, certificate.evidence, multiplicity)


def certify_relation(X: QuasiplatonicSurface, R: IsogenyRelation, cache: Optional[_FactorCache] = None):
    """
    Certificates for all factors of R, or None as soon as one factor cannot be certified.
    """
    cache = cache or _FactorCache(X)
    certificates = []
    for H, k in R.factors:
        certificate = cache.certify(H, k)
        if certificate is None:
            return None
        certificates.append(certificate)
    return certificates


def cm_verdict(X: QuasiplatonicSurface, T: CharacterTable, search_limit: Optional[int] = None,
               streit: bool = True) -> CMVerdict:
    """
    Decide whether JX can be certified to have complex multiplication.

    With ``streit`` off, Streit's value is still reported but cannot decide the verdict, so the
    relation search always runs.
    The abelian and Streit routes only decide for quasiplatonic X.
    """
    if X.genus < 1:
        raise InvalidParameter('a CM verdict needs a surface of positive genus')
    if search_limit is None:
        search_limit = primitives.get_search_limit()

    G = X.group
    streit_value = streit_test(X, T)

    if X.is_quasiplatonic and is_abelian(G):
        logger.info('%r: abelian covering group', X)
        return CMVerdict(Status.CM_CERTIFIED, Route.ABELIAN_COVER, streit_value)

    if streit and X.is_quasiplatonic and streit_value == 0:
        logger.info('%r: certified by Streit\'s test', X)
        return CMVerdict(Status.CM_CERTIFIED, Route.STREIT, streit_value)

    h1 = h1_multiplicities(X, T)
    subgroups = candidate_subgroups(X)
    cache = _FactorCache(X)
    attempts: List[Dict] = []
    collections = candidate_collections(subgroups, primitives.get_max_collection())
    batch_size = 4 * max(1, primitives.get_max_threads())

    tried = 0
    while tried < search_limit:
        batch = list(itertools.islice(collections, min(batch_size, search_limit - tried)))
        if not batch:
            break
        tried += len(batch)

        # Solving is independent per collection; certification below runs in search order.
        relations = parallel_map(lambda collection: solve_relation(T, h1, collection), batch)
        for collection, R in zip(batch, relations):
            logger.debug('candidate %s: %s', [H.order for H in collection], R)
            if R is None:
                continue
            check = verify_isogeny_relation(X, T, R)
            if not check:
                continue
            certificates = certify_relation(X, R, cache)
            attempts.append({
                'subgroup_orders': [H.order for H in collection],
                'multiplicities': R.multiplicities,
                'certified': certificates is not None,
            })
            if certificates is not None:
                logger.info('%r: certified through a relation with multiplicities %s', X, R.multiplicities)
                return CMVerdict(Status.CM_CERTIFIED, Route.RELATION, streit_value, R, certificates, check, attempts)

    verdict = CMVerdict(Status.INCONCLUSIVE, None, streit_value, attempts=attempts)
    if tried >= search_limit and next(collections, None) is not None:
        verdict.truncated = True
        logger.warning('%r: relation search stopped after %d candidates', X, tried)
    logger.info('%r: inconclusive', X)
    return verdict


def recheck(X: QuasiplatonicSurface, T: CharacterTable, verdict: CMVerdict) -> bool:
    """
    Re-verify a certified verdict from its own certificate.
    """
    if not verdict.certified:
        return False
    if verdict.route is Route.ABELIAN_COVER:
        return X.is_quasiplatonic and is_abelian(X.group)
    if verdict.route is Route.STREIT:
        return X.is_quasiplatonic and streit_test(X, T) == 0
    if not verify_isogeny_relation(X, T, verdict.relation):
        return False
    certificates = certify_relation(X, verdict.relation)
    return certificates is not None and [c.route for c in certificates] == [c.route for c in verdict.certificates]
