"""
Large abelian automorphism groups: Y = X/H of genus g ≥ 1 whose abelian group K of automorphisms has
|K| > 4(g − 1) has a Jacobian with complex multiplication, except when K ≅ C₆ and Y → Y/K ramifies
over four values marked (2, 2, 3, 3). On a genus-1 quotient the bound is empty, so K must
then act with a triangle signature.

Only automorphisms induced by G are considered, i.e. K = K̃/H for H ≤ K̃ ≤ N_G(H).
"""

import logging
from typing import Dict, List

from cmkit.core.errors import GenusZeroQuotient
from cmkit.core.groups import Subgroup, abelian_invariants, all_subgroups, cycle_notation, normalizer, quotient_group
from cmkit.criteria.certificates import Certifier, Criteria, Outcome, Route
from cmkit.surfaces.surface import QuasiplatonicSurface, Signature, galois_quotient_signature, quotient_surface

logger = logging.getLogger(__name__)

EXCEPTIONAL_INVARIANTS = [2, 3]
EXCEPTIONAL_SIGNATURE = Signature((2, 2, 3, 3))


def _abelian_over(G, K: Subgroup, H: Subgroup) -> bool:
    gens = K.generator_indices
    for n, x in enumerate(gens):
        for y in gens[n + 1:]:
            commutator = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y))
            if not H.has_index(commutator):
                return False
    return True


def induced_abelian_groups(X: QuasiplatonicSurface, H: Subgroup) -> List[Subgroup]:
    """
    Subgroups K̃ with H ≤ K̃ ≤ N_G(H) and K̃/H abelian, largest first.
    """
    G = X.group
    N = normalizer(G, H)
    candidates = [K for K in all_subgroups(G) if H.issubset(K) and K.issubset(N) and _abelian_over(G, K, H)]
    candidates.sort(key=lambda K: (-K.order, K.members))
    return candidates


def is_exceptional(invariants: List[int], signature: Signature) -> bool:
    """
    K ≅ C₆ acting with quotient signature (0; 2, 2, 3, 3).
    """
    return invariants == EXCEPTIONAL_INVARIANTS and signature == EXCEPTIONAL_SIGNATURE


def _describe(G, K: Subgroup, H: Subgroup, signature: Signature, bound: int) -> Dict:
    return {
        'K_generators': [cycle_notation(g) for g in K.generators],
        'K_order': K.order // H.order,
        'bound': bound,
        'signature': {'orbit_genus': signature.orbit_genus, 'periods': list(signature.periods)},
        'belyi': signature.orbit_genus == 0 and len(signature.periods) <= 3,
    }


def check_statement_B(X: QuasiplatonicSurface, H: Subgroup) -> Outcome:
    """
    True iff some abelian K ≤ N_G(H)/H has |K| > 4(g − 1) for g the genus of X/H, the C₆ case excluded.
    For g = 1, K must also act with three branch values over a sphere.

    H may be trivial, in which case Y is X itself.
    """
    G = X.group
    G.check_subgroup(H)
    H = G.adopt(H)
    genus = quotient_surface(X, H).genus
    if genus == 0:
        raise GenusZeroQuotient('Statement B is about quotients of positive genus')

    bound = 4 * (genus - 1)
    evidence: Dict = {'genus': genus, 'bound': bound, 'excluded': []}
    for K in induced_abelian_groups(X, H):
        order = K.order // H.order
        if order <= bound or order == 1:
            break

        signature = galois_quotient_signature(X, H, K)
        description = _describe(G, K, H, signature, bound)
        invariants = abelian_invariants(quotient_group(K.as_group(), K.as_group().adopt(H)))
        description['abelian_invariants'] = invariants

        if is_exceptional(invariants, signature):
            logger.debug('statement B: K = C6 with signature (2, 2, 3, 3) on %r does not count', H)
            evidence['excluded'].append(description)
            continue

        if genus == 1 and not description['belyi']:
            logger.debug('statement B: |K| = %d acts on the elliptic %r without a triangle signature', order, H)
            evidence['excluded'].append(description)
            continue

        evidence.update(description)
        logger.debug('statement B holds for %r with |K| = %d > %d', H, order, bound)
        return Outcome(True, evidence)

    logger.debug('statement B fails for %r', H)
    return Outcome(False, evidence)


@Criteria.certifier(Route.STATEMENT_B)
class StatementBCertifier(Certifier):

    def applies(self, X, H, genus):
        return genus > 0

    def certify(self, X, H, genus):
        return check_statement_B(X, H)
