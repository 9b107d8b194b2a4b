"""
Abelian quotient covers: if X is quasiplatonic, H is normal in G and G/H is abelian, then
Y = X/H → X/G is a regular Belyi cover with abelian group G/H, and the Jacobian of Y has complex
multiplication. The certifier only applies to quasiplatonic surfaces.
"""

import logging
from typing import Optional

from cmkit.core.errors import NotProperNontrivial
from cmkit.core.groups import FiniteGroup, Subgroup, abelian_invariants, is_abelian, is_normal, quotient_group
from cmkit.criteria.certificates import Certifier, Criteria, Outcome, Route
from cmkit.surfaces.surface import QuasiplatonicSurface, quotient_surface

logger = logging.getLogger(__name__)


def check_statement_A(G: FiniteGroup, H: Subgroup, X: Optional[QuasiplatonicSurface] = None) -> Outcome:
    """
    True iff H is normal in G with G/H abelian.

    With a surface, the evidence also carries the branch data of X/H → X/G, which never has more
    branch values than X → X/G.
    """
    G.check_subgroup(H)
    H = G.adopt(H)
    if H.is_trivial or H.is_whole:
        raise NotProperNontrivial('Statement A needs a proper non-trivial subgroup')

    evidence = {'normal': is_normal(G, H)}
    if not evidence['normal']:
        logger.debug('statement A: %r is not normal', H)
        return Outcome(False, evidence)

    Q = quotient_group(G, H)
    evidence['quotient_order'] = Q.order
    evidence['abelian'] = is_abelian(Q)
    if not evidence['abelian']:
        logger.debug('statement A: quotient by %r is not abelian', H)
        return Outcome(False, evidence)

    evidence['abelian_invariants'] = abelian_invariants(Q)
    if X is not None:
        Y = quotient_surface(X, H)
        evidence['branch_data'] = [[period, lengths] for period, lengths in Y.branch_data]
        evidence['branch_values'] = Y.branch_values
        assert Y.branch_values <= len(X.vector), 'an abelian quotient cover gained branch values'

    logger.debug('statement A holds for %r, quotient invariants %s', H, evidence['abelian_invariants'])
    return Outcome(True, evidence)


@Criteria.certifier(Route.STATEMENT_A)
class StatementACertifier(Certifier):

    def applies(self, X, H, genus):
        return X.is_quasiplatonic and genus > 0 and not H.is_trivial and not H.is_whole

    def certify(self, X, H, genus):
        return check_statement_A(X.group, H, X)
