from enum import Enum
from typing import Callable, Dict, List, Optional

from cmkit.core.groups import Subgroup, cycle_notation


class Route(Enum):
    ABELIAN_COVER = 1
    STREIT = 2
    GENUS_ZERO = 3
    STATEMENT_A = 4
    STATEMENT_B = 5
    RELATION = 6


class Outcome:

    """
    The answer of a criterion together with the data it was decided on.
    """

    def __init__(self, holds: bool, evidence: Optional[Dict] = None):
        self.holds = holds
        self.evidence = evidence or {}

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return f'Outcome({self.holds}, {self.evidence})'


class FactorCertificate:

    """
    Why the Jacobian of Y = X/H has complex multiplication.
    """

    def __init__(self, subgroup: Subgroup, route: Route, genus: int, evidence: Dict, multiplicity: int = 1):
        self.subgroup = subgroup
        self.route = route
        self.genus = genus
        self.evidence = evidence
        self.multiplicity = multiplicity

    @property
    def subgroup_gens(self) -> List[str]:
        return [cycle_notation(g) for g in self.subgroup.generators]

    def __repr__(self):
        return f'FactorCertificate({self.subgroup!r}, {self.route.name}, genus={self.genus})'


class Certifier:

    """
    A per-factor rule. ``certify`` returns an Outcome; a positive one becomes a FactorCertificate.
    """

    route: Route

    def applies(self, X, H: Subgroup, genus: int) -> bool:
        return True

    def certify(self, X, H: Subgroup, genus: int) -> Outcome:
        raise NotImplementedError()


class Criteria:

    """
    Registry of the per-factor certifiers, tried in route order.
    """

    # To register a new rule, decorate its Certifier subclass with Criteria.certifier.
    certifiers: Dict[Route, Certifier] = {}

    @staticmethod
    def certifier(route: Route) -> Callable:
        """
        Register the decorated Certifier subclass for the given route.
        """
        def decorator(cls):
            cls.route = route
            Criteria.certifiers.update({route: cls()})
            return cls

        return decorator

    @staticmethod
    def ordered() -> List[Certifier]:
        return [Criteria.certifiers[route] for route in sorted(Criteria.certifiers, key=lambda r: r.value)]

    @staticmethod
    def certify_factor(X, H: Subgroup, genus: int, multiplicity: int = 1) -> Optional[FactorCertificate]:
        """
        A certificate from the first registered rule that accepts X/H, or None.
        """
        for rule in Criteria.ordered():
            if not rule.applies(X, H, genus):
                continue
            outcome = rule.certify(X, H, genus)
            if outcome:
                return FactorCertificate(H, rule.route, genus, outcome.evidence, multiplicity)
        return None


@Criteria.certifier(Route.GENUS_ZERO)
class GenusZeroCertifier(Certifier):

    def applies(self, X, H, genus):
        return genus == 0

    def certify(self, X, H, genus):
        return Outcome(True, {'genus': 0})
