from cmkit.cli.command import Command, Commands
from cmkit.cli.reports import relation_report
from cmkit.cli.sources import load_relation
from cmkit.core.errors import MalformedRequest
from cmkit.criteria.certificates import Criteria
from cmkit.criteria.relations import verify_isogeny_relation


@Commands.command('verify')
class VerifyCommand(Command):

    help = 'check an isogeny relation and certify its factors'

    def add_arguments(self, parser):
        parser.add_argument('--relation', help='relation as JSON text or a JSON file (an analyze report works too)')

    def run(self, context):
        if context.request.relation is None:
            raise MalformedRequest('verify needs --relation')
        X, T = context.surface, context.table
        R = load_relation(X.group, context.request.relation)
        check = verify_isogeny_relation(X, T, R)
        certificates = [Criteria.certify_factor(X, H, g, k) for (H, k), g in zip(R.factors, check.genera)]

        certified = check.holds and all(c is not None for c in certificates)
        payload = {'source': context.request.source, 'genus': X.genus}
        payload['relation'] = relation_report(R, check, certificates)
        payload['irreducible_report'] = check.report
        payload['status'] = 'CM_CERTIFIED' if certified else 'INCONCLUSIVE'
        return payload

    def summary(self, payload):
        return f'holds={payload["relation"]["holds"]} status={payload["status"]}'
