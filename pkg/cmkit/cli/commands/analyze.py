from cmkit.cli.command import Command, Commands
from cmkit.cli.reports import quotient_report, relation_report, surface_report, verdict_report
from cmkit.criteria.verdict import candidate_subgroups, cm_verdict
from cmkit.criteria.relations import verify_isogeny_relation
from cmkit.surfaces.gm_family import known_subgroup_collection
from cmkit.surfaces.surface import quotient_surface


@Commands.command('analyze')
class AnalyzeCommand(Command):

    help = 'genus, positive-genus quotients and the CM verdict'

    def add_arguments(self, parser):
        parser.add_argument('--no-streit', action='store_true',
                            help='do not let Streit\'s test decide, search for a relation instead')

    def run(self, context):
        X, T = context.surface, context.table
        payload = {'source': context.request.source}
        payload.update(surface_report(X))
        payload['quotients'] = [quotient_report(quotient_surface(X, H)) for H in candidate_subgroups(X)]
        payload.update(verdict_report(cm_verdict(X, T, context.request.search_limit, context.request.streit)))

        instance = context.source.instance
        if instance is not None and context.request.vector is None:
            payload['expected'] = instance.expected
            known = known_subgroup_collection(instance)
            payload['known_relation'] = relation_report(known, verify_isogeny_relation(X, T, known))
        return payload

    def summary(self, payload):
        return f'genus={payload["genus"]} status={payload["status"]} route={payload["route"]}'
