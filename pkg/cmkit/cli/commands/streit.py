from cmkit.cli.command import Command, Commands
from cmkit.criteria.streit import streit_test


@Commands.command('streit')
class StreitCommand(Command):

    help = 'the value of <S^2(analytic character), 1>'

    def run(self, context):
        X = context.surface
        value = streit_test(X, context.table)
        return {
            'source': context.request.source,
            'genus': X.genus,
            'streit_value': value,
            'status': 'CM_CERTIFIED' if X.is_quasiplatonic and value == 0 else 'INCONCLUSIVE',
        }

    def summary(self, payload):
        return f'streit_value={payload["streit_value"]} status={payload["status"]}'
