from cmkit.cli.command import Command, Commands
from cmkit.cli.reports import quotient_report
from cmkit.core.groups import subgroup_classes
from cmkit.surfaces.surface import quotient_surface


@Commands.command('quotients')
class QuotientsCommand(Command):

    help = 'X/H for one subgroup H of every conjugacy class'

    def run(self, context):
        X = context.surface
        rows = [quotient_report(quotient_surface(X, cls[0])) for cls in subgroup_classes(X.group)]
        return {'source': context.request.source, 'genus': X.genus, 'quotients': rows}

    def summary(self, payload):
        return f'genus={payload["genus"]} classes={len(payload["quotients"])}'
