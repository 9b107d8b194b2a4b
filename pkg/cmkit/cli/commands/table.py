from cmkit.cli.command import Command, Commands
from cmkit.cli.reports import table_report


@Commands.command('table')
class TableCommand(Command):

    help = 'the complex character table of the group'

    def run(self, context):
        payload = {'source': context.request.source}
        payload.update(table_report(context.table))
        return payload

    def summary(self, payload):
        return f'order={payload["group_order"]} classes={len(payload["classes"])}'
