import cmkit.cli.commands.analyze as analyze
import cmkit.cli.commands.streit as streit
import cmkit.cli.commands.table as table
import cmkit.cli.commands.quotients as quotients
import cmkit.cli.commands.verify as verify

# Avoid linter warnings for package shortcuts definitions.
analyze
streit
table
quotients
verify
