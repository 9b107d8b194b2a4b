import cmkit.cli.sources as sources
import cmkit.cli.reports as reports
import cmkit.cli.command as command
import cmkit.cli.commands as commands
import cmkit.cli.entry as entry

# Avoid linter warnings for package shortcuts definitions.
sources
reports
command
commands
entry
