import cmkit.core.errors as errors
import cmkit.core.primitives as primitives
import cmkit.core.threading as threading
import cmkit.core.groups as groups
import cmkit.core.cyclotomic as cyclotomic
import cmkit.core.characters as characters

# Avoid linter warnings for package shortcuts definitions.
errors
primitives
threading
groups
cyclotomic
characters
