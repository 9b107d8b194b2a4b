import cmkit.criteria.certificates as certificates
import cmkit.criteria.statement_a as statement_a
import cmkit.criteria.statement_b as statement_b
import cmkit.criteria.relations as relations
import cmkit.criteria.streit as streit
import cmkit.criteria.verdict as verdict

# Avoid linter warnings for package shortcuts definitions.
certificates
statement_a
statement_b
relations
streit
verdict
