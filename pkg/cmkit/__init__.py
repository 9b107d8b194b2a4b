import cmkit.core as core
import cmkit.surfaces as surfaces
import cmkit.criteria as criteria
import cmkit.cli as cli

from cmkit.core.groups import FiniteGroup, Subgroup
from cmkit.core.characters import character_table
from cmkit.surfaces.surface import GeneratingVector, QuasiplatonicSurface, Signature
from cmkit.surfaces.gm_family import build_gm, canonical_vector
from cmkit.criteria.verdict import cm_verdict

# Avoid linter warnings for package shortcuts definitions.
core
surfaces
criteria
cli

FiniteGroup
Subgroup
character_table
GeneratingVector
QuasiplatonicSurface
Signature
build_gm
canonical_vector
cm_verdict

get_num_procs = core.primitives.get_num_procs
set_num_threads = core.primitives.set_num_threads
get_max_threads = core.primitives.get_max_threads
set_schedule = core.primitives.set_schedule
get_schedule = core.primitives.get_schedule
get_max_order = core.primitives.get_max_order
set_max_order = core.primitives.set_max_order
get_search_limit = core.primitives.get_search_limit
set_search_limit = core.primitives.set_search_limit
