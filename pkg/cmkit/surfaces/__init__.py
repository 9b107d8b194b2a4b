import cmkit.surfaces.surface as surface
import cmkit.surfaces.chevalley_weil as chevalley_weil
import cmkit.surfaces.gm_family as gm_family

# Avoid linter warnings for package shortcuts definitions.
surface
chevalley_weil
gm_family
