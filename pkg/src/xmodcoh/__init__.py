"""Exact low-degree cohomology of finite crossed modules and simplicial groups."""

from .abelian import AbHom, FPAbelianGroup, Subgroup, Subquotient, smith_normal_form
from .bar import EquivariantHoms, group_cohomology
from .cmcohom import CmComplex, em_groups, em_h2, st_groups
from .crossed import CrossedModule, crossed_module_from_tables, homotopy, postnikov
from .groups import AxiomError, FiniteGroup, cyclic_group
from .modules import GModule, trivial_module
from .simplicial import cosk0, cosk1, moore, truncate0, truncate1, validate_tsg
from .stdext import StandardExtension

__version__ = "0.1.0"

__all__ = [
    "AbHom",
    "AxiomError",
    "CmComplex",
    "CrossedModule",
    "EquivariantHoms",
    "FPAbelianGroup",
    "FiniteGroup",
    "GModule",
    "StandardExtension",
    "Subgroup",
    "Subquotient",
    "cosk0",
    "cosk1",
    "crossed_module_from_tables",
    "cyclic_group",
    "em_groups",
    "em_h2",
    "group_cohomology",
    "homotopy",
    "moore",
    "postnikov",
    "smith_normal_form",
    "st_groups",
    "trivial_module",
    "truncate0",
    "truncate1",
    "validate_tsg",
]
