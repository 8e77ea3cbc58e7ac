"""Nonabelian cohomology of finite crossed modules by explicit cocycle enumeration."""

from .catalog import Instance, builtin, discover
from .errors import (
    BudgetExceeded,
    NoUniqueTranslate,
    NotAGroup,
    NotCentrable,
    NotQuasiAbelian,
)
from .grp import FiniteGroup, GammaGroup, GammaHom, GroupHom, build_group
from .xmod import CrossedModule, center_complex, is_quasi_abelian, validate

__all__ = [
    "BudgetExceeded",
    "CrossedModule",
    "FiniteGroup",
    "GammaGroup",
    "GammaHom",
    "GroupHom",
    "Instance",
    "NoUniqueTranslate",
    "NotAGroup",
    "NotCentrable",
    "NotQuasiAbelian",
    "build_group",
    "builtin",
    "center_complex",
    "discover",
    "is_quasi_abelian",
    "validate",
]
