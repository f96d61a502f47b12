"""residua: radicals, residuals, and extension-closures of finite group classes.

A deterministic toolkit for computing X-residuals and X-radicals of concrete
permutation groups, deciding membership in the supported group classes, and
reproducing the optimal constants and sharpness data attached to the
residual-order inequality |G^poly(X)| > |G|^gamma.
"""

from .bsgs import PermGroup, bsgs_build
from .errors import Caps, CapExceeded, DataError, InputError, ResiduaError, UndecidableAtScale
from .perm import Permutation

__all__ = [
    "PermGroup",
    "Permutation",
    "bsgs_build",
    "Caps",
    "CapExceeded",
    "DataError",
    "InputError",
    "ResiduaError",
    "UndecidableAtScale",
]

__version__ = "0.1.0"
