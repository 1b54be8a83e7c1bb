"""qhact: exact computations with pointed Hopf algebra actions on quantum algebras.

Modules:
  cyclotomic  exact arithmetic in Q(zeta_L), the scalar domain
  ncalg       presented quantum algebras with canonical-form rewriting
  hopf        acting Hopf data, action operators, module-algebra verification
  classify    exhaustive searches, pair compatibility, maximum rank
  invariants  fixed rings, trace series, Molien, reflections
  qdet        quantum determinant, Laplace expansion, descent conditions
  cli         batch front end (also exposed as the `qhact` console script)
  suite       the acceptance / reproduction suite
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .cyclotomic import Cyc, InputError, root_of_unity, zeta

__version__ = "0.1.0"

__all__ = [
    "Cyc",
    "InputError",
    "root_of_unity",
    "zeta",
    "KERNEL_BACKEND",
    "__version__",
]
