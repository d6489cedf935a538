"""Exact computations for the contact Lie conformal superalgebras K_n.

Modules:

* ``scalar``: Gaussian rationals Q(i).
* ``grassmann``: the Grassmann algebra Lambda(n) and Hodge duality.
* ``kn_algebra``: the lambda-bracket of K_n, the annihilation algebra and vector fields.
* ``so_rep``: irreducible cso(n)-modules from highest weights.
* ``induced``: the induced modules Ind(F) and three independent lambda-action routes.
* ``singular``: the singular-vector solver, predicted families and brute-force search.
* ``contact_forms``: the contact complex Omega / I and its exactness.
* ``cli``: the ``conformalk`` command.
"""

__version__ = "0.1.0"

from .kernels import IMPLEMENTATION as KERNELS
from .scalar import GaussScalar, parse_scalar
from .grassmann import GrassmannElement, parse_monomial
from .kn_algebra import ConformalElement, check_axioms, lambda_bracket
from .so_rep import SoRep, Weight, build_irrep, parse_weight, weyl_dim
from .induced import InducedVector, LambdaAction
from .singular import solve, scan
from .contact_forms import quotient_complex, exactness_check, gamma_weights

__all__ = [
    "__version__", "KERNELS", "GaussScalar", "parse_scalar", "GrassmannElement",
    "parse_monomial", "ConformalElement", "check_axioms", "lambda_bracket", "SoRep",
    "Weight", "build_irrep", "parse_weight", "weyl_dim", "InducedVector", "LambdaAction",
    "solve", "scan", "quotient_complex", "exactness_check", "gamma_weights",
]
