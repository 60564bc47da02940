"""Higher-order predictors for the LPC curve at generalized Hopf points.

Computes Bautin normal-form coefficients through seventh order for ODEs and
discrete delay equations, assembles the fold-of-cycles predictor (parameters,
period, orbit), and verifies it against independently corrected solutions.
"""

from .ghode import CriticalCoeffs, critical_coeffs, first_lyapunov
from .ghode_params import ParamCoeffs
from .linode import GHPointODE, hopf_eigenpair, refine_gh
from .modeldsl import ModelDef, eval_model, parse_model, print_model
from .models import builtin, builtin_names
from .predictor import CoeffSet, PredictorCurve, collect, predict
from .verify import ConvergenceReport, convergence_study

__version__ = "0.1.0"

__all__ = [
    "CriticalCoeffs",
    "ParamCoeffs",
    "GHPointODE",
    "ModelDef",
    "CoeffSet",
    "PredictorCurve",
    "ConvergenceReport",
    "critical_coeffs",
    "first_lyapunov",
    "hopf_eigenpair",
    "refine_gh",
    "parse_model",
    "print_model",
    "eval_model",
    "builtin",
    "builtin_names",
    "collect",
    "predict",
    "convergence_study",
    "__version__",
]
