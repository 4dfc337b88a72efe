"""Exact FFT over truncated p-adic rings.

The pipeline: pick a transform length s coprime to p (planner), realize a
primitive s-th root of unity in F_p[Y]/f (tower), lift it to Z/p^K
(lifting), then run exact mixed-radix transforms and polynomial products
in (Z/p^K)[X]/F (fft). build_pipeline wires the stages together.
"""

from .errors import InternalError, PadicFFTError, PreconditionError
from .fft import FFTPlan, cyclic_convolution, dft, idft, make_plan, naive_dft, poly_multiply
from .lifting import LiftResult, expand_lifted_factor, newton_lift_root
from .orders import FactoredOrder, cyclotomic_degree, multiplicative_order, tower_step_degree
from .padic import PadicContext, RingExtension
from .pipeline import PipelineResult, build_pipeline
from .planner import PlannerResult, asymptotic_report, choose_parameters, report_table
from .selftest import run_selftest
from .tower import UnityRoot, build_root_of_unity, cz_split

__version__ = "0.1.0"

__all__ = [
    "FFTPlan",
    "FactoredOrder",
    "InternalError",
    "LiftResult",
    "PadicContext",
    "PadicFFTError",
    "PipelineResult",
    "PlannerResult",
    "PreconditionError",
    "RingExtension",
    "UnityRoot",
    "asymptotic_report",
    "build_pipeline",
    "build_root_of_unity",
    "choose_parameters",
    "cyclic_convolution",
    "cyclotomic_degree",
    "cz_split",
    "dft",
    "expand_lifted_factor",
    "idft",
    "make_plan",
    "multiplicative_order",
    "naive_dft",
    "newton_lift_root",
    "poly_multiply",
    "report_table",
    "run_selftest",
    "tower_step_degree",
    "__version__",
]
