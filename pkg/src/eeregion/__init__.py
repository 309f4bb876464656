"""Energy-efficiency region toolkit for MISO symbiotic-radio links.

Computes the individually optimal operating points of the active
transmitter and the passive backscatter device, and traces the Pareto
boundary of their joint energy-efficiency region via bisection over an
efficiency target with an embedded successive-convex-approximation solver.
"""

__version__ = "0.1.0"

from .channel import ChannelSet, RFParams, ScenarioGeometry, gen_channels
from .ee_model import Beamformer, EEPair, ee_pair
from .individual_opt import bd_ee_max, pt_ee_max, pt_rate_max
from .pareto import SolverConfig, boundary_sweep, pareto_point

__all__ = [
    "ChannelSet",
    "RFParams",
    "ScenarioGeometry",
    "gen_channels",
    "Beamformer",
    "EEPair",
    "ee_pair",
    "pt_ee_max",
    "bd_ee_max",
    "pt_rate_max",
    "SolverConfig",
    "pareto_point",
    "boundary_sweep",
    "__version__",
]
