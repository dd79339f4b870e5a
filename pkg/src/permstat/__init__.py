"""(X,Y)-descents, adjacencies, place-value pairs and excedances over S_n."""

from .distribution import Distribution, compute, dist_brute
from .permutation import Permutation, enumerate_sn, from_cycles, inverse, reverse, to_cycles
from .setspec import ALL, EVEN, ODD, SetSpec, parse_setspec
from .stats import evaluate, parse_stat
from .transforms import build_theta, foata, foata_inverse

__version__ = "0.1.0"

__all__ = [
    "Distribution", "compute", "dist_brute", "Permutation", "enumerate_sn", "from_cycles",
    "inverse", "reverse", "to_cycles", "ALL", "EVEN", "ODD", "SetSpec", "parse_setspec",
    "evaluate", "parse_stat", "build_theta", "foata", "foata_inverse",
]
