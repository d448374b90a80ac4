from .satisfaction import SatSet
from .satisfaction import sat
from .traces import Trace
from .traces import validate_trace
from .verify import Verdict
from .verify import verify

__all__ = ["SatSet", "Trace", "Verdict", "sat", "validate_trace", "verify"]
