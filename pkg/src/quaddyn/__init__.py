"""quaddyn: exact arithmetic for quadratic polynomial dynamics over quadratic fields."""

__version__ = "0.1.0"

from .quadfield import QuadElem, format_elem, parse_elem, quad_sqrt  # noqa: E402,F401
from .orbit import build_graph, periodic_points, portrait  # noqa: E402,F401
from .graphcat import builtin_catalog, canonical_code, classify, to_dot  # noqa: E402,F401
