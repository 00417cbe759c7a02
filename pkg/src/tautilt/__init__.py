"""Support τ-tilting theory for finite-dimensional quiver algebras, computed
with exact rational arithmetic inside exact subcategories of module categories."""
from .algebra import Algebra, ParseError, algebra_from_text, build_algebra, load_algebra, parse_algebra
from .homology import CapExceeded, Pool, enumerate_indecomposables
from .rep import Morphism, Rep
from .subcat import Subcat, UnknownModule, parse_spec
from .tau_tilt import ExactContext, fac_context, make_context, module_context

__all__ = [
    "Algebra", "CapExceeded", "ExactContext", "Morphism", "ParseError", "Pool", "Rep", "Subcat",
    "UnknownModule", "algebra_from_text", "build_algebra", "enumerate_indecomposables",
    "fac_context", "load_algebra", "make_context", "module_context", "parse_algebra", "parse_spec",
]
__version__ = "0.1.0"
