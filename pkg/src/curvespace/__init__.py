"""curvespace: a vector-space algebra of convex plane curves.

Convex curves are represented by the logarithm of their radius function
``r(theta) = ds/dtheta``; in that representation shapes add, scale, and
decompose like elements of a function space.  The package constructs
elementary single-frequency shapes, mixes them, renders them into plane
curves and figures, extracts spectra, and converts to and from the
classical angle-of-tangent (Fourier-descriptor) representation, which
serves as the baseline the log-radius calculus improves on.
"""

from .errors import (
    AperiodicProfileError,
    ConvexityError,
    CurveSpaceError,
    DegenerateCurveError,
    DisjointDomainError,
    DomainError,
    FormatError,
    NonClosingError,
    NumericRangeError,
    RepresentabilityError,
)
from .profiles import (
    ElementaryComponent,
    LogRadiusProfile,
    add,
    elementary,
    inner_product,
    norm,
    scalar_multiply,
    spiral_limit_profile,
    structurally_close,
    unit_circle,
)
from .render import (
    PlaneCurve,
    closure_gap,
    normalize,
    render,
    rotational_symmetry_error,
    weighted_centroid,
)
from .spectrum import (
    ShapeSpectrum,
    SpectrumBin,
    decompose,
    energy,
    reconstruct,
    truncate,
)
from .angle import (
    AngleConversion,
    AngleProfile,
    add_angle_profiles,
    angle_to_logradius,
    convexity_margin,
    evaluate_angle,
    logradius_to_angle,
    render_from_angle,
    single_component,
    turning_rate,
)
from .formats import (
    CurveStyle,
    GridLayout,
    read_angle,
    read_curve_csv,
    read_profile,
    read_samples_csv,
    write_angle,
    write_curve_csv,
    write_profile,
    write_svg,
)
from .gallery import regen_figures

__version__ = "0.1.0"

__all__ = [
    "AngleConversion",
    "AngleProfile",
    "AperiodicProfileError",
    "ConvexityError",
    "CurveSpaceError",
    "CurveStyle",
    "DegenerateCurveError",
    "DisjointDomainError",
    "DomainError",
    "ElementaryComponent",
    "FormatError",
    "GridLayout",
    "LogRadiusProfile",
    "NonClosingError",
    "NumericRangeError",
    "PlaneCurve",
    "RepresentabilityError",
    "ShapeSpectrum",
    "SpectrumBin",
    "add",
    "add_angle_profiles",
    "angle_to_logradius",
    "closure_gap",
    "convexity_margin",
    "decompose",
    "elementary",
    "energy",
    "evaluate_angle",
    "inner_product",
    "logradius_to_angle",
    "norm",
    "normalize",
    "read_angle",
    "read_curve_csv",
    "read_profile",
    "read_samples_csv",
    "reconstruct",
    "regen_figures",
    "render",
    "render_from_angle",
    "rotational_symmetry_error",
    "scalar_multiply",
    "single_component",
    "spiral_limit_profile",
    "structurally_close",
    "truncate",
    "turning_rate",
    "unit_circle",
    "weighted_centroid",
    "write_angle",
    "write_curve_csv",
    "write_profile",
    "write_svg",
]
