"""Pre-quantization levels of compact simple Lie groups.

Computes the pullback of the degree-3 generator under the lifted commutator
map on finitely presented mod-p cohomology Hopf algebras, classifies the
resulting obstruction through Bockstein data, and assembles the smallest
pre-quantizable level l0 per group.
"""

from .catalog import Catalog, default_catalog
from .engine import (
    ObstructionReport,
    PrimeLocalResult,
    assemble_l0,
    classify_obstruction,
    commutator_pullback,
    ord_additive_oracle,
)
from .graded import (
    AlgebraPresentation,
    CoefficientRing,
    Element,
    Generator,
    exterior,
    truncated_poly,
)
from .groupspec import GroupSpec, parse_group_spec, render_group_spec
from .hopf import (
    BocksteinData,
    HopfPresentation,
    InducedMap,
    TensorPower,
    compose,
    switch_map,
    verify_hopf_axioms,
)

__version__ = "0.1.0"
SCHEMA_VERSION = "1"
