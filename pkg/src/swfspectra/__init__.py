"""Seiberg-Witten Floer spectra of elliptic and Brieskorn 3-manifolds.

Exact computations with semifree circle-equivariant cell presentations:
construction from Morse data, duality, forgetting the action, stable
homotopy groups in stems 0..3, and the gluing pairing.
"""
from .applications import (
    NucleusParams,
    ObstructionReport,
    Verdict,
    adjunction_negative_check,
    adjunction_positive_check,
    exotic_nuclei_check,
    relative_sw_series,
)
from .catalog import (
    BrieskornParams,
    LensParams,
    Orientation,
    brieskorn_morse_data,
    n_invariant_lens,
    swf_brieskorn,
    swf_lens,
    swf_poincare,
    swf_sphere,
)
from .cells import Cell, CellKind, D2Verdict, d2_admissible, dual_cell, morphism_group
from .errors import *  # noqa: F401,F403
from .forget import forget
from .gluing import RelativeInvariantClass, compose_cobordism, duality_pairing, glue
from .homotopy import HomotopyGroup, forgetful_on_classes, homotopy_group, les_audit
from .laurent import LaurentPolynomial
from .spectrum import (
    CriticalPoint,
    MorseData,
    PointKind,
    SpectrumPresentation,
    build_from_morse,
    describe,
    dualize,
    from_json,
    suspend,
    to_json,
)
from .stems import StemElement, stable_stem, stem_product
from .zlinalg import FGAbelianGroup, IntegerMatrix, cokernel, smith_normal_form

__version__ = "0.1.0"
