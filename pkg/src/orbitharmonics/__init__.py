"""Exact combinatorics of orbit hypergraphs attached to split symmetric
spaces: harmonic spaces, support functions, length-zero sign characters,
and the dual-group distinction verdicts they cross-validate."""

__version__ = "0.1.0"

from .errors import (
    CatalogError,
    CrossCheckError,
    InconsistencyError,
    ModeError,
    OrbitHarmonicsError,
    SchemaError,
    ValidationError,
)
from .rootsystem import (
    AffineDynkin,
    CartanDatum,
    OmegaCharacter,
    RootSystem,
    all_characters,
    cartan_datum,
    chi0_character,
    chi0_sign,
    fundamental_group,
    generate_roots,
    root_system,
    trivial_character,
)
from .involution import (
    InvolutionDatum,
    PhiAlphaDiagram,
    classify_simple_roots,
    phi_alpha_diagram,
    quasi_split_flag,
    sigma_star,
    two_rho_0,
    validate_involution,
)
from .hypergraph import (
    Edge,
    HarmonicSpace,
    OrbitHypergraph,
    SupportFunction,
    finite_field_pullback,
    full_closed_vertices,
    harmonic_space,
    is_harmonic,
    is_isomorphic,
    make_hypergraph,
    multiplicity,
    product,
    quotient_by_automorphisms,
    rational_form_delete,
    rational_form_double,
    relabel,
    support_function,
    validate,
    verify_dimension_theorem,
)
from .affine import (
    AffineAut,
    AffineOrbitHypergraph,
    affine_support_function,
    check_twisted_equivariance,
    gamma0,
    gamma1,
    make_affine,
    shape_box,
    shape_line,
    shape_rectangle,
    twisted_harmonic_exists,
    twisted_harmonic_witness,
    zero_length_full_vertices,
)
from .dualgroup import (
    a2n_exception_factors,
    parameter_factors_through_iota,
    sl_regular_unipotent_jordan_type,
    sp_embedding_jordan_type,
    steinberg_chi0_distinguished,
    unipotent_criterion,
)
from .catalog import CatalogEntry, load_catalog, default_catalog
from .generator import random_valid_hypergraph
from .verification import run_verifications
