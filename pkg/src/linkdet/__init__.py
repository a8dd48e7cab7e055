"""Link determinants from signed Tait graphs.

Four independent routes to the determinant (signed spanning trees, the
signed Laplacian, the FH polynomial and the Kauffman bracket at a primitive
eighth root of unity), spectra over all sign assignments via a fast
Walsh-Hadamard transform, and combinatorial-map tools for link components
and antipodal symmetry.
"""

from .errors import (
    DisconnectedGraphError,
    DocumentError,
    LimitExceededError,
    LinkdetError,
    MapError,
    MissingBlockError,
    PreconditionError,
)
from .fh import (
    FHPolynomial,
    SpectrumReport,
    det_via_fh,
    direct_transform,
    evaluate,
    fh_explicit,
    fh_recursive,
    parity_form,
    spectrum,
)
from .graph import (
    Edge,
    SignedMultigraph,
    contract,
    delete,
    matrix_tree_signed,
    signed_tree_count,
    spanning_trees,
    tree_count,
)
from .kauffman import CyclotomicInt, bracket_at_primitive8, det_via_bracket, state_circles
from .planemap import MedialMap, PlaneMap, build_plane_map, dual, link_components, medial
from .io import GraphDocument, builtin, load_document, parse_document, serialize_document

__version__ = "0.1.0"
