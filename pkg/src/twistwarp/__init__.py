"""Warping degrees, up-down labelings and Z2 invariants of twisted knots and braids."""

from .braid import (
    BraidParseError,
    BraidRangeError,
    BraidWord,
    Generator,
    Kind,
    Permutation,
    bar,
    parse_braid_word,
    permutation,
    render_braid_word,
    sigma,
    virt,
)
from .gauss import (
    ClosureNotKnotError,
    GaussParseError,
    Token,
    TwistedGaussCode,
    braid_closure_code,
    mirror,
    parse_gauss_code,
    reverse_orientation,
    td_code,
)
from .kernels import BACKEND
from .labeling import (
    AffineLabelMap,
    Verdict,
    Z2LabelMap,
    Z2Polynomial,
    nontriviality_witness,
    propagate_labels,
    r2_indicator,
    updown_map,
    z2_map,
    z2_polynomial,
)
from .moves import (
    MoveSite,
    apply_move,
    bounded_search,
    enumerate_moves,
    parse_move,
    random_walk,
)
from .warping import (
    UpDownFamily,
    WarpingReport,
    check_relations,
    edge_degrees,
    updown_solver,
    warping_degree,
    warping_labeling,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
