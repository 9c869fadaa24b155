"""Lusztig orders on positive roots, admissible planes and Cauchon diagrams."""
from .diagrams import (
    ColumnCountReport,
    Diagram,
    brute_force_count,
    count_all,
    count_column,
    enumerate_all,
    enumerate_column,
    is_cauchon,
    per_start_counts,
    verify_bijection,
    weyl_word_of_diagram,
)
from .errors import (
    CauchonError,
    DomainError,
    NumberingError,
    OrderError,
    RankError,
    SizeError,
    WordError,
)
from .implications import Arrow, Choice, ImplicationGraph, derive_all, implications_from_plane, to_dot
from .lusztig import (
    ColumnView,
    GoodNumbering,
    LusztigOrder,
    canonical_order,
    canonical_word,
    columns,
    default_good_numbering,
    is_convex,
    is_good_numbering,
    lusztig_order,
    order_to_word,
    s_d_partner,
    word_to_order,
)
from .planes import AdmissiblePlane, PlaneType, enumerate_admissible_planes, rank2_slice
from .roots import (
    CartanData,
    LieType,
    WeylElement,
    apply,
    build_cartan,
    inner_product,
    is_reduced,
    length,
    positive_roots,
    reflect,
    weyl_order,
    word_product,
)

__version__ = "0.1.0"
