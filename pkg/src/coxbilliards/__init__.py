"""Exact billiards dynamics of noninvertible toggles on Coxeter groups."""

from .scalars import CosField, Scalar, field_for_labels
from .system import (
    INF,
    CoxeterSystem,
    bilinear_form,
    is_finite,
    parabolic,
    AcyclicOrientation,
    ao_of_coxeter_word,
    flip_equivalent,
    fold,
)
from .elements import (
    GroupElement,
    identity,
    element_of,
    left_descents,
    length,
    reduced_word,
    is_reduced,
    inversion_roots,
    commutation_canonical,
    long_element,
    demazure_product,
    m_of_c,
    enumerate_group,
)
from .convex import (
    YES,
    NO,
    UNKNOWN,
    Effort,
    OracleUndecided,
    ConvexSet,
    hull_expand,
    in_RL,
    separators,
    stratum_of,
    transmitting_roots,
    tau_equivalent,
)
from .billiards import (
    toggle,
    apply_toggle_word,
    pro_c,
    run_trajectory,
    sort_check,
    is_heavy_bounded,
    FiniteToggleTable,
)
from .walkgraph import (
    build_graph,
    betwixt,
    search_plausible_walks,
    lift_walk,
    verify_certificate,
    WalkCertificate,
)

__version__ = "0.1.0"
