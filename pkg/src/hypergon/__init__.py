"""hypergon: desk-scale numerical certification of hyperbolic polygon
isoperimetric inequalities and the filling-pair length bound.

The library computes closed-form geometry of regular hyperbolic polygons
(Gauss-Bonnet angles, perimeters, the genus-indexed right-angled polygon
perimeter), certifies the analytic inequalities behind the partition
perimeter bound on deterministic grids, and cross-checks the bound itself
against a brute-force simplex minimizer.
"""

from .analysis import (
    GridCertificate,
    RootResult,
    certify_concave,
    certify_monotone,
    certify_sign,
    derivative,
    find_root,
    finite_difference,
    verify_chord_property,
)
from .errors import (
    ConvergenceError,
    DomainError,
    GridEvaluationError,
    HypothesisError,
    NoSignChangeError,
    ParameterError,
    SideCountError,
    StepAngleError,
)
from .geometry import (
    GenusParams,
    RegularPolygon,
    interior_angle,
    mg,
    perim_area_deriv,
    perim_continuous,
    perim_regular,
    threshold_angle,
)
from .lemmas import (
    angle_balance,
    check_angle_lemmas,
    fixed_angle_min_halfsides,
    half_perim_fixed_angle,
    half_perim_fixed_angle_second,
    inequality_4_2_margin,
    octagon_perim,
    octagon_perim_second,
    octagon_tangent_gap,
    octagon_tangent_root,
    perim_area_deriv_sq,
    perim_drop,
    quad_split_total,
    side_split_total,
    verify_base_cases,
    verify_chord_octagon,
    verify_cor_4_4,
    verify_f2m_min,
    verify_lemma_4_2,
    verify_lemma_4_3,
    verify_lemma_5_1,
    verify_lemma_6_3,
    verify_lemma_7_1,
    verify_prop_4_1,
    verify_psi_endpoints,
    verify_threshold_instance,
)
from .partitions import (
    FillingCombinatorics,
    MergeStep,
    MergeTrace,
    Partition,
    brute_force_min,
    enumerate_partition_shapes,
    merge_induction,
    random_area_split,
    random_genus_partition,
    random_partition,
    systole_lower_bound,
    verify_main_theorem,
)
from .report import LEMMA_IDS, VerificationReport

__version__ = "0.1.0"
