"""Exact global heights of flag varieties from root-system data."""

from .rootsys import (
    CartanSpec,
    Root,
    RootSystem,
    build_root_system,
    parse_cartan_spec,
)
from .weyl import (
    DEFAULT_CAP,
    CosetList,
    GroupTooLarge,
    WeylElement,
    coset_representatives,
    dotted_act,
    element_from_word,
    enumerate_weyl,
    longest_element,
    subgroup_order,
    to_dominant_dotted,
    weyl_order,
)
from .parabolic import (
    NotAmple,
    ParabolicData,
    PsiGrading,
    build_parabolic,
    check_ample,
    psi_grading,
)
from .charpoly import (
    BivariatePolynomial,
    NotRegular,
    char_value,
    dim_polynomial,
    f_j,
    formal_character,
    freudenthal,
    kostant_multiplicity,
    lefschetz_localized_character,
    skew_symmetry_holds,
    weyl_dim,
)
from .height import (
    HeightResult,
    MethodDisagreement,
    NotRegularY,
    closed_form,
    default_y,
    denominator_check,
    height_all_methods,
    height_fixed_point,
    height_grassmannian,
    height_harmo_bott,
    height_hypersurface,
    height_projective,
    height_quadric_even,
    height_quadric_odd,
    height_substitution,
    ht_coefficient,
)
from .jantzen import (
    LogCharacterCombo,
    jantzen_rhs,
    lambda0_component,
    verify_parabolic_independence,
    verify_w0_transform,
)

__version__ = "0.1.0"
