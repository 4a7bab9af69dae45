"""Cooperative games on simplicial complexes.

Efficiency notions (generic, traditional, probabilistic, simplicial), marginal
contribution value schemes, inclusion-exclusion total payoffs and the matroid
shelling reduction, each paired with a brute-force oracle.
"""
from .complex import (
    Face,
    SimplicialComplex,
    Subcomplex,
    dimension,
    face,
    face_key,
    faces,
    facets_of,
    from_facets,
    full_simplex,
    intersect_subcomplexes,
    is_facet,
    is_pure,
    link_face,
    link_vertex,
    star_face,
    union_subcomplexes,
    vertices,
)
from .errors import ScxError
from .game import (
    Game,
    cardinality_game,
    carrier_game,
    complex_worth,
    evaluate,
    random_game,
    scale,
    zero_game,
)
from .matroid import (
    ShellingOrder,
    is_matroid,
    make_order,
    rank,
    shelling_order,
    uniform_matroid,
    verify_shelling,
)
from .payoff import (
    CoefficientFamily,
    FormulaComparison,
    alternating_payoff,
    compare_formulas,
    d_coefficients,
    delta_j,
    generic_payoff,
    matroid_reduction_payoff,
    probabilistic_payoff,
    sequential_payoff,
    simplicial_payoff,
    traditional_family,
    traditional_payoff,
    uniform_family,
)
from .scheme import (
    ValueScheme,
    carrier_converse_check,
    check_efficiency,
    group_value,
    induced_coefficients,
    phi,
    shapley_scheme,
    solve_scheme,
)
from .oracle import oracle_characterization, oracle_d_coefficients, oracle_order_independence

__version__ = "0.1.0"
