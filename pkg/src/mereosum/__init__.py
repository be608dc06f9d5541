"""Finite models of classical mereology, axiomatised by parthood or by sums."""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    Domain,
    MereoStructure,
    PartRelation,
    SumRelation,
    SumStructure,
    all_subsets,
    make_domain,
    part_structure,
    subset_of,
    sum_structure,
)
from .parthood import (  # noqa: E402
    check_part_axioms,
    disjoint_p,
    induced_sum_relation,
    overlap_p,
    sum_induced_holds,
)
from .sums import (  # noqa: E402
    check_sum_axioms,
    derived_theorem_suite,
    induced_part_relation,
    ingr_set,
    ingr_set_family,
    part_induced,
    pre_dense,
    s_disjoint,
    s_overlap,
    sigma,
    sum_wrt_induced,
)
from .equivalence import (  # noqa: E402
    induce_part,
    induce_sum,
    roundtrip_part,
    roundtrip_sum,
    verify_bijection,
)
from .enumeration import canonical_count, enumerate_mereo, enumerate_sum  # noqa: E402
from .fixtures import witness  # noqa: E402
from .documents import dump_model, parse_model  # noqa: E402
from .dot import export_dot  # noqa: E402
