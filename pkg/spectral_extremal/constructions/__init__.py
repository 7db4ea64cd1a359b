from .gadgets import (  # noqa: F401
    Gadget,
    block_g1,
    block_g2,
    block_g3,
    block_h,
    parse_edges,
)
from .families import (  # noqa: F401
    FamilySpec,
    chain,
    default_split,
    extend_chain,
    extremal_delta3,
    extremal_delta4,
    extremal_graph,
    family_spec,
    g_family,
    h_family,
    havel_hakimi,
    is_graphic,
    near_regular_sequence,
    realize_connected,
)
from .vectors import (  # noqa: F401
    TestVector,
    TrigSums,
    assemble_test_vector,
    gap_upper_closed_form,
    gap_upper_rayleigh,
    test_vector,
    trig_sums,
)
