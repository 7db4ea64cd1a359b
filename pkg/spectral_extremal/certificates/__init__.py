"""
Forbidden substructures of the maximum degree 3 and 4 extremal graphs, the
replacements that rule them out, and numerical certificates for the polynomial
inequalities and quadratic form identities the replacements rest on.
"""

from .patterns import PatternSpec, forbidden_patterns, pattern_by_name  # noqa: F401
from .surgery import (  # noqa: F401
    Violation,
    apply_replacement,
    audit_forbidden,
    embed_pattern,
    is_admissible,
    replacement_delta,
)
from .hosts import PatternHost, build_host, d1_control_host, pattern_hosts  # noqa: F401
from .polynomials import (  # noqa: F401
    PairReport,
    SignReport,
    delta3_pair,
    delta3_pair_report,
    f_poly,
    g_poly,
    h_poly,
    polynomial_suite,
)
from .identities import (  # noqa: F401
    IdentityReport,
    identity_suite,
    m4_local,
    quadratic_form_identities,
)
