"""Python access to the dgbo solver and estimate checks."""
from ._dgbo import (  # noqa: F401
    DgboError,
    Dispersion,
    __version__,
    check_conditions,
    chi,
    chi_k,
    diagnostics,
    parse_config,
    solve,
    worst_constant,
)
