"""Kernel backend selection.

Imports the compiled kernels when available, falling back to the pure-Python
implementation.  Set ``MENGER_PURE=1`` to force the fallback (used by the
benchmark and the backend-agreement tests).
"""

import os

if os.environ.get("MENGER_PURE"):
    from ._kernels_py import (  # noqa: F401
        BACKEND,
        first_eq2_violation,
        first_noncontractive,
        first_nonidempotent,
        first_nonisotone,
        meet_table,
        superpose_tables,
    )
else:
    try:
        from ._kernels_c import (  # type: ignore[no-redef]  # noqa: F401
            BACKEND,
            first_eq2_violation,
            first_noncontractive,
            first_nonidempotent,
            first_nonisotone,
            meet_table,
            superpose_tables,
        )
    except ImportError:
        from ._kernels_py import (  # type: ignore[no-redef]  # noqa: F401
            BACKEND,
            first_eq2_violation,
            first_noncontractive,
            first_nonidempotent,
            first_nonisotone,
            meet_table,
            superpose_tables,
        )
