"""Kernel backend selection.

The compiled extension is preferred when it built; the pure-Python kernels are
the fallback.  Both expose the same four functions with identical semantics.
"""

try:
    from besselsums import _fastkernels as _kernels

    BACKEND = "compiled"
except ImportError:  # extension not built on this install
    from besselsums import _purekernels as _kernels

    BACKEND = "pure-python"

recip_gamma = _kernels.recip_gamma
bessel_j_series = _kernels.bessel_j_series
tricomi_series = _kernels.tricomi_series
wright_series = _kernels.wright_series


def kernel_modules():
    """Importable kernel implementations, keyed by name (for the benchmark)."""
    from besselsums import _purekernels

    mods = {"pure-python": _purekernels}
    try:
        from besselsums import _fastkernels

        mods["compiled"] = _fastkernels
    except ImportError:
        pass
    return mods
