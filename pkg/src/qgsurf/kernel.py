"""Kernel selection: compiled extension when built, pure Python otherwise."""

try:
    from . import _kernel as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    from . import _kernel_py as _impl

    BACKEND = "python"

scan_chains = _impl.scan_chains
