"""Backend selection for the integer kernels.

The compiled extension is preferred when it was built; otherwise the
pure-Python module is used.  Both expose the same functions, re-exported
here so callers write ``kernels.mul_trunc(...)`` and pick up a switch made
with :func:`use`.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

NAMES = (
    "mul_trunc",
    "expand_euler",
    "log_derivative_recurrence",
    "inverse_scaled",
    "hook_rows",
    "hook_sum",
)

BACKEND = ""


def available() -> list[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def module(name: str) -> ModuleType:
    """Return the kernel module for ``name`` ('python' or 'compiled')."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def use(name: str) -> None:
    """Rebind the module-level kernel functions to backend ``name``."""
    global BACKEND
    impl = module(name)
    g = globals()
    for fn in NAMES:
        g[fn] = getattr(impl, fn)
    BACKEND = name


use("compiled" if _ckernels is not None else "python")
