"""Kernel backend selection.

The jitted backend is used when numba imports cleanly; setting the
environment variable ``BELL4Q_DISABLE_NUMBA`` to 1/true/yes/on (before
the package is imported) forces the pure-numpy backend.  Both backends
implement the same four kernels with identical sampling streams; see
``_numpy.py`` for the contract.

:func:`load_backend` returns a backend module by name so tests and
benchmarks can compare the two directly, whatever the default is.
"""

from __future__ import annotations

import importlib
import os

import numpy as np

_MASK64 = (1 << 64) - 1
_BACKEND_MODULES = {"numpy": "._numpy", "numba": "._numba"}
_loaded: dict = {}


def numba_disabled() -> bool:
    value = os.environ.get("BELL4Q_DISABLE_NUMBA", "")
    return value.strip().lower() in {"1", "true", "yes", "on"}


def load_backend(name: str):
    """Import and return a backend module ("numpy" or "numba")."""
    if name not in _BACKEND_MODULES:
        raise ValueError(f"unknown backend {name!r}; expected one of {sorted(_BACKEND_MODULES)}")
    if name not in _loaded:
        _loaded[name] = importlib.import_module(_BACKEND_MODULES[name], __package__)
    return _loaded[name]


if numba_disabled():
    _impl = load_backend("numpy")
    BACKEND = "numpy"
else:
    try:
        _impl = load_backend("numba")
        BACKEND = "numba"
    except ImportError:
        _impl = load_backend("numpy")
        BACKEND = "numpy"


def backend_name() -> str:
    """Name of the backend serving the module-level kernels."""
    return BACKEND


def _as_amps(amps) -> np.ndarray:
    return np.ascontiguousarray(amps, dtype=np.complex128)


def _as_f8(arr) -> np.ndarray:
    return np.ascontiguousarray(arr, dtype=np.float64)


def _as_i8(arr) -> np.ndarray:
    return np.ascontiguousarray(arr, dtype=np.int64)


def bell_value(amps, bloch, coeffs, slots) -> complex:
    """Correlator value; may carry a tiny imaginary residue for callers to check."""
    return complex(_impl.bell_value(_as_amps(amps), _as_f8(bloch), _as_f8(coeffs), _as_i8(slots)))


def effective_bloch(amps, bloch, coeffs, slots, slot: int) -> np.ndarray:
    """Linear coefficient vector of the correlator in one slot's Bloch vector."""
    return np.asarray(
        _impl.effective_bloch(_as_amps(amps), _as_f8(bloch), _as_f8(coeffs), _as_i8(slots), int(slot))
    )


def seesaw_sweeps(amps, bloch_init, coeffs, slots, max_sweeps: int, tol: float):
    """Run alternating updates from a copy of bloch_init.

    Returns (bloch, trace, converged); bloch_init itself is not modified.
    """
    bloch = np.array(bloch_init, dtype=np.float64)
    if bloch.shape != (8, 3):
        raise ValueError(f"expected (8, 3) settings array, got shape {bloch.shape}")
    bloch, trace, converged = _impl.seesaw_sweeps(
        _as_amps(amps), bloch, _as_f8(coeffs), _as_i8(slots), int(max_sweeps), float(tol)
    )
    return np.asarray(bloch), np.asarray(trace), bool(converged)


def sample_counts(cdf, shots: int, seed: int) -> np.ndarray:
    """Multinomial counts for one measurement distribution (16 cells)."""
    counts = _impl.sample_counts(_as_f8(cdf), int(shots), np.uint64(int(seed) & _MASK64))
    return np.asarray(counts, dtype=np.int64)
