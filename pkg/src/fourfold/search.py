"""Backend selection and witness search strategy.

Two interchangeable backends run the lattice sweeps: a compiled kernel
(fourfold._kernel, built from Cython) and a pure-Python twin
(fourfold._pure).  The compiled kernel computes in int64, so a call is only
routed there after checking an a-priori bound on every intermediate value;
anything larger, and any environment without the extension, uses the pure
backend.  Setting FOURFOLD_PURE=1 forces the pure backend, which the
benchmark uses for comparison.

Both backends enumerate in the same order, so results are identical
bit for bit.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pure
from .forms import IntersectionForm

try:
    from . import _kernel
except ImportError:  # pragma: no cover - depends on the build environment
    _kernel = None

_INT64_HEADROOM = 2**61


def compiled_available() -> bool:
    return _kernel is not None


def backend_name() -> str:
    """Name of the backend the next call would use (modulo size guards)."""
    if _kernel is None or os.environ.get("FOURFOLD_PURE"):
        return "pure"
    return "compiled"


def _fits_int64(qflat: Sequence[int], limit: int, target: int) -> bool:
    # worst |q(h)| <= sum|Q_ij| * limit^2; cross sums are strictly smaller
    weight = sum(abs(x) for x in qflat)
    return weight * limit * limit < _INT64_HEADROOM and abs(target) < _INT64_HEADROOM


def _backend(qflat, limit, target):
    if _kernel is None or os.environ.get("FOURFOLD_PURE"):
        return _pure
    if _fits_int64(qflat, limit, target):
        return _kernel
    return _pure


def _flatten(form: IntersectionForm) -> list[int]:
    return [form.matrix.entry(i, j) for i in range(form.rank) for j in range(form.rank)]


def _check_inputs(form: IntersectionForm, residues: Sequence[int], bound: int) -> None:
    if len(residues) != form.rank:
        raise ValueError(f"residue vector must have length {form.rank}")
    if any(r not in (0, 1) for r in residues):
        raise ValueError("residues must be 0 or 1")
    if bound < 0:
        raise ValueError("search bound must be nonnegative")


def find_minimal_witness(
    form: IntersectionForm,
    residues: Sequence[int],
    bound: int,
    target: int,
) -> tuple[int, ...] | None:
    """Solution of q(h) = target, h = residues mod 2, max|h_i| <= bound.

    Returns the lexicographically smallest solution among those of minimal
    max-norm, or None when the box holds no solution.  Strategy: one full
    lexicographic sweep decides existence cheaply (it can stop at the first
    hit); the max-norm of that hit then caps a second pass over max-norm
    shells in increasing order.
    """
    _check_inputs(form, residues, bound)
    qflat = _flatten(form)
    backend = _backend(qflat, bound, target)
    first = backend.first_hit(qflat, list(residues), form.rank, bound, target)
    if first is None:
        return None
    cap = max((abs(c) for c in first), default=0)
    for shell in range(cap + 1):
        hit = backend.first_hit_on_shell(qflat, list(residues), form.rank, shell, target)
        if hit is not None:
            return tuple(int(c) for c in hit)
    raise AssertionError("shell pass missed a witness the full sweep found")


def enumerate_witnesses(
    form: IntersectionForm,
    residues: Sequence[int],
    bound: int,
    target: int,
) -> list[tuple[int, ...]]:
    """All solutions in the box, in lexicographic order."""
    _check_inputs(form, residues, bound)
    qflat = _flatten(form)
    backend = _backend(qflat, bound, target)
    hits = backend.all_hits(qflat, list(residues), form.rank, bound, target)
    return [tuple(int(c) for c in h) for h in hits]
