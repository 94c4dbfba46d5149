"""Cubical barycentric subdivision as a face-poset operation.

The faces of the subdivision are the closed intervals [F, G] of the
poset of nonempty faces, ordered by interval inclusion ([F', G'] lies
inside [F, G] iff F <= F' and G' <= G). The dimension of [F, G] is
dim(G) - dim(F); the result has the same dimension as the input.
"""

from __future__ import annotations

from .complex_core import CubicalComplex
from .face_vectors import FVector, f_vector
from .transform import f_of_subdivision

DEFAULT_FACE_BUDGET = 10**7


class FaceBudgetExceeded(RuntimeError):
    """Raised before constructing a subdivision step that would be too big."""

    def __init__(self, step: int, projected: FVector, budget: int):
        self.step = step
        self.projected = projected
        self.budget = budget
        total = sum(projected.entries)
        super().__init__(
            f"subdivision step {step} projects {total} faces "
            f"(f = {list(projected.entries)}), exceeding the budget of {budget}"
        )


def subdivide(K: CubicalComplex) -> CubicalComplex:
    """One round of cubical barycentric subdivision.

    An interval [F, G] is keyed by the pair of the constituent keys. Its
    covered faces are [F', G] for each F' covering F inside G, and
    [F, G'] for each G' covered by G with F below it; both kinds are read
    off the input's cover relation directly.
    """
    lower = K.all_lower_sets()
    parents = K.parents()
    keys = K.keys

    def ikey(f: int, g: int) -> str:
        return f"[{keys[f]}|{keys[g]}]"

    faces: dict[str, tuple[int, list[str]]] = {}
    for g in range(len(K)):
        in_g = lower[g]
        for f in in_g:
            cov = [ikey(f2, g) for f2 in parents[f] if f2 in in_g]
            cov += [ikey(f, g2) for g2 in K.covered[g] if f in lower[g2]]
            faces[ikey(f, g)] = (K.dims[g] - K.dims[f], cov)
    return CubicalComplex.from_keyed_faces(faces)


def subdivide_n(
    K: CubicalComplex, n: int, face_budget: int = DEFAULT_FACE_BUDGET
) -> CubicalComplex:
    """n-fold subdivision by explicit construction.

    Before each step the face count of the result is projected from the
    current f-vector; a step that would exceed face_budget raises
    FaceBudgetExceeded without constructing anything. n=0 returns K
    unchanged.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    f = f_vector(K)
    for step in range(1, n + 1):
        f = f_of_subdivision(f)
        if sum(f.entries) > face_budget:
            raise FaceBudgetExceeded(step, f, face_budget)
        K = subdivide(K)
    return K


def projected_f_after(K: CubicalComplex, n: int) -> FVector:
    """f-vector of the n-fold subdivision, by projection only."""
    if n < 0:
        raise ValueError("n must be >= 0")
    f = f_vector(K)
    for _ in range(n):
        f = f_of_subdivision(f)
    return f
