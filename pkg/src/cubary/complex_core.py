"""Cubical complexes as graded face posets.

A complex is stored purely combinatorially: each face has a dimension, a
set of covered faces (its codimension-1 subfaces), and a canonical key
string. Faces get dense ids 0..N-1 assigned in canonical order, i.e.
sorted by (dimension, key). The empty face is implicit and never stored.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class VoxelSpec:
    """Unit-cube complex given by the minimal corners of its cubes."""

    ambient_dim: int
    corners: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        if not self.corners:
            raise ValueError("voxel spec needs at least one corner")
        for c in self.corners:
            if len(c) != self.ambient_dim:
                raise ValueError(f"corner {c} has wrong length")
        if len(set(self.corners)) != len(self.corners):
            raise ValueError("duplicate corners in voxel spec")


def parse_voxel_text(text: str) -> VoxelSpec:
    """Parse the voxel text format.

    First line ``dim <n>``; every further nonempty line that does not
    start with ``#`` lists n integers (a minimal corner). Duplicates are
    rejected.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("dim "):
        raise ValueError("voxel file must start with 'dim <n>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError("malformed dim line") from exc
    corners = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"corner line {ln!r} does not have {n} entries")
        corners.append(tuple(int(x) for x in parts))
    return VoxelSpec(ambient_dim=n, corners=tuple(corners))


class CubicalComplex:
    """Immutable graded face poset of a cubical complex.

    Attributes
    ----------
    dims:    face dimension per id
    covered: frozenset of covered (codim-1) face ids per id
    keys:    canonical key string per id
    """

    __slots__ = ("dims", "covered", "keys", "_key_to_id")

    def __init__(self, dims, covered, keys):
        dims = tuple(dims)
        covered = tuple(frozenset(c) for c in covered)
        keys = tuple(keys)
        if not dims:
            raise ValueError("empty complexes are not supported")
        if not (len(dims) == len(covered) == len(keys)):
            raise ValueError("inconsistent face table lengths")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "covered", covered)
        object.__setattr__(self, "keys", keys)
        object.__setattr__(self, "_key_to_id", {k: i for i, k in enumerate(keys)})
        if len(self._key_to_id) != len(keys):
            raise ValueError("duplicate canonical keys")

    def __setattr__(self, name, value):
        raise AttributeError("CubicalComplex is immutable")

    @classmethod
    def from_keyed_faces(
        cls, faces: Mapping[str, tuple[int, Iterable[str]]]
    ) -> "CubicalComplex":
        """Build from a key -> (dim, covered keys) table, canonicalizing ids."""
        order = sorted(faces, key=lambda k: (faces[k][0], k))
        ids = {k: i for i, k in enumerate(order)}
        dims, covered = [], []
        for k in order:
            dim, cov = faces[k]
            try:
                covered.append(frozenset(ids[c] for c in cov))
            except KeyError as exc:
                raise ValueError(f"face {k!r} covers unknown face {exc.args[0]!r}")
            dims.append(dim)
        return cls(dims, covered, order)

    def __len__(self):
        return len(self.dims)

    @property
    def n_faces(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return max(self.dims)

    def face_ids_of_dim(self, j: int) -> list[int]:
        return [i for i, d in enumerate(self.dims) if d == j]

    def id_of_key(self, key: str) -> int:
        return self._key_to_id[key]

    def lower_set(self, fid: int) -> frozenset[int]:
        """Ids of all subfaces of fid, including fid itself."""
        self._check_id(fid)
        seen = {fid}
        stack = [fid]
        while stack:
            for c in self.covered[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return frozenset(seen)

    def all_lower_sets(self) -> list[frozenset[int]]:
        """Lower set of every face; single bottom-up pass over the table.

        Assumes covered ids point to lower ids (true for canonically
        ordered, graded complexes); falls back to per-face search when
        the assumption fails so it stays usable on broken input.
        """
        out: list[frozenset[int] | None] = [None] * len(self.dims)
        for i in range(len(self.dims)):
            acc = {i}
            ok = True
            for c in self.covered[i]:
                if c >= i or out[c] is None:
                    ok = False
                    break
                acc |= out[c]
            out[i] = frozenset(acc) if ok else self.lower_set(i)
        return out  # type: ignore[return-value]

    def parents(self) -> list[frozenset[int]]:
        """Ids of faces covering each face (upward cover adjacency)."""
        up: list[set[int]] = [set() for _ in self.dims]
        for i, cov in enumerate(self.covered):
            for c in cov:
                up[c].add(i)
        return [frozenset(s) for s in up]

    def leq(self, a: int, b: int) -> bool:
        """True iff face a is a subface of (or equal to) face b."""
        self._check_id(a)
        self._check_id(b)
        if a == b:
            return True
        if self.dims[a] >= self.dims[b]:
            return False
        target_dim = self.dims[a]
        seen = {b}
        stack = [b]
        while stack:
            for c in self.covered[stack.pop()]:
                if c == a:
                    return True
                if c not in seen and self.dims[c] > target_dim:
                    seen.add(c)
                    stack.append(c)
        return False

    def _check_id(self, fid: int):
        if not isinstance(fid, int) or not 0 <= fid < len(self.dims):
            raise ValueError(f"invalid face id {fid!r}")

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "faces": [
                {
                    "id": i,
                    "dim": self.dims[i],
                    "covered": sorted(self.covered[i]),
                    "key": self.keys[i],
                }
                for i in range(len(self.dims))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=None, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "CubicalComplex":
        """Ingest the JSON format, re-canonicalizing ids.

        Structural problems (bad ids, duplicate keys, dim mismatch) raise
        ValueError; poset-axiom violations are left for validate().
        """
        try:
            declared = obj["dim"]
            raw = obj["faces"]
            table = [(int(f["id"]), int(f["dim"]), list(f["covered"]), str(f["key"]))
                     for f in raw]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed complex JSON: {exc}") from exc
        if not table:
            raise ValueError("empty complexes are not supported")
        ids = [t[0] for t in table]
        if sorted(ids) != list(range(len(table))):
            raise ValueError("face ids must be exactly 0..N-1")
        by_id = {t[0]: t for t in table}
        faces = {}
        for fid, dim, cov, key in table:
            for c in cov:
                if c not in by_id:
                    raise ValueError(f"face {fid} covers unknown id {c}")
            if key in faces:
                raise ValueError(f"duplicate key {key!r}")
            faces[key] = (dim, [by_id[c][3] for c in cov])
        K = cls.from_keyed_faces(faces)
        if K.dim != declared:
            raise ValueError(f"declared dim {declared} != max face dim {K.dim}")
        return K

    @classmethod
    def from_json(cls, text: str) -> "CubicalComplex":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    def __repr__(self):
        return f"<CubicalComplex dim={self.dim} faces={len(self.dims)}>"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self):
        return self.ok


def validate(K: CubicalComplex) -> ValidationReport:
    """Check the cubical-complex axioms; violations are data, not errors.

    Checked, in order: canonical id ordering; gradedness (every cover
    drops dimension by exactly 1, vertices cover nothing); the cube cover
    count (a j-face covers exactly 2j faces); cube lower-set counts (a
    j-face has 2^(j-k)*C(j,k) subfaces of dimension k); and the
    intersection property (two faces sharing subfaces have a unique
    maximal common subface). Counting and intersection checks are skipped
    when grading is broken, since lower sets are then meaningless.
    """
    v: list[str] = []
    n = len(K.dims)

    order = [(K.dims[i], K.keys[i]) for i in range(n)]
    if order != sorted(order):
        v.append("faces are not in canonical (dim, key) order")

    graded = True
    for i in range(n):
        d = K.dims[i]
        if d < 0:
            v.append(f"face {i} has negative dimension {d}")
            graded = False
        if d == 0 and K.covered[i]:
            v.append(f"vertex {i} covers faces {sorted(K.covered[i])}")
            graded = False
        for c in K.covered[i]:
            if c == i:
                v.append(f"face {i} covers itself")
                graded = False
            elif K.dims[c] != d - 1:
                v.append(
                    f"face {i} (dim {d}) covers face {c} of dim {K.dims[c]}"
                )
                graded = False
        if d > 0 and not K.covered[i]:
            v.append(f"face {i} of dim {d} covers nothing")

    for i in range(n):
        j = K.dims[i]
        if j > 0 and len(K.covered[i]) != 2 * j:
            v.append(
                f"face {i} of dim {j} covers {len(K.covered[i])} faces, "
                f"expected 2*{j}"
            )

    if not graded:
        return ValidationReport(False, tuple(v))

    lower = K.all_lower_sets()
    for i in range(n):
        j = K.dims[i]
        counts = [0] * (j + 1)
        for f in lower[i]:
            counts[K.dims[f]] += 1
        want = [2 ** (j - k) * math.comb(j, k) for k in range(j + 1)]
        if counts != want:
            v.append(
                f"face {i} of dim {j} has lower-set profile {counts}, "
                f"expected {want}"
            )

    # Intersection property: only pairs sharing a vertex can share subfaces.
    above: dict[int, list[int]] = {}
    for i in range(n):
        for f in lower[i]:
            if K.dims[f] == 0:
                above.setdefault(f, []).append(i)
    pairs = set()
    for members in above.values():
        for ai in range(len(members)):
            for bi in range(ai + 1, len(members)):
                pairs.add((members[ai], members[bi]))
    for a, b in sorted(pairs):
        common = lower[a] & lower[b]
        if not common:
            continue
        # common is a down-set, so its maximal elements are those not
        # covered by another of its elements
        dominated = set()
        for f in common:
            dominated |= K.covered[f] & common
        maximal = common - dominated
        if len(maximal) > 1:
            v.append(
                f"faces {a} and {b} have {len(maximal)} maximal common "
                f"subfaces {sorted(maximal)}"
            )

    return ValidationReport(not v, tuple(v))


def _cube_key(free: tuple[int, ...], corner: tuple[int, ...]) -> str:
    return ",".join(map(str, free)) + ";" + ",".join(map(str, corner))


def _cube_faces_into(
    faces: dict, ambient: int, corner: tuple[int, ...]
) -> None:
    """Add all faces of the unit cube at `corner` to a keyed-face table."""
    axes = range(ambient)
    # iterate over subsets of free coordinates via bitmasks
    for mask in range(1 << ambient):
        free = tuple(i for i in axes if mask >> i & 1)
        fixed = [i for i in axes if not mask >> i & 1]
        for choice in range(1 << len(fixed)):
            w = list(corner)
            for t, i in enumerate(fixed):
                w[i] += choice >> t & 1
            key = _cube_key(free, tuple(w))
            if key in faces:
                continue
            cov = []
            for i in free:
                sub = tuple(x for x in free if x != i)
                for delta in (0, 1):
                    w2 = list(w)
                    w2[i] += delta
                    cov.append(_cube_key(sub, tuple(w2)))
            faces[key] = (len(free), cov)


def gen_cube(d: int) -> CubicalComplex:
    """The complex of all faces of the standard d-cube, top cell included."""
    if d < 0:
        raise ValueError("d must be >= 0")
    faces: dict = {}
    _cube_faces_into(faces, d, (0,) * d)
    return CubicalComplex.from_keyed_faces(faces)


def gen_cube_boundary(d: int) -> CubicalComplex:
    """All proper faces of the d-cube; the (d-1)-sphere for d >= 1."""
    if d < 1:
        raise ValueError("cube boundary needs d >= 1 (no empty complexes)")
    faces: dict = {}
    _cube_faces_into(faces, d, (0,) * d)
    del faces[_cube_key(tuple(range(d)), (0,) * d)]
    return CubicalComplex.from_keyed_faces(faces)


def from_voxels(spec: VoxelSpec) -> CubicalComplex:
    """Complex whose facets are the unit cubes [c, c+1] of the spec.

    Faces are keyed by (free coordinate set, minimal corner), so cubes
    sharing a face deduplicate automatically, and axis-aligned unit-cube
    geometry makes the intersection property hold by construction.
    """
    faces: dict = {}
    for corner in spec.corners:
        _cube_faces_into(faces, spec.ambient_dim, corner)
    return CubicalComplex.from_keyed_faces(faces)
