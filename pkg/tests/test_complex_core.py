import json
import math

import pytest

from cubary import (
    CubicalComplex,
    VoxelSpec,
    f_vector,
    from_voxels,
    gen_cube,
    gen_cube_boundary,
    parse_voxel_text,
    subdivide,
    validate,
)


class TestGenerators:
    @pytest.mark.parametrize(
        "d,f",
        [(1, (2, 1)), (2, (4, 4, 1)), (3, (8, 12, 6, 1))],
    )
    def test_cube_examples(self, d, f):
        assert f_vector(gen_cube(d)).entries == f

    @pytest.mark.parametrize("d", range(7))
    def test_cube_counts_closed_form(self, d):
        f = f_vector(gen_cube(d)).entries
        assert f == tuple(2 ** (d - i) * math.comb(d, i) for i in range(d + 1))

    def test_cube_zero_is_a_point(self):
        K = gen_cube(0)
        assert f_vector(K).entries == (1,)
        assert K.dim == 0

    def test_cube_rejects_negative(self):
        with pytest.raises(ValueError):
            gen_cube(-1)

    @pytest.mark.parametrize(
        "d,f",
        [(3, (8, 12, 6)), (1, (2,)), (2, (4, 4))],
    )
    def test_boundary_examples(self, d, f):
        assert f_vector(gen_cube_boundary(d)).entries == f

    def test_boundary_rejects_zero(self):
        with pytest.raises(ValueError):
            gen_cube_boundary(0)

    @pytest.mark.parametrize(
        "spec,f",
        [
            (VoxelSpec(1, ((0,),)), (2, 1)),
            (VoxelSpec(1, ((0,), (1,))), (3, 2)),
            (VoxelSpec(2, (((0, 0)),)), (4, 4, 1)),
        ],
    )
    def test_voxel_examples(self, spec, f):
        assert f_vector(from_voxels(spec)).entries == f

    def test_voxels_dedupe_shared_faces(self):
        # two cubes stacked along z share one square
        K = from_voxels(VoxelSpec(3, ((0, 0, 0), (0, 0, 1))))
        assert f_vector(K).entries == (12, 20, 11, 2)

    def test_negative_corners_allowed(self):
        K = from_voxels(VoxelSpec(2, ((-1, -3), (0, -3))))
        assert f_vector(K).entries == (6, 7, 2)
        assert validate(K).ok

    @pytest.mark.parametrize("dim", [1, 2, 3])
    def test_random_voxel_complexes_validate(self, dim):
        from cubary.corpus import random_voxel_complexes

        for spec, K in random_voxel_complexes(99, dim, 5):
            report = validate(K)
            assert report.ok, (spec.corners, report.violations[:3])


class TestVoxelSpec:
    def test_duplicates_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            VoxelSpec(2, ((0, 0), (0, 0)))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            VoxelSpec(1, ())

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            VoxelSpec(2, ((0, 0, 0),))

    def test_parse_text(self):
        spec = parse_voxel_text("dim 2\n# a comment\n0 0\n\n1 0\n")
        assert spec == VoxelSpec(2, ((0, 0), (1, 0)))

    @pytest.mark.parametrize(
        "text",
        ["", "0 0\n", "dim x\n0\n", "dim 2\n0\n", "dim 1\n0\n0\n"],
    )
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_voxel_text(text)


class TestValidate:
    def test_generators_validate(self, corpus):
        for name, K in corpus:
            report = validate(K)
            assert report.ok, (name, report.violations)

    def test_edge_covering_three_vertices(self):
        K = CubicalComplex.from_keyed_faces(
            {
                "v1": (0, []),
                "v2": (0, []),
                "v3": (0, []),
                "e": (1, ["v1", "v2", "v3"]),
            }
        )
        report = validate(K)
        assert not report.ok
        assert any("expected 2*1" in v for v in report.violations)

    def test_squares_glued_along_two_opposite_edges(self):
        faces = {
            "v1": (0, []), "v2": (0, []), "v3": (0, []), "v4": (0, []),
            "a": (1, ["v1", "v2"]), "b": (1, ["v3", "v4"]),
            "L1": (1, ["v1", "v3"]), "R1": (1, ["v2", "v4"]),
            "L2": (1, ["v1", "v3"]), "R2": (1, ["v2", "v4"]),
            "s1": (2, ["a", "b", "L1", "R1"]),
            "s2": (2, ["a", "b", "L2", "R2"]),
        }
        report = validate(CubicalComplex.from_keyed_faces(faces))
        assert not report.ok
        assert any("maximal common" in v for v in report.violations)

    def test_broken_grading_reported(self):
        K = CubicalComplex.from_keyed_faces(
            {"v": (0, []), "s": (2, ["v"])}
        )
        report = validate(K)
        assert not report.ok
        assert any("covers face" in v for v in report.violations)


class TestPosetOrder:
    def test_leq_is_partial_order_exhaustively(self):
        # cube(3) has 27 faces, sd(square) has 25; both well under 200
        for K in (gen_cube(3), subdivide(gen_cube(2))):
            n = len(K)
            rel = [[K.leq(a, b) for b in range(n)] for a in range(n)]
            for a in range(n):
                assert rel[a][a]
                for b in range(n):
                    if rel[a][b] and rel[b][a]:
                        assert a == b
                    for c in range(n):
                        if rel[a][b] and rel[b][c]:
                            assert rel[a][c]

    def test_vertex_below_edge(self):
        K = gen_cube(1)
        (v0, v1), (e,) = K.face_ids_of_dim(0), K.face_ids_of_dim(1)
        assert K.leq(v0, e) and K.leq(v1, e)
        assert not K.leq(e, v0)
        assert not K.leq(v0, v1)

    def test_invalid_id_rejected(self):
        K = gen_cube(1)
        with pytest.raises(ValueError):
            K.leq(0, 99)
        with pytest.raises(ValueError):
            K.leq(-1, 0)

    def test_lower_set_of_top_cell_is_everything(self):
        K = gen_cube(2)
        (top,) = K.face_ids_of_dim(2)
        assert K.lower_set(top) == frozenset(range(len(K)))


class TestSerialization:
    def test_roundtrip_ids_stable(self, corpus):
        for name, K in corpus:
            K2 = CubicalComplex.from_json(K.to_json())
            assert K2.keys == K.keys, name
            assert K2.dims == K.dims, name
            assert K2.covered == K.covered, name
            assert K2.to_json() == K.to_json(), name

    def test_roundtrip_after_subdivision(self):
        K = subdivide(gen_cube_boundary(2))
        assert CubicalComplex.from_json(K.to_json()).to_json() == K.to_json()

    def test_non_canonical_input_is_renumbered(self):
        K = gen_cube(1)
        obj = K.to_json_obj()
        # permute ids: swap the two vertices
        remap = {0: 1, 1: 0, 2: 2}
        obj["faces"] = [
            {
                "id": remap[f["id"]],
                "dim": f["dim"],
                "covered": [remap[c] for c in f["covered"]],
                "key": f["key"],
            }
            for f in obj["faces"]
        ]
        K2 = CubicalComplex.from_json_obj(obj)
        assert K2.to_json_obj() == K.to_json_obj()

    @pytest.mark.parametrize(
        "mutate",
        [
            lambda o: o.__setitem__("dim", 5),
            lambda o: o["faces"][0].__setitem__("id", 77),
            lambda o: o["faces"][0].__setitem__("key", o["faces"][1]["key"]),
            lambda o: o.pop("faces"),
            lambda o: o["faces"][-1]["covered"].append(99),
        ],
    )
    def test_malformed_json_rejected(self, mutate):
        obj = gen_cube(2).to_json_obj()
        mutate(obj)
        with pytest.raises(ValueError):
            CubicalComplex.from_json_obj(obj)

    def test_bad_json_text(self):
        with pytest.raises(ValueError):
            CubicalComplex.from_json("{not json")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            CubicalComplex.from_json(json.dumps({"dim": 0, "faces": []}))

    def test_complexes_are_immutable(self):
        K = gen_cube(1)
        with pytest.raises(AttributeError):
            K.dims = ()
