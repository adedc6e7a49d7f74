import random
from itertools import combinations

import pytest

from src.core.arrangement import Ambient, Arrangement, Family, SubspaceA, SubspaceB
from src.core.complex import (
    AbstractComplex, FVector, FaceA, FaceB, cone_complex, coxeter_f_vector, double_cone,
    face_from_vertices, face_in_link, face_sign, h_polynomial, hilbert_function, hilbert_series,
    lift_face, link_abstract, link_f_vector, link_faces, reduced_euler, reverse_h,
)
from src.core.errors import AmbientMismatch, EmptyArrangement
from src.core.polyseries import IntPolynomial, series_coefficients
from src.models.catalog import random_antichain


def test_coxeter_f_vectors():
    assert coxeter_f_vector(Ambient(Family.A, 3)).counts == (1, 6, 6)
    assert coxeter_f_vector(Ambient(Family.A, 4)).counts == (1, 14, 36, 24)
    assert coxeter_f_vector(Ambient(Family.B, 2)).counts == (1, 8, 8)


def test_hexagon_h_polynomial():
    f = coxeter_f_vector(Ambient(Family.A, 3))
    assert h_polynomial(f) == IntPolynomial((1, 4, 1))
    assert reverse_h(f) == IntPolynomial((1, 4, 1))
    assert reduced_euler(f) == -1


def test_octagon_h_polynomial_is_type_b_eulerian():
    assert h_polynomial(coxeter_f_vector(Ambient(Family.B, 2))) == IntPolynomial((1, 6, 1))


def test_k3_link(k3_arrangement):
    f = link_f_vector(k3_arrangement)
    assert f.counts == (1, 6)
    assert h_polynomial(f) == IntPolynomial((5, 1))
    assert reverse_h(f) == IntPolynomial((1, 5))
    assert reduced_euler(f) == 5


def test_b2_coordinate_line(b2_zero_line):
    f = link_f_vector(b2_zero_line)
    assert f.counts == (1, 2)
    assert reverse_h(f) == IntPolynomial((1, 1))


def test_codimension_two_members(s4_codim2):
    f = link_f_vector(s4_codim2)
    assert f.counts == (1, 4)
    assert reverse_h(f) == IntPolynomial((1, 3))


def test_empty_and_origin_links(s3):
    empty = link_f_vector(Arrangement(s3))
    assert empty.is_empty()
    assert reduced_euler(empty) == 0
    assert hilbert_function(empty, 3) == 0
    origin = Arrangement(s3, (SubspaceA(3, ((1, 2, 3),)),))
    assert link_f_vector(origin).counts == (1,)
    assert link_abstract(origin).f_vector().counts == (1,)
    with pytest.raises(EmptyArrangement):
        link_abstract(Arrangement(s3))


def test_hilbert_function_matches_series(k3_arrangement):
    f = link_f_vector(k3_arrangement)
    assert [hilbert_function(f, m) for m in range(5)] == [1, 6, 6, 6, 6]
    series = hilbert_series(f)
    assert series_coefficients(series, 5) == [1, 6, 6, 6, 6]

    hexagon = coxeter_f_vector(Ambient(Family.A, 3))
    assert [hilbert_function(hexagon, m) for m in range(4)] == [1, 6, 12, 18]
    assert series_coefficients(hilbert_series(hexagon), 4) == [1, 6, 12, 18]


def test_face_in_link(k3_arrangement):
    assert face_in_link(FaceA(3, ((1, 2), (3,))), k3_arrangement)
    assert not face_in_link(FaceA(3, ((1,), (2,), (3,))), k3_arrangement)
    with pytest.raises(AmbientMismatch):
        face_in_link(FaceA(4, ((1, 2), (3, 4))), k3_arrangement)


def test_face_in_link_type_b(b2_zero_line):
    assert face_in_link(FaceB(2, (1,), (((2,), (-1,)),)), b2_zero_line)
    assert not face_in_link(FaceB(2, (), (((1, 2), (1, -1)),)), b2_zero_line)


def test_face_vertices():
    face = FaceA(3, ((2,), (1, 3)))
    assert face.vertices() == frozenset({frozenset({2})})
    chamber = FaceB(2, (), (((1,), (1,)), ((2,), (-1,))))
    assert chamber.vertices() == frozenset({frozenset({(1, 1), (2, -1)}), frozenset({(2, -1)})})


@pytest.mark.parametrize("face", [
    FaceA(3, ((1,), (2,), (3,))),
    FaceA(4, ((2, 4), (1,), (3,))),
    FaceB(2, (), (((1,), (1,)), ((2,), (-1,)))),
    FaceB(3, (2,), (((1, 3), (1, -1)),)),
])
def test_face_from_vertices_inverts_vertex_map(face):
    amb = Ambient(face.family, face.n)
    assert face_from_vertices(amb, face.vertices()) == face
    assert face_from_vertices(amb, []) is None


def test_face_from_vertices_rejects_antichain():
    with pytest.raises(ValueError):
        face_from_vertices(Ambient(Family.A, 3), [frozenset({1}), frozenset({2})])


def test_lift_face():
    host = SubspaceA.pair(3, 1, 2)
    assert lift_face(host, FaceA(2, ((2,), (1,)))) == FaceA(3, ((3,), (1, 2)))
    host_b = SubspaceB.pair(2, 1, 2, -1)
    lifted = lift_face(host_b, FaceB(1, (), (((1,), (-1,)),)))
    assert lifted == FaceB(2, (), (((1, 2), (-1, 1)),))


def test_face_sign():
    chamber = FaceA(3, ((2,), (1,), (3,)))
    assert face_sign(chamber, SubspaceA.pair(3, 1, 2)) == 1
    assert face_sign(chamber, SubspaceA.pair(3, 1, 3)) == -1
    ray = FaceA(3, ((1, 2), (3,)))
    assert face_sign(ray, SubspaceA.pair(3, 1, 2)) == 0
    b = FaceB(2, (), (((1,), (1,)), ((2,), (-1,))))
    assert face_sign(b, SubspaceB.coordinate(2, 2)) == -1
    assert face_sign(b, SubspaceB.pair(2, 1, 2, -1)) == -1


def test_cones():
    two_points = AbstractComplex(2, (frozenset({0}), frozenset({1})))
    assert cone_complex(two_points).f_vector().counts == (1, 3, 2)
    assert double_cone(two_points).f_vector().counts == (1, 4, 5, 2)
    assert cone_complex(AbstractComplex(0, (frozenset(),))).f_vector().counts == (1, 1)


def test_link_abstract_k3(k3_arrangement):
    c = link_abstract(k3_arrangement)
    assert c.vertex_count == 6
    assert len(c.facets) == 6
    assert c.is_pure()
    assert c.f_vector() == FVector((1, 6))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_link_is_closed_under_taking_faces(seed):
    rng = random.Random(seed)
    for amb in (Ambient(Family.A, 5), Ambient(Family.B, 3)):
        a = random_antichain(amb, rng, rng.randint(1, 4))
        for face in link_faces(a):
            vertices = sorted(face.vertices(), key=lambda v: (len(v), sorted(v)))
            for k in range(1, len(vertices)):
                for sub in combinations(vertices, k):
                    assert face_in_link(face_from_vertices(amb, sub), a)
