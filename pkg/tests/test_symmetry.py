from itertools import permutations

import pytest

from cwmorse import (
    NotGroupClosed,
    VectorField,
    apply,
    are_isomorphic_fields,
    automorphisms,
    burnside_class_count,
    canonical_form,
    enumerate_gradient_fields,
    make_field,
    orbit,
    stabilizer_order,
    vertex_orbits,
    vertex_stabilizer_order,
)

from conftest import ids, pairs


@pytest.fixture(scope="module")
def disk_group(disk):
    return automorphisms(disk)


def brute_force_automorphisms(K):
    """Oracle: all same-dimension cell permutations filtered by the
    incidence-preservation predicate, dimension block by block."""
    blocks = [K.cells_of_dim(k) for k in (0, 1, 2)]
    found = []
    for p0 in permutations(blocks[0]):
        for p1 in permutations(blocks[1]):
            for p2 in permutations(blocks[2]):
                mapping = list(range(len(K)))
                for src, dst in zip(blocks[0], p0):
                    mapping[src] = dst
                for src, dst in zip(blocks[1], p1):
                    mapping[src] = dst
                for src, dst in zip(blocks[2], p2):
                    mapping[src] = dst
                ok = all(
                    {mapping[d] for d in K.facets(c)} == set(K.facets(mapping[c]))
                    for c in range(len(K)))
                if ok:
                    found.append(tuple(mapping))
    return sorted(found)


def test_disk_group_matches_brute_force(disk, disk_group):
    assert len(disk_group) == 6
    assert [g.mapping for g in disk_group] == brute_force_automorphisms(disk)


def test_sphere_group_order(sphere):
    assert len(automorphisms(sphere)) == 24


def test_torus_group_order(torus):
    assert len(automorphisms(torus)) == 72


def test_cylinder_vertex_stabilizers(cylinder):
    G = automorphisms(cylinder)
    for v in cylinder.cells_of_dim(0):
        assert vertex_stabilizer_order(cylinder, G, v) == 2


def test_cylinder_vertex_transitive(cylinder):
    G = automorphisms(cylinder)
    assert vertex_orbits(cylinder, G) == [cylinder.cells_of_dim(0)]


@pytest.mark.parametrize("name", ["disk", "sphere", "cylinder", "mobius"])
def test_group_axioms(name, request):
    K = request.getfixturevalue(name)
    G = automorphisms(K)
    elements = {g.mapping for g in G}
    assert tuple(range(len(K))) in elements
    for g in G:
        assert g.inverse().mapping in elements
        for h in G:
            assert g.compose(h).mapping in elements


def test_apply_identity(disk, disk_group):
    V = make_field(disk, pairs(disk, "1a", "2b", "cA"))
    ident = next(g for g in disk_group if g.is_identity())
    assert apply(ident, V) == V
    assert apply(ident, VectorField([])) == VectorField([])


def test_apply_reflection_fixing_vertex_1(disk, disk_group):
    v0, v2, a, b = ids(disk, "0", "2", "a", "b")
    refl = next(
        g for g in disk_group
        if not g.is_identity() and g(ids(disk, "1")[0]) == ids(disk, "1")[0])
    assert refl(v0) == v2 and refl(v2) == v0
    assert refl(a) == b and refl(b) == a
    V1 = make_field(disk, pairs(disk, "1a", "2b", "cA"))
    assert apply(refl, V1) == make_field(disk, pairs(disk, "1b", "0a", "cA"))


def test_apply_is_group_action(disk, disk_group):
    V1 = make_field(disk, pairs(disk, "1a", "2b", "cA"))
    for g in disk_group:
        for h in disk_group:
            assert apply(g.compose(h), V1) == apply(g, apply(h, V1))


def test_field_isomorphism(disk):
    V1 = make_field(disk, pairs(disk, "1a", "2b", "cA"))
    V1_mirror = make_field(disk, pairs(disk, "0a", "1b", "cA"))
    V2 = make_field(disk, pairs(disk, "0a", "2b", "cA"))
    assert are_isomorphic_fields(disk, V1, V1_mirror)
    assert not are_isomorphic_fields(disk, V1, V2)
    assert are_isomorphic_fields(disk, V1, V1)


def test_canonical_form(disk, disk_group):
    V1 = make_field(disk, pairs(disk, "1a", "2b", "cA"))
    V1_mirror = make_field(disk, pairs(disk, "0a", "1b", "cA"))
    V2 = make_field(disk, pairs(disk, "0a", "2b", "cA"))
    assert canonical_form(disk, VectorField([]), disk_group) == ()
    assert canonical_form(disk, V1, disk_group) == \
        canonical_form(disk, V1_mirror, disk_group)
    assert canonical_form(disk, V1, disk_group) != \
        canonical_form(disk, V2, disk_group)


def test_canonical_form_constant_on_orbits(sphere):
    G = automorphisms(sphere)
    for V in enumerate_gradient_fields(sphere, 2)[:30]:
        cf = canonical_form(sphere, V, G)
        for W in orbit(V, G):
            assert canonical_form(sphere, W, G) == cf


def test_orbit_stabilizer(disk, disk_group):
    for V in enumerate_gradient_fields(disk, 1):
        assert len(orbit(V, disk_group)) * stabilizer_order(V, disk_group) == \
            len(disk_group)


def test_burnside_disk(disk, disk_group):
    raw = enumerate_gradient_fields(disk, 1)
    assert len(raw) == 9
    assert burnside_class_count(disk, disk_group, raw) == 2


def test_burnside_singleton(disk, disk_group):
    assert burnside_class_count(disk, disk_group, [VectorField([])]) == 1


def test_burnside_sphere(sphere):
    G = automorphisms(sphere)
    raw = enumerate_gradient_fields(sphere, 2)
    assert burnside_class_count(sphere, G, raw) == 13


def test_burnside_rejects_unclosed(disk, disk_group):
    raw = enumerate_gradient_fields(disk, 1)
    lone = next(V for V in raw if stabilizer_order(V, disk_group) == 1)
    with pytest.raises(NotGroupClosed):
        burnside_class_count(disk, disk_group, [lone])
