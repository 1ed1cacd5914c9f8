import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import carterlink as cl
from carterlink import orbit
from carterlink.linkage import form_value

from helpers import CATALOG, links_of, pc_of, system_of


# -- dual reflections -----------------------------------------------------------


def test_dual_reflect_d4a1_example():
    pc = pc_of("D4(a1)")
    assert cl.dual_reflect(pc, "a1", (1, 0, 0, 0)) == (-1, 0, 1, 1)


def test_dual_reflect_fixes_zero_coordinate():
    pc = pc_of("E6(a2)")
    v = (0, 1, -1, 0, 1, 0)
    assert cl.dual_reflect(pc, "a1", v) == v


def test_dual_reflect_gamma8_to_gamma7():
    # s*_{a3} applied to an L12 eighth diagram flips a3 and feeds b1
    pc = pc_of("E6(a1)")
    g8 = (0, 0, 1, 0, 0, -1)
    g7 = cl.dual_reflect(pc, "a3", g8)
    assert g7[2] == -1 and g7[3] == 1


names = st.sampled_from(CATALOG)


@given(names, st.data())
def test_dual_reflect_involution(name, data):
    pc = pc_of(name)
    l = len(pc)
    v = tuple(data.draw(st.integers(min_value=-2, max_value=2)) for _ in range(l))
    t = data.draw(st.sampled_from(pc.diagram.vertices))
    assert cl.dual_reflect(pc, t, cl.dual_reflect(pc, t, v)) == v


@given(names, st.data())
def test_dual_reflect_preserves_form(name, data):
    pc = pc_of(name)
    l = len(pc)
    v = tuple(data.draw(st.integers(min_value=-2, max_value=2)) for _ in range(l))
    t = data.draw(st.sampled_from(pc.diagram.vertices))
    assert form_value(pc, cl.dual_reflect(pc, t, v)) == form_value(pc, v)


@pytest.mark.parametrize("name", CATALOG)
def test_linkage_set_closed_under_reflections(name):
    pc = pc_of(name)
    nodes = set(links_of(name))
    for v in nodes:
        for t in pc.diagram.vertices:
            assert cl.dual_reflect(pc, t, v) in nodes


# -- systems ---------------------------------------------------------------------


EXPECTED = {
    # name: (component sizes, p per component, loctets, outside)
    "D4(a1)": ([8, 8, 8], {"1"}, 3, 0),
    "D4": ([8, 8, 8], {"1"}, 3, 0),
    "D5(a1)": ([10, 16, 16], {"1", "5/4"}, 5, 2),
    "D5": ([10, 16, 16], {"1", "5/4"}, 5, 2),
    "E6(a1)": ([27, 27], {"4/3"}, 6, 6),
    "E6(a2)": ([27, 27], {"4/3"}, 6, 6),
    "E6": ([27, 27], {"4/3"}, 6, 6),
    "D6(a1)": ([12, 32, 32], {"1", "3/2"}, 9, 4),
    "D6(a2)": ([12, 32, 32], {"1", "3/2"}, 9, 4),
    "D6": ([12, 32, 32], {"1", "3/2"}, 9, 4),
    "E7(a1)": ([56], {"3/2"}, 6, 8),
    "E7(a2)": ([56], {"3/2"}, 6, 8),
    "E7(a3)": ([56], {"3/2"}, 6, 8),
    "E7(a4)": ([56], {"3/2"}, 6, 8),
    "E7": ([56], {"3/2"}, 6, 8),
    "D7(a1)": ([14, 64, 64], {"1", "7/4"}, 17, 6),
    "D7(a2)": ([14, 64, 64], {"1", "7/4"}, 17, 6),
    "D7": ([14, 64, 64], {"1", "7/4"}, 17, 6),
}


@pytest.mark.parametrize("name", CATALOG)
def test_system_structure(name):
    sizes, ps, n_loctets, outside = EXPECTED[name]
    s = system_of(name)
    assert s.component_sizes() == sizes
    assert {str(p) for p in s.component_p} == ps
    assert len(s.loctets) == n_loctets
    assert len(s.unicolored) == outside


def test_system_d10a3_wind_rose():
    pc = cl.build_partial_cartan(cl.carter_D_ak(10, 3))
    s = cl.build_system(pc)
    assert len(s.nodes) == 20
    assert len(s.components) == 1
    assert len(s.loctets) == 1


@pytest.mark.parametrize("l", range(8, 13))
def test_wind_rose_structure(l):
    for k in range(1, (l - 2) // 2 + 1):
        d = cl.carter_D_ak(l, k)
        pc = cl.build_partial_cartan(d)
        s = cl.build_system(pc)
        assert len(s.nodes) == 2 * l
        assert len(s.components) == 1 and s.component_p == (Fraction(1),)
        assert len(s.loctets) == 1
        # four unit vectors, sitting exactly at the two chain endpoints
        ts = [v for v in d.vertices if v.kind == "t"]
        fs = [v for v in d.vertices if v.kind == "f"]
        ends = {d.index_of(ts[-1]) if ts else d.index_of("b2"),
                d.index_of(fs[-1]) if fs else d.index_of("b1")}
        units = [v for v in s.nodes if sum(x != 0 for x in v) == 1]
        assert len(units) == 4
        assert {v.index(1) if 1 in v else v.index(-1) for v in units} == ends
        # the rest outside the loctet: two nonzero labels on adjacent vertices
        loctet_members = set(s.loctets[0].members)
        gram = d.gram()
        for v in s.nodes:
            if v in loctet_members or v in units:
                continue
            support = [i for i, x in enumerate(v) if x != 0]
            assert len(support) == 2
            assert gram[support[0]][support[1]] != 0


@pytest.mark.parametrize("name", CATALOG)
def test_loctet_partition(name):
    d = cl.catalog(name)
    s = system_of(name)
    seen: dict = {}
    for i, loc in enumerate(s.loctets):
        assert len(set(loc.members)) == 8
        for m in loc.members:
            assert m not in seen, "loctets overlap"
            seen[m] = i
    assert set(s.unicolored) | set(seen) == set(s.nodes)
    if d.pattern is not None:
        pat = [d.index_of(v) for v in d.pattern[:3]]
        for v in s.nodes:
            has_pattern_alpha = any(v[i] != 0 for i in pat)
            assert has_pattern_alpha == (v in seen)


def test_component_p_constant():
    s = system_of("D7(a2)")
    for comp, p in zip(s.components, s.component_p):
        assert {form_value(s.pc, s.nodes[i]) for i in comp} == {p}


def test_d4a1_loctets_are_components():
    s = system_of("D4(a1)")
    comp_sets = {frozenset(s.nodes[i] for i in c) for c in s.components}
    assert {loc.member_set() for loc in s.loctets} == comp_sets
    assert all(loc.kind == "D4" for loc in s.loctets)


def test_d4_dynkin_loctets_are_components():
    s = system_of("D4")
    comp_sets = {frozenset(s.nodes[i] for i in c) for c in s.components}
    assert {loc.member_set() for loc in s.loctets} == comp_sets
    assert {loc.kind for loc in s.loctets} == {"L12", "L13", "L23"}


def test_build_system_rejects_chains():
    with pytest.raises(orbit.UnsupportedDiagram):
        cl.build_system(cl.build_partial_cartan(cl.catalog("A4")))


def test_empty_system_is_legal():
    s = cl.build_system(cl.build_partial_cartan(cl.catalog("E8")))
    assert s.nodes == () and s.loctets == () and s.components == ()


# -- gamma(8) and loctets --------------------------------------------------------


def test_gamma8_candidates_e6a1():
    pc = pc_of("E6(a1)")
    assert set(cl.gamma8_candidates(pc, "L12")) == {(0, 0, 1, 0, 0, -1),
                                                    (0, 0, 1, 0, -1, -1)}
    assert set(cl.gamma8_candidates(pc, "L13")) == {(0, 1, 0, 0, 0, 0),
                                                    (0, 1, 0, 0, 1, -1)}
    l23 = set(cl.gamma8_candidates(pc, "L23"))
    assert len(l23) == 2 and all(v[0] == 1 for v in l23)


def test_gamma8_requires_pattern():
    with pytest.raises(orbit.UnsupportedDiagram):
        cl.gamma8_candidates(pc_of("D4(a1)"), "L12")


def test_loctet_construction_shape():
    pc = pc_of("E6(a1)")
    loc = cl.loctet_from_gamma8(pc, (0, 0, 1, 0, 0, -1), "L12")
    g8, g7, g6 = loc.members[7], loc.members[6], loc.members[5]
    assert g8 == (0, 0, 1, 0, 0, -1)
    assert (g7[2], g7[3]) == (-1, 1)
    assert (g6[0], g6[1], g6[3]) == (1, 1, -1)
    assert loc.members[0] == tuple(-x for x in g8)
    assert loc.members[1] == tuple(-x for x in g7)
    assert loc.members[2] == tuple(-x for x in g6)
    nodes = set(links_of("E6(a1)"))
    assert set(loc.members) <= nodes and len(set(loc.members)) == 8


def test_loctet_gamma6_l23_pattern():
    pc = pc_of("E7(a1)")
    for g8 in cl.gamma8_candidates(pc, "L23"):
        loc = cl.loctet_from_gamma8(pc, g8, "L23")
        g6 = loc.members[5]
        assert (g6[1], g6[2], g6[3]) == (1, 1, -1)


def test_d4_loctet_is_the_four_coordinate_spindle():
    # branch-point diagram on 4 vertices: the loctet members are exactly the
    # classic spindle restricted to (a1, a2, a3, b1)
    pc = pc_of("D4")
    loc = cl.loctet_from_gamma8(pc, (0, 0, 1, 0), "L12")
    assert loc.members == (
        (0, 0, -1, 0), (0, 0, 1, -1), (-1, -1, 0, 1), (-1, 1, 0, 0),
        (1, -1, 0, 0), (1, 1, 0, -1), (0, 0, -1, 1), (0, 0, 1, 0))


@pytest.mark.parametrize("name", [n for n in CATALOG if n != "D4(a1)"])
def test_loctet_generating_relations(name):
    # gamma(7) = s*_{a_k} gamma(8), gamma(6) = s*_{b1} gamma(7),
    # gamma(4)/gamma(5) = s*_{a_i}/s*_{a_j} gamma(6), negatives for 1..3
    pc = pc_of(name)
    d = pc.diagram
    roles = {"L12": ("12", 2), "L13": ("13", 1), "L23": ("23", 0)}
    for loc in system_of(name).loctets:
        ij, k = roles[loc.kind]
        i, j = int(ij[0]) - 1, int(ij[1]) - 1
        a = d.pattern[:3]
        b1 = d.pattern[3]
        g = loc.members
        assert g[6] == cl.dual_reflect(pc, a[k], g[7])
        assert g[5] == cl.dual_reflect(pc, b1, g[6])
        assert g[3] == cl.dual_reflect(pc, a[i], g[5])
        assert g[4] == cl.dual_reflect(pc, a[j], g[5])
        for n_, m_ in ((0, 7), (1, 6), (2, 5)):
            assert g[n_] == tuple(-x for x in g[m_])
        # the eighth member carries a_k = 1, a_i = a_j = 0, b1 = 0
        idx = [d.index_of(v) for v in a] + [d.index_of(b1)]
        assert g[7][idx[k]] == 1
        assert g[7][idx[i]] == g[7][idx[j]] == g[7][idx[3]] == 0


# -- projections -----------------------------------------------------------------


def test_projection_d6a1_to_d5a1():
    rep = cl.project_system(system_of("D6(a1)"), "b3", pc_of("D5(a1)"))
    assert len(rep.kernel) == 2
    fiber_sizes = sorted(len(v) for v in rep.fibers().values())
    assert fiber_sizes == [1, 2, 2, 2, 2]
    ext_loctets = system_of("D6(a1)").loctets
    for ei, bi in rep.loctet_pairs:
        assert ext_loctets[ei].kind == rep.base_system.loctets[bi].kind


def test_projection_e7_to_e6a1():
    for ext in ("E7(a1)", "E7(a2)"):
        rep = cl.project_system(system_of(ext), "b4", pc_of("E6(a1)"))
        assert len(rep.kernel) == 2
        assert len(rep.loctet_pairs) == 6


def test_projection_rejects_wrong_base():
    with pytest.raises(Exception):
        cl.project_system(system_of("E7(a1)"), "b4", pc_of("D6(a1)"))


def test_projection_rejects_non_leaf():
    with pytest.raises(Exception):
        cl.project_system(system_of("E7(a1)"), "b1", pc_of("E6(a1)"))


def _chain_ends(d):
    fs = [v for v in d.vertices if v.kind == "f"]
    ts = [v for v in d.vertices if v.kind == "t"]
    return [fs[-1] if fs else d.vertex("b1"), ts[-1] if ts else d.vertex("b2")]


@pytest.mark.parametrize("l", range(6, 11))
def test_projection_chain_families(l):
    for k in (1, 2):
        if k > (l - 1) - 3:
            continue
        base = cl.carter_D_ak(l - 1, k)
        target = cl.carter_D_ak(l, k)
        ext = next(cl.extend(base, at) for at in _chain_ends(base)
                   if cl.isomorphic(cl.extend(base, at), target))
        ext_sys = cl.build_system(cl.build_partial_cartan(ext))
        rep = cl.project_system(ext_sys, ext.vertices[-1],
                                cl.build_partial_cartan(base))
        assert len(rep.kernel) == 2


# -- export ----------------------------------------------------------------------


def test_dot_export_mentions_all_nodes():
    s = system_of("D4(a1)")
    dot = orbit.to_dot(s)
    assert dot.count("n0 ") >= 1
    assert dot.count("subgraph cluster_") == 3
    assert "--" in dot


def test_system_json_roundtrip():
    s = system_of("D5(a1)")
    text = orbit.to_json(s)
    back = orbit.from_json(text)
    assert back.nodes == s.nodes
    assert back.edges == s.edges
    assert back.components == s.components
    assert back.component_p == s.component_p
    assert [loc.members for loc in back.loctets] == [loc.members for loc in s.loctets]
    assert orbit.to_json(back) == text


def test_system_json_rejects_unknown_key():
    doc = json.loads(orbit.to_json(system_of("D4")))
    doc["extra"] = 1
    with pytest.raises(Exception, match="unknown key"):
        orbit.from_json(json.dumps(doc))
