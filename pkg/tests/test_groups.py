from itertools import combinations, product

import pytest

from cmbounds.groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    build_group,
    coset_structure,
    is_central_involution,
    load_group_table,
    subgroup_closure,
    subgroups_containing,
)

# order-5 loop with identity: Latin square but not associative
NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def brute_cosets(group, h_elems):
    """Independent left-coset enumeration by raw set comparison."""
    cosets = []
    for a in range(group.order):
        members = frozenset(group.table[a][h] for h in h_elems)
        if members not in cosets:
            cosets.append(members)
    return sorted(cosets, key=min)


def test_build_c4():
    g = build_group("C4")
    assert g.order == 4
    assert all(g.table[i][j] == (i + j) % 4 for i in range(4) for j in range(4))
    assert g.element_names == ("1", "σ", "σ^2", "σ^3")


def test_build_klein():
    g = build_group("C2xC2")
    assert g.order == 4
    assert all(g.table[i][i] == 0 for i in range(4))
    assert g.table[1][2] == 3


def test_build_dihedral():
    g = build_group("D4")
    assert g.order == 8
    r, s = 1, 4
    assert g.elem_order(r) == 4
    assert g.elem_order(s) == 2
    # s r s^-1 = r^-1
    sr = g.table[s][r]
    assert g.table[sr][g.inverse[s]] == g.inverse[r]


def test_build_s4_and_products():
    s4 = build_group("S4")
    assert s4.order == 24
    assert build_group("S4xC2").order == 48
    assert build_group("D6xC2").order == 24
    assert build_group("C2xC2xC2").order == 8


def test_order_cap():
    with pytest.raises(ValueError):
        build_group("C9xC8")  # order 72


def test_malformed_descriptor():
    for bad in ("Q8", "C", "C4x", "4C", ""):
        with pytest.raises(ValueError):
            build_group(bad)


def test_no_inverse_table_rejected():
    # table[1][1] = 1 with identity 0 cannot be a Latin square
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])


def test_identity_rows_enforced():
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])


def test_associativity_enforced():
    with pytest.raises(ValueError, match="associativity"):
        FiniteGroup(NONASSOC_LOOP)


def test_coset_structure_c4_regular():
    g = build_group("C4")
    cs = coset_structure(g, Subgroup(g, [0]))
    assert cs.cosets == ((0,), (1,), (2,), (3,))
    assert cs.action[1] == (1, 2, 3, 0)  # generator acts as a 4-cycle


def test_coset_structure_c4_index_two():
    g = build_group("C4")
    cs = coset_structure(g, Subgroup(g, [0, 2]))
    assert cs.cosets == ((0, 2), (1, 3))
    assert cs.action[1] == (1, 0)  # generator swaps the two cosets


def test_coset_structure_d4_nonnormal():
    g = build_group("D4")
    h = Subgroup(g, [0, 4])  # reflection subgroup, not normal
    cs = coset_structure(g, h)
    assert len(cs.cosets) == 4
    assert [set(c) for c in cs.cosets] == [set(c) for c in brute_cosets(g, h.elements)]
    # non-normality shows as a non-trivial permutation action beyond cycling
    seen = {cs.action[x] for x in range(g.order)}
    assert len(seen) > 4


@pytest.mark.parametrize("spec,h", [("C4", (0,)), ("C4", (0, 2)), ("D4", (0, 4)), ("D6", (0, 6))])
def test_coset_action_is_homomorphism(spec, h):
    g = build_group(spec)
    cs = coset_structure(g, Subgroup(g, h))
    for x in range(g.order):
        for y in range(g.order):
            xy = g.table[x][y]
            for k in range(len(cs.cosets)):
                assert cs.action[xy][k] == cs.action[x][cs.action[y][k]]


def test_coset_action_kernel():
    g = build_group("D4")
    cs = coset_structure(g, Subgroup(g, [0, 4]))
    identity_perm = tuple(range(len(cs.cosets)))
    kernel = {x for x in range(g.order) if cs.action[x] == identity_perm}
    expected = {
        x
        for x in range(g.order)
        if all(
            frozenset(g.table[x][m] for m in c) == frozenset(c) for c in cs.cosets
        )
    }
    assert kernel == expected


def test_coset_structure_deterministic():
    g = build_group("D6")
    h = Subgroup(g, [0, 6])
    a = coset_structure(g, h)
    b = coset_structure(g, h)
    assert a.cosets == b.cosets and a.action == b.action and a.reps == b.reps


def test_is_central_involution():
    c4 = build_group("C4")
    assert is_central_involution(c4, 2)
    assert not is_central_involution(c4, 1)
    assert not is_central_involution(c4, 0)
    d4 = build_group("D4")
    # oracle: brute-force center
    center = {
        z
        for z in range(d4.order)
        if all(d4.table[z][x] == d4.table[x][z] for x in range(d4.order))
    }
    for z in range(d4.order):
        expected = z in center and z != 0 and d4.table[z][z] == 0
        assert is_central_involution(d4, z) == expected
    assert is_central_involution(d4, 2)  # rotation by pi


def test_subgroup_validation():
    g = build_group("C4")
    with pytest.raises(ValueError):
        Subgroup(g, [0, 1])  # not closed
    with pytest.raises(ValueError):
        Subgroup(g, [1, 3])  # no identity
    assert Subgroup(g, [0, 2]).index() == 2


def test_subgroup_closure():
    g = build_group("D4")
    assert subgroup_closure(g, [1]) == (0, 1, 2, 3)
    assert subgroup_closure(g, [4, 1]) == tuple(range(8))


def test_all_subgroups_d4_vs_bruteforce():
    g = build_group("D4")
    found = set(all_subgroups(g))
    brute = set()
    for size in (1, 2, 4, 8):
        for extra in combinations(range(1, 8), size - 1):
            cand = (0,) + extra
            cset = set(cand)
            if all(g.table[x][y] in cset for x in cand for y in cand):
                brute.add(tuple(sorted(cand)))
    assert found == brute
    assert len(found) == 10


def test_subgroups_containing():
    g = build_group("D4")
    over = subgroups_containing(g, (0, 4))
    assert all(set(s) >= {0, 4} for s in over)
    assert (0, 4) in over and tuple(range(8)) in over
    assert len(over) == 3  # {e,s}, {e,r^2,s,sr^2}, D4


def test_group_table_file(tmp_path):
    path = tmp_path / "c4.tbl"
    path.write_text(
        "# cyclic of order 4\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
        "name 0 1\nname 1 σ\nname 2 σ^2\nname 3 σ^3\n",
        encoding="utf-8",
    )
    g = load_group_table(path)
    assert g == build_group("C4")


def test_group_table_file_errors(tmp_path):
    empty = tmp_path / "empty.tbl"
    empty.write_text("# nothing\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_group_table(empty)
    short = tmp_path / "short.tbl"
    short.write_text("3\n0 1 2\n1 2 0\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_group_table(short)
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n1 x\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_group_table(bad)


@pytest.mark.parametrize("spec", ["C2", "C6", "D4", "C2xC4", "D6", "S4"])
def test_group_axioms_exhaustive(spec):
    g = build_group(spec)
    n = g.order
    for i, j, k in product(range(n), repeat=3):
        assert g.table[g.table[i][j]][k] == g.table[i][g.table[j][k]]
    for i in range(n):
        assert g.table[i][g.inverse[i]] == 0 == g.table[g.inverse[i]][i]
        assert g.table[0][i] == i == g.table[i][0]
