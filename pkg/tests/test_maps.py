import itertools

import pytest

from treeramsey import trees
from treeramsey.enumeration import all_embeddings, all_rigid_surjections
from treeramsey.errors import DomainMismatch, NotLeaf, NotRigid
from treeramsey.maps import (
    TreeMap,
    check_block_condition,
    classify,
    compose,
    conjugate_leaf,
    identity,
    injection_of,
    is_morphism,
    is_rigid_surjection,
    is_sealed,
    restrict_conjugate,
    restrict_initial,
    rigid_from_embedding,
    try_injection,
)

C1, C2, C3, C4 = (trees.chain(n) for n in (1, 2, 3, 4))
Y = trees.tree([None, 0, 0])
BROOM3 = trees.tree([None, 0, 0, 0])


def trees_up_to(n):
    for k in range(1, n + 1):
        yield from trees.all_trees(k)


# --- classification ---------------------------------------------------------


def test_classify_embedding_example():
    fl = classify(TreeMap(C2, Y, (0, 1)))
    assert fl.morphism and fl.embedding and not fl.rigid_surjection


def test_classify_non_rigid_example():
    fl = classify(TreeMap(Y, C2, (0, 1, 1)))
    assert not fl.rigid_surjection and fl.injection is None


def test_classify_root_swap_has_no_flags():
    fl = classify(TreeMap(C2, C2, (1, 0)))
    assert not (fl.morphism or fl.embedding or fl.rigid_surjection or fl.sealed)


def test_morphism_definition_cross_check():
    # flags recomputed from the three clauses on every small map
    for s in trees_up_to(3):
        for t in trees_up_to(3):
            for vals in itertools.product(range(t.n), repeat=s.n):
                m = TreeMap(s, t, vals)
                expected = (
                    vals[0] == 0
                    and all(
                        vals[s.meet(v, w)] == t.meet(vals[v], vals[w])
                        for v in range(s.n)
                        for w in range(s.n)
                    )
                    and all(vals[v] <= vals[w] for v in range(s.n) for w in range(v, s.n))
                )
                assert is_morphism(m) == expected


# --- injections --------------------------------------------------------------


def test_injection_of_examples():
    assert injection_of(TreeMap(C3, C2, (0, 0, 1))).values == (0, 2)
    for t in trees_up_to(5):
        assert injection_of(identity(t)) == identity(t)
    with pytest.raises(NotRigid):
        injection_of(TreeMap(Y, C2, (0, 1, 1)))


def test_injection_unique_witness():
    # exactly one embedding satisfies both Galois identities for each rigid map
    for s in trees_up_to(4):
        for t in trees_up_to(4):
            for f in all_rigid_surjections(t, s):
                witnesses = [
                    e
                    for e in all_embeddings(s, t)
                    if all(f.values[e.values[v]] == v for v in range(s.n))
                    and all(t.below(e.values[f.values[w]], w) for w in range(t.n))
                ]
                assert len(witnesses) == 1
                assert witnesses[0] == injection_of(f)


def test_rigidity_decision_matches_witness_search():
    # try_injection's verdict agrees with brute-force witness existence
    for s in trees_up_to(3):
        for t in trees_up_to(4):
            embs = all_embeddings(s, t)
            for vals in itertools.product(range(s.n), repeat=t.n):
                f = TreeMap(t, s, vals)
                brute = any(
                    all(vals[e.values[v]] == v for v in range(s.n))
                    and all(t.below(e.values[vals[w]], w) for w in range(t.n))
                    for e in embs
                )
                assert (try_injection(f) is not None) == brute


# --- composition --------------------------------------------------------------


def test_compose_example_with_injections():
    f = TreeMap(C3, C2, (0, 1, 1))
    g = TreeMap(C4, C3, (0, 1, 1, 2))
    fg = compose(f, g)
    assert fg.values == (0, 1, 1, 1)
    assert injection_of(fg).values == (0, 1)


def test_compose_identity_laws():
    for s in trees_up_to(4):
        for t in trees_up_to(4):
            for f in all_rigid_surjections(t, s):
                assert compose(f, identity(t)) == f
                assert compose(identity(s), f) == f


def test_compose_domain_mismatch():
    with pytest.raises(DomainMismatch):
        compose(TreeMap(C2, C2, (0, 1)), TreeMap(C3, C3, (0, 1, 2)))


def test_composition_preserves_rigidity_with_composed_injection():
    for s in trees_up_to(3):
        for t in trees_up_to(3):
            fs = all_rigid_surjections(t, s)
            if not fs:
                continue
            for v in trees_up_to(4):
                for g in all_rigid_surjections(v, t):
                    e_g = injection_of(g)
                    for f in fs:
                        fg = compose(f, g)
                        assert injection_of(fg) == compose(e_g, injection_of(f))


# --- from embeddings -----------------------------------------------------------


def test_rigid_from_embedding_examples():
    assert rigid_from_embedding(TreeMap(C2, C3, (0, 2))).values == (0, 0, 1)
    assert rigid_from_embedding(TreeMap(C2, Y, (0, 2))).values == (0, 0, 1)
    for t in trees_up_to(4):
        assert rigid_from_embedding(identity(t)) == identity(t)


def test_rigid_from_embedding_round_trip():
    for s in trees_up_to(5):
        for t in trees_up_to(5):
            for e in all_embeddings(s, t):
                assert injection_of(rigid_from_embedding(e)) == e


# --- subtrees and restrictions ---------------------------------------------------


def _downward_closed_subsets(t):
    # non-empty subsets closed under predecessors, as sorted vertex tuples
    out = []
    for mask in range(1, 1 << t.n):
        members = [v for v in range(t.n) if mask >> v & 1]
        if all(p in members for v in members for p in t.ancestors(v)):
            out.append(members)
    return out


def test_restriction_to_subtrees_stays_rigid():
    for s in trees_up_to(4):
        for t in trees_up_to(4):
            for f in all_rigid_surjections(t, s):
                for members in _downward_closed_subsets(t):
                    image = sorted({f.values[w] for w in members})
                    # image is downward closed in the codomain
                    assert all(p in image for v in image for p in s.ancestors(v))
                    sub_dom, dperm = trees.canonicalize(
                        [None if t.parent[v] is None or t.parent[v] not in members
                         else members.index(t.parent[v]) for v in members]
                    )
                    sub_cod, cperm = trees.canonicalize(
                        [None if s.parent[v] is None or s.parent[v] not in image
                         else image.index(s.parent[v]) for v in image]
                    )
                    vals = [0] * len(members)
                    for idx, w in enumerate(members):
                        vals[dperm[idx]] = cperm[image.index(f.values[w])]
                    assert is_rigid_surjection(TreeMap(sub_dom, sub_cod, tuple(vals)))


def test_restrict_initial_examples():
    f = TreeMap(C3, C2, (0, 0, 1))
    r = restrict_initial(f, 0)
    assert r.dom == C1 and r.cod == C1 and r.values == (0,)
    g = TreeMap(BROOM3, Y, (0, 1, 0, 2))
    r = restrict_initial(g, 1)
    assert r.dom == C2 and r.values == (0, 1)
    for s in trees_up_to(4):
        for t in trees_up_to(4):
            for f in all_rigid_surjections(t, s, sealed=True):
                assert restrict_initial(f, s.n - 1) == f


def test_restrict_initial_domain_image_sealed():
    for s in trees_up_to(4):
        for t in trees_up_to(5):
            for f in all_rigid_surjections(t, s):
                e = injection_of(f)
                for v in range(s.n):
                    r = restrict_initial(f, v)
                    assert r.dom.n == e.values[v] + 1
                    assert set(r.values) == set(range(v + 1))
                    assert is_sealed(r)


def test_restriction_commutes_with_composition():
    # f: T^w -> S, g: V -> T, v in S: restricting then composing equals
    # composing then restricting
    for s in trees_up_to(3):
        for t in trees_up_to(4):
            for v_tree in trees_up_to(4):
                gs = all_rigid_surjections(v_tree, t)
                if not gs:
                    continue
                for w in range(t.n):
                    t_cut = trees.initial_subtree(t, w)
                    for f in all_rigid_surjections(t_cut, s):
                        i = injection_of(f)
                        for g in gs:
                            g_w = restrict_initial(g, w)
                            fg = compose(f, g_w)
                            for v in range(s.n):
                                lhs = compose(restrict_initial(f, v), restrict_initial(g, i.values[v]))
                                rhs = restrict_initial(fg, v)
                                assert lhs == rhs


def test_is_sealed_examples():
    assert is_sealed(TreeMap(C3, C2, (0, 0, 1)))
    assert not is_sealed(TreeMap(C3, C2, (0, 1, 0)))
    for t in trees_up_to(4):
        assert is_sealed(identity(t))


# --- conjugate leaves -------------------------------------------------------------


def test_conjugate_leaf_examples():
    e = TreeMap(Y, BROOM3, (0, 1, 3))
    assert conjugate_leaf(e, 1) == 2
    assert conjugate_leaf(e, 2) == 3  # largest leaf pairs with largest leaf
    for t in trees_up_to(4):
        for leaf in t.leaves:
            assert conjugate_leaf(identity(t), leaf) == leaf
    with pytest.raises(NotLeaf):
        conjugate_leaf(TreeMap(C2, C2, (0, 1)), 0)


def test_conjugate_composes():
    # z j-conjugate to y and y i-conjugate to x => z (j o i)-conjugate to x
    for s in trees_up_to(3):
        for t in trees_up_to(4):
            for v in trees_up_to(5):
                js = all_embeddings(t, v)
                if not js:
                    continue
                for i in all_embeddings(s, t):
                    for j in js:
                        for x in s.leaves:
                            y = conjugate_leaf(i, x)
                            z = conjugate_leaf(j, y)
                            assert z == conjugate_leaf(compose(j, i), x)


def test_restrict_conjugate_examples():
    f = TreeMap(BROOM3, Y, (0, 1, 0, 2))
    fx = restrict_conjugate(f, 1)
    assert fx.dom == trees.initial_subtree(BROOM3, 2) and fx.values == (0, 1, 0)
    assert fx.cod == C2
    for t in trees_up_to(4):
        f = identity(t)
        for x in t.leaves:
            fx = restrict_conjugate(f, x)
            assert fx == identity(trees.initial_subtree(t, x))


def test_restrict_conjugate_image():
    # image of the conjugate restriction is the full initial subtree at x
    for s in trees_up_to(4):
        for t in trees_up_to(5):
            for f in all_rigid_surjections(t, s):
                for x in s.leaves:
                    fx = restrict_conjugate(f, x)
                    assert set(fx.values) == set(range(x + 1))
                    assert is_rigid_surjection(fx)


def test_conjugate_restriction_commutes_with_composition():
    for s in trees_up_to(3):
        for t in trees_up_to(4):
            fs = all_rigid_surjections(t, s)
            if not fs:
                continue
            for v in trees_up_to(5):
                for g in all_rigid_surjections(v, t):
                    for f in fs:
                        for x in s.leaves:
                            y = conjugate_leaf(injection_of(f), x)
                            assert compose(
                                restrict_conjugate(f, x), restrict_conjugate(g, y)
                            ) == restrict_conjugate(compose(f, g), x)


# --- the word block condition -------------------------------------------------------


def test_block_condition_examples():
    assert check_block_condition((0, 1), 1, 1, 1, assert_rigid=True)
    assert not check_block_condition((0, 0), 1, 1, 1)  # block never hits its target
    assert check_block_condition((0, 1, 0), 1, 1, 2, assert_rigid=True)


def test_block_condition_maps_are_a_rigid():
    from treeramsey.maps import is_a_rigid

    for a, l, i in [(1, 1, 2), (2, 1, 2), (1, 2, 2), (2, 2, 1)]:
        dom, cod = trees.chain(a + l * i), trees.chain(a + l)
        for vals in itertools.product(range(a + l), repeat=l * i):
            p = tuple(range(a)) + vals
            if check_block_condition(p, a, l, i):
                assert is_a_rigid(TreeMap(dom, cod, p), a)
