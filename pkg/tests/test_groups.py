import random
from itertools import combinations

import pytest
from sympy.combinatorics import Permutation

from cmkit.core.errors import ElementNotInGroup, GroupTooLarge, InvalidPermutation, NotNormal, SubgroupMismatch
from cmkit.core.groups import (FiniteGroup, all_subgroups, class_index, coset_action, conjugacy_classes, cycle_notation,
                               element_order, is_abelian, is_normal, normalizer, quotient_group, subgroup_classes)


def test_from_generators_orders(klein, gm):
    assert klein.order == 4
    assert gm(6)[0].group.order == 24
    assert FiniteGroup.from_generators(3, []).order == 1


def test_elements_are_sorted_and_start_with_identity(s3):
    arrays = [tuple(p.array_form) for p in s3.elements]
    assert arrays == sorted(arrays)
    assert arrays[0] == (0, 1, 2)


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        FiniteGroup.from_generators(3, [[0, 0, 1]])
    with pytest.raises(InvalidPermutation):
        FiniteGroup.from_generators(3, [[0, 1]])


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        FiniteGroup.from_generators(5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]], max_order=100)


def test_index_of_foreign_element(s3):
    with pytest.raises(ElementNotInGroup):
        s3.index(Permutation([1, 0, 2, 3]))


def test_closure_under_products(gm):
    G = gm(8)[0].group
    rng = random.Random(8)
    for _ in range(200):
        x, y = rng.randrange(G.order), rng.randrange(G.order)
        assert G.element(x) * G.element(y) == G.element(G.mul(x, y))
        assert G.mul(x, G.inv(x)) == G.identity_index


def test_conjugacy_classes(klein, s3, gm):
    assert [c.size for c in conjugacy_classes(klein)] == [1, 1, 1, 1]
    assert [c.size for c in conjugacy_classes(s3)] == [1, 3, 2]

    G = gm(6)[0].group
    classes = conjugacy_classes(G)
    assert sum(c.size for c in classes) == G.order
    assert classes[0].members == (G.identity_index,)
    for c in classes:
        conjugates = {G.conjugate(c.representative_index, g) for g in range(G.order)}
        assert conjugates == set(c.members)
        assert all(class_index(G, i) == classes.index(c) for i in c.members)


def test_all_subgroups_counts(klein, c6):
    assert len(all_subgroups(klein)) == 5
    assert len(all_subgroups(c6)) == 4


def test_all_subgroups_matches_pairwise_generation(gm):
    G = gm(8)[0].group
    subgroups = all_subgroups(G)
    assert len({H.members for H in subgroups}) == len(subgroups)
    assert all(G.order % H.order == 0 for H in subgroups)

    found = {H.members for H in subgroups}
    for x, y in combinations(range(G.order), 2):
        assert tuple(sorted(G.closure((x, y)))) in found


@pytest.mark.parametrize('m', [6, 8, 10, 12, 14, 16])
def test_all_subgroups_contains_every_generated_subgroup(gm, m):
    G = gm(m)[0].group
    assert G.order <= 64
    found = {H.members for H in all_subgroups(G)}
    rng = random.Random(m)
    for _ in range(200):
        sample = rng.sample(range(G.order), rng.randint(1, 3))
        assert tuple(sorted(G.closure(sample))) in found


def test_subgroup_bound(gm):
    with pytest.raises(GroupTooLarge):
        all_subgroups(gm(6)[0].group, max_order=10)


def test_is_normal(s3, gm):
    inst = gm(8)[0]
    assert is_normal(inst.group, inst.subgroup('a'))
    assert not is_normal(inst.group, inst.subgroup('b'))
    assert not is_normal(s3, s3.subgroup([Permutation([1, 0, 2])]))
    assert is_normal(s3, s3.whole())


def test_is_normal_rejects_foreign_subgroup(s3, klein):
    with pytest.raises(SubgroupMismatch):
        is_normal(s3, klein.whole())


def test_normalizer(s3, gm):
    H = s3.subgroup([Permutation([1, 0, 2])])
    assert normalizer(s3, H).order == 2

    inst = gm(8)[0]
    assert normalizer(inst.group, inst.subgroup('b')).order == 16
    assert normalizer(inst.group, inst.subgroup('a')).is_whole


def test_quotient_group(klein, gm):
    inst = gm(6)[0]
    Q = quotient_group(inst.group, inst.subgroup('a'))
    assert Q.order == 12
    assert is_abelian(Q)

    assert quotient_group(klein, klein.whole()).order == 1
    assert quotient_group(klein, klein.subgroup([klein.generators[0]])).order == 2

    with pytest.raises(NotNormal):
        quotient_group(inst.group, inst.subgroup('b'))


def test_is_abelian(klein, gm):
    assert is_abelian(klein)
    assert not is_abelian(gm(6)[0].group)
    assert is_abelian(FiniteGroup.from_generators(2, []))


@pytest.mark.parametrize('m, order', [(6, 12), (8, 8)])
def test_element_order_of_bt(gm, m, order):
    G = gm(m)[0].group
    assert element_order(G, G.evaluate_word('b*t')) == order
    assert element_order(G, G.identity) == 1


def test_coset_action_natural_s3(s3):
    H = s3.subgroup([Permutation([1, 0, 2])])
    action = coset_action(s3, H)
    assert action.degree == 3
    assert action.coset_of[s3.identity_index] == 0
    assert action.kernel().is_trivial
    assert len(action) == s3.order


def test_coset_action_extremes(s3):
    regular = coset_action(s3, s3.trivial_subgroup())
    assert regular.degree == s3.order

    point = coset_action(s3, s3.whole())
    assert point.degree == 1
    assert all(point[g] == Permutation([0]) for g in s3.elements)


def test_coset_action_is_a_homomorphism(gm):
    inst = gm(6)[0]
    G = inst.group
    for H in (inst.subgroup('b'), inst.subgroup('t^2'), inst.subgroup('a', 'b')):
        action = coset_action(G, H)
        for x in range(G.order):
            for y in range(G.order):
                composed = tuple(action.images(y)[p] for p in action.images(x))
                assert action.images(G.mul(x, y)) == composed


def test_cycle_list_covers_all_points(gm):
    inst = gm(8)[0]
    action = coset_action(inst.group, inst.subgroup('b'))
    t = inst.group.index(inst.t)
    cycles = action.cycle_list(t)
    assert sorted(p for cycle in cycles for p in cycle) == list(range(action.degree))
    assert all(cycle[0] == min(cycle) for cycle in cycles)
    assert action.cycles(t) == sorted(len(cycle) for cycle in cycles)


def test_subgroup_classes_partition(gm):
    G = gm(8)[0].group
    classes = subgroup_classes(G)
    assert sum(len(cls) for cls in classes) == len(all_subgroups(G))
    for cls in classes:
        assert len({H.order for H in cls}) == 1


def test_words(gm):
    G = gm(6)[0].group
    assert G.evaluate_word('t^6') == G.identity
    assert G.evaluate_word('t*b*t^-1') == G.evaluate_word('a*b')
    assert G.evaluate_word('1') == G.identity
    with pytest.raises(ElementNotInGroup):
        G.evaluate_word('x')


def test_cycle_notation():
    assert cycle_notation(Permutation([1, 0, 3, 2])) == '(0 1)(2 3)'
    assert cycle_notation(Permutation([0, 1, 2])) == '()'
