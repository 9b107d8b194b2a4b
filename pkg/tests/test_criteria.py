import logging

import pytest

import cmkit.core.primitives as primitives
from cmkit.core.characters import character_table, inner_product, symmetric_square, trivial_character
from cmkit.core.errors import GenusZeroQuotient, InvalidParameter, NotProperNontrivial
from cmkit.core.groups import FiniteGroup
from cmkit.criteria.certificates import Criteria, Route
from cmkit.criteria.relations import (IsogenyRelation, fixed_dimensions, h1_multiplicities, solve_relation,
                                      verify_isogeny_relation)
from cmkit.criteria.statement_a import check_statement_A
from cmkit.criteria.statement_b import check_statement_B, induced_abelian_groups
from cmkit.criteria.streit import streit_test
from cmkit.criteria.verdict import (CMVerdict, Status, candidate_collections, candidate_subgroups, cm_verdict,
                                    recheck)
from cmkit.surfaces.chevalley_weil import analytic_character
from cmkit.surfaces.surface import GeneratingVector, QuasiplatonicSurface, quotient_surface


# Statement A.

@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_statement_a_on_the_center(gm, m):
    inst, X, _ = gm(m)
    outcome = check_statement_A(inst.group, inst.subgroup('a'), X)
    assert outcome
    assert outcome.evidence['quotient_order'] == 2 * m
    assert outcome.evidence['branch_values'] <= len(X.vector)


def test_statement_a_rejects_non_normal(gm):
    inst = gm(6)[0]
    outcome = check_statement_A(inst.group, inst.subgroup('b'))
    assert not outcome
    assert outcome.evidence['normal'] is False


def test_statement_a_in_an_abelian_group(klein):
    assert check_statement_A(klein, klein.subgroup([klein.generators[0]]))


def test_statement_a_needs_proper_nontrivial(gm):
    G = gm(6)[0].group
    with pytest.raises(NotProperNontrivial):
        check_statement_A(G, G.trivial_subgroup())
    with pytest.raises(NotProperNontrivial):
        check_statement_A(G, G.whole())


def test_statement_a_certifier_needs_a_quasiplatonic_surface(klein_genus3):
    X = klein_genus3
    G = X.group
    H = G.subgroup([G.generators[0]])
    assert check_statement_A(G, H)
    genus = quotient_surface(X, H).genus
    assert genus == 1
    assert Criteria.certify_factor(X, H, genus) is None


# Statement B.

@pytest.mark.parametrize('m', [8, 12, 16, 20])
def test_statement_b_on_z(gm, m):
    inst, X, _ = gm(m)
    outcome = check_statement_B(X, inst.subgroup('b'))
    assert outcome
    evidence = outcome.evidence
    assert evidence['genus'] == m // 4 - 1
    assert evidence['K_order'] == m
    assert evidence['K_order'] > evidence['bound']
    assert evidence['signature'] == {'orbit_genus': 0, 'periods': [2, m // 2, m // 2]}
    assert evidence['belyi']
    assert evidence['excluded'] == []


@pytest.mark.parametrize('m', [6, 10])
def test_statement_b_on_b_quotient_when_m_is_2_mod_4(gm, m):
    inst, X, _ = gm(m)
    outcome = check_statement_B(X, inst.subgroup('b'))
    assert outcome
    assert outcome.evidence['genus'] == (m - 2) // 4
    if outcome.evidence['genus'] == 1:
        assert outcome.evidence['belyi']


def test_statement_b_sextic_exception(c6_surface):
    G = c6_surface.group
    outcome = check_statement_B(c6_surface, G.trivial_subgroup())
    assert not outcome
    assert outcome.evidence['genus'] == 2
    [excluded] = outcome.evidence['excluded']
    assert excluded['K_order'] == 6
    assert excluded['abelian_invariants'] == [2, 3]
    assert excluded['signature'] == {'orbit_genus': 0, 'periods': [2, 2, 3, 3]}
    assert not excluded['belyi']


def test_statement_b_on_an_elliptic_quotient_needs_a_triangle(hyperelliptic):
    X = hyperelliptic(1)
    outcome = check_statement_B(X, X.group.trivial_subgroup())
    assert not outcome
    [excluded] = outcome.evidence['excluded']
    assert excluded['K_order'] == 2
    assert excluded['signature'] == {'orbit_genus': 0, 'periods': [2, 2, 2, 2]}
    assert not excluded['belyi']


def test_statement_b_needs_positive_genus(gm):
    inst, X, _ = gm(6)
    with pytest.raises(GenusZeroQuotient):
        check_statement_B(X, inst.group.whole())


def test_induced_abelian_groups_are_sorted(gm):
    inst, X, _ = gm(8)
    H = inst.subgroup('b')
    groups = induced_abelian_groups(X, H)
    assert groups[0].order == 16
    assert all(H.issubset(K) for K in groups)
    assert [K.order for K in groups] == sorted((K.order for K in groups), reverse=True)


def test_certifier_registry_order():
    assert [rule.route for rule in Criteria.ordered()] == [Route.GENUS_ZERO, Route.STATEMENT_A, Route.STATEMENT_B]


def test_certify_factor(gm):
    inst, X, _ = gm(8)
    a, b = inst.subgroup('a'), inst.subgroup('b')
    certificate = Criteria.certify_factor(X, a, quotient_surface(X, a).genus)
    assert certificate.route is Route.STATEMENT_A
    certificate = Criteria.certify_factor(X, b, quotient_surface(X, b).genus, multiplicity=2)
    assert certificate.route is Route.STATEMENT_B
    assert certificate.multiplicity == 2
    assert Criteria.certify_factor(X, inst.group.whole(), 0).route is Route.GENUS_ZERO


# Isogeny relations.

def test_relation_validation(gm):
    inst = gm(6)[0]
    with pytest.raises(InvalidParameter):
        IsogenyRelation(0, [(inst.subgroup('a'), 1)])
    with pytest.raises(InvalidParameter):
        IsogenyRelation(1, [])
    with pytest.raises(InvalidParameter):
        IsogenyRelation(1, [(inst.subgroup('a'), 0)])
    with pytest.raises(NotProperNontrivial):
        IsogenyRelation(1, [(inst.group.trivial_subgroup(), 1)])


def test_relation_fails_on_dimension(gm):
    inst, X, T = gm(6)
    check = verify_isogeny_relation(X, T, IsogenyRelation(1, [(inst.subgroup('a'), 1)]))
    assert not check
    assert check.basis is None
    assert any(row['lhs'] != row['rhs'] for row in check.report)


def test_relation_without_provenance_is_judged_isotypically(gm):
    inst, X, T = gm(6)
    assert not verify_isogeny_relation(X, T, IsogenyRelation(1, [(inst.subgroup('a'), 2)]))


def test_relation_report_rows(gm):
    inst, X, T = gm(8)
    R = IsogenyRelation(1, [(inst.subgroup('a'), 1), (inst.subgroup('b'), 2)])
    check = verify_isogeny_relation(X, T, R)
    assert check.basis == 'isotypic'
    h1 = h1_multiplicities(X, T)
    assert [row['irreducible'] for row in check.report] == [i for i, n in enumerate(h1) if n]
    assert all(row['lhs'] == row['rhs'] for row in check.report)
    assert sum(n * d for n, d in zip(h1, T.degrees)) == 2 * X.genus


def test_solve_relation(gm):
    inst, X, T = gm(8)
    a, b = inst.subgroup('a'), inst.subgroup('b')
    h1 = h1_multiplicities(X, T)
    R = solve_relation(T, h1, [a, b])
    assert R.n == 1
    assert R.multiplicities == [1, 2]
    assert solve_relation(T, h1, [b]) is None


def test_fixed_dimensions_of_the_analytic_character(gm):
    inst, X, T = gm(8)
    multiplicities = h1_multiplicities(X, T)
    dims = fixed_dimensions(T, inst.subgroup('a'))
    assert sum(n * d for n, d in zip(multiplicities, dims)) == 2 * quotient_surface(X, inst.subgroup('a')).genus


# Streit's test.

@pytest.mark.parametrize('m', [6, 10, 14])
def test_streit_vanishes_when_m_is_2_mod_4(gm, m):
    _, X, T = gm(m)
    assert streit_test(X, T) == 0


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_streit_is_conjugation_invariant(gm, m):
    _, X, T = gm(m)
    value = streit_test(X, T)
    assert value >= 0
    conjugate = analytic_character(X, T).conjugate()
    assert inner_product(symmetric_square(conjugate), trivial_character(X.group)) == value


def test_streit_on_an_elliptic_involution():
    """
    The elliptic involution acts by −1 on the differential, and S² of the sign character is trivial.
    """
    G = FiniteGroup.from_generators(2, [[1, 0]])
    s = G.generators[0]
    X = QuasiplatonicSurface(GeneratingVector(G, [s, s, s, s]))
    T = character_table(G)
    assert X.genus == 1
    assert streit_test(X, T) == 1


def test_streit_needs_positive_genus(klein):
    a, b = klein.generators
    X = QuasiplatonicSurface(GeneratingVector(klein, [a, b, a * b]))
    with pytest.raises(InvalidParameter):
        streit_test(X, character_table(klein))


# The verdict.

@pytest.mark.parametrize('m', [6, 8, 10, 12, 14, 16, 18, 20])
def test_verdict_certifies_every_gm(gm, m):
    _, X, T = gm(m)
    verdict = cm_verdict(X, T)
    assert verdict.certified
    assert verdict.streit_value == streit_test(X, T)
    assert recheck(X, T, verdict)


def test_verdict_by_streit(gm):
    _, X, T = gm(6)
    verdict = cm_verdict(X, T)
    assert verdict.route is Route.STREIT
    assert verdict.relation is None


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_verdict_by_relation(gm, m):
    _, X, T = gm(m)
    verdict = cm_verdict(X, T, streit=False)
    assert verdict.status is Status.CM_CERTIFIED
    assert verdict.route is Route.RELATION
    assert verdict.check.holds
    assert verdict.check.basis == 'isotypic'
    assert len(verdict.certificates) == len(verdict.relation.factors)
    R = verdict.relation
    assert R.n * X.genus == sum(k * c.genus for k, c in zip(R.multiplicities, verdict.certificates))
    assert recheck(X, T, verdict)


def test_verdict_with_an_abelian_group():
    G3 = FiniteGroup.from_generators(3, [[1, 2, 0]])
    t = G3.generators[0]
    fermat = QuasiplatonicSurface(GeneratingVector(G3, [t, t, t]))
    verdict = cm_verdict(fermat, character_table(G3))
    assert verdict.route is Route.ABELIAN_COVER
    assert recheck(fermat, character_table(G3), verdict)


def test_verdict_without_candidates(hyperelliptic):
    X = hyperelliptic(2)
    T = character_table(X.group)
    verdict = cm_verdict(X, T)
    assert not X.is_quasiplatonic
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.streit_value == 3
    assert not verdict.truncated


def test_verdict_needs_a_quasiplatonic_surface(klein_genus3):
    X = klein_genus3
    T = character_table(X.group)
    verdict = cm_verdict(X, T)
    assert not X.is_quasiplatonic
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.route is None
    assert not verdict.truncated
    assert not recheck(X, T, CMVerdict(Status.CM_CERTIFIED, Route.STREIT, verdict.streit_value))


def test_verdict_that_exhausts_the_limit_is_complete(klein_genus3):
    X = klein_genus3
    T = character_table(X.group)
    total = len(list(candidate_collections(candidate_subgroups(X), primitives.get_max_collection())))
    assert not cm_verdict(X, T, search_limit=total).truncated
    assert cm_verdict(X, T, search_limit=total - 1).truncated


def test_verdict_truncated(gm, caplog):
    _, X, T = gm(6)
    with caplog.at_level(logging.WARNING):
        verdict = cm_verdict(X, T, search_limit=1, streit=False)
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.truncated
    assert not recheck(X, T, verdict)
    assert 'stopped after' in caplog.text


def test_verdict_needs_positive_genus(klein):
    a, b = klein.generators
    X = QuasiplatonicSurface(GeneratingVector(klein, [a, b, a * b]))
    with pytest.raises(InvalidParameter):
        cm_verdict(X, character_table(klein))


def test_candidate_order(gm):
    _, X, _ = gm(8)
    subgroups = candidate_subgroups(X)
    assert all(quotient_surface(X, H).genus > 0 for H in subgroups)
    assert all(not H.is_trivial and not H.is_whole for H in subgroups)

    keys = [(len(c), sum(H.index for H in c)) for c in candidate_collections(subgroups, 2)]
    assert keys == sorted(keys)
    assert len(keys) == len(subgroups) + len(subgroups) * (len(subgroups) - 1) // 2
