from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stonedual.algebra import FCSet, cofin, fc_algebra, fin, finite_algebra, product_algebra
from stonedual.errors import ForeignElement, NotASubset, NotClopen
from stonedual.homs import all_homomorphisms, dual_point_map, hom_compose, hom_identity
from stonedual.pointmap import PointMap
from stonedual.stone import (EVENS, FREE, PRINCIPAL, Character, FCPoints, PointSet, ResidueClass,
                             UnrealizedClopen, char_eval, characters, closure, clopen_element,
                             interior, is_clopen_in, is_closed, is_compact, is_dense, is_open,
                             stone_set, trace, trace_gap)

N = fc_algebra()
PQR = finite_algebra("pqr")


def brute_characters(A):
    """Every map A -> 2 that preserves the operations."""
    elems = list(A.elements())
    out = []
    for bits in product((0, 1), repeat=len(elems)):
        v = dict(zip(elems, bits))
        if v[A.top()] != 1 or v[A.bottom()] != 0:
            continue
        if all(v[a & b] == v[a] & v[b] and v[~a] == 1 - v[a] for a in elems for b in elems):
            out.append(v)
    return out


@pytest.mark.parametrize("n", range(4))
def test_characters_match_brute_force(n):
    A = finite_algebra("pqr"[:n])
    ours = [{a: x(a) for a in A.elements()} for x in characters(A)]
    brute = brute_characters(A)
    assert len(ours) == len(brute)
    assert all(v in brute for v in ours)


def test_characters_of_fc_bounded():
    xs = list(characters(N, 2))
    assert xs == [Character(N, 0, PRINCIPAL, 0), Character(N, 0, PRINCIPAL, 1), Character(N, 0, FREE)]
    sample = [N.element(fin(0)), N.element(cofin(0)), N.element(fin(1, 4)), N.top(), N.bottom()]
    for x in xs:
        for a in sample:
            for b in sample:
                assert x(a & b) == x(a) & x(b)
            assert x(~a) == 1 - x(a)


def test_characters_of_degenerate_algebra_is_empty():
    assert list(characters(finite_algebra([]))) == []


def test_free_only_on_infinite_fc():
    with pytest.raises(ForeignElement):
        Character(fc_algebra(3), 0, FREE)
    with pytest.raises(ForeignElement):
        Character(PQR, 0, FREE)


def test_char_eval_examples():
    assert char_eval(Character(N, 0, PRINCIPAL, 0), N.element(fin(0, 1))) == 1
    assert char_eval(Character(N, 0, FREE), N.element(fin(0, 1))) == 0
    assert char_eval(Character(N, 0, FREE), N.element(cofin(5))) == 1
    with pytest.raises(ForeignElement):
        char_eval(Character(N, 0, FREE), PQR.top())


def test_stone_set_examples():
    a = PQR.element(frozenset("pq"))
    assert set(stone_set(a).points()) == {Character(PQR, 0, "atom", "p"), Character(PQR, 0, "atom", "q")}
    s = stone_set(N.element(fin(0, 1)))
    assert s.blocks[0] == FCPoints(fin(0, 1), False)
    assert stone_set(N.top()) == PointSet.full(N)


@pytest.mark.parametrize("n", range(6))
def test_stone_set_is_filter_of_characters(n):
    A = finite_algebra("pqrst"[:n])
    xs = list(characters(A))
    for a in A.elements():
        assert set(stone_set(a).points()) == {x for x in xs if x(a)}


@pytest.mark.parametrize("n", range(5))
def test_stone_map_is_homomorphism_into_powerset(n):
    A = finite_algebra("pqrs"[:n])
    full = PointSet.full(A)
    assert stone_set(A.top()) == full
    for a in A.elements():
        assert stone_set(~a) == full - stone_set(a)
        for b in A.elements():
            assert stone_set(a & b) == stone_set(a) & stone_set(b)
            assert stone_set(a | b) == stone_set(a) | stone_set(b)


def test_trace_examples():
    X = PointSet(N, (FCPoints(cofin(), False),))
    assert trace(X, N.top()).blocks[0] == FCPoints(cofin(), False)
    assert trace(PointSet.full(N), N.element(fin(3))) == stone_set(N.element(fin(3)))
    empty = PointSet.empty(N)
    assert trace(empty, N.element(cofin(2))).is_empty()


# -- topology ---------------------------------------------------------------------------------

PRINCIPALS = PointSet(N, (FCPoints(cofin(), False),))
FREE_ONLY = PointSet(N, (FCPoints(fin(), True),))


def test_topology_all_principals():
    assert is_open(PRINCIPALS)
    assert is_dense(PRINCIPALS)
    assert not is_compact(PRINCIPALS)
    assert not is_closed(PRINCIPALS)


def test_topology_free_point():
    assert not is_open(FREE_ONLY)
    assert is_closed(FREE_ONLY)
    assert is_compact(FREE_ONLY)


def test_topology_full_space():
    S = PointSet.full(N)
    assert is_open(S) and is_closed(S) and is_compact(S) and is_dense(S)


def test_is_clopen_in_examples():
    S = PointSet.full(N)
    assert is_clopen_in(S, S)
    assert not is_clopen_in(S, PRINCIPALS)
    evens_cofinite = PointSet(N, (FCPoints(cofin(1, 3), False),))
    assert is_clopen_in(PRINCIPALS, evens_cofinite)
    with pytest.raises(NotASubset):
        is_clopen_in(PRINCIPALS, S)


point_sets = st.builds(
    lambda cof, s, free: PointSet(N, (FCPoints(FCSet(cof, frozenset(s)), free),)),
    st.booleans(), st.sets(st.integers(0, 9), max_size=4), st.booleans())


@given(point_sets, point_sets)
def test_kuratowski_closure(X, Y):
    assert closure(closure(X)) == closure(X)
    assert X <= closure(X)
    assert closure(X | Y) == closure(X) | closure(Y)
    if X <= Y:
        assert closure(X) <= closure(Y)


@given(point_sets)
def test_interior_is_dual_of_closure(X):
    assert interior(X) == closure(X.complement()).complement()
    assert interior(X) <= X
    assert is_open(interior(X))
    assert is_closed(closure(X))


@given(point_sets)
def test_two_density_definitions_agree(X):
    # dense iff every nonzero element has a point of X in its Stone set
    probes = [N.element(fin(i)) for i in range(12)] + [N.element(cofin(*range(12)))]
    by_elements = all(not trace(X, a).is_empty() for a in probes)
    assert is_dense(X) == by_elements


@given(point_sets)
def test_compact_open_is_clopen(X):
    if is_compact(X) and is_open(X):
        assert is_clopen_in(PointSet.full(N), X)
        assert stone_set(clopen_element(X)) == X


@given(point_sets)
def test_clopen_element_only_for_clopens(X):
    clopen = is_open(X) and is_closed(X)
    if clopen:
        assert stone_set(clopen_element(X)) == X
    else:
        with pytest.raises(NotClopen):
            clopen_element(X)


# -- dz failure witness ------------------------------------------------------------------------

def test_trace_gap_and_unrealized_clopen():
    assert trace_gap(PRINCIPALS) == 0
    assert trace_gap(PointSet.full(N)) is None
    w = UnrealizedClopen(PRINCIPALS, 0)
    assert "even" in w.describe()
    samples = [N.element(fin(0, 2)), N.element(cofin(1)), N.element(cofin()), N.element(fin()),
               N.element(cofin(0, 2, 4))]
    for a in samples:
        y = w.distinguish(a)
        assert (y in w) != bool(y(a))


def test_residue_class():
    odd = ResidueClass(2, 1)
    assert 3 in odd and 4 not in odd
    assert 0 in EVENS


# -- dual point maps ---------------------------------------------------------------------------

def test_dual_point_map_examples():
    PQ, U = finite_algebra("pq"), finite_algebra("u")
    assert dual_point_map(hom_identity(PQ)) == PointMap.identity(PointSet.full(PQ))
    from stonedual.homs import Homomorphism
    phi = Homomorphism.from_dual(PQ, U, [{Character(U, 0, "atom", "u"): Character(PQ, 0, "atom", "p")}])
    assert phi.dual(Character(U, 0, "atom", "u")) == Character(PQ, 0, "atom", "p")
    D = finite_algebra([])
    to_d = next(iter(all_homomorphisms(PQ, D)))
    assert to_d.dual.source.is_empty()


@pytest.mark.parametrize("sizes", [(1, 2, 2), (2, 2, 3), (3, 2, 1), (2, 3, 2)])
def test_dual_is_contravariant(sizes):
    A, B, C = (finite_algebra("pqr"[:n]) for n in sizes)
    for phi in all_homomorphisms(A, B):
        for psi in all_homomorphisms(B, C):
            lhs = dual_point_map(hom_compose(psi, phi))
            rhs = dual_point_map(psi).then(dual_point_map(phi))
            assert lhs == rhs
            for y in characters(C):
                assert lhs(y) == phi.dual(psi.dual(y))


@pytest.mark.parametrize("sizes", [(2, 2), (3, 2), (2, 3)])
def test_dual_is_continuous(sizes):
    A, B = (finite_algebra("pqr"[:n]) for n in sizes)
    for phi in all_homomorphisms(A, B):
        for a in A.elements():
            assert phi.dual.preimage(stone_set(a)) == stone_set(phi(a))


def test_pointset_product_blocks():
    P = product_algebra(finite_algebra("p"), N)
    X = PointSet.full(P)
    assert Character(P, 1, FREE) in X
    assert len(list(X.points(3))) == 1 + 3 + 1


fc_elements = st.builds(lambda cof, s: N.element(FCSet(cof, frozenset(s))),
                        st.booleans(), st.sets(st.integers(0, 9), max_size=4))


@given(fc_elements, fc_elements)
def test_stone_map_on_fc_is_a_homomorphism(a, b):
    full = PointSet.full(N)
    assert stone_set(a & b) == stone_set(a) & stone_set(b)
    assert stone_set(a | b) == stone_set(a) | stone_set(b)
    assert stone_set(~a) == full - stone_set(a)
    assert (stone_set(a) == stone_set(b)) == (a == b)
    assert clopen_element(stone_set(a)) == a


@given(fc_elements, fc_elements)
def test_characters_evaluate_homomorphically_on_fc(a, b):
    for x in characters(N, 12):
        assert x(a & b) == x(a) & x(b)
        assert x(a | b) == x(a) | x(b)
        assert x(~a) == 1 - x(a)


@given(st.booleans(), st.sets(st.integers(0, 4), max_size=4))
def test_pointsets_on_finite_universe_are_canonical(cof, s):
    A = fc_algebra(5)
    X = PointSet(A, (FCPoints(FCSet(cof, frozenset(s)), False),))
    assert not X.blocks[0].principal.cofinite
    assert X.blocks[0].free is False
    with pytest.raises(ForeignElement):
        Character(A, 0, FREE)
