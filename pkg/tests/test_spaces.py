import itertools
from fractions import Fraction

import pytest

from modulicones.linalg import primitive, rank
from modulicones.spaces import (
    SpaceId,
    b_normalize,
    boundary_class,
    canonical_label,
    enumerate_boundaries,
    express_in_basis,
    forgetful_pullback_sum,
    fully_pointed,
    keel_relations,
    picard_number,
    quotient_pushforward,
    quotient_pushforward_sum,
    relabel_sum,
    relations_and_basis,
)

F = Fraction

BOUNDARY_COUNTS = {0: lambda n: n // 2 - 1, 1: lambda n: n - 3, 2: lambda n: 2 * n - 6, 3: lambda n: 4 * n - 13}
PICARD = {0: lambda n: n // 2 - 1, 1: lambda n: n - 3, 2: lambda n: 2 * n - 7, 3: lambda n: 4 * n - 16}


@pytest.mark.parametrize("n", range(5, 13))
@pytest.mark.parametrize("m", range(4))
def test_boundary_and_picard_counts(n, m):
    s = SpaceId(n, m)
    assert len(enumerate_boundaries(s)) == BOUNDARY_COUNTS[m](n)
    assert picard_number(s) == PICARD[m](n)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_keel_relations_count_and_rank(n):
    rels = keel_relations(n)
    assert len(rels) == n * (n - 3) // 2  # == C(n,2) - n
    boundaries = enumerate_boundaries(fully_pointed(n))
    assert len(boundaries) == 2 ** (n - 1) - 1 - n
    assert rank(rels) == len(rels)
    assert len(boundaries) - rank(rels) == 2 ** (n - 1) - 1 - n * (n - 1) // 2


def test_canonical_label_identifies_complements():
    s = SpaceId(8, 3)
    a = canonical_label(s, 3, frozenset({1, 3}))
    b = canonical_label(s, 5, frozenset({2}))
    assert a == b


def test_pushforward_degree_rule():
    src, dst = fully_pointed(6), SpaceId(6, 3)

    def lab(*pts):
        return canonical_label(src, len(pts), frozenset(pts))

    moved = quotient_pushforward_sum(src, {lab(3, 6): F(1)}, dst)
    assert moved == {canonical_label(dst, 2, {3}): F(2)}
    fixed = quotient_pushforward_sum(src, {lab(1, 2): F(1)}, dst)
    assert fixed == {canonical_label(dst, 2, {1, 2}): F(6)}


def test_basis_reduction_x52():
    s = SpaceId(5, 2)
    b2 = boundary_class(s, canonical_label(s, 2, {1, 2}))
    assert b2.coords == (F(-1, 3), F(1, 3), F(1, 3))


def test_basis_reduction_x63():
    s = SpaceId(6, 3)
    v = boundary_class(s, canonical_label(s, 2, {1, 2}))
    assert v.coords == tuple(F(c, 3) for c in (-1, 1, 1, 0, -3, 1, 1, -1))


def test_basis_reduction_x73():
    s = SpaceId(7, 3)
    v = boundary_class(s, canonical_label(s, 2, {1, 2}))
    assert v.coords == tuple(F(c, 12) for c in (-2, 3, 3, 0, -6, 4, 4, -2, -6, 3, 3, -12))


@pytest.mark.parametrize("n", [5, 6, 7])
@pytest.mark.parametrize("m", range(4))
def test_relations_collapse_in_every_quotient(n, m):
    full = fully_pointed(n)
    labels = enumerate_boundaries(full)
    s = SpaceId(n, m)
    for relation in keel_relations(n):
        formal = {l: c for l, c in zip(labels, relation) if c}
        cls = quotient_pushforward(full, formal, s)
        assert all(c == 0 for c in cls.coords), (n, m)


def _ftau_sum():
    src = fully_pointed(6)

    def lab(*pts):
        return canonical_label(src, len(pts), frozenset(pts))

    out: dict = {}
    for sgn, pts in [
        (1, (3, 6)), (1, (4, 6)), (1, (5, 6)), (-1, (1, 6)), (-1, (2, 6)),
        (-1, (1, 3, 6)), (-1, (1, 4, 6)), (-1, (2, 3, 6)), (-1, (2, 4, 6)),
        (1, (3, 4, 6)), (1, (3, 5, 6)), (1, (1, 2)),
    ]:
        out[lab(*pts)] = out.get(lab(*pts), F(0)) + sgn
    return out


def test_moving_divisor_pushdown_n6():
    pushed = quotient_pushforward(fully_pointed(6), _ftau_sum(), SpaceId(6, 3))
    assert pushed.coords == tuple(2 * F(c) for c in (1, 0, 0, 1, -3, -1, -1, 1))


def test_moving_divisor_transport_to_n7():
    formal = quotient_pushforward_sum(fully_pointed(6), _ftau_sum(), SpaceId(6, 3))
    lifted = forgetful_pullback_sum(SpaceId(6, 3), formal, SpaceId(7, 4))
    pushed = quotient_pushforward(SpaceId(7, 4), lifted, SpaceId(7, 3))
    assert pushed.coords == tuple(F(c) for c in (4, 0, 0, 6, -6, -4, -4, 8, 6, -6, -6, -24))


def test_cotangent_class_symmetrization():
    # psi at the last point, symmetrized keeping that point distinguished
    src = fully_pointed(7)
    formal: dict = {}
    for k in range(1, 5):
        for extra in itertools.combinations((3, 4, 5, 6), k):
            members = frozenset((7,) + extra)
            lbl = canonical_label(src, len(members), members)
            formal[lbl] = formal.get(lbl, F(0)) + 1
    assert len(formal) == 15 and all(v == 1 for v in formal.values())
    swapped = relabel_sum(7, formal, {1: 7, 7: 1})
    cls = quotient_pushforward(src, swapped, SpaceId(7, 1))
    assert cls.coords == tuple(48 * F(c) for c in (10, 6, 3, 1))
    assert primitive(cls.coords) == (10, 6, 3, 1)


def test_b_normalization_factor_position():
    # only the top class carries the halving; normalization doubles it back
    assert b_normalize(SpaceId(7, 1), (1, 1, 1, 1)) == (1, 1, 1, 2)


def test_boundary_classes_against_the_ordered_basis():
    s = SpaceId(7, 1)
    assert relations_and_basis(s).ordered_basis == ("b2", "b3", "b4", "b5")
    marked = [canonical_label(s, size, {1}) for size in (2, 3, 4)]
    assert [boundary_class(s, lbl).coords for lbl in marked] == [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
    ]
    # the unmarked size-2 boundary is the branch divisor: twice the top
    # half-class of the basis
    branch = canonical_label(s, 2, frozenset())
    assert boundary_class(s, branch).coords == (0, 0, 0, 2)


def test_express_in_basis_is_linear():
    s = SpaceId(7, 1)
    l2 = canonical_label(s, 2, {1})
    l5 = canonical_label(s, 2, frozenset())
    combined = express_in_basis(s, {l2: F(3), l5: F(-1, 2)})
    assert combined.coords == (3, 0, 0, -1)


def test_space_id_validation():
    with pytest.raises(ValueError):
        SpaceId(3, 0)
    with pytest.raises(ValueError):
        SpaceId(6, 7)
