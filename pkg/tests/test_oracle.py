"""The bounded enumeration oracles.

These are the referees for the symbolic layer, so they get their own
worked examples with every expected value derived by hand in the
assertions rather than by calling back into the code under test.
"""

from fractions import Fraction

import pytest

from steinitz import (
    INF,
    BZPair,
    ChainPoint,
    ConstructionStuck,
    Sieve,
    Supernatural,
    TruncatedCone,
    additively_closed,
    chain_from_points,
    check_point_conditions,
    cone_enumerate,
    member,
    smonoid_to_sieve,
    verify_member_decision,
)


def pow2_pair():
    return BZPair(1, Supernatural.from_exponents({2: INF}))


# ------------------------------------------------------------- chain points


def test_chain_point_validation():
    ChainPoint((2, 6, 18), Sieve.full())
    with pytest.raises(ValueError):
        ChainPoint((2, 5), Sieve.full())
    with pytest.raises(ValueError):
        ChainPoint((0,), Sieve.full())
    assert ChainPoint((3,), Sieve.full()).levels() == (1, 3)


# --------------------------------------------------------- truncated cones


def test_from_pair_window_and_tail():
    cone = TruncatedCone.from_pair(pow2_pair(), Sieve.of(2), 4, 64)
    assert len(cone.elements) == 16
    assert cone.elements == cone_enumerate(pow2_pair(), 4, 64)
    # membership outside the enumeration window still answers
    assert cone.member(Fraction(1, 1024))
    assert not cone.member(Fraction(1, 3))


def test_from_chain_membership():
    cone = TruncatedCone.from_chain(ChainPoint((2, 6), Sieve.full()), 4, 6)
    assert cone.member(Fraction(5, 6))
    assert not cone.member(Fraction(1, 4))
    assert Fraction(1, 6) in cone.elements
    for q in cone.elements:
        assert cone.member(q)
        assert q.numerator <= 4 and q.denominator <= 6


def test_from_elements_membership():
    cone = TruncatedCone.from_elements([1, Fraction(1, 2)], Sieve.full(), 2, 2)
    assert cone.member(Fraction(1, 2))
    assert not cone.member(Fraction(3, 2))


# ----------------------------------------------------- the point conditions


def test_point_conditions_on_integers():
    cone = TruncatedCone.from_elements(range(1, 11), Sieve.full(), 10, 1)
    report = check_point_conditions(cone)
    assert report.verified()
    assert report.free
    assert len(report.rank_one.witnesses) == 55
    assert report.rank_one.unresolved == ()


def test_point_conditions_verified_dyadic():
    cone = TruncatedCone.from_pair(pow2_pair(), Sieve.of(2), 4, 720)
    report = check_point_conditions(cone)
    assert report.verified()
    for a, a2, b, c, c2 in report.rank_one.witnesses:
        assert a == b * c and a2 == b * c2
        assert c == 1 or Sieve.of(2).contains(c)
        assert c2 == 1 or Sieve.of(2).contains(c2)
        assert cone.member(b)


def test_point_conditions_unresolved():
    # powers of 3 in the denominators but only even monoid factors:
    # any shared lower element would need an even c with 3c a power
    # of 3, so every off-diagonal pair stays open
    pair = BZPair(1, Supernatural.from_exponents({3: INF}))
    cone = TruncatedCone.from_pair(pair, Sieve.of(2), 4, 100)
    report = check_point_conditions(cone, search_bound=2000)
    assert report.free
    assert not report.verified()
    assert (Fraction(1, 3), Fraction(1)) in report.rank_one.unresolved


# --------------------------------------------------------- member decisions


def test_verify_member_frozen():
    x = Supernatural.from_exponents({2: INF, 3: INF, 5: 2})
    refuted = verify_member_decision(x, Sieve.of(10))
    assert refuted.consistent is False and refuted.witness == 25
    ok = verify_member_decision(x, Sieve.of(6))
    assert ok.consistent is True and ok.witness is None
    assert not member(x, Sieve.of(10)) and member(x, Sieve.of(6))


def test_verify_member_refutes_finite_points():
    ev = verify_member_decision(Supernatural.from_int(12), Sieve.of(2))
    assert not ev.consistent
    assert ev.witness == 4


def test_verify_member_rejects_full_sieve():
    with pytest.raises(ValueError):
        verify_member_decision(Supernatural.all_infinite(), Sieve.full())


# --------------------------------------------------------- additive closure


def test_additively_closed_frozen():
    bad = TruncatedCone.from_elements(
        [1, Fraction(1, 2), 2, 3], Sieve.full(), 3, 2
    )
    assert not additively_closed(bad)  # 1/2 + 1 = 3/2 is missing
    good = TruncatedCone.from_pair(pow2_pair(), Sieve.of(2), 4, 8)
    assert additively_closed(good)


def test_chain_truncation_additively_closed():
    # over the full numerical semigroup of 3 and 5 the levels absorb
    # all pairwise sums; over just the multiples of 3 or 5 they do not
    # (1/2 + 5/6 = 4/3 would need 8 in the monoid)
    semigroup, exact = smonoid_to_sieve((3, 5))
    assert exact
    cone = TruncatedCone.from_chain(ChainPoint((2, 6), semigroup), 12, 720)
    assert len(cone.elements) == 26
    assert additively_closed(cone)
    bare = TruncatedCone.from_chain(ChainPoint((2, 6), Sieve.of(3, 5)), 12, 720)
    assert len(bare.elements) == 21
    assert not additively_closed(bare)


# ------------------------------------------------------- chain construction


def test_chain_from_points_frozen():
    c = chain_from_points(Sieve.full(), [1, Fraction(1, 2), Fraction(1, 6)])
    assert c.stages == (2, 6)
    c2 = chain_from_points(Sieve.full(), [Fraction(1, 4), Fraction(1, 6)])
    assert c2.stages == (3,)


def test_chain_from_points_covers_seeds(rng):
    for _ in range(40):
        seeds = [
            Fraction(rng.randrange(1, 8), rng.randrange(1, 8)) for _ in range(4)
        ]
        c = chain_from_points(Sieve.full(), seeds)
        scale = 1 / seeds[0]
        for q in seeds:
            lifted = [q * scale * l for l in c.levels()]
            assert any(
                x.denominator == 1 and x >= 1 for x in lifted
            ), (seeds, c.stages, q)


def test_chain_from_points_respects_monoid():
    c = chain_from_points(Sieve.of(7), [1, Fraction(1, 2)], search_bound=40)
    assert c.stages == (14,)
    # the growth factor and the lifted seed both landed on multiples of 7
    assert Sieve.of(7).contains(14) and Sieve.of(7).contains(7)


def test_chain_from_points_stuck():
    with pytest.raises(ConstructionStuck) as exc:
        chain_from_points(Sieve.of(4), [1, Fraction(1, 6)], search_bound=20)
    assert exc.value.seed == Fraction(1, 6)


def test_chain_from_points_validation():
    with pytest.raises(ValueError):
        chain_from_points(Sieve.full(), [])
    with pytest.raises(ValueError):
        chain_from_points(Sieve.full(), [Fraction(-1, 2)])
