"""Fractional exponent maps, their pair form, and rank-one witnesses."""

from fractions import Fraction

from steinitz import (
    INF,
    BZPair,
    ExpMap,
    FractionalSupernatural,
    Sieve,
    Supernatural,
    TruncatedCone,
    check_point_conditions,
    cone_contains,
    cone_enumerate,
    frac_to_pair,
    pair_to_frac,
)


def main():
    f = FractionalSupernatural(ExpMap(1, {0: 0}, {2: -3, 3: 1, 5: -1}))
    print(f"fraction-like map: {f}")
    pair = frac_to_pair(f)
    print(f"pair form: {pair}")
    print(f"back again: {pair_to_frac(pair)}")
    print()

    dyadic = BZPair(1, Supernatural.from_exponents({2: INF}))
    print(f"cone of {dyadic}: numerators free, denominators powers of two")
    print("window:", " ".join(str(q) for q in cone_enumerate(dyadic, 3, 4)))
    print(f"1/1024 inside: {cone_contains(dyadic, Fraction(1, 1024))}")
    print(f"1/3 inside: {cone_contains(dyadic, Fraction(1, 3))}")
    print()

    # rank one over the even numbers: any two window elements divide
    # down to a common element, witnessed explicitly
    cone = TruncatedCone.from_pair(dyadic, Sieve.of(2), 4, 64)
    report = check_point_conditions(cone)
    print(f"freeness sampled: {report.free}")
    print(f"rank-one verified: {report.rank_one.verified}")
    a, a2, b, c, c2 = report.rank_one.witnesses[1]
    print(f"sample witness: {a} = {b} * {c} and {a2} = {b} * {c2}")
    print()

    # the same monoid cannot pull powers of three together
    triadic = BZPair(1, Supernatural.from_exponents({3: INF}))
    cone3 = TruncatedCone.from_pair(triadic, Sieve.of(2), 4, 100)
    report3 = check_point_conditions(cone3, search_bound=2000)
    print(f"triadic over even factors verified: {report3.rank_one.verified}")
    print(f"first open pair: {report3.rank_one.unresolved[0]}")


if __name__ == "__main__":
    main()
