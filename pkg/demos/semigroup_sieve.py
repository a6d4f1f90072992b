"""From a numerical semigroup to a sieve, and a chain that stays closed.

The multiples of elements of the semigroup generated by 3 and 5 form a
sieve: finitely many sporadic generators plus one family covering all
large primes.  Dividing the sieve's members down a chain of levels
keeps the resulting set of fractions closed under addition, which the
bounded oracle confirms on a window.
"""

from fractions import Fraction

from steinitz import (
    ChainPoint,
    SMonoidPresentation,
    TruncatedCone,
    additively_closed,
    chain_from_points,
    smonoid_to_sieve,
)


def main():
    m = SMonoidPresentation((3, 5))
    print(f"generators: {m.generators}")
    print(f"frobenius number: {m.frobenius_number()}")
    print(f"gaps: {[n for n in range(1, 8) if not m.contains(n)]}")

    sieve, exact = smonoid_to_sieve((3, 5))
    print(f"sieve form: {sieve}")
    print(f"exact: {exact}")
    print(f"members to 30: {sieve.members_upto(30)}")

    # levels 1, 2, 6: the members, halves of members, sixths of members
    cone = TruncatedCone.from_chain(ChainPoint((2, 6), sieve), 12, 720)
    print(f"window elements ({len(cone.elements)}): {[str(q) for q in cone.elements]}")
    print(f"additively closed on the window: {additively_closed(cone)}")

    # and the chain itself can be grown back from fractional seeds
    seeds = [Fraction(1), Fraction(1, 2), Fraction(1, 6)]
    chain = chain_from_points(sieve, seeds)
    print(f"chain recovered from {seeds}: stages {chain.stages}")


if __name__ == "__main__":
    main()
