"""Two incomparable points and the opens that tell them apart.

Every supernatural number is a formal product of prime powers where an
exponent may be infinite.  Up to the equivalence "same infinite part,
finitely many finite disagreements" these are the points of a
topology whose basic opens come from sieves.  This demo builds two
pairs of incomparable points and shows both separation mechanisms.
"""

from steinitz import (
    INF,
    Supernatural,
    incomparable,
    member,
    separating_sieves,
)


def show(name, x, y):
    print(f"--- {name}")
    print(f"x = {x}")
    print(f"y = {y}")
    print(f"incomparable: {incomparable(x, y)}")
    w = separating_sieves(x, y)
    print(f"left  open: {w.left}")
    print(f"right open: {w.right}")
    print(f"x in left {member(x, w.left)}, y in left {member(y, w.left)}")
    print(f"y in right {member(y, w.right)}, x in right {member(x, w.right)}")
    print()


def main():
    # the easy case: each side owns a prime of infinite exponent the
    # other lacks, so a single generator suffices
    show(
        "distinct infinite primes",
        Supernatural.from_exponents({2: INF}),
        Supernatural.from_exponents({3: INF}),
    )

    # the hard case: identical infinite parts; the failure of weak
    # divisibility lives in residue classes of finite exponents, and
    # the separating open is a family pinning those exponents
    show(
        "dominating residue classes",
        Supernatural.from_classes(4, {1: 3, 3: 1}, {2: 0}),
        Supernatural.from_classes(4, {1: 1, 3: 3}, {2: 0}),
    )

    # nested infinite supports can still be incomparable when a class
    # of finite exponents pushes back; one side separates by a prime,
    # the other needs a family
    show(
        "nested supports, mixed mechanisms",
        Supernatural.from_classes(4, {1: 1, 3: 1}, {2: INF, 3: INF}),
        Supernatural.from_classes(4, {1: 1, 3: 2}, {2: INF}),
    )


if __name__ == "__main__":
    main()
