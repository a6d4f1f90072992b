"""Brute-force evidence for the symbolic decision procedures.

Everything in this module works by bounded enumeration over ordinary
integers and fractions, independently of the classwise algebra, so its
verdicts can confront the closed-form answers in tests.  Bounded means
bounded: a Consistent or Verified verdict is evidence at the stated
bounds, not a proof, and refutations always carry a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from ._primes import factorize
from .cones import BZPair, cone_contains, cone_enumerate
from .errors import ConstructionStuck
from .sieve import Sieve
from .supernat import Supernatural, int_divides
from .topology import PointClass, _as_supernatural


@dataclass(frozen=True)
class ChainPoint:
    """A divisor chain c1 | c2 | ... over a monoid of integers.

    Denotes the union of the monoid's sets of fractions at each level:
    the members themselves, then members over c1, then over c2, and so
    on.  The stages need not belong to the monoid.
    """

    stages: tuple[int, ...]
    monoid: Sieve

    def __post_init__(self):
        prev = 1
        for c in self.stages:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"stage must be a positive integer, got {c!r}")
            if c % prev != 0:
                raise ValueError(f"stage {c} is not a multiple of {prev}")
            prev = c

    def levels(self) -> tuple[int, ...]:
        return (1,) + self.stages


@dataclass(frozen=True, eq=False)
class TruncatedCone:
    """A bounded window onto a set of positive rationals.

    elements lists every member whose reduced numerator and denominator
    fit the bounds; membership beyond the window is answered by the
    carried predicate (rank-one witnesses routinely fall outside).
    """

    elements: tuple[Fraction, ...]
    monoid: Sieve
    num_bound: int
    den_bound: int
    member: Callable[[Fraction], bool] = field(repr=False, compare=False)

    @classmethod
    def from_pair(
        cls, pair: BZPair, monoid: Sieve, num_bound: int, den_bound: int
    ) -> "TruncatedCone":
        elems = cone_enumerate(pair, num_bound, den_bound)
        return cls(elems, monoid, num_bound, den_bound, lambda q: cone_contains(pair, q))

    @classmethod
    def from_chain(
        cls, chain: ChainPoint, num_bound: int, den_bound: int
    ) -> "TruncatedCone":
        levels = chain.levels()
        seen = set()
        for l in levels:
            for c in chain.monoid.members_upto(num_bound * l):
                q = Fraction(c, l)
                if q.numerator <= num_bound and q.denominator <= den_bound:
                    seen.add(q)

        def mem(q: Fraction) -> bool:
            for l in levels:
                x = q * l
                if x.denominator == 1 and x >= 1 and chain.monoid.contains(int(x)):
                    return True
            return False

        return cls(tuple(sorted(seen)), chain.monoid, num_bound, den_bound, mem)

    @classmethod
    def from_elements(
        cls, elems: Sequence[Fraction], monoid: Sieve, num_bound: int, den_bound: int
    ) -> "TruncatedCone":
        s = frozenset(Fraction(e) for e in elems)
        return cls(tuple(sorted(s)), monoid, num_bound, den_bound, lambda q: q in s)


@dataclass(frozen=True)
class RankOneReport:
    """Per-pair witnesses that any two elements share a lower element."""

    verified: bool
    witnesses: tuple[tuple[Fraction, Fraction, Fraction, int, int], ...]
    unresolved: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class PointReport:
    free: bool
    rank_one: RankOneReport

    def verified(self) -> bool:
        return self.free and self.rank_one.verified


def check_point_conditions(
    cone: TruncatedCone, search_bound: int = 10_000
) -> PointReport:
    """Search for the flatness witnesses that make the cone a point.

    Freeness: distinct monoid elements must move an element to distinct
    places (sampled; it always holds for positive rationals, but the
    check is honest).  Rank one: for every ordered pair (a, a') of
    elements there must be b in the cone and monoid-or-one factors
    c, c' with a = b*c and a' = b*c'.  The witness search walks the
    forced arithmetic progression for c smallest-first, so reports are
    deterministic; pairs with no witness within the budget are listed
    as unresolved, not failed.
    """
    elems = cone.elements
    ms = cone.monoid.members_upto(200)[:8]
    free = all(
        a * c != a * cp
        for a in elems[:8]
        for i, c in enumerate(ms)
        for cp in ms[i + 1 :]
    )
    wits = []
    unres = []
    for i in range(len(elems)):
        for j in range(i, len(elems)):
            a, a2 = elems[i], elems[j]
            if i == j:
                wits.append((a, a2, a, 1, 1))
                continue
            cross1 = a.numerator * a2.denominator
            cross2 = a2.numerator * a.denominator
            g = gcd(cross1, cross2)
            # c must be a multiple of step or c' = a2*c/a is not integral
            step, ratio = cross1 // g, cross2 // g
            c, c2 = step, ratio
            found = None
            while c <= search_bound:
                if (c == 1 or cone.monoid.contains(c)) and (
                    c2 == 1 or cone.monoid.contains(c2)
                ):
                    b = a / c
                    if cone.member(b):
                        found = (a, a2, b, c, c2)
                        break
                c += step
                c2 += ratio
            if found is None:
                unres.append((a, a2))
            else:
                wits.append(found)
    report = RankOneReport(not unres, tuple(wits), tuple(unres))
    return PointReport(free, report)


@dataclass(frozen=True)
class MemberEvidence:
    """Outcome of the divisor-completion scan; witness is the failing divisor."""

    consistent: bool
    witness: int | None


def verify_member_decision(
    x: PointClass | Supernatural,
    sieve: Sieve,
    div_bound: int = 10_000,
    factor_bound: int = 10_000,
) -> MemberEvidence:
    """Confront a membership claim with bounded divisor completion.

    The point of a proper sieve contains the class of s only if every
    integer divisor n of s completes to c*n dividing s for some c in
    the sieve.  Scanning n ascending and witnesses c ascending keeps
    the refuting divisor, when one exists within the bounds, the
    smallest one.
    """
    s = _as_supernatural(x)
    if sieve.contains(1):
        raise ValueError("the full sieve admits every point; nothing to check")
    cands = sieve.members_upto(factor_bound)
    last: int | None = None

    def completes(c: int, nfac: dict[int, int]) -> bool:
        need = dict(factorize(c))
        for q, e in nfac.items():
            need[q] = need.get(q, 0) + e
        return all(e <= s.exps.value_at(q) for q, e in need.items())

    for n in range(1, div_bound + 1):
        if not int_divides(n, s):
            continue
        nfac = dict(factorize(n))
        if last is not None and completes(last, nfac):
            continue
        for c in cands:
            if completes(c, nfac):
                last = c
                break
        else:
            return MemberEvidence(False, n)
    return MemberEvidence(True, None)


def additively_closed(cone: TruncatedCone) -> bool:
    """Are all in-window pairwise sums themselves listed?"""
    have = set(cone.elements)
    elems = cone.elements
    for i in range(len(elems)):
        for j in range(i, len(elems)):
            q = elems[i] + elems[j]
            if (
                q.numerator <= cone.num_bound
                and q.denominator <= cone.den_bound
                and q not in have
            ):
                return False
    return True


def chain_from_points(
    monoid: Sieve, seeds: Sequence[Fraction], search_bound: int = 10_000
) -> ChainPoint:
    """Grow a divisor chain whose levels absorb all the seeds.

    The first seed is rescaled to 1; each later uncovered seed extends
    the chain by the smallest multiple of the current stage that both
    divides into the monoid-or-one and turns the seed into a
    monoid-or-one numerator.  Deterministic by the smallest-first walk.
    """
    seeds = [Fraction(q) for q in seeds]
    if not seeds:
        raise ValueError("need at least one seed")
    for q in seeds:
        if q <= 0:
            raise ValueError(f"need positive seeds, got {q}")
    scale = 1 / seeds[0]
    rescaled = [q * scale for q in seeds]
    chain: list[int] = []

    def covered(q: Fraction) -> bool:
        for l in [1] + chain:
            x = q * l
            if x.denominator == 1 and x >= 1 and (
                x == 1 or monoid.contains(int(x))
            ):
                return True
        return False

    for q in rescaled:
        if covered(q):
            continue
        base = chain[-1] if chain else 1
        step = base * q.denominator // gcd(base, q.denominator)
        t = step
        while t <= search_bound:
            grow = t // base
            lifted = q * t
            if t != base and (grow == 1 or monoid.contains(grow)):
                if lifted == 1 or monoid.contains(int(lifted)):
                    chain.append(t)
                    break
            t += step
        else:
            raise ConstructionStuck(q / scale)
    return ChainPoint(tuple(chain), monoid)
