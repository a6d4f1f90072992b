"""Sieves: multiplicatively upward-closed sets of positive integers.

A sieve here is a finite union of divisibility cones g*N together with
prime-indexed families {m * p^e(p) : p in I} for an infinite prime set
I.  Finitely many generators alone cannot express the families, and the
families are what the separation and density arguments need.

The normal form keeps only divisibility-minimal finite generators,
folds a family's finitely many special primes (includes and live
exceptions) into finite generators, and drops semantically empty
families, so structural equality of normal forms is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from ._primes import factorize, primes_upto, support
from .errors import NonCoprimeGenerators, UnsupportedProduct
from .supernat import INF, ExpMap, PrimeSet, unit_residues


@dataclass(frozen=True, eq=True)
class Family:
    """The instances {cofactor * p^e(p) : p in primes}, e(p) finite >= 1."""

    cofactor: int
    primes: PrimeSet
    exponents: ExpMap

    def __post_init__(self):
        if not isinstance(self.cofactor, int) or self.cofactor < 1:
            raise ValueError(f"cofactor must be a positive integer, got {self.cofactor!r}")
        m = lcm(self.primes.modulus, self.exponents.modulus)
        ps, em = self.primes.refined(m), self.exponents.refined(m)
        for r in unit_residues(m):
            if r in ps.classes:
                v = em.class_values[r]
                if v == INF or v < 1:
                    raise ValueError(f"family exponent {v} at class {r} must be a finite value >= 1")
        for p in set(em.exceptions) | set(ps.include):
            if ps.contains(p):
                v = em.value_at(p)
                if v == INF or v < 1:
                    raise ValueError(f"family exponent {v} at prime {p} must be a finite value >= 1")

    def instance(self, p: int) -> int:
        """The generator this family contributes at member prime p."""
        if not self.primes.contains(p):
            raise ValueError(f"{p} is not in the family's prime set")
        return self.cofactor * p ** int(self.exponents.value_at(p))

    def covers(self, n_factors: dict[int, int]) -> bool:
        """Does some instance divide the integer with these factors?"""
        for p in n_factors:
            if not self.primes.contains(p):
                continue
            need = dict(factorize(self.cofactor))
            need[p] = need.get(p, 0) + int(self.exponents.value_at(p))
            if all(n_factors.get(q, 0) >= e for q, e in need.items()):
                return True
        return False

    def __str__(self) -> str:
        # the literal form carries only class values; refuse when a member
        # prime's exceptional exponent would be lost by printing
        em = self.exponents
        live = [
            p
            for p in em.exceptions
            if self.primes.contains(p)
            and not (em.modulus % p == 0 and em.value_at(p) == 1)
        ]
        if live:
            raise ValueError(
                "no literal form for a family with live exceptional exponents; normalize first"
            )
        if em.modulus == 1:
            exp = str(int(em.class_values[0]))
        else:
            inner = ", ".join(
                f"{r}:{int(em.class_values[r])}" for r in unit_residues(em.modulus)
            )
            exp = f"{{{inner} mod {em.modulus}}}"
        return f"family(cofactor={self.cofactor}; primes={self.primes}; exp={exp})"


def _family_key(f: Family):
    return (
        f.cofactor,
        f.primes.modulus,
        tuple(sorted(f.primes.classes)),
        tuple(sorted(f.primes.include)),
        tuple(sorted(f.primes.exclude)),
        f.exponents.modulus,
        tuple(sorted(f.exponents.class_values.items())),
        tuple(sorted(f.exponents.exceptions.items())),
    )


@dataclass(frozen=True, eq=True)
class Sieve:
    finite_gens: tuple[int, ...] = ()
    families: tuple[Family, ...] = ()

    def __post_init__(self):
        for g in self.finite_gens:
            if not isinstance(g, int) or g < 1:
                raise ValueError(f"generator must be a positive integer, got {g!r}")
        for f in self.families:
            if not isinstance(f, Family):
                raise ValueError(f"expected a Family, got {f!r}")

    @classmethod
    def full(cls) -> "Sieve":
        return cls((1,), ())

    @classmethod
    def empty(cls) -> "Sieve":
        return cls((), ())

    @classmethod
    def of(cls, *gens: int) -> "Sieve":
        return cls(tuple(gens), ()).normalize()

    def contains(self, n: int) -> bool:
        if n < 1:
            raise ValueError(f"need a positive integer, got {n}")
        if any(n % g == 0 for g in self.finite_gens):
            return True
        if not self.families:
            return False
        nf = dict(factorize(n))
        return any(f.covers(nf) for f in self.families)

    def members_upto(self, bound: int) -> list[int]:
        return [n for n in range(1, bound + 1) if self.contains(n)]

    def is_full(self) -> bool:
        return self.contains(1)

    def is_proper(self) -> bool:
        return not self.contains(1)

    def is_empty_sieve(self) -> bool:
        s = self.normalize()
        return not s.finite_gens and not s.families

    def normalize(self) -> "Sieve":
        gens = sorted(set(self.finite_gens))
        if 1 in gens:
            return Sieve((1,), ())
        fams: list[Family] = []
        for fam in self.families:
            em = fam.exponents
            special = sorted(
                p
                for p in set(fam.primes.include) | set(em.exceptions)
                if fam.primes.contains(p)
            )
            for p in special:
                gens.append(fam.instance(p))
            ps = fam.primes.difference(PrimeSet.of(*special)) if special else fam.primes
            if ps.is_empty():
                continue
            clean = ExpMap(
                em.modulus, em.class_values, {q: 1 for q in support(em.modulus)}
            )
            nf = Family(fam.cofactor, ps, clean)
            if nf not in fams:
                fams.append(nf)
        gens = sorted(set(gens))
        if 1 in gens:
            return Sieve((1,), ())
        kept = [g for g in gens if not any(h != g and g % h == 0 for h in gens)]
        fams.sort(key=_family_key)
        kept = [
            g for g in kept if not any(f.covers(dict(factorize(g))) for f in fams)
        ]
        # a family whose cofactor is a multiple of a generator only restates
        # multiples of that generator
        fams = [f for f in fams if not any(f.cofactor % g == 0 for g in kept)]
        return Sieve(tuple(kept), tuple(fams))

    def union(self, other: "Sieve") -> "Sieve":
        return Sieve(
            self.finite_gens + other.finite_gens, self.families + other.families
        ).normalize()

    def product(self, other: "Sieve") -> "Sieve":
        """Pairwise-lcm sieve: contains n iff both operands contain n.

        Partial: two family-carrying operands would need a family
        indexed by pairs of primes, which this representation cannot
        express.
        """
        if self.families and other.families:
            raise UnsupportedProduct(
                "both operands carry prime-indexed families; the pairwise-lcm "
                "set is not expressible here"
            )
        gens = [lcm(g, h) for g in self.finite_gens for h in other.finite_gens]
        plain, fam_side = (self, other) if other.families else (other, self)
        fams = []
        for x in plain.finite_gens:
            for fam in fam_side.families:
                folded = sorted(
                    p for p in support(x * fam.cofactor) if fam.primes.contains(p)
                )
                for p in folded:
                    gens.append(lcm(x, fam.instance(p)))
                ps = (
                    fam.primes.difference(PrimeSet.of(*folded))
                    if folded
                    else fam.primes
                )
                if ps.is_empty():
                    continue
                fams.append(Family(lcm(x, fam.cofactor), ps, fam.exponents))
        return Sieve(tuple(gens), tuple(fams)).normalize()

    def transport(self, c: int) -> "Sieve":
        """The sieve {n : c*n lands in this sieve}."""
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"need a positive integer, got {c!r}")
        gens = [g // gcd(g, c) for g in self.finite_gens]
        fams = []
        for fam in self.families:
            folded = sorted(p for p in support(c) if fam.primes.contains(p))
            for p in folded:
                inst = fam.instance(p)
                gens.append(inst // gcd(inst, c))
            ps = fam.primes.difference(PrimeSet.of(*folded)) if folded else fam.primes
            if ps.is_empty():
                continue
            m2 = fam.cofactor // gcd(fam.cofactor, c)
            fams.append(Family(m2, ps, fam.exponents))
        return Sieve(tuple(gens), tuple(fams)).normalize()

    def __str__(self) -> str:
        s = self.normalize()
        parts = []
        if s.finite_gens or not s.families:
            parts.append("sieve(" + ",".join(str(g) for g in s.finite_gens) + ")")
        parts.extend(str(f) for f in s.families)
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Numerical monoids (additively closed) and their sieve of multiples

_rep_tables: dict[tuple[int, ...], bytearray] = {}


def _rep_table(gens: tuple[int, ...], bound: int) -> bytearray:
    """tbl[i] == 1 iff i is a nonnegative integer combination of gens."""
    tbl = _rep_tables.get(gens)
    if tbl is None or len(tbl) <= bound:
        tbl = bytearray(bound + 1)
        tbl[0] = 1
        for i in range(1, bound + 1):
            for g in gens:
                if g <= i and tbl[i - g]:
                    tbl[i] = 1
                    break
        _rep_tables[gens] = tbl
    return tbl


@dataclass(frozen=True)
class SMonoidPresentation:
    """A numerical monoid given by finitely many additive generators."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        if not gens:
            raise ValueError("need at least one generator")
        for g in gens:
            if not isinstance(g, int) or g < 1:
                raise ValueError(f"generator must be a positive integer, got {g!r}")
        object.__setattr__(self, "generators", gens)

    def contains(self, n: int) -> bool:
        if n < 0:
            raise ValueError(f"need a nonnegative integer, got {n}")
        return bool(_rep_table(self.generators, n)[n])

    def frobenius_number(self) -> int:
        """Largest integer outside the monoid; -1 when there is none."""
        gens = self.generators
        if reduce(gcd, gens) != 1:
            raise NonCoprimeGenerators(
                f"generators {gens} share a common factor; every large "
                "integer in between is missed"
            )
        if 1 in gens:
            return -1
        step = min(gens)
        bound = 4 * max(gens)
        while True:
            tbl = _rep_table(gens, bound)
            run = 0
            for i in range(1, bound + 1):
                run = run + 1 if tbl[i] else 0
                if run >= step:
                    for j in range(i, 0, -1):
                        if not tbl[j]:
                            return j
                    return 0
            bound *= 2

    def to_sieve(self, search_bound: int | None = None) -> tuple[Sieve, bool]:
        """The sieve with the same positive members, plus an exactness flag.

        Strategy: the monoid is closed under integer multiples, so its
        positive part is the union of g*N over its divisibility-minimal
        members.  Every prime above the largest gap is such a member;
        the remaining minimal members have all prime factors below the
        gap, and any such member n has n/p outside the monoid for its
        smallest prime p, which caps n by gap * (largest prime <= gap).
        The flag reports whether the search covered that cap.
        """
        gens = self.generators
        if reduce(gcd, gens) != 1:
            raise NonCoprimeGenerators(
                f"generators {gens} share a common factor; the sieve of a "
                "multiple-closed set needs coprime generators"
            )
        frob = self.frobenius_number()
        if frob < 1:
            return Sieve.full(), True
        small = primes_upto(frob)
        cap = frob * small[-1] if small else frob
        bound = cap if search_bound is None else min(search_bound, cap)
        exact = bound >= cap
        tbl = _rep_table(gens, bound)
        minimal = []
        for n in range(2, bound + 1):
            if not tbl[n]:
                continue
            ps = support(n)
            if any(p > frob for p in ps):
                continue
            if all(not tbl[n // p] for p in ps):
                minimal.append(n)
        fam = Family(
            1,
            PrimeSet(1, frozenset({0}), frozenset(), frozenset(small)),
            ExpMap(1, {0: 1}, {}),
        )
        return Sieve(tuple(minimal), (fam,)).normalize(), exact


def smonoid_contains(generators: tuple[int, ...] | list[int], n: int) -> bool:
    return SMonoidPresentation(tuple(generators)).contains(n)


def smonoid_to_sieve(
    generators: tuple[int, ...] | list[int], search_bound: int | None = None
) -> tuple[Sieve, bool]:
    return SMonoidPresentation(tuple(generators)).to_sieve(search_bound)
