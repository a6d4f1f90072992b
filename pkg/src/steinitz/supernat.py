"""Supernatural (Steinitz) numbers with exact residue-class exponent maps.

A supernatural number is a formal product over all primes p of p^e(p),
where each exponent e(p) is a natural number or infinity.  The exponent
assignment is stored exactly: one value per unit residue class modulo a
stored modulus, plus finitely many per-prime exceptions.  Dirichlet's
theorem on primes in arithmetic progressions keeps every nonempty class
infinite, which is what makes the classwise decision procedures here
sound and complete.

All comparisons (divisibility, equivalence, weak divisibility) refine
both operands to a common modulus and then decide classwise plus a
finite scan over exceptional primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Callable, Iterable, Mapping

from ._primes import factorize, is_prime, iter_primes, primes_upto, support
from .errors import SearchBudgetExceeded

INF = math.inf

# An exponent: a nonnegative int, or INF.  Fractional maps also allow
# negative ints at exception primes.
Exp = float | int


def is_exp(v) -> bool:
    return v == INF or (isinstance(v, int) and not isinstance(v, bool))


def fmt_exp(v: Exp) -> str:
    return "inf" if v == INF else str(v)


@lru_cache(maxsize=None)
def unit_residues(modulus: int) -> tuple[int, ...]:
    """Residues coprime to the modulus; (0,) when the modulus is 1."""
    return tuple(r for r in range(modulus) if gcd(r, modulus) == 1)


# ---------------------------------------------------------------------------
# Exponent maps


@dataclass(frozen=True, eq=False)
class ExpMap:
    """Prime -> exponent map, piecewise constant on residue classes.

    value(p) is exceptions[p] when present, else class_values[p % modulus].
    Invariants enforced at construction:
      - class_values covers exactly the unit residues of the modulus;
      - every prime dividing the modulus appears in exceptions (its
        residue is not a unit, so the classes cannot speak for it);
      - no removable exception: an exception at p not dividing the
        modulus is dropped when it equals the class value at p.
    """

    modulus: int
    class_values: Mapping[int, Exp]
    exceptions: Mapping[int, Exp]

    def __post_init__(self):
        m = self.modulus
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"modulus must be a positive integer, got {m!r}")
        units = unit_residues(m)
        if set(self.class_values) != set(units):
            raise ValueError(
                f"class_values must cover exactly the unit residues mod {m}"
            )
        for r, v in self.class_values.items():
            if not is_exp(v):
                raise ValueError(f"bad exponent {v!r} at class {r}")
        cleaned = {}
        for p, v in self.exceptions.items():
            if not is_prime(p):
                raise ValueError(f"exception key {p} is not prime")
            if not is_exp(v):
                raise ValueError(f"bad exponent {v!r} at prime {p}")
            # keep mandatory exceptions (p | modulus) even when redundant
            if m % p != 0 and self.class_values[p % m] == v:
                continue
            cleaned[p] = v
        for p in support(m):
            if p not in self.exceptions:
                raise ValueError(f"prime {p} divides modulus {m}; needs an exception")
            cleaned[p] = self.exceptions[p]
        object.__setattr__(self, "class_values", dict(self.class_values))
        object.__setattr__(self, "exceptions", cleaned)

    def value_at(self, p: int) -> Exp:
        if p in self.exceptions:
            return self.exceptions[p]
        return self.class_values[p % self.modulus]

    def refined(self, new_modulus: int) -> "ExpMap":
        """Re-express the same map modulo a multiple of the modulus."""
        if new_modulus % self.modulus != 0:
            raise ValueError(f"{new_modulus} does not refine modulus {self.modulus}")
        if new_modulus == self.modulus:
            return self
        cv = {r: self.class_values[r % self.modulus] for r in unit_residues(new_modulus)}
        exc = dict(self.exceptions)
        for p in support(new_modulus):
            if p not in exc:
                exc[p] = self.class_values[p % self.modulus]
        return ExpMap(new_modulus, cv, exc)

    def combine(self, other: "ExpMap", fn: Callable[[Exp, Exp], Exp]) -> "ExpMap":
        """Pointwise combination; the result lives on the lcm modulus."""
        m = lcm(self.modulus, other.modulus)
        a, b = self.refined(m), other.refined(m)
        cv = {r: fn(a.class_values[r], b.class_values[r]) for r in unit_residues(m)}
        keys = set(a.exceptions) | set(b.exceptions)
        exc = {p: fn(a.value_at(p), b.value_at(p)) for p in keys}
        return ExpMap(m, cv, exc)

    def same_values(self, other: "ExpMap") -> bool:
        m = lcm(self.modulus, other.modulus)
        a, b = self.refined(m), other.refined(m)
        if any(a.class_values[r] != b.class_values[r] for r in unit_residues(m)):
            return False
        keys = set(a.exceptions) | set(b.exceptions)
        return all(a.value_at(p) == b.value_at(p) for p in keys)

    def __eq__(self, other):
        if not isinstance(other, ExpMap):
            return NotImplemented
        return self.same_values(other)


# ---------------------------------------------------------------------------
# Sets of primes, same representation idea


@dataclass(frozen=True, eq=False)
class PrimeSet:
    """A set of primes: unit residue classes plus finite include/exclude.

    Membership: p in include, or (p not in exclude and p % modulus in
    classes).  Construction trims include/exclude to the minimal form at
    the stored modulus, so structural comparison at a common modulus is
    semantic equality.
    """

    modulus: int = 1
    classes: frozenset[int] = frozenset()
    include: frozenset[int] = frozenset()
    exclude: frozenset[int] = frozenset()

    def __post_init__(self):
        m = self.modulus
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"modulus must be a positive integer, got {m!r}")
        units = set(unit_residues(m))
        classes = frozenset(self.classes)
        if not classes <= units:
            raise ValueError(f"classes {set(classes) - units} are not units mod {m}")
        inc = frozenset(self.include)
        exc = frozenset(self.exclude)
        for p in inc | exc:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if inc & exc:
            raise ValueError(f"include and exclude overlap: {sorted(inc & exc)}")
        # minimal form: include only what the classes miss, exclude only
        # what the classes would wrongly cover
        inc = frozenset(p for p in inc if p % m not in classes)
        exc = frozenset(p for p in exc if p % m in classes)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "include", inc)
        object.__setattr__(self, "exclude", exc)

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls(1, frozenset({0}), frozenset(), frozenset())

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(1, frozenset(), frozenset(primes), frozenset())

    @classmethod
    def empty(cls) -> "PrimeSet":
        return cls(1, frozenset(), frozenset(), frozenset())

    def contains(self, p: int) -> bool:
        if p in self.include:
            return True
        if p in self.exclude:
            return False
        return p % self.modulus in self.classes

    def refined(self, new_modulus: int) -> "PrimeSet":
        if new_modulus % self.modulus != 0:
            raise ValueError(f"{new_modulus} does not refine modulus {self.modulus}")
        if new_modulus == self.modulus:
            return self
        classes = frozenset(
            r for r in unit_residues(new_modulus) if r % self.modulus in self.classes
        )
        inc = set(self.include)
        exc = set(self.exclude)
        for p in support(new_modulus):
            # p's residue stops being a unit; record its fate explicitly
            if self.contains(p):
                inc.add(p)
                exc.discard(p)
            else:
                exc.discard(p)
        return PrimeSet(new_modulus, classes, frozenset(inc), frozenset(exc))

    def combine(self, other: "PrimeSet", fn: Callable[[bool, bool], bool]) -> "PrimeSet":
        """Boolean combination; fn(False, False) must be False."""
        m = lcm(self.modulus, other.modulus)
        a, b = self.refined(m), other.refined(m)
        classes = frozenset(
            r for r in unit_residues(m) if fn(r in a.classes, r in b.classes)
        )
        inc, exc = set(), set()
        for p in a.include | a.exclude | b.include | b.exclude:
            want = fn(a.contains(p), b.contains(p))
            covered = p % m in classes
            if want and not covered:
                inc.add(p)
            elif not want and covered:
                exc.add(p)
        return PrimeSet(m, classes, frozenset(inc), frozenset(exc))

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return self.combine(other, lambda x, y: x or y)

    def intersection(self, other: "PrimeSet") -> "PrimeSet":
        return self.combine(other, lambda x, y: x and y)

    def difference(self, other: "PrimeSet") -> "PrimeSet":
        return self.combine(other, lambda x, y: x and not y)

    def is_empty(self) -> bool:
        return not self.classes and not self.include

    def is_infinite(self) -> bool:
        # a nonempty unit class holds infinitely many primes (Dirichlet);
        # include/exclude adjust by finitely many
        return bool(self.classes)

    def subset_of(self, other: "PrimeSet") -> bool:
        return self.difference(other).is_empty()

    def intersects(self, other: "PrimeSet") -> bool:
        m = lcm(self.modulus, other.modulus)
        a, b = self.refined(m), other.refined(m)
        if a.classes & b.classes:
            # a shared class is infinite; finite excludes cannot empty it
            return True
        return any(b.contains(p) for p in a.include) or any(
            a.contains(p) for p in b.include
        )

    def members(self, bound: int) -> list[int]:
        """All member primes <= bound, ascending."""
        return [p for p in primes_upto(bound) if self.contains(p)]

    def first_member(self, prime_budget: int = 100_000) -> int:
        """Smallest member prime, scanning at most prime_budget primes."""
        for i, p in enumerate(iter_primes()):
            if i >= prime_budget:
                raise SearchBudgetExceeded(
                    f"no member among the first {prime_budget} primes"
                )
            if self.contains(p):
                return p
        raise AssertionError("unreachable")

    def __eq__(self, other):
        if not isinstance(other, PrimeSet):
            return NotImplemented
        m = lcm(self.modulus, other.modulus)
        a, b = self.refined(m), other.refined(m)
        return (
            a.classes == b.classes
            and a.include == b.include
            and a.exclude == b.exclude
        )

    def __str__(self) -> str:
        if self.modulus == 1 and 0 in self.classes:
            base = "all"
        elif self.classes:
            inner = ",".join(str(r) for r in sorted(self.classes))
            base = f"classes({inner} mod {self.modulus})"
        else:
            base = ""
        inc = "{" + ",".join(str(p) for p in sorted(self.include)) + "}"
        exc = "{" + ",".join(str(p) for p in sorted(self.exclude)) + "}"
        parts = base
        if self.include or not base:
            parts = f"{parts} + {inc}" if base else inc
        if self.exclude:
            parts = f"{parts} - {exc}"
        return parts


# ---------------------------------------------------------------------------
# The numbers themselves


def _check_nonneg(v: Exp, where: str) -> None:
    if v != INF and v < 0:
        raise ValueError(f"negative exponent {v} not allowed {where}")


@dataclass(frozen=True, eq=False)
class Supernatural:
    """A formal product over all primes of p^e(p), e(p) in N or infinity."""

    exps: ExpMap

    def __post_init__(self):
        for r, v in self.exps.class_values.items():
            _check_nonneg(v, f"at class {r}")
        for p, v in self.exps.exceptions.items():
            _check_nonneg(v, f"at prime {p}")

    @classmethod
    def from_int(cls, n: int) -> "Supernatural":
        if n < 1:
            raise ValueError(f"need a positive integer, got {n}")
        return cls(ExpMap(1, {0: 0}, dict(factorize(n))))

    @classmethod
    def from_exponents(
        cls, exps: Mapping[int, Exp], default: Exp = 0
    ) -> "Supernatural":
        return cls(ExpMap(1, {0: default}, dict(exps)))

    @classmethod
    def from_classes(
        cls,
        modulus: int,
        class_values: Mapping[int, Exp],
        exceptions: Mapping[int, Exp] | None = None,
    ) -> "Supernatural":
        return cls(ExpMap(modulus, dict(class_values), dict(exceptions or {})))

    @classmethod
    def one(cls) -> "Supernatural":
        return cls.from_exponents({})

    @classmethod
    def all_infinite(cls) -> "Supernatural":
        """The largest supernatural number: every exponent is infinite."""
        return cls.from_exponents({}, default=INF)

    def exponent(self, p: int) -> Exp:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return self.exps.value_at(p)

    def mul(self, other: "Supernatural") -> "Supernatural":
        return Supernatural(self.exps.combine(other.exps, lambda x, y: x + y))

    __mul__ = mul

    def lcm(self, other: "Supernatural") -> "Supernatural":
        return Supernatural(self.exps.combine(other.exps, max))

    def divides(self, other: "Supernatural") -> bool:
        m = lcm_int(self.exps.modulus, other.exps.modulus)
        a, b = self.exps.refined(m), other.exps.refined(m)
        if any(a.class_values[r] > b.class_values[r] for r in unit_residues(m)):
            return False
        keys = set(a.exceptions) | set(b.exceptions)
        return all(a.value_at(p) <= b.value_at(p) for p in keys)

    def equivalent(self, other: "Supernatural") -> bool:
        """Same infinite part and only finitely many finite disagreements.

        Classwise: unequal class values disagree on infinitely many
        primes unless equal, so the classes must match exactly; the
        finitely many exceptional primes only need to agree on whether
        the exponent is infinite.
        """
        m = lcm_int(self.exps.modulus, other.exps.modulus)
        a, b = self.exps.refined(m), other.exps.refined(m)
        if any(a.class_values[r] != b.class_values[r] for r in unit_residues(m)):
            return False
        keys = set(a.exceptions) | set(b.exceptions)
        return all(
            (a.value_at(p) == INF) == (b.value_at(p) == INF) for p in keys
        )

    def weakly_divides(self, other: "Supernatural") -> bool:
        """Divides after a finite modification of the finite exponents.

        Holds exactly when the infinite support is contained in the
        other's, and on every residue class the other is infinite or at
        least as large; the finitely many exceptional violations can
        always be modified away.
        """
        m = lcm_int(self.exps.modulus, other.exps.modulus)
        a, b = self.exps.refined(m), other.exps.refined(m)
        for r in unit_residues(m):
            x, y = a.class_values[r], b.class_values[r]
            if x == INF and y != INF:
                return False
            if y != INF and x > y:
                return False
        keys = set(a.exceptions) | set(b.exceptions)
        return all(
            b.value_at(p) == INF or a.value_at(p) != INF for p in keys
        )

    @cached_property
    def _infinite_support(self) -> PrimeSet:
        e = self.exps
        classes = frozenset(r for r, v in e.class_values.items() if v == INF)
        inc = frozenset(p for p, v in e.exceptions.items() if v == INF)
        exc = frozenset(p for p, v in e.exceptions.items() if v != INF)
        return PrimeSet(e.modulus, classes, inc, exc)

    def infinite_support(self) -> PrimeSet:
        """The primes carrying an infinite exponent."""
        return self._infinite_support

    def __eq__(self, other):
        if not isinstance(other, Supernatural):
            return NotImplemented
        return self.exps.same_values(other.exps)

    def __str__(self) -> str:
        e = self.exps
        if e.modulus == 1 and not e.exceptions:
            if e.class_values[0] == 0:
                return "one"
            if e.class_values[0] == INF:
                return "sinf"
        return format_map(e)


@dataclass(frozen=True, eq=False)
class FractionalSupernatural:
    """Like Supernatural, but finitely many exponents may be negative.

    Negative values live only at exception primes; the residue classes
    stay nonnegative, so the denominator is an ordinary integer.
    """

    exps: ExpMap

    def __post_init__(self):
        for r, v in self.exps.class_values.items():
            _check_nonneg(v, f"at class {r} (denominators must be finite products)")

    @classmethod
    def from_exponents(
        cls, exps: Mapping[int, Exp], default: Exp = 0
    ) -> "FractionalSupernatural":
        return cls(ExpMap(1, {0: default}, dict(exps)))

    def exponent(self, p: int) -> Exp:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return self.exps.value_at(p)

    def negative_part(self) -> dict[int, int]:
        """Prime -> positive exponent of the denominator."""
        return {
            p: -v
            for p, v in self.exps.exceptions.items()
            if v != INF and v < 0
        }

    def __eq__(self, other):
        if not isinstance(other, FractionalSupernatural):
            return NotImplemented
        return self.exps.same_values(other.exps)

    def __str__(self) -> str:
        e = self.exps
        if e.modulus == 1 and not e.exceptions and e.class_values[0] == 0:
            return "one"
        return format_map(e)


def format_map(e: ExpMap) -> str:
    """Canonical literal: terms by ascending prime, then the default."""
    terms = [f"{p}^{fmt_exp(v)}" for p, v in sorted(e.exceptions.items())]
    head = " * ".join(terms) if terms else "one"
    if e.modulus == 1:
        v = e.class_values[0]
        if v == 0:
            return head
        return f"{head} ; default {fmt_exp(v)}"
    inner = ", ".join(
        f"{r}:{fmt_exp(e.class_values[r])}" for r in unit_residues(e.modulus)
    )
    return f"{head} ; default {{{inner}}} mod {e.modulus}"


def lcm_int(a: int, b: int) -> int:
    return lcm(a, b)


def int_divides(n: int, s: Supernatural) -> bool:
    """Does the positive integer n divide the supernatural number s?"""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    return all(e <= s.exps.value_at(p) for p, e in factorize(n))
