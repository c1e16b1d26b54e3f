"""Supernatural numbers, K0 membership, and the classification decisions.

A spatial Lp UHF algebra is pinned down by the pair (p, N): N is the
supernatural number of its matrix-size tower and K0 is the subgroup of
the rationals generated by the reciprocals 1/k admissible for N. Two
such algebras are isomorphic exactly when both p and N agree; across
different p nonzero continuous homomorphisms are ruled out unless the
exponents satisfy the finite-representability condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Literal, Mapping, Tuple

INF = math.inf

Exponent = float  # positive int stored as float-compatible, or math.inf


def _factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division; inputs are generator sizes."""
    if n < 1:
        raise ValueError("factorization needs a positive integer")
    out: Dict[int, int] = {}
    t = 2
    while t * t <= n:
        while n % t == 0:
            out[t] = out.get(t, 0) + 1
            n //= t
        t += 1 if t == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and _factorize(n) == {n: 1}


@dataclass(frozen=True)
class SupernaturalNumber:
    """Finitely supported map prime -> exponent (int >= 1 or inf).

    Only the representable subclass is allowed: at least one exponent
    must be infinite, which is automatic for eventually periodic
    generator sequences.
    """

    exponents: Tuple[Tuple[int, Exponent], ...]

    def __init__(self, exponents: Mapping[int, Exponent] | Iterable[Tuple[int, Exponent]]):
        items = dict(exponents)
        cleaned = {}
        for prime, e in items.items():
            if not _is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            if e == INF:
                cleaned[int(prime)] = INF
            else:
                e = int(e)
                if e < 1:
                    raise ValueError(f"exponent for {prime} must be >= 1 or inf")
                cleaned[int(prime)] = e
        if not any(e == INF for e in cleaned.values()):
            raise ValueError(
                "supernatural number must have at least one infinite exponent"
            )
        object.__setattr__(self, "exponents", tuple(sorted(cleaned.items())))

    def exponent(self, prime: int) -> Exponent:
        """N(prime); 0 when the prime is not in the support."""
        for t, e in self.exponents:
            if t == prime:
                return e
        return 0

    def as_dict(self) -> Dict[int, Exponent]:
        return dict(self.exponents)

    def __str__(self) -> str:
        parts = []
        for t, e in self.exponents:
            parts.append(f"{t}^inf" if e == INF else f"{t}^{e}")
        return "*".join(parts)

    @staticmethod
    def parse(text: str) -> "SupernaturalNumber":
        """Parse products like "2^inf", "2^inf*3^2", "6^inf" (composite
        bases spread over their prime factors)."""
        acc: Dict[int, Exponent] = {}
        for factor in text.replace("·", "*").split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError("empty factor in supernatural number")
            base_s, _, exp_s = factor.partition("^")
            base = int(base_s)
            if base < 2:
                raise ValueError(f"factor base must be >= 2, got {base}")
            exp_s = exp_s.strip().lower() or "1"
            e: Exponent = INF if exp_s in ("inf", "infinity", "oo") else int(exp_s)
            for prime, mult in _factorize(base).items():
                add = INF if e == INF else mult * e
                acc[prime] = INF if INF in (acc.get(prime), add) else acc.get(prime, 0) + add
        return SupernaturalNumber(acc)


def sn_equal(n1: SupernaturalNumber, n2: SupernaturalNumber) -> bool:
    return n1.exponents == n2.exponents


@dataclass(frozen=True)
class GeneratorSequence:
    """Eventually periodic sequence of matrix-size factors d(1), d(2), ...

    The sequence runs through the preperiod once and then cycles the
    period forever; every entry must be >= 2.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(x) for x in self.preperiod))
        object.__setattr__(self, "period", tuple(int(x) for x in self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(x < 2 for x in self.preperiod + self.period):
            raise ValueError("all generator entries must be >= 2")

    def term(self, n: int) -> int:
        """d(n), 1-based."""
        if n < 1:
            raise ValueError("terms are 1-based")
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.period[(n - 1 - len(self.preperiod)) % len(self.period)]

    @staticmethod
    def parse(text: str) -> "GeneratorSequence":
        """Parse "pre;period" like "2;3,4", or a bare period like "2"."""
        text = text.strip()
        if ";" in text:
            pre_s, _, per_s = text.partition(";")
        else:
            pre_s, per_s = "", text
        pre = tuple(int(x) for x in pre_s.split(",") if x.strip())
        per = tuple(int(x) for x in per_s.split(",") if x.strip())
        return GeneratorSequence(pre, per)


def r_d(seq: GeneratorSequence, n: int) -> int:
    """Product d(1) d(2) ... d(n); r_d(0) = 1. Arbitrary precision."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = 1
    for k in range(1, n + 1):
        out *= seq.term(k)
    return out


def supernatural_of(seq: GeneratorSequence) -> SupernaturalNumber:
    """Supremum of prime exponents over the partial products r_d(n).

    A prime dividing the period product recurs forever, hence gets inf;
    anything else picks up only its finite preperiod contribution.
    """
    acc: Dict[int, Exponent] = {}
    for x in seq.preperiod:
        for prime, mult in _factorize(x).items():
            if acc.get(prime) != INF:
                acc[prime] = acc.get(prime, 0) + mult
    period_product = 1
    for x in seq.period:
        period_product *= x
    for prime in _factorize(period_product):
        acc[prime] = INF
    return SupernaturalNumber(acc)


def k0_contains(N: SupernaturalNumber, q: Fraction) -> bool:
    """Membership of a rational in K0 of the type-N algebra.

    K0 is the union of (1/k(n)) Z with k(n) the product of the first n
    primes raised to min(N(prime), n); a reduced fraction lies inside
    exactly when each prime power dividing its denominator fits under N.
    """
    q = Fraction(q)
    den = q.denominator
    for prime, mult in _factorize(den).items():
        if N.exponent(prime) < mult:
            return False
    return True


@dataclass(frozen=True)
class AlgebraDescriptor:
    """A spatial Lp UHF algebra, described by its exponent and type."""

    p: Fraction
    N: SupernaturalNumber

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if self.p < 1:
            raise ValueError("p must be >= 1")


def classify_iso(a1: AlgebraDescriptor, a2: AlgebraDescriptor) -> bool:
    """Isomorphic iff both the exponent p and the supernatural type agree."""
    return a1.p == a2.p and sn_equal(a1.N, a2.N)


Obstruction = Literal["excluded", "not_excluded"]


def hom_obstruction(p1, p2) -> Obstruction:
    """Can a nonzero continuous homomorphism exist from a spatial L^p1 UHF
    algebra into the operators on a separable L^p2 space?

    "excluded" when the necessary finite-representability condition
    (p2 < p1 <= 2, or p1 = 2 < p2) fails for p1 != p2. Equal exponents
    and condition-compatible pairs return "not_excluded"; existence is
    never claimed.
    """
    p1, p2 = Fraction(p1), Fraction(p2)
    if p1 < 1 or p2 < 1:
        raise ValueError("exponents must be >= 1")
    if p1 == p2:
        return "not_excluded"
    if (1 <= p2 < p1 <= 2) or (p1 == 2 < p2):
        return "not_excluded"
    return "excluded"


def k0_generators(N: SupernaturalNumber, n: int) -> Fraction:
    """1/k(n) for the finite stage n: the product of the first n primes
    raised to min(N(prime), n). Mostly useful for demonstrations."""
    primes = []
    candidate = 2
    while len(primes) < n:
        if _is_prime(candidate):
            primes.append(candidate)
        candidate += 1
    k = 1
    for prime in primes:
        e = N.exponent(prime)
        k *= prime ** int(min(e, n))
    return Fraction(1, k)
