"""Eschenburg biquotient parameters, their invariants and fixtures.

A space is given by two integer triples k, l with equal sums. The order
of H^4 is r = |sigma2(k) - sigma2(l)|, the signed linking number is
s = sigma3(k) - sigma3(l), and p1 = 2*sigma1(k)^2 - 6*sigma2(k) mod r.
The characteristic numbers s1, s2, s3 of these spaces are not computed
here from (k, l); they enter through fixture files of known values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import permutations
from pathlib import Path
from typing import Optional, Union

from .errors import (
    DegenerateOrder,
    DomainError,
    InconsistentFixture,
    ParseError,
    UnequalSums,
)
from .exact_arith import ModOneValue, ResidueClass, inv_mod, mod_one
from .profiles import CohomologyType, InvariantProfile, Pi4

Triple = tuple[int, int, int]

_DEFAULT_FIXTURES = "eschenburg_fixtures.txt"
# Largest possible denominators of s1, s2, s3 relative to r for this type.
_DENOMINATOR_BOUNDS = (224, 24, 6)


@dataclass(frozen=True)
class EschenburgSpace:
    """Parameter pair (k, l) of an Eschenburg biquotient."""

    k: Triple
    l: Triple

    def __post_init__(self) -> None:
        for name in ("k", "l"):
            triple = tuple(getattr(self, name))
            if len(triple) != 3 or not all(isinstance(v, int) for v in triple):
                raise DomainError(f"{name} must be a triple of integers, got {triple}")
            object.__setattr__(self, name, triple)

    @classmethod
    def homogeneous(cls, p: int, q: int) -> "EschenburgSpace":
        """The homogeneous member W_{p,q}: parameters (p, q, -p-q) and (0, 0, 0)."""
        return cls((p, q, -(p + q)), (0, 0, 0))


@dataclass(frozen=True)
class EschenburgInvariants:
    """Invariants computable directly from the parameters."""

    r: int
    s_signed: int
    p1: ResidueClass
    lk_pair: Optional[frozenset[ResidueClass]]
    free: bool
    positively_curved: bool


@dataclass(frozen=True)
class EschenburgFixture:
    """A space together with its externally known s-values (reduced mod 1)."""

    space: EschenburgSpace
    s1: ModOneValue
    s2: ModOneValue
    s3: ModOneValue

    @property
    def s_triple(self) -> tuple[ModOneValue, ModOneValue, ModOneValue]:
        return (self.s1, self.s2, self.s3)


def _sigma(t: Triple) -> tuple[int, int, int]:
    a, b, c = t
    return (a + b + c, a * b + a * c + b * c, a * b * c)


def _require_balanced(space: EschenburgSpace) -> None:
    if sum(space.k) != sum(space.l):
        raise UnequalSums(f"sum {sum(space.k)} != {sum(space.l)} for {space.k}, {space.l}")


def is_free(space: EschenburgSpace) -> bool:
    """Whether the circle action with these parameters is free.

    Freeness requires, for every assignment of l-entries to k-entries,
    that the three differences have no common factor; by the equal-sum
    constraint this is equivalent to every pair of differences taken at
    distinct indices being coprime.
    """
    _require_balanced(space)
    return all(
        math.gcd(
            space.k[0] - space.l[p[0]],
            space.k[1] - space.l[p[1]],
            space.k[2] - space.l[p[2]],
        )
        == 1
        for p in permutations(range(3))
    )


def is_positively_curved(space: EschenburgSpace) -> bool:
    """Whether the standard metric has positive sectional curvature.

    The criterion: every k-entry lies outside [min(l), max(l)], or every
    l-entry lies outside [min(k), max(k)]. For equal-sum triples this
    global form is equivalent to the per-index form of the condition.
    """
    _require_balanced(space)
    lo_l, hi_l = min(space.l), max(space.l)
    lo_k, hi_k = min(space.k), max(space.k)
    return all(not lo_l <= v <= hi_l for v in space.k) or all(
        not lo_k <= v <= hi_k for v in space.l
    )


def invariants(space: EschenburgSpace) -> EschenburgInvariants:
    """The order r, signed linking number, p1 mod r, and linking classes.

    lk_pair is the sign-ambiguous pair {s^-1, -s^-1} mod r; it is None
    when r = 1 (trivial group) and also when gcd(s, r) > 1, which only
    happens for parameters that do not act freely.
    """
    sig_k = _sigma(space.k)
    sig_l = _sigma(space.l)
    _require_balanced(space)
    r_signed = sig_k[1] - sig_l[1]
    if r_signed == 0:
        raise DegenerateOrder(f"sigma2 coincide for {space.k}, {space.l}")
    r = abs(r_signed)
    s_signed = sig_k[2] - sig_l[2]
    p1 = ResidueClass((2 * sig_k[0] ** 2 - 6 * sig_k[1]) % r, r)
    lk_pair = None
    if r > 1 and math.gcd(s_signed, r) == 1:
        u = inv_mod(s_signed, r)
        lk_pair = frozenset({ResidueClass(u, r), ResidueClass((-u) % r, r)})
    return EschenburgInvariants(
        r=r,
        s_signed=s_signed,
        p1=p1,
        lk_pair=lk_pair,
        free=is_free(space),
        positively_curved=is_positively_curved(space),
    )


def normalize(space: EschenburgSpace) -> EschenburgSpace:
    """Canonical representative under the parameter symmetries.

    The symmetries: permuting each triple, shifting both triples by a
    common constant, negating both triples, and swapping k with l. The
    canonical form sorts both triples ascending, shifts so min(l) = 0,
    and takes the lexicographically smallest of the four sign/swap
    variants.
    """
    candidates = []
    for kk, ll in ((space.k, space.l), (space.l, space.k)):
        for sign in (1, -1):
            k_sorted = sorted(sign * v for v in kk)
            l_sorted = sorted(sign * v for v in ll)
            shift = l_sorted[0]
            candidates.append(
                (
                    tuple(v - shift for v in k_sorted),
                    tuple(v - shift for v in l_sorted),
                )
            )
    k_best, l_best = min(candidates)
    return EschenburgSpace(k_best, l_best)


def enumerate_positively_curved(r_max: int) -> list[EschenburgSpace]:
    """All normalized free, positively curved spaces with r < r_max.

    Representatives are scanned with min(l) = 0 and all entries bounded
    by 3*r_max in absolute value (the documented convention of this
    enumeration), deduplicated by normalize() and sorted by (r, k, l).
    """
    if r_max < 1:
        raise DomainError(f"r_max must be positive, got {r_max}")
    bound = 3 * r_max
    found: set[EschenburgSpace] = set()
    for l1 in range(bound + 1):
        for l2 in range(l1 + 1):
            total = l1 + l2
            sig2_l = l1 * l2
            for k1 in range(-(-total // 3), bound + 1):
                rest = total - k1
                k2_lo = max(-(-rest // 2), rest - bound)  # k2 >= k3 and k3 <= bound
                k2_hi = min(k1, rest + bound)
                for k2 in range(k2_lo, k2_hi + 1):
                    k3 = rest - k2
                    r = abs(k1 * k2 + k3 * (k1 + k2) - sig2_l)
                    if r < 1 or r >= r_max:
                        continue
                    space = EschenburgSpace((k1, k2, k3), (l1, l2, 0))
                    if is_positively_curved(space) and is_free(space):
                        found.add(normalize(space))
    return sorted(found, key=lambda s: (invariants(s).r, s.k, s.l))


def _parse_int_triple(text: str, line_number: int, label: str) -> Triple:
    tokens = text.split()
    if len(tokens) != 3:
        raise ParseError(line_number, f"{label} must have three entries, got {text!r}")
    try:
        return tuple(int(t) for t in tokens)  # type: ignore[return-value]
    except ValueError:
        raise ParseError(line_number, f"{label} entries must be integers, got {text!r}") from None


def _parse_fraction_triple(text: str, line_number: int) -> tuple[Fraction, Fraction, Fraction]:
    tokens = text.split()
    if len(tokens) != 3:
        raise ParseError(line_number, f"expected three s-values, got {text!r}")
    try:
        return tuple(Fraction(t) for t in tokens)  # type: ignore[return-value]
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_number, f"s-values must be fractions, got {text!r}") from None


def load_fixtures(source: Union[str, Path, None] = None) -> list[EschenburgFixture]:
    """Parse a fixture file of lines 'k1 k2 k3 | l1 l2 l3 | s1 s2 s3'.

    '#' starts a comment, blank lines are skipped. Each parsed space is
    validated: the parameters must be balanced and nondegenerate, and
    each s-denominator must divide its bound (224r, 24r, 6r), otherwise
    the line cannot belong to the space and InconsistentFixture is
    raised. Without a source argument the packaged registry is loaded.
    """
    if source is None:
        text = resources.files("kreckstolz.data").joinpath(_DEFAULT_FIXTURES).read_text()
    else:
        text = Path(source).read_text()
    fixtures = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        parts = content.split("|")
        if len(parts) != 3:
            raise ParseError(line_number, "expected 'k1 k2 k3 | l1 l2 l3 | s1 s2 s3'")
        k = _parse_int_triple(parts[0], line_number, "k")
        l = _parse_int_triple(parts[1], line_number, "l")
        s_values = _parse_fraction_triple(parts[2], line_number)
        space = EschenburgSpace(k, l)
        try:
            inv = invariants(space)
        except DomainError as exc:
            raise InconsistentFixture(f"line {line_number}: {exc}") from exc
        for s, bound in zip(s_values, _DENOMINATOR_BOUNDS):
            if (bound * inv.r) % s.denominator != 0:
                raise InconsistentFixture(
                    f"line {line_number}: denominator of {s} incompatible with r = {inv.r}"
                )
        fixtures.append(EschenburgFixture(space, *(mod_one(s) for s in s_values)))
    return fixtures


def fixture_profile(fixture: EschenburgFixture) -> InvariantProfile:
    """The full invariant profile of a fixture space.

    Eschenburg spaces are non-spin with pi4 = 0; the linking class is
    only known up to sign, so both candidates are listed.
    """
    inv = invariants(fixture.space)
    return InvariantProfile(
        cohomology_type=CohomologyType.E,
        r=inv.r,
        s1=fixture.s1,
        s2=fixture.s2,
        s3=fixture.s3,
        p1=inv.p1,
        lk=inv.lk_pair,
        pi4=Pi4.ZERO,
    )
