"""Exact arithmetic in the two h1-localized rings and the restriction map between them.

``ExtLocal`` is the Laurent polynomial ring F2[h1^{±1}][v1^4, v2, v3, ...];
``A2Local`` is F2[h1^{±1}, a1, v1^4, v2].  Monomials are sparse exponent
vectors keyed by a generator index, polynomials are sets of monomials
(coefficients in F2).

Text form: factors ``name^exp`` joined by ``" * "`` in index order, the
empty monomial is ``1``.  The generator v1^4 is written through its v1
exponent, so ``v1^8`` means (v1^4)^2.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import tokens
from .binary import alpha, split_into_parts
from .errors import DomainError, ParseError, RingMismatch, UnknownName
from .grading import TriDegree, ZERO, v_degree

EXT_LOCAL = "ExtLocal"
A2_LOCAL = "A2Local"
RINGS = (EXT_LOCAL, A2_LOCAL)

H1 = 0
# ExtLocal: 0 -> h1, 1 -> v1^4, n >= 2 -> v_n
EXT_V14 = 1
# A2Local indices follow the order h1, a1, v1^4, v2
A2_A1, A2_V14, A2_V2 = 1, 2, 3

_H1_DEG = TriDegree(1, 1, 1)
_V14_DEG = TriDegree(8, 4, 4)
_A1_DEG = TriDegree(11, 3, 7)
_V2_DEG = TriDegree(6, 1, 3)


@dataclass(frozen=True)
class RingSpec:
    ring: str
    description: str

    def generator_name(self, index: int) -> str:
        if index == H1:
            return "h1"
        if self.ring == EXT_LOCAL:
            return "v1" if index == EXT_V14 else f"v{index}"
        return {A2_A1: "a1", A2_V14: "v1", A2_V2: "v2"}[index]

    def generator_degree(self, index: int) -> TriDegree:
        if index == H1:
            return _H1_DEG
        if self.ring == EXT_LOCAL:
            return _V14_DEG if index == EXT_V14 else v_degree(index)
        return {A2_A1: _A1_DEG, A2_V14: _V14_DEG, A2_V2: _V2_DEG}[index]

    def valid_index(self, index: int) -> bool:
        if self.ring == EXT_LOCAL:
            return index >= 0
        return index in (H1, A2_A1, A2_V14, A2_V2)


RING_SPECS = {
    EXT_LOCAL: RingSpec(EXT_LOCAL, "F2[h1^±1][v1^4, v_n : n >= 2]"),
    A2_LOCAL: RingSpec(A2_LOCAL, "F2[h1^±1, a1, v1^4, v2]"),
}


def _v1_index(ring: str) -> int:
    return EXT_V14 if ring == EXT_LOCAL else A2_V14


@dataclass(frozen=True)
class LaurentMonomial:
    ring: str
    exps: tuple  # ((index, exponent), ...) sorted by index, no zero exponents

    def __post_init__(self):
        spec = RING_SPECS.get(self.ring)
        if spec is None:
            raise UnknownName(f"unknown ring {self.ring!r}")
        last = -1
        for idx, e in self.exps:
            if idx <= last or e == 0 or not spec.valid_index(idx):
                raise ValueError(f"malformed exponent vector {self.exps!r}")
            if idx != H1 and e < 0:
                raise DomainError("only h1 may carry a negative exponent")
            last = idx

    @classmethod
    def from_dict(cls, ring: str, exps: dict) -> "LaurentMonomial":
        return cls(ring, tuple(sorted((i, e) for i, e in exps.items() if e)))

    def exponent(self, index: int) -> int:
        for idx, e in self.exps:
            if idx == index:
                return e
        return 0

    @property
    def h1(self) -> int:
        return self.exponent(H1)

    def degree(self) -> TriDegree:
        spec = RING_SPECS[self.ring]
        total = ZERO
        for idx, e in self.exps:
            total = total + spec.generator_degree(idx) * e
        return total

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} * {other.ring}")
        exps = dict(self.exps)
        for idx, e in other.exps:
            exps[idx] = exps.get(idx, 0) + e
        return LaurentMonomial.from_dict(self.ring, exps)

    def without_h1(self) -> "LaurentMonomial":
        return LaurentMonomial(self.ring, tuple(p for p in self.exps if p[0] != H1))

    def sort_key(self) -> tuple:
        return self.exps

    def __str__(self) -> str:
        return format_monomial(self)


def ext_monomial(h1: int = 0, v14: int = 0, v: Optional[dict[int, int]] = None) -> LaurentMonomial:
    exps = {H1: h1, EXT_V14: v14}
    for n, e in (v or {}).items():
        if n < 2:
            raise DomainError("v_n requires n >= 2")
        exps[n] = exps.get(n, 0) + e
    return LaurentMonomial.from_dict(EXT_LOCAL, exps)


def a2_monomial(h1: int = 0, a1: int = 0, v14: int = 0, v2: int = 0) -> LaurentMonomial:
    return LaurentMonomial.from_dict(A2_LOCAL, {H1: h1, A2_A1: a1, A2_V14: v14, A2_V2: v2})


def mono_degree(m: LaurentMonomial) -> TriDegree:
    return m.degree()


# --- text form ------------------------------------------------------------

def format_monomial(m: LaurentMonomial) -> str:
    if not m.exps:
        return "1"
    spec = RING_SPECS[m.ring]
    v1 = _v1_index(m.ring)
    parts = []
    for idx, e in m.exps:
        shown = 4 * e if idx == v1 else e
        parts.append(f"{spec.generator_name(idx)}^{shown}")
    return " * ".join(parts)


_FACTOR_RE = re.compile(r"^(h1|a1|v\d+)(?:\^(-?\d+))?$")


def parse_monomial(text: str, ring: Optional[str] = None) -> LaurentMonomial:
    """Parse the text form. The ring is inferred when the generators force it."""
    text = text.strip()
    if ring is not None and ring not in RINGS:
        raise UnknownName(f"unknown ring {ring!r}")
    if text in ("", "1"):
        return LaurentMonomial(ring or A2_LOCAL, ())
    raw: list[tuple[str, int]] = []
    for piece in re.split(r"\s*\*\s*|\s+", text):
        if not piece:
            continue
        m = _FACTOR_RE.match(piece)
        if not m:
            raise ParseError(f"bad factor {piece!r}")
        raw.append((m.group(1), int(m.group(2)) if m.group(2) is not None else 1))
    names = {name for name, _ in raw}
    if ring is None:
        if "a1" in names:
            ring = A2_LOCAL
        elif any(re.fullmatch(r"v\d+", n) and int(n[1:]) >= 3 for n in names):
            ring = EXT_LOCAL
        else:
            ring = A2_LOCAL
    exps: dict[int, int] = {}
    for name, e in raw:
        if name == "h1":
            idx = H1
        elif name == "a1":
            if ring != A2_LOCAL:
                raise RingMismatch("a1 only exists in A2Local")
            idx = A2_A1
        else:
            n = int(name[1:])
            if n == 1:
                if e % 4:
                    raise ParseError("v1 only occurs through v1^4; its exponent must be a multiple of 4")
                idx, e = _v1_index(ring), e // 4
            elif n >= 2:
                if ring == A2_LOCAL and n != 2:
                    raise RingMismatch(f"v{n} does not exist in A2Local")
                idx = n if ring == EXT_LOCAL else A2_V2
            else:
                raise ParseError(f"no generator {name!r}")
        exps[idx] = exps.get(idx, 0) + e
    return LaurentMonomial.from_dict(ring, exps)


# --- polynomials ----------------------------------------------------------

@dataclass(frozen=True)
class LocalPolynomial:
    ring: str
    terms: frozenset

    @classmethod
    def of(cls, ring: str, monos: Iterable[LaurentMonomial]) -> "LocalPolynomial":
        counts = Counter(monos)
        for m in counts:
            if m.ring != ring:
                raise RingMismatch(f"monomial in {m.ring} added to {ring} polynomial")
        return cls(ring, frozenset(m for m, c in counts.items() if c % 2))

    @classmethod
    def zero(cls, ring: str) -> "LocalPolynomial":
        return cls(ring, frozenset())

    @classmethod
    def one(cls, ring: str) -> "LocalPolynomial":
        return cls(ring, frozenset([LaurentMonomial(ring, ())]))

    def _check(self, other: "LocalPolynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "LocalPolynomial") -> "LocalPolynomial":
        self._check(other)
        return LocalPolynomial(self.ring, self.terms ^ other.terms)

    def __mul__(self, other: "LocalPolynomial") -> "LocalPolynomial":
        self._check(other)
        return LocalPolynomial.of(self.ring, (a * b for a in self.terms for b in other.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[LaurentMonomial]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[LaurentMonomial]:
        return sorted(self.terms, key=LaurentMonomial.sort_key)

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_add(p: LocalPolynomial, q: LocalPolynomial) -> LocalPolynomial:
    return p + q


def poly_mul(p: LocalPolynomial, q: LocalPolynomial) -> LocalPolynomial:
    return p * q


def format_polynomial(p: LocalPolynomial) -> str:
    if not p.terms:
        return "0"
    return " + ".join(format_monomial(m) for m in p.sorted_terms())


def parse_polynomial(text: str, ring: str) -> LocalPolynomial:
    text = text.strip()
    if text == "0":
        return LocalPolynomial.zero(ring)
    return LocalPolynomial.of(ring, (parse_monomial(t, ring) for t in text.split(" + ")))


# --- the restriction map on localizations ----------------------------------

def phi_v(n: int) -> LaurentMonomial:
    """Image of v_n: h1^(-3(2^(n-2)-1)) a1^(2^(n-2)-1) v2."""
    if n < 2:
        raise DomainError("v_n requires n >= 2")
    c = 2 ** (n - 2) - 1
    return a2_monomial(h1=-3 * c, a1=c, v2=1)


def phi_local(m: LaurentMonomial) -> LaurentMonomial:
    if m.ring != EXT_LOCAL:
        raise RingMismatch("phi_local expects an ExtLocal monomial")
    h1, a1, v2 = m.h1, 0, 0
    for idx, e in m.exps:
        if idx >= 2:
            c = 2 ** (idx - 2) - 1
            h1 -= 3 * c * e
            a1 += c * e
            v2 += e
    return a2_monomial(h1=h1, a1=a1, v14=m.exponent(EXT_V14), v2=v2)


def phi_local_poly(p: LocalPolynomial) -> LocalPolynomial:
    if p.ring != EXT_LOCAL:
        raise RingMismatch("phi_local expects an ExtLocal polynomial")
    return LocalPolynomial.of(A2_LOCAL, (phi_local(m) for m in p.terms))


def abc(m: LaurentMonomial) -> tuple[int, int, int]:
    """(v1^4, v2, a1) exponents of an A2Local monomial."""
    if m.ring != A2_LOCAL:
        raise RingMismatch("expected an A2Local monomial")
    return m.exponent(A2_V14), m.exponent(A2_V2), m.exponent(A2_A1)


def in_phi_image(m: LaurentMonomial) -> bool:
    """Image criterion: alpha(b + c) <= b for b the v2 and c the a1 exponent."""
    _, b, c = abc(m)
    return alpha(b + c) <= b


@dataclass(frozen=True)
class PreimageCertificate:
    h1: int
    v14: int
    v_indices: tuple  # non-increasing n's, one entry per v_n factor

    def monomial(self) -> LaurentMonomial:
        return ext_monomial(h1=self.h1, v14=self.v14, v=Counter(self.v_indices))

    def __str__(self) -> str:
        return format_monomial(self.monomial())


def phi_preimage_certificate(m: LaurentMonomial) -> Optional[PreimageCertificate]:
    """An ExtLocal monomial mapping onto ``m``, or None if ``m`` is not in the image."""
    a, b, c = abc(m)
    if alpha(b + c) > b:
        return None
    if b == 0:
        exps: list[int] = []
    else:
        exps = split_into_parts(b + c, b)
        assert exps is not None
    # each v_{e+2} contributes a1^(2^e - 1) and h1^(-3(2^e - 1))
    return PreimageCertificate(h1=m.h1 + 3 * c, v14=a, v_indices=tuple(e + 2 for e in exps))


# --- packaged localization values ----------------------------------------

def L_named(name: str) -> LocalPolynomial:
    """Localization of P^k h1, P^k d0, P^k e0 or e0 g."""
    try:
        factors = dict(tokens.parse_product(name))
    except ParseError:
        raise UnknownName(f"no packaged localization for {name!r}") from None
    k = factors.pop("P", 0)
    if factors == {"h1": 1}:
        mono = ext_monomial(h1=1, v14=k)
    elif factors == {"d0": 1}:
        mono = ext_monomial(h1=2, v14=k, v={2: 2})
    elif factors == {"e0": 1}:
        mono = ext_monomial(h1=3, v14=k, v={3: 1})
    elif factors == {"e0": 1, "g": 1} and k == 0:
        mono = ext_monomial(h1=7, v={4: 1})
    else:
        raise UnknownName(f"no packaged localization for {name!r}")
    return LocalPolynomial.of(EXT_LOCAL, [mono])


L_NAMED_FAMILIES = ("P^k*h1", "P^k*d0", "P^k*e0", "e0*g")


def _delta_terms(t: int, k: int) -> tuple[LaurentMonomial, LaurentMonomial]:
    first = a2_monomial(h1=-2 * k - 5, v14=1, a1=2 + 2 * k + t, v2=t)
    second = a2_monomial(h1=-2 * k + 1, v2=4 + t, a1=2 * k + t)
    return first, second


def L_delta_family(t: int, k: int) -> LocalPolynomial:
    """Localization of Dh1 e0^t g^k in A2Local (t >= 1)."""
    if t < 1:
        raise DomainError("the Dh1 e0^t g^k family is only defined for t >= 1")
    if k < 0:
        raise DomainError("k must be non-negative")
    return LocalPolynomial.of(A2_LOCAL, _delta_terms(t, k))


def delta_family_first_term(t: int, k: int) -> LaurentMonomial:
    """First localization term of Dh1 e0^t g^k; t = 0 covers Dh1 g^k."""
    if t < 0 or k < 0:
        raise DomainError("t and k must be non-negative")
    return _delta_terms(t, k)[0]


# --- oracles --------------------------------------------------------------

def a2_coweight(a: int, b: int, c: int) -> int:
    return 4 * a + 3 * b + 4 * c


def _v_multisets(budget: int, max_n: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of n >= 2 with total coweight sum(2^n - 1) <= budget."""
    if max_n < 2:
        yield ()
        return
    cost = 2 ** max_n - 1
    yield from _v_multisets(budget, max_n - 1)
    if cost <= budget:
        for rest in _v_multisets(budget - cost, max_n):
            yield (max_n,) + rest


def oracle_image_enumerate(max_coweight: int) -> set[tuple[int, int, int]]:
    """All (a, b, c) reached by images of ExtLocal monomials of coweight <= max_coweight.

    Works by brute force: every product of v1^4 and v_n within the coweight
    budget is pushed through :func:`phi_local`; the h1 exponent is dropped,
    since h1 is a unit.
    """
    if max_coweight < 0:
        raise DomainError("max_coweight must be non-negative")
    top = 2
    while 2 ** (top + 1) - 1 <= max_coweight:
        top += 1
    found: set[tuple[int, int, int]] = set()
    for vs in _v_multisets(max_coweight, top):
        spent = sum(2 ** n - 1 for n in vs)
        for a in range((max_coweight - spent) // 4 + 1):
            image = phi_local(ext_monomial(v14=a, v=Counter(vs)))
            assert image.degree().coweight == spent + 4 * a
            found.add(abc(image))
    return found


def image_predicate_set(max_coweight: int) -> set[tuple[int, int, int]]:
    """The triples satisfying the image criterion within the coweight budget."""
    out = set()
    for a in range(max_coweight // 4 + 1):
        for b in range((max_coweight - 4 * a) // 3 + 1):
            for c in range((max_coweight - 4 * a - 3 * b) // 4 + 1):
                if alpha(b + c) <= b:
                    out.add((a, b, c))
    return out


def coweight_equation_solution(t: int, k: int) -> Optional[tuple[int, int, tuple[int, ...]]]:
    """Search for (n, m, (m_1, ...)) with 4n + m + #m_i = t, every m_i >= 3 and
    7t + 8k = 4n + 3m + sum(2^m_i - 1).

    This is the degree bookkeeping of a localized monomial
    v1^(4n) v2^m prod v_(m_i) of Chow degree t and coweight 7t + 8k.
    """
    if t < 0 or k < 0:
        raise DomainError("t and k must be non-negative")
    target = 7 * t + 8 * k

    def fill(count: int, total: int, cap: int) -> Optional[tuple[int, ...]]:
        if count == 0:
            return () if total == 0 else None
        # each remaining part costs at least 7
        if total < 7 * count:
            return None
        for e in range(min(cap, total.bit_length()), 2, -1):
            cost = 2 ** e - 1
            if cost * count < total:
                break
            if cost > total:
                continue
            rest = fill(count - 1, total - cost, e)
            if rest is not None:
                return (e,) + rest
        return None

    for n in range(t // 4 + 1):
        for m in range(t - 4 * n + 1):
            rest = target - 4 * n - 3 * m
            if rest < 0:
                continue
            parts = fill(t - 4 * n - m, rest, rest.bit_length())
            if parts is not None:
                return n, m, parts
    return None


def coweight_equation_solvable(t: int, k: int) -> bool:
    return coweight_equation_solution(t, k) is not None


def iter_a2_monomials(max_coweight: int, h1_range: Iterable[int] = (0,)) -> Iterator[LaurentMonomial]:
    h1_values = list(h1_range)
    for a, b, c in itertools.product(range(max_coweight // 4 + 1), range(max_coweight // 3 + 1), range(max_coweight // 4 + 1)):
        if a2_coweight(a, b, c) <= max_coweight:
            for d in h1_values:
                yield a2_monomial(h1=d, a1=c, v14=a, v2=b)
