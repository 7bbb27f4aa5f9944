"""Family descriptors for the wedge sets and the status engine.

A status records the strongest statement available for a set: provably
empty (with the alpha inequality or vanishing fact that proves it),
provably non-empty (with a witness checked in the rewrite model, or a named
citation), non-empty conditional on a conjecture, or unknown.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from . import tokens
from .a2model import phi_named, verify_witness
from .binary import alpha
from .errors import DomainError, OpaqueImage, ParseError, UnknownName
from .grading import TriDegree, chow_zero_lift, classical_vanishes, degree_of, wedge_member_degree

# Λ in the order of its table
LAMBDA_NAMES = (
    "tau*g^2", "d0*r",
    "tau*Dh1*g", "d0*m",
    "g*r", "tau*e0^2*g",
    "g*m", "tau*Dh1*e0^2",
    "tau*Dh1*e0", "d0*l",
    "e0*r", "tau*e0^3",
    "e0*m", "tau*Dh1*d0*e0",
    "tau*e0*g^2", "d0*e0*r",
)

E0G_CONJECTURE = "e0g-conjecture"
DH1E0G_CONJECTURE = "dh1e0g-conjecture"

CITATIONS = {
    "g-power-empty": "The set 𝐠ʲ is empty for all j ≥ 0: classical Ext vanishes in degrees (8j,4j)",
    "e0g-alpha": "If α(t+k) > t, then e₀ᵗ𝐠ᵏ is empty",
    "dh1e0g-alpha": "If α(1+k+t) > t for t ≥ 1 and k ≥ 0, then Δh₁e₀ᵗ𝐠ᵏ is empty",
    "dh1g-none": "No x in Ext has φ(x) = Δh₁gᵏ: α(1+k) > 0 keeps the first L-term out of the image",
    "wedge-main": "𝐏ⁱ𝐠ʲλ is non-empty and consists of non-zero elements for λ in Λ, i ≥ 0, j ≥ 0",
    "e0g-known": "e₀, e₀𝐠 and e₀𝐠³ are non-empty, and products of such sets lie in e₀ᵗ𝐠ᵏ",
    "dh1e0-known": "Δh₁e₀ is an element of Ext; Δh₁e₀·e₀𝐠^{k₂}⋯e₀𝐠^{k_t} lies in Δh₁e₀ᵗ𝐠ᵏ",
    "unit": "1 is an element of Ext with φ(1) = 1",
    "tau-g-massey": "τ𝐠ʲ is non-empty for any j ≥ 0 (Massey product ⟨τ, h₁⁴x̃_j, h₁⟩)",
    "tau-dh1-g": "τΔh₁𝐠^{j+1} is non-empty for all j ≥ 0",
    "tau-P-g": "τ𝐏ⁱ𝐠^{j+1} is non-empty for i ≥ 0 and j ≥ 0",
    "tau-e0g": "τe₀ᵗ𝐠ᵏ ⊇ e₀ᵗ·τ𝐠ᵏ is non-empty for all t ≥ 0 and k ≥ 0",
    "tau-dh1e0g": "τΔh₁e₀ᵗ𝐠ᵏ ⊇ τ𝐠ᵏ·Δh₁e₀·e₀^{t-1} is non-empty for t ≥ 1",
    "tau-e0cubed-region": "τ𝐏ⁱ𝐠ʲe₀³ contains an element divisible by τ if j = 0, or i ≥ j ≥ 1, or 1 ≤ i < j ≤ 3i",
    "tau-row-4k": "At f = 4k (k ≥ 2), τe₀ˢ𝐠^{k-s} contains an element divisible by τ if s ≥ α(k), none if s < α(k)",
    "tau-row-4k1": "At f = 4k+1 (k ≥ 2), τΔh₁e₀ˢ𝐠^{k-s-1} contains an element divisible by τ if s ≥ α(k), none if s < α(k)",
    E0G_CONJECTURE: "e₀𝐠ᵏ is non-empty if and only if k = 2ⁿ − 1",
    DH1E0G_CONJECTURE: "Δh₁e₀𝐠ᵏ is non-empty if and only if k = 2ⁿ − 2",
}


# --- descriptors -----------------------------------------------------------

def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


@dataclass(frozen=True)
class WedgeSet:
    lam: str
    i: int
    j: int

    def __post_init__(self):
        _need(self.lam in LAMBDA_NAMES, f"{self.lam!r} is not in Λ")
        _need(self.i >= 0 and self.j >= 0, "i, j >= 0")

    def degree(self) -> TriDegree:
        return wedge_member_degree(self.lam, self.i, self.j)

    def __str__(self) -> str:
        return f"wedge({self.lam},{self.i},{self.j})"


@dataclass(frozen=True)
class E0G:
    t: int
    k: int

    def __post_init__(self):
        _need(self.t >= 0 and self.k >= 0, "t, k >= 0")

    def degree(self) -> TriDegree:
        return degree_of("e0") * self.t + degree_of("g") * self.k

    def __str__(self) -> str:
        return f"e0^{self.t}*g^{self.k}"


@dataclass(frozen=True)
class DeltaE0G:
    t: int
    k: int

    def __post_init__(self):
        _need(self.t >= 1 and self.k >= 0, "t >= 1, k >= 0 (use DeltaG for t = 0)")

    def degree(self) -> TriDegree:
        return degree_of("Dh1") + E0G(self.t, self.k).degree()

    def __str__(self) -> str:
        return f"Dh1*e0^{self.t}*g^{self.k}"


@dataclass(frozen=True)
class DeltaG:
    """Elements x with φ(x) = Δh₁gᵏ."""
    k: int

    def __post_init__(self):
        _need(self.k >= 0, "k >= 0")

    def degree(self) -> TriDegree:
        return degree_of("Dh1") + degree_of("g") * self.k

    def __str__(self) -> str:
        return f"Dh1*g^{self.k}"


@dataclass(frozen=True)
class TauE0G:
    t: int
    k: int

    def __post_init__(self):
        _need(self.t >= 0 and self.k >= 0, "t, k >= 0")

    def degree(self) -> TriDegree:
        return degree_of("tau") + E0G(self.t, self.k).degree()

    def __str__(self) -> str:
        return f"tau*e0^{self.t}*g^{self.k}"


@dataclass(frozen=True)
class TauDeltaE0G:
    t: int
    k: int

    def __post_init__(self):
        _need(self.t >= 0 and self.k >= 0, "t, k >= 0")

    def degree(self) -> TriDegree:
        return degree_of("tau") + degree_of("Dh1") + E0G(self.t, self.k).degree()

    def __str__(self) -> str:
        return f"tau*Dh1*e0^{self.t}*g^{self.k}"


@dataclass(frozen=True)
class TauPG:
    i: int
    j: int

    def __post_init__(self):
        _need(self.i >= 0 and self.j >= 0, "i, j >= 0")

    def degree(self) -> TriDegree:
        return wedge_member_degree("tau", self.i, self.j)

    def __str__(self) -> str:
        return f"tau*P^{self.i}*g^{self.j}"


@dataclass(frozen=True)
class PureG:
    j: int

    def __post_init__(self):
        _need(self.j >= 0, "j >= 0")

    def degree(self) -> TriDegree:
        return degree_of("g") * self.j

    def __str__(self) -> str:
        return f"g^{self.j}"


FamilyDescriptor = Union[WedgeSet, E0G, DeltaE0G, DeltaG, TauE0G, TauDeltaE0G, TauPG, PureG]

_WEDGE_RE = re.compile(r"^wedge\(\s*([^,()]+?)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_FACTOR_RE = re.compile(r"^(tau|Dh1|Delta_h1|e0|g|P)(?:\^(\d+))?$")


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse ``e0^T*g^K``, ``Dh1*e0^T*g^K``, ``tau*...``, ``g^J`` or ``wedge(LAMBDA,I,J)``."""
    text = text.strip()
    m = _WEDGE_RE.match(text)
    if m:
        try:
            lam = tokens.canonical(m.group(1))
        except ParseError:
            raise UnknownName(f"unknown λ {m.group(1)!r}") from None
        if lam not in LAMBDA_NAMES:
            raise UnknownName(f"{m.group(1)!r} is not in Λ")
        return WedgeSet(lam, int(m.group(2)), int(m.group(3)))
    exps: dict[str, int] = {}
    for piece in text.split("*"):
        fm = _FACTOR_RE.match(piece.strip())
        if not fm:
            raise ParseError(f"bad descriptor factor {piece!r} in {text!r}")
        atom = "Dh1" if fm.group(1) == "Delta_h1" else fm.group(1)
        if atom in exps:
            raise ParseError(f"repeated factor {atom!r} in {text!r}")
        exps[atom] = int(fm.group(2)) if fm.group(2) is not None else 1
    tau = exps.pop("tau", None)
    dh1 = exps.pop("Dh1", None)
    p = exps.pop("P", None)
    t = exps.pop("e0", 0)
    k = exps.pop("g", 0)
    if tau not in (None, 1) or dh1 not in (None, 1):
        raise ParseError("tau and Dh1 appear at most once")
    if p is not None:
        if tau is None or dh1 is not None or t:
            raise ParseError("P only occurs in tau*P^I*g^J")
        return TauPG(p, k)
    if tau:
        return TauDeltaE0G(t, k) if dh1 else TauE0G(t, k)
    if dh1:
        return DeltaE0G(t, k) if t >= 1 else DeltaG(k)
    if "e0" not in text:
        return PureG(k)
    return E0G(t, k)


# --- statuses ----------------------------------------------------------------

class Verdict(str, Enum):
    EMPTY = "EmptyProven"
    NONEMPTY = "NonEmptyProven"
    CONDITIONAL = "NonEmptyConditional"
    UNKNOWN = "UnknownStatus"
    TAU_DIVISIBLE = "TauDivisible"
    NOT_TAU_DIVISIBLE = "NotTauDivisible"

    def __str__(self) -> str:
        return self.value


DECIDED = frozenset(v for v in Verdict if v is not Verdict.UNKNOWN)


@dataclass(frozen=True)
class Status:
    descriptor: str
    verdict: Verdict
    degree: TriDegree
    evidence_kind: str  # alpha | vanishing | witness | citation | conjecture | none
    citation: Optional[str] = None
    witness: Optional[str] = None
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def anchor(self) -> Optional[str]:
        return CITATIONS.get(self.citation) if self.citation else None

    @property
    def decided(self) -> bool:
        return self.verdict in DECIDED

    def recheck(self) -> bool:
        """Re-run the stored evidence."""
        kind, p = self.evidence_kind, self.params
        if kind == "alpha":
            return alpha(p["alpha_of"]) > p["bound"]
        if kind == "vanishing":
            s, f = p["classical"]
            lift = chow_zero_lift(s, f)
            return classical_vanishes(s, f) and lift == self.degree and lift.chow == 0
        if kind == "witness":
            lam, i, j = p["target"]
            return verify_witness(self.witness, (lam, i, j))
        if kind in ("citation", "conjecture"):
            return self.citation in CITATIONS
        return kind == "none" and self.verdict is Verdict.UNKNOWN

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "verdict": self.verdict.value,
            "evidence_kind": self.evidence_kind,
            "citation": self.citation,
            "anchor": self.anchor,
            "witness": self.witness,
            "degree": list(self.degree.as_tuple()),
            "params": self.params,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Status":
        return cls(
            descriptor=data["descriptor"],
            verdict=Verdict(data["verdict"]),
            degree=TriDegree(*data["degree"]),
            evidence_kind=data["evidence_kind"],
            citation=data.get("citation"),
            witness=data.get("witness"),
            params=_untuple(data.get("params") or {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True)

    def report(self) -> str:
        rows = [
            ("descriptor", self.descriptor),
            ("verdict", self.verdict.value),
            ("degree", str(self.degree)),
            ("evidence_kind", self.evidence_kind),
            ("citation", self.citation or "-"),
            ("anchor", self.anchor or "-"),
            ("witness", self.witness or "-"),
        ]
        if self.params:
            rows.append(("params", json.dumps(self.params, ensure_ascii=False, sort_keys=True)))
        return "\n".join(f"{k}\t{v}" for k, v in rows) + "\n"


def _untuple(params: dict) -> dict:
    # JSON turns tuples into lists; targets are compared as tuples
    out = dict(params)
    if "target" in out:
        out["target"] = tuple(out["target"])
    if "classical" in out:
        out["classical"] = tuple(out["classical"])
    return out


def _status(d, verdict, kind, citation=None, witness=None, **params) -> Status:
    return Status(str(d), verdict, d.degree(), kind, citation, witness, params)


# --- small factorization searches ------------------------------------------

KNOWN_E0G_POWERS = (0, 1, 3)  # e0 g^k known to be non-empty


def known_e0g_factorization(t: int, k: int) -> Optional[tuple[int, ...]]:
    """Write k as a sum of t entries from {0, 1, 3}, largest first, or None."""
    if t < 0 or k < 0:
        return None
    for threes in range(min(t, k // 3), -1, -1):
        ones = k - 3 * threes
        if ones <= t - threes:
            return (3,) * threes + (1,) * ones + (0,) * (t - threes - ones)
    return None


def _prod(factors) -> str:
    return tokens.format_product(tuple((a, e) for a, e in factors if e))


def _factor_names(powers: tuple[int, ...]) -> list[str]:
    return ["e0" if p == 0 else _prod((("e0", 1), ("g", p))) for p in powers]


# --- the status engine ----------------------------------------------------

def family_status(d: FamilyDescriptor, conjectures_on: bool = False) -> Status:
    if isinstance(d, WedgeSet):
        return _wedge_status(d)
    if isinstance(d, PureG):
        return _status(d, Verdict.EMPTY, "vanishing", "g-power-empty", classical=(8 * d.j, 4 * d.j))
    if isinstance(d, E0G):
        return _e0g_status(d, conjectures_on)
    if isinstance(d, DeltaE0G):
        return _delta_status(d, conjectures_on)
    if isinstance(d, DeltaG):
        return _status(d, Verdict.EMPTY, "alpha", "dh1g-none", alpha_of=1 + d.k, bound=0)
    if isinstance(d, TauE0G):
        if d.k == 0:
            w = _prod((("tau", 1), ("e0", d.t)) if d.t else (("tau", 1),))
            return _status(d, Verdict.NONEMPTY, "witness", "tau-e0g", w, target=(w, 0, 0))
        return _status(d, Verdict.NONEMPTY, "citation", "tau-e0g" if d.t else "tau-g-massey")
    if isinstance(d, TauDeltaE0G):
        if d.t >= 1:
            if d.k == 0:
                w = _prod((("tau", 1), ("Dh1", 1), ("e0", d.t)))
                return _status(d, Verdict.NONEMPTY, "witness", "tau-dh1e0g", w, target=(w, 0, 0))
            return _status(d, Verdict.NONEMPTY, "citation", "tau-dh1e0g")
        if d.k == 0:
            return _status(d, Verdict.UNKNOWN, "none")
        if d.k == 1:
            return _status(d, Verdict.NONEMPTY, "witness", "tau-dh1-g", "tau*Dh1*g", target=("tau*Dh1*g", 0, 0))
        return _status(d, Verdict.NONEMPTY, "citation", "tau-dh1-g")
    if isinstance(d, TauPG):
        return _tau_pg_status(d)
    raise TypeError(f"not a family descriptor: {d!r}")


def wedge_witness(lam: str, i: int, j: int) -> Optional[str]:
    """An explicit element of P^i g^j lambda checkable in the rewrite model, if one is packaged."""
    if lam == "tau*e0^3":
        w = _e0cubed_witness(i, j)
        if w is not None:
            return w
    if lam == "tau*Dh1*g" and j == 0 and i >= 1:
        return _prod((("tau", 1), ("P", i - 1), ("Dh1", 1), ("d0", 2)))
    if i == 0 and j == 0:
        # λ itself, when it is a product of named Ext elements
        try:
            phi_named(lam)
        except (UnknownName, OpaqueImage):
            return None
        return lam
    return None


def _wedge_status(d: WedgeSet) -> Status:
    w = wedge_witness(d.lam, d.i, d.j)
    if w is not None:
        return _status(d, Verdict.NONEMPTY, "witness", "wedge-main", w, target=(d.lam, d.i, d.j))
    return _status(d, Verdict.NONEMPTY, "citation", "wedge-main")


def _e0g_status(d: E0G, conjectures_on: bool) -> Status:
    t, k = d.t, d.k
    if t == 0 and k == 0:
        return _status(d, Verdict.NONEMPTY, "witness", "unit", "1", target=("1", 0, 0))
    if alpha(t + k) > t:
        return _status(d, Verdict.EMPTY, "alpha", "e0g-alpha", alpha_of=t + k, bound=t)
    powers = known_e0g_factorization(t, k)
    if powers is not None:
        return _status(d, Verdict.NONEMPTY, "citation", "e0g-known", factors=_factor_names(powers))
    if conjectures_on:
        return _status(d, Verdict.CONDITIONAL, "conjecture", E0G_CONJECTURE, conjectures=[E0G_CONJECTURE])
    return _status(d, Verdict.UNKNOWN, "none")


def _delta_status(d: DeltaE0G, conjectures_on: bool) -> Status:
    t, k = d.t, d.k
    if alpha(1 + k + t) > t:
        return _status(d, Verdict.EMPTY, "alpha", "dh1e0g-alpha", alpha_of=1 + k + t, bound=t)
    powers = known_e0g_factorization(t - 1, k)
    if powers is not None:
        return _status(d, Verdict.NONEMPTY, "citation", "dh1e0-known", factors=["Dh1*e0"] + _factor_names(powers))
    if conjectures_on:
        return _status(d, Verdict.CONDITIONAL, "conjecture", DH1E0G_CONJECTURE,
                       conjectures=[E0G_CONJECTURE, DH1E0G_CONJECTURE])
    return _status(d, Verdict.UNKNOWN, "none")


def _tau_pg_status(d: TauPG) -> Status:
    i, j = d.i, d.j
    if j == 0:
        if i == 0:
            return _status(d, Verdict.NONEMPTY, "witness", "unit", "tau", target=("tau", 0, 0))
        return _status(d, Verdict.UNKNOWN, "none")
    if j == 1:
        if i == 0:
            return _status(d, Verdict.NONEMPTY, "witness", "tau-g-massey", "tau*g", target=("tau", 0, 1))
        w = _prod((("tau", 1), ("P", i - 1), ("d0", 2)))
        return _status(d, Verdict.NONEMPTY, "witness", "tau-P-g", w, target=("tau", i, 1))
    return _status(d, Verdict.NONEMPTY, "citation", "tau-g-massey" if i == 0 else "tau-P-g")


def _e0cubed_witness(i: int, j: int) -> Optional[str]:
    if j == 0:
        return _prod((("tau", 1), ("P", i), ("e0", 3)))
    if i >= j >= 1:
        return _prod((("tau", 1), ("P", i - j), ("d0", 2 * j), ("e0", 3)))
    if 1 <= i < j <= 3 * i:
        return _prod((("tau", 1), ("d0", 3 * i - j), ("e0", 2 * (j - i) + 3)))
    return None


def tau_region_e0cubed(i: int, j: int) -> Status:
    """Does τ𝐏ⁱ𝐠ʲe₀³ contain an element divisible by τ?  Witnessed inside the three regions."""
    d = WedgeSet("tau*e0^3", i, j)
    w = _e0cubed_witness(i, j)
    label = f"tau-divisible in {d}"
    if w is None:
        return Status(label, Verdict.UNKNOWN, d.degree(), "none")
    target = ("tau*e0^3", i, j)
    if not verify_witness(w, target):
        raise AssertionError(f"packaged witness {w} failed for {target}")
    return Status(label, Verdict.NONEMPTY, d.degree(), "witness", "tau-e0cubed-region", w, {"target": target})


def tau_divisibility_row(f_class: str, k: int, s: int, conjectures_on: bool = False) -> Status:
    """τ-divisibility on the wedge rows f = 4k (``"4k"``) and f = 4k+1 (``"4k+1"``), k >= 2."""
    if k < 2:
        raise DomainError("the rows are only described for k >= 2")
    if f_class == "4k":
        _need(0 <= s <= k, "s must satisfy 0 <= s <= k")
        d = TauE0G(s, k - s)
        companion = E0G(s, k - s)
        cite, empty_cite = "tau-row-4k", "e0g-alpha"
        conjectures = [E0G_CONJECTURE]
    elif f_class == "4k+1":
        _need(0 <= s <= k - 1, "s must satisfy 0 <= s <= k-1")
        d = TauDeltaE0G(s, k - s - 1)
        companion = DeltaE0G(s, k - s - 1) if s >= 1 else DeltaG(k - 1)
        cite, empty_cite = "tau-row-4k1", ("dh1e0g-alpha" if s >= 1 else "dh1g-none")
        conjectures = [E0G_CONJECTURE, DH1E0G_CONJECTURE]
    else:
        raise DomainError(f"unknown filtration class {f_class!r}")
    if s < alpha(k):
        return _status(d, Verdict.NOT_TAU_DIVISIBLE, "alpha", empty_cite, alpha_of=k, bound=s,
                       companion=str(companion))
    known = family_status(companion, conjectures_on=False)
    if known.verdict is Verdict.NONEMPTY:
        return _status(d, Verdict.TAU_DIVISIBLE, "citation", known.citation, companion=str(companion),
                       **{key: v for key, v in known.params.items() if key == "factors"})
    if conjectures_on:
        return _status(d, Verdict.TAU_DIVISIBLE, "conjecture", cite, companion=str(companion), conjectures=conjectures)
    return _status(d, Verdict.UNKNOWN, "none", companion=str(companion))


# --- Λ and the higher-weight table -------------------------------------------

@dataclass(frozen=True)
class LambdaRow:
    name: str
    degree: TriDegree

    @property
    def descriptor(self) -> WedgeSet:
        return WedgeSet(self.name, 0, 0)


def lambda_table() -> list[LambdaRow]:
    return [LambdaRow(name, degree_of(name)) for name in LAMBDA_NAMES]


@dataclass(frozen=True)
class HigherWeightEntry:
    wedge: str
    wedge_weight: int
    element: str
    weight: int


HIGHER_WEIGHT = (
    HigherWeightEntry("tau*Dh1*e0", 22, "Dh1*e0", 23),
    HigherWeightEntry("tau*e0^3", 29, "e0^3", 30),
    HigherWeightEntry("tau*Dh1*d0*e0", 30, "Dh1*d0.e0", 31),
    HigherWeightEntry("tau*e0^2*g", 31, "e0.e0*g", 32),
    HigherWeightEntry("tau*Dh1*e0^2", 32, "Dh1*e0.e0", 33),
)


def higher_weight_lookup(token: str) -> Optional[HigherWeightEntry]:
    try:
        canon = tokens.canonical(token)
    except ParseError:
        return None
    for row in HIGHER_WEIGHT:
        if row.wedge == canon:
            return row
    return None


# --- τ-free companions -----------------------------------------------------

def tau_form(lam: str) -> Optional[tuple[str, int, int]]:
    """``("e0g", t, k)`` for λ = τe₀ᵗgᵏ, ``("dh1", t, k)`` for λ = τΔh₁e₀ᵗgᵏ, else None."""
    f = dict(tokens.parse_product(lam))
    if f.pop("tau", 0) != 1:
        return None
    dh1 = f.pop("Dh1", 0)
    t, k = f.pop("e0", 0), f.pop("g", 0)
    if f or dh1 > 1:
        return None
    return ("dh1" if dh1 else "e0g", t, k)


def companion_descriptor(lam: str, i: int, j: int) -> Optional[FamilyDescriptor]:
    """The τ-free set behind 𝐏ⁱ𝐠ʲλ when i = 0 and λ is τ times an e₀/g or Δh₁e₀/g monomial."""
    form = tau_form(lam)
    if form is None or i != 0:
        return None
    kind, t, k = form
    if kind == "e0g":
        return E0G(t, k + j)
    return DeltaE0G(t, k + j) if t >= 1 else DeltaG(k + j)


def status_from_json(text: str) -> Status:
    return Status.from_dict(json.loads(text))

