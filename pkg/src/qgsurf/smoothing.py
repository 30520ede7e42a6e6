"""Contraction plans and the invariants of the contracted surface.

Contracting the plan's linear chains produces a normal surface X with one
cyclic quotient point per chain; a one-parameter smoothing with Q-Cartier
canonical class has general fiber X_t with

    K^2(X_t) = K^2(ambient) + sum of per-chain contributions,
    chi(O)   = chi(O) of the ambient  (both conserved under blow-up),
    p_g      = chi - 1 + q.

The ampleness certificate evaluates (f* K_X).C = K.C + sum_p D_p.C for every
non-contracted curve with the exact discrepancy divisors D_p; positivity on
the tracked model is necessary but deliberately partial (curves outside the
model need geometric arguments the data cannot see).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .config import Configuration, Violation
from .errors import (
    CurveContractedError,
    DomainError,
    PlanInvalidError,
    SchemaError,
    UnknownCurveError,
)
from .wahl import discrepancies, k2_contribution, recognize_class_T

PI1_SATISFIED = "criterion-satisfied"
PI1_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ContractionPlan:
    chains: tuple[tuple[str, ...], ...]
    declared_q: int = 0
    assumptions: tuple[str, ...] = ()


_PLAN_KEYS = {"chains", "q", "assumptions"}


def parse_plan(raw) -> ContractionPlan:
    if not isinstance(raw, dict):
        raise SchemaError("plan: expected an object")
    extra = set(raw) - _PLAN_KEYS
    if extra:
        raise SchemaError(f"plan: unknown field(s) {sorted(extra)}")
    chains_raw = raw.get("chains", [])
    if not isinstance(chains_raw, list):
        raise SchemaError("plan.chains: expected an array of name arrays")
    chains = []
    for ch in chains_raw:
        if not isinstance(ch, list) or not ch or any(not isinstance(x, str) for x in ch):
            raise SchemaError("plan.chains[]: expected a nonempty array of curve names")
        chains.append(tuple(ch))
    q = raw.get("q", 0)
    if not isinstance(q, int) or isinstance(q, bool):
        raise SchemaError("plan.q: expected an integer")
    assumptions = raw.get("assumptions", [])
    if not isinstance(assumptions, list) or any(not isinstance(a, str) for a in assumptions):
        raise SchemaError("plan.assumptions: expected an array of strings")
    return ContractionPlan(chains=tuple(chains), declared_q=q,
                           assumptions=tuple(assumptions))


def chain_entries(config: Configuration, chain: Sequence[str]) -> tuple[int, ...]:
    """Negated self-intersections of the named chain, in order."""
    return tuple(-config.curve(name).self_int for name in chain)


def validate_plan(config: Configuration, plan: ContractionPlan) -> list[Violation]:
    """All violations of the contraction plan against the configuration.

    Checks: names resolve, chains are pairwise disjoint curve sets, every
    chain is a genuine linear chain of rational curves with entries <= -2
    (consecutive pairing 1, nonconsecutive 0), and each chain is accepted by
    the smoothability recognizer.
    """
    out: list[Violation] = []
    seen: dict[str, int] = {}
    for ci, chain in enumerate(plan.chains):
        label = f"chain{ci}"
        ok_names = True
        for name in chain:
            if not config.has_curve(name):
                out.append(Violation("plan-name", label, f"unknown curve {name!r}"))
                ok_names = False
                continue
            if name in seen:
                out.append(Violation("plan-overlap", label,
                                     f"{name} already in chain{seen[name]}"))
            seen[name] = ci
        if not ok_names:
            continue
        for name in chain:
            curve = config.curve(name)
            if curve.genus != 0:
                out.append(Violation("plan-genus", label,
                                     f"{name} has genus {curve.genus}; chains are rational"))
            if curve.self_int > -2:
                out.append(Violation("plan-self", label,
                                     f"{name} has self-intersection {curve.self_int} > -2"))
        for i in range(len(chain)):
            for j in range(i + 1, len(chain)):
                want = 1 if j == i + 1 else 0
                got = config.pairing_of(chain[i], chain[j])
                if got != want:
                    out.append(Violation(
                        "plan-shape", label,
                        f"{chain[i]}.{chain[j]} = {got}, expected {want}"))
        if not any(v.subject == label for v in out):
            entries = chain_entries(config, chain)
            if recognize_class_T(entries) is None:
                out.append(Violation("plan-smoothability", label,
                                     f"chain {list(entries)} is not smoothable"))
    return out


def contract_invariants(config: Configuration, plan: ContractionPlan):
    """(K^2 of X_t, chi, p_g); requires a violation-free plan."""
    violations = validate_plan(config, plan)
    if violations:
        raise PlanInvalidError(violations)
    k2 = Fraction(config.ambient_K2)
    for chain in plan.chains:
        k2 += k2_contribution(chain_entries(config, chain))
    chi = config.surface.chi
    p_g = chi - 1 + plan.declared_q
    return k2, chi, p_g


def _contracted_set(plan: ContractionPlan) -> set[str]:
    return {name for chain in plan.chains for name in chain}


def pullback_degree(config: Configuration, plan: ContractionPlan, curve: str) -> Fraction:
    """Exact degree of the pulled-back canonical class on a model curve.

    K.C plus, for every chain, the pairing of C with the chain weighted by
    the negated discrepancies.
    """
    if not config.has_curve(curve):
        raise UnknownCurveError(curve)
    if curve in _contracted_set(plan):
        raise CurveContractedError(curve)
    value = Fraction(config.curve(curve).K_deg)
    value += _dp_term(config, plan, curve)
    return value


def _dp_term(config: Configuration, plan: ContractionPlan, curve: str) -> Fraction:
    total = Fraction(0)
    for chain in plan.chains:
        disc = discrepancies(chain_entries(config, chain))
        for name, a in zip(chain, disc):
            total += -a * config.pairing_of(name, curve)
    return total


@dataclass(frozen=True)
class AmpleEntry:
    curve: str
    K_deg: int
    dp_term: Fraction
    value: Fraction


@dataclass(frozen=True)
class AmplenessCertificate:
    """Positivity of the pulled-back canonical class on every tracked,
    non-contracted curve.  PARTIAL by construction: curves outside the
    tracked model are not (and cannot be) covered by the data."""

    entries: tuple[AmpleEntry, ...]
    verdict: bool
    scope: str = "PARTIAL: tracked model curves only"


def ampleness_certificate(config: Configuration, plan: ContractionPlan) -> AmplenessCertificate:
    violations = validate_plan(config, plan)
    if violations:
        raise PlanInvalidError(violations)
    contracted = _contracted_set(plan)
    entries = []
    for c in config.curves:
        if c.name in contracted:
            continue
        dp = _dp_term(config, plan, c.name)
        entries.append(AmpleEntry(curve=c.name, K_deg=c.K_deg, dp_term=dp,
                                  value=Fraction(c.K_deg) + dp))
    verdict = all(e.value > 0 for e in entries)
    return AmplenessCertificate(entries=tuple(entries), verdict=verdict)


@dataclass(frozen=True)
class Pi1Criterion:
    indices: tuple[int, ...]
    gcd: int
    verdict: str


def pi1_criterion(config: Configuration, plan: ContractionPlan) -> Pi1Criterion:
    """Index-coprimality criterion for the fundamental group.

    On an Enriques ambient, coprime singularity indices (gcd 1 over the
    multiset) certify the criterion; anything else is inconclusive and left
    to non-computational arguments.
    """
    violations = validate_plan(config, plan)
    if violations:
        raise PlanInvalidError(violations)
    indices = tuple(
        recognize_class_T(chain_entries(config, chain)).index
        for chain in plan.chains
    )
    g = 0
    for i in indices:
        g = gcd(g, i)
    satisfied = g == 1 and config.surface.kind == "enriques"
    return Pi1Criterion(indices=indices, gcd=g,
                        verdict=PI1_SATISFIED if satisfied else PI1_INCONCLUSIVE)


def moduli_dimension(chi: int, K2: int) -> int:
    """Expected dimension of the smoothing's deformation space: 10*chi - 2*K^2."""
    return 10 * chi - 2 * K2


@dataclass(frozen=True)
class TopologyReport:
    K2: int
    c2: int
    b2plus: int
    b2minus: int
    cover_chi: Optional[int] = None
    cover_c1sq: Optional[int] = None
    cover_c2: Optional[int] = None
    cover_b2plus: Optional[int] = None
    cover_b2minus: Optional[int] = None
    cover_sigma: Optional[int] = None
    sigma_divisible_by_16: Optional[bool] = None
    homeomorphism_target: Optional[str] = None


def topology_report(K2: int, chi: int, pi1_is_Z2: bool) -> TopologyReport:
    """Topological invariants of the smoothing (chi = 1 surfaces only).

    The surface itself has c2 = 12 - K^2, b2+ = 1, b2- = 9 - K^2.  When the
    fundamental group is Z/2, the universal double cover has chi 2,
    c1^2 = 2K^2, c2 = 24 - 2K^2, b2+ = 3, b2- = 19 - 2K^2 and signature
    2K^2 - 16; |sigma| not divisible by 16 forces an odd intersection form,
    hence the homeomorphism type 3CP2 # (19-2k) CP2bar.
    """
    if chi != 1:
        raise DomainError(f"topology report requires chi = 1, got {chi}")
    base = dict(K2=K2, c2=12 - K2, b2plus=1, b2minus=9 - K2)
    if not pi1_is_Z2:
        return TopologyReport(**base)
    sigma = 2 * K2 - 16
    return TopologyReport(
        **base,
        cover_chi=2,
        cover_c1sq=2 * K2,
        cover_c2=24 - 2 * K2,
        cover_b2plus=3,
        cover_b2minus=19 - 2 * K2,
        cover_sigma=sigma,
        sigma_divisible_by_16=(abs(sigma) % 16 == 0),
        homeomorphism_target=f"3CP2#{19 - 2 * K2}CP2bar",
    )


@dataclass(frozen=True)
class SingularSurfaceReport:
    """Everything the pipeline knows about X and its smoothing X_t."""

    K2_X: Fraction
    chi: int
    p_g: int
    q: int
    chains: tuple[tuple[int, ...], ...]
    indices: tuple[int, ...]
    gcd_indices: int
    pi1_verdict: str
    ample: AmplenessCertificate
    moduli_dim: Optional[int]
    general_type: bool
    topology: Optional[TopologyReport]
    assumptions: tuple[str, ...] = ()
    blowup_count: int = 0

    def to_json(self) -> dict:
        return {
            "K2_X": str(self.K2_X),
            "chi": self.chi,
            "p_g": self.p_g,
            "q": self.q,
            "blowups": self.blowup_count,
            "chains": [list(c) for c in self.chains],
            "indices": list(self.indices),
            "gcd_indices": self.gcd_indices,
            "pi1": self.pi1_verdict,
            "ample": {
                "verdict": self.ample.verdict,
                "scope": self.ample.scope,
                "entries": [
                    {"curve": e.curve, "Kdeg": e.K_deg, "dp": str(e.dp_term),
                     "value": str(e.value)}
                    for e in self.ample.entries
                ],
            },
            "moduli_dim": self.moduli_dim,
            "general_type": self.general_type,
            "topology": None if self.topology is None else {
                "c2": self.topology.c2,
                "b2plus": self.topology.b2plus,
                "b2minus": self.topology.b2minus,
                "cover_c2": self.topology.cover_c2,
                "cover_b2plus": self.topology.cover_b2plus,
                "cover_b2minus": self.topology.cover_b2minus,
                "cover_sigma": self.topology.cover_sigma,
                "sigma_divisible_by_16": self.topology.sigma_divisible_by_16,
                "homeomorphism_target": self.topology.homeomorphism_target,
            },
            "assumptions": list(self.assumptions),
        }

    def to_text(self) -> str:
        lines = [
            f"K2_X={self.K2_X}",
            f"chi={self.chi}",
            f"p_g={self.p_g}",
            f"q={self.q}",
            f"blowups={self.blowup_count}",
            "chains=" + ";".join(",".join(str(b) for b in c) for c in self.chains),
            "indices=" + ",".join(str(i) for i in self.indices),
            f"gcd_indices={self.gcd_indices}",
            f"pi1={self.pi1_verdict}",
            f"ample={'positive' if self.ample.verdict else 'not-positive'} [{self.ample.scope}]",
        ]
        for e in self.ample.entries:
            lines.append(f"ample.{e.curve}={e.value} dp={e.dp_term}")
        lines.append(f"moduli_dim={self.moduli_dim}")
        lines.append(f"general_type={'yes' if self.general_type else 'no'}")
        if self.topology is not None:
            t = self.topology
            lines.append(f"topology.c2={t.c2} b2plus={t.b2plus} b2minus={t.b2minus}")
            if t.cover_sigma is not None:
                lines.append(
                    f"topology.cover c2={t.cover_c2} b2plus={t.cover_b2plus} "
                    f"b2minus={t.cover_b2minus} sigma={t.cover_sigma} "
                    f"sigma_div16={'yes' if t.sigma_divisible_by_16 else 'no'} "
                    f"target={t.homeomorphism_target}")
        for a in self.assumptions:
            lines.append(f"assumption={a}")
        return "\n".join(lines)


def build_report(config: Configuration, plan: ContractionPlan) -> SingularSurfaceReport:
    """Run every invariant computation for a validated plan."""
    k2, chi, p_g = contract_invariants(config, plan)
    crit = pi1_criterion(config, plan)
    ample = ampleness_certificate(config, plan)
    chains = tuple(chain_entries(config, ch) for ch in plan.chains)
    moduli = None
    if k2.denominator == 1:
        moduli = moduli_dimension(chi, int(k2))
    topology = None
    if chi == 1 and k2.denominator == 1:
        topology = topology_report(int(k2), chi,
                                   pi1_is_Z2=(crit.verdict == PI1_SATISFIED))
    return SingularSurfaceReport(
        K2_X=k2,
        chi=chi,
        p_g=p_g,
        q=plan.declared_q,
        chains=chains,
        indices=crit.indices,
        gcd_indices=crit.gcd,
        pi1_verdict=crit.verdict,
        ample=ample,
        moduli_dim=moduli,
        general_type=bool(k2 > 0 and ample.verdict),
        topology=topology,
        assumptions=plan.assumptions,
        blowup_count=config.blowup_count,
    )
