"""Built-in example documents and the one-call verification harness.

Six constructions ship with the package, named

    enriques-k1, enriques-k2, enriques-k3-kondo2, enriques-k3-kondo7,
    enriques-k4, enriques-k5-symplectic.

Each pairs a JSON document (configuration + blow-ups + contraction plan)
with the externally known values it must reproduce; ``verify_example`` runs
the full pipeline and diffs every expectation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from . import config as config_mod
from .blowup import apply_blowups
from .config import Configuration, Document, independence_certificate, snc_certificate
from .errors import UnknownExampleError
from .fibration import euler_sum_check, i9_forces_i1_lint, two_section_incidence_check
from .smoothing import SingularSurfaceReport, build_report, validate_plan

EXAMPLE_NAMES = (
    "enriques-k1",
    "enriques-k2",
    "enriques-k3-kondo2",
    "enriques-k3-kondo7",
    "enriques-k4",
    "enriques-k5-symplectic",
)


@dataclass(frozen=True)
class CertificateSpec:
    """Which curves to certify and after how many blow-up steps."""

    stage: int
    candidates: tuple[str, ...]
    expected_rank: int


@dataclass(frozen=True)
class Expected:
    K2: int
    blowup_count: int
    chains: tuple[tuple[int, ...], ...]   # multiset, stored sorted
    indices: tuple[int, ...]              # in plan order
    gcd: int
    pi1: str
    moduli_dim: int
    p_g: int
    ample_positive: bool
    independence: Optional[CertificateSpec] = None
    snc_divisor: Optional[tuple[str, ...]] = None
    snc_stage: int = 0


def _chain_multiset(chains):
    return tuple(sorted(tuple(c) for c in chains))


_G = tuple(f"G{i}" for i in range(1, 10))

EXPECTED: dict[str, Expected] = {
    "enriques-k1": Expected(
        K2=1, blowup_count=5,
        chains=_chain_multiset([(4, 2, 3, 2), (4, 2, 3, 2), (4,), (4,)]),
        indices=(3, 3, 2, 2), gcd=1, pi1="criterion-satisfied",
        moduli_dim=8, p_g=0, ample_positive=True,
        independence=CertificateSpec(
            stage=0,
            candidates=("S1", "S2", "G1", "G2", "G3", "G5", "G6", "G7", "G8", "G9"),
            expected_rank=10),
        snc_divisor=("S1", "S2", "G1", "G2", "G3", "G5", "G6", "G7", "G8", "G9"),
        snc_stage=0,
    ),
    "enriques-k2": Expected(
        K2=2, blowup_count=7,
        chains=_chain_multiset([(6, 2, 2), (7, 3, 2, 2, 2, 2), (3, 3)]),
        indices=(4, 6, 2), gcd=2, pi1="inconclusive",
        moduli_dim=6, p_g=0, ample_positive=True,
        independence=CertificateSpec(
            stage=1,
            candidates=("S1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "F", "E"),
            expected_rank=10),
        snc_divisor=("S1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "F", "E"),
        snc_stage=1,
    ),
    "enriques-k3-kondo2": Expected(
        K2=3, blowup_count=12,
        chains=_chain_multiset([(5, 2), (9, 2, 2, 2, 2, 2), (2, 9, 2, 2, 2, 2, 3)]),
        indices=(3, 7, 13), gcd=1, pi1="criterion-satisfied",
        moduli_dim=4, p_g=0, ample_positive=True,
        independence=CertificateSpec(
            stage=1,
            candidates=("S1", "S2", "G2", "G3", "G4", "G5", "G6", "G9", "F", "E"),
            expected_rank=10),
        snc_divisor=("S1", "S2", "G2", "G3", "G4", "G5", "G6", "G9", "F", "E"),
        snc_stage=1,
    ),
    "enriques-k3-kondo7": Expected(
        K2=3, blowup_count=10,
        chains=_chain_multiset([(5, 2), (9, 2, 2, 2, 2, 2), (8, 2, 2, 2, 2)]),
        indices=(3, 7, 6), gcd=1, pi1="criterion-satisfied",
        moduli_dim=4, p_g=0, ample_positive=True,
        independence=CertificateSpec(
            stage=5,
            candidates=("S1", "S2", "G1", "G2", "G3", "G4", "G5", "G7", "F", "E"),
            expected_rank=10),
        snc_divisor=("S1", "S2") + _G + ("F", "E"),
        snc_stage=5,
    ),
    "enriques-k4": Expected(
        K2=4, blowup_count=15,
        chains=_chain_multiset([(2, 2, 9, 2, 2, 2, 2, 4),
                                (2, 2, 7, 6, 2, 3, 2, 2, 2, 2, 4)]),
        indices=(19, 73), gcd=1, pi1="criterion-satisfied",
        moduli_dim=2, p_g=0, ample_positive=True,
        independence=CertificateSpec(
            stage=1,
            candidates=("S1", "S2", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "F", "E"),
            expected_rank=11),
        snc_divisor=("S1", "S2", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "F", "E"),
        snc_stage=1,
    ),
    "enriques-k5-symplectic": Expected(
        K2=5, blowup_count=12,
        chains=_chain_multiset([(6, 2, 2),
                                (5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2)]),
        indices=(4, 151), gcd=1, pi1="criterion-satisfied",
        moduli_dim=0, p_g=0, ample_positive=True,
        independence=None,
        snc_divisor=None,
    ),
}


@dataclass(frozen=True)
class NamedExample:
    name: str
    document: dict
    expected: Expected


def builtin(name: str) -> NamedExample:
    """Load a shipped example by name."""
    if name not in EXAMPLE_NAMES:
        raise UnknownExampleError(
            f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}")
    data = resources.files("qgsurf").joinpath(f"corpus_data/{name}.json").read_text()
    return NamedExample(name=name, document=json.loads(data), expected=EXPECTED[name])


@dataclass
class ExampleResult:
    name: str
    passed: bool
    failures: list[str]
    report: Optional[SingularSurfaceReport]
    document: Optional[Document] = None
    final: Optional[Configuration] = None
    independence_rank: Optional[int] = None
    euler_deficit: Optional[int] = None


def extract_chains(config: Configuration, members: set[str]) -> list[tuple[str, ...]]:
    """Decompose the given curves into linear chains using only the pairing.

    Each connected component of the induced intersection subgraph must be a
    simple path (an isolated curve counts); components are returned ordered
    from the lexicographically smaller end.
    """
    adj = {
        m: sorted(
            other for other in members
            if other != m and config.pairing_of(m, other) > 0
        )
        for m in members
    }
    for m, nbrs in adj.items():
        if len(nbrs) > 2:
            raise ValueError(f"{m} has {len(nbrs)} neighbors; not a chain")
        for other in nbrs:
            if config.pairing_of(m, other) != 1:
                raise ValueError(f"{m}.{other} pairing exceeds 1")
    chains = []
    unseen = set(members)
    while unseen:
        ends = sorted(m for m in unseen if len([x for x in adj[m] if x in unseen]) <= 1)
        if not ends:
            raise ValueError("cycle detected among chain curves")
        start = ends[0]
        path = [start]
        unseen.discard(start)
        while True:
            nxt = [x for x in adj[path[-1]] if x in unseen]
            if not nxt:
                break
            path.append(nxt[0])
            unseen.discard(nxt[0])
        if len(path) > 1 and path[-1] < path[0]:
            path.reverse()
        chains.append(tuple(path))
    return chains


def verify_example(name: str) -> ExampleResult:
    """Full pipeline for one example, diffed against its expectations."""
    example = builtin(name)
    expected = example.expected
    failures: list[str] = []

    doc = config_mod.parse(example.document)
    base = doc.configuration

    # fibration lints on the base configuration
    euler = None
    if base.fibration is not None:
        euler = euler_sum_check(base.fibration, base.surface.chi)
        if not euler.verdict:
            failures.append(f"euler sum {euler.total} != {euler.target}")
        failures.extend(str(v) for v in two_section_incidence_check(base))
        advisories = i9_forces_i1_lint(base.fibration, base.surface.kind)
        failures.extend(advisories)

    # staged certificates
    rank_seen = None
    if expected.independence is not None:
        spec = expected.independence
        staged = apply_blowups(base, doc.blowups[: spec.stage])
        cert = independence_certificate(staged, spec.candidates)
        rank_seen = cert.rank
        if cert.rank != spec.expected_rank or not cert.verdict:
            failures.append(
                f"independence rank {cert.rank} (verdict {cert.verdict}), "
                f"expected {spec.expected_rank}")
    if expected.snc_divisor is not None:
        staged = apply_blowups(base, doc.blowups[: expected.snc_stage])
        snc = snc_certificate(staged, expected.snc_divisor)
        failures.extend(f"snc: {v}" for v in snc)

    final = apply_blowups(base, doc.blowups)
    failures.extend(f"final config: {v}" for v in config_mod.validate(final))
    if final.blowup_count != expected.blowup_count:
        failures.append(f"blowup count {final.blowup_count} != {expected.blowup_count}")

    report = None
    if doc.plan is not None:
        plan_violations = validate_plan(final, doc.plan)
        failures.extend(f"plan: {v}" for v in plan_violations)
        if not plan_violations:
            report = build_report(final, doc.plan)
            if report.K2_X != Fraction(expected.K2):
                failures.append(f"K2 {report.K2_X} != {expected.K2}")
            if _chain_multiset(report.chains) != expected.chains:
                failures.append(f"chains {report.chains} != expected")
            if report.indices != expected.indices:
                failures.append(f"indices {report.indices} != {expected.indices}")
            if report.gcd_indices != expected.gcd:
                failures.append(f"gcd {report.gcd_indices} != {expected.gcd}")
            if report.pi1_verdict != expected.pi1:
                failures.append(f"pi1 {report.pi1_verdict} != {expected.pi1}")
            if report.moduli_dim != expected.moduli_dim:
                failures.append(f"moduli {report.moduli_dim} != {expected.moduli_dim}")
            if report.p_g != expected.p_g:
                failures.append(f"p_g {report.p_g} != {expected.p_g}")
            if report.ample.verdict != expected.ample_positive:
                failures.append(f"ampleness verdict {report.ample.verdict}")
            # each chain's ordering must be recoverable from the pairing alone
            for ch in doc.plan.chains:
                recovered = extract_chains(final, set(ch))
                if len(recovered) != 1 or recovered[0] not in (tuple(ch), tuple(reversed(ch))):
                    failures.append(
                        f"chain {list(ch)} is not recovered from the final pairing")

    return ExampleResult(
        name=name,
        passed=not failures,
        failures=failures,
        report=report,
        document=doc,
        final=final,
        independence_rank=rank_seen,
        euler_deficit=None if euler is None else euler.deficit,
    )


def verify_all() -> list[ExampleResult]:
    """Verify every shipped example; results in canonical name order."""
    return [verify_example(name) for name in EXAMPLE_NAMES]


def results_table(results) -> str:
    """Fixed-width summary, one row per example."""
    header = f"{'example':24} {'K2':>3} {'indices':16} {'gcd':>3} {'pi1':22} {'ample':6} {'status':6}"
    lines = [header]
    for r in results:
        if r.report is not None:
            k2 = str(r.report.K2_X)
            indices = ",".join(str(i) for i in r.report.indices)
            gcd_s = str(r.report.gcd_indices)
            pi1 = r.report.pi1_verdict
            ample = "pos" if r.report.ample.verdict else "NEG"
        else:
            k2 = indices = gcd_s = pi1 = ample = "-"
        status = "pass" if r.passed else "FAIL"
        lines.append(f"{r.name:24} {k2:>3} {indices:16} {gcd_s:>3} {pi1:22} {ample:6} {status:6}")
    return "\n".join(lines)
