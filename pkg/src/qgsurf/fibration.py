"""Elliptic-fibration bookkeeping.

Kodaira fiber tags, Euler-number accounting against 12*chi, incidence of
2-sections with declared fibers, and the lint that an I9 fiber on a rational
or Enriques elliptic surface comes with three I1 fibers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import SchemaError, UnknownCurveError, UnknownTagError

_TAG_RE = re.compile(r"^(2)?(I(\d+)(\*)?|II\*?|III\*?|IV\*?)$")


def parse_tag(tag: str) -> tuple[str, int]:
    """Split a fiber tag into (reduced Kodaira type, multiplicity).

    A leading "2" marks a multiple fiber, e.g. "2I1"; the reduced type of a
    multiple fiber must be I_n.
    """
    if not isinstance(tag, str):
        raise UnknownTagError(f"fiber type must be a string, got {tag!r}")
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise UnknownTagError(f"unknown Kodaira tag {tag!r}")
    mult = 2 if m.group(1) else 1
    reduced = m.group(2)
    if mult == 2 and not (reduced.startswith("I") and not reduced.startswith(("II", "III", "IV")) and "*" not in reduced):
        raise UnknownTagError(f"multiple fiber {tag!r} must have reduced type I_n")
    return reduced, mult


def euler_number(tag: str) -> int:
    """Topological Euler number of a singular fiber of the given type.

    I_n has Euler number n; the additive types carry the standard values
    (I_n* -> n+6, II -> 2, III -> 3, IV -> 4, IV* -> 8, III* -> 9, II* -> 10).
    Multiplicity does not change the Euler number.
    """
    reduced, _ = parse_tag(tag)
    if reduced.startswith("I") and not reduced.startswith(("II", "III", "IV")):
        n = int(reduced[1:].rstrip("*"))
        return n + 6 if reduced.endswith("*") else n
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[reduced]


def component_count(tag: str) -> int:
    """Number of irreducible components of a fiber of the given type."""
    reduced, _ = parse_tag(tag)
    if reduced.startswith("I") and not reduced.startswith(("II", "III", "IV")):
        n = int(reduced[1:].rstrip("*"))
        return n + 5 if reduced.endswith("*") else max(n, 1)
    return {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}[reduced]


@dataclass(frozen=True)
class FiberSpec:
    type: str                      # reduced Kodaira tag, e.g. "I9"
    multiplicity: int              # 1 or 2
    components: tuple[str, ...]    # tracked component curves (may be partial)

    @property
    def tag(self) -> str:
        return ("2" if self.multiplicity == 2 else "") + self.type

    def is_fully_tracked(self) -> bool:
        return len(self.components) == component_count(self.type)


@dataclass(frozen=True)
class FibrationData:
    fibers: tuple[FiberSpec, ...]
    two_sections: tuple[str, ...] = ()
    multiple_fiber_disjoint_from: tuple[str, ...] = ()
    generic_fiber_class_known: bool = False

    def to_json(self) -> dict:
        return {
            "fibers": [
                {"type": f.tag, "multiplicity": f.multiplicity,
                 "components": list(f.components)}
                for f in self.fibers
            ],
            "two_sections": list(self.two_sections),
            "multiple_fiber_disjoint_from": list(self.multiple_fiber_disjoint_from),
            "generic_fiber_class_known": self.generic_fiber_class_known,
        }

    def validate(self, config) -> list:
        from .config import Violation

        out = []
        seen: set[str] = set()
        for f in self.fibers:
            if f.multiplicity == 2 and not re.fullmatch(r"I\d+", f.type):
                out.append(Violation("fibration", f.tag,
                                     "multiple fiber must have reduced type I_n"))
            overlap = seen.intersection(f.components)
            if overlap:
                out.append(Violation("fibration", f.tag,
                                     f"components shared across fibers: {sorted(overlap)}"))
            seen.update(f.components)
            if len(f.components) > component_count(f.type):
                out.append(Violation("fibration", f.tag,
                                     f"{len(f.components)} components exceed the type's {component_count(f.type)}"))
        if config.surface.kind == "enriques":
            doubles = sum(1 for f in self.fibers if f.multiplicity == 2)
            if doubles > 2:
                out.append(Violation("fibration", "multiple-fibers",
                                     f"{doubles} multiplicity-2 fibers declared; at most two exist"))
        return out


@dataclass(frozen=True)
class EulerCheck:
    total: int
    target: int
    verdict: bool
    deficit: int
    note: str = ""


_FIBRATION_KEYS = {"fibers", "two_sections", "multiple_fiber_disjoint_from",
                   "generic_fiber_class_known"}
_FIBER_KEYS = {"type", "multiplicity", "components"}


def parse_fibration(obj, known_curves: set[str]) -> FibrationData:
    if not isinstance(obj, dict):
        raise SchemaError("fibration: expected an object")
    extra = set(obj) - _FIBRATION_KEYS
    if extra:
        raise SchemaError(f"fibration: unknown field(s) {sorted(extra)}")
    fibers = []
    for raw in obj.get("fibers", []):
        if not isinstance(raw, dict):
            raise SchemaError("fibration.fibers[]: expected an object")
        extra = set(raw) - _FIBER_KEYS
        if extra:
            raise SchemaError(f"fibration.fibers[]: unknown field(s) {sorted(extra)}")
        if "type" not in raw:
            raise SchemaError("fibration.fibers[]: missing 'type'")
        reduced, mult_from_tag = parse_tag(raw["type"])
        mult = raw.get("multiplicity", mult_from_tag)
        if mult not in (1, 2):
            raise SchemaError("fibration.fibers[].multiplicity must be 1 or 2")
        if mult_from_tag == 2 and mult != 2:
            raise SchemaError(f"fiber tagged {raw['type']!r} but multiplicity {mult}")
        components = raw.get("components", [])
        if not isinstance(components, list):
            raise SchemaError("fibration.fibers[].components: expected a list")
        for c in components:
            if c not in known_curves:
                raise UnknownCurveError(f"fiber component {c!r} is not a declared curve")
        fibers.append(FiberSpec(type=reduced, multiplicity=mult,
                                components=tuple(components)))
    two_sections = obj.get("two_sections", [])
    for c in two_sections:
        if c not in known_curves:
            raise UnknownCurveError(f"two-section {c!r} is not a declared curve")
    disjoint = obj.get("multiple_fiber_disjoint_from", [])
    for c in disjoint:
        if c not in known_curves:
            raise UnknownCurveError(f"{c!r} in multiple_fiber_disjoint_from is not a declared curve")
    return FibrationData(
        fibers=tuple(fibers),
        two_sections=tuple(two_sections),
        multiple_fiber_disjoint_from=tuple(disjoint),
        generic_fiber_class_known=bool(obj.get("generic_fiber_class_known", False)),
    )


def euler_sum_check(fibration: FibrationData, chi: int) -> EulerCheck:
    """Compare declared singular-fiber Euler numbers against 12*chi.

    Verdict is true exactly on deficit 0.  A positive deficit is legal
    (fibers may be left undeclared) and flagged; a negative one means the
    declaration overshoots the topology.
    """
    total = sum(euler_number(f.tag) for f in fibration.fibers)
    target = 12 * chi
    deficit = target - total
    note = ""
    if deficit > 0:
        note = "unlisted fibers"
    elif deficit < 0:
        note = "declared fibers exceed 12*chi"
    return EulerCheck(total=total, target=target, verdict=(deficit == 0),
                      deficit=deficit, note=note)


def two_section_incidence_check(config) -> list:
    """Check 2-section degrees against every fully tracked fiber.

    A 2-section meets a non-multiple fiber in total degree 2 and the reduced
    curve of a multiplicity-2 fiber in total degree 1.  Fibers with partial
    component lists are skipped (the data cannot decide).
    """
    from .config import Violation

    out = []
    fib = config.fibration
    if fib is None:
        return out
    for s in fib.two_sections:
        if not config.has_curve(s):
            raise UnknownCurveError(s)
        for f in fib.fibers:
            if not f.is_fully_tracked() or not f.components:
                continue
            total = sum(config.pairing_of(s, c) for c in f.components)
            expected = 1 if f.multiplicity == 2 else 2
            if total != expected:
                out.append(Violation(
                    "two-section", f"{s}.{f.tag}",
                    f"total intersection {total}, expected {expected}"))
    return out


def i9_forces_i1_lint(fibration: Optional[FibrationData], surface_kind: str,
                      chi: int | None = None) -> list[str]:
    """Advisory: an I9 (or 2I9) fiber should come with three I1-type fibers.

    Applies on Enriques surfaces and on E(1); an under-declared configuration
    is flagged, not failed.
    """
    if fibration is None:
        return []
    rational_elliptic = surface_kind == "e" and chi == 1
    if surface_kind != "enriques" and not rational_elliptic:
        return []
    has_i9 = any(f.type == "I9" for f in fibration.fibers)
    if not has_i9:
        return []
    n_i1 = sum(1 for f in fibration.fibers if f.type == "I1")
    if n_i1 < 3:
        return [f"an I9 fiber implies three I1-type fibers; only {n_i1} declared"]
    return []
