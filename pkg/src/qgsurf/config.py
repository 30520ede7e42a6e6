"""Curve-configuration data model: ingestion, validation, certificates.

A configuration is a finite set of named curves on an ambient surface with
their exact intersection pairing, canonical degrees, arithmetic genera,
declared intersection points, and optional elliptic-fibration annotations.
All data are integers; derived linear algebra is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import SchemaError, UnknownCurveError, ValidationError, MissingPointDataError
from .fibration import FibrationData, parse_fibration
from .ratlin import RatMatrix, rank

SURFACE_KINDS = ("enriques", "k3", "e", "other")


@dataclass(frozen=True)
class SurfaceInvariants:
    kind: str
    chi: int
    K2: int
    K_num_trivial: bool
    n: Optional[int] = None  # declared for kind == "e"


@dataclass(frozen=True)
class CurveClass:
    name: str
    self_int: int
    K_deg: int
    genus: int
    tags: frozenset[str] = field(default_factory=frozenset)

    def adjunction_holds(self) -> bool:
        return 2 * self.genus - 2 == self.self_int + self.K_deg


@dataclass(frozen=True)
class PointSpec:
    name: str
    branches: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    detail: str

    def __str__(self):
        return f"{self.kind}[{self.subject}]: {self.detail}"


@dataclass(frozen=True)
class IndependenceCertificate:
    candidates: tuple[str, ...]
    test_matrix: RatMatrix
    rank: int
    verdict: bool


@dataclass(frozen=True)
class Configuration:
    surface: SurfaceInvariants
    curves: tuple[CurveClass, ...]
    pairing: tuple[tuple[int, ...], ...]  # symmetric, diagonal = self_int
    points: tuple[PointSpec, ...] = ()
    fibration: Optional[FibrationData] = None
    blowup_count: int = 0

    def index_of(self, name: str) -> int:
        try:
            table = self._index
        except AttributeError:
            table = {c.name: i for i, c in enumerate(self.curves)}
            object.__setattr__(self, "_index", table)
        try:
            return table[name]
        except KeyError:
            raise UnknownCurveError(name) from None

    def curve(self, name: str) -> CurveClass:
        return self.curves[self.index_of(name)]

    def has_curve(self, name: str) -> bool:
        return any(c.name == name for c in self.curves)

    def pairing_of(self, a: str, b: str) -> int:
        return self.pairing[self.index_of(a)][self.index_of(b)]

    def pairing_matrix(self) -> RatMatrix:
        return RatMatrix(self.pairing)

    @property
    def ambient_K2(self) -> int:
        return self.surface.K2 - self.blowup_count

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.curves)


@dataclass(frozen=True)
class Document:
    """A parsed input file: configuration plus its blow-up list and plan."""

    configuration: Configuration
    blowups: tuple = ()  # tuple[BlowupStep]; typed loosely to avoid a cycle
    plan: Optional[object] = None  # ContractionPlan
    name: Optional[str] = None
    notes: tuple[str, ...] = ()


_SURFACE_KEYS = {"kind", "n", "chi", "K2", "K_num_trivial"}
_CURVE_KEYS = {"name", "self", "genus", "Kdeg", "tags"}
_POINT_KEYS = {"name", "branches"}
_TOP_KEYS = {"surface", "curves", "pairing", "points", "fibration", "blowups", "plan", "name", "notes"}


def _need(mapping: dict, key: str, where: str):
    if key not in mapping:
        raise SchemaError(f"{where}: missing required field '{key}'")
    return mapping[key]


def _no_extras(mapping: dict, allowed: set, where: str):
    extra = set(mapping) - allowed
    if extra:
        raise SchemaError(f"{where}: unknown field(s) {sorted(extra)}")


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_surface(obj) -> SurfaceInvariants:
    if not isinstance(obj, dict):
        raise SchemaError("surface: expected an object")
    _no_extras(obj, _SURFACE_KEYS, "surface")
    kind = _need(obj, "kind", "surface")
    if kind not in SURFACE_KINDS:
        raise SchemaError(f"surface.kind: unknown kind {kind!r}")
    n = obj.get("n")
    if kind == "e":
        if n is None:
            raise SchemaError("surface: kind 'e' requires 'n'")
        n = _as_int(n, "surface.n")
    elif n is not None:
        raise SchemaError("surface.n only applies to kind 'e'")
    chi = _as_int(_need(obj, "chi", "surface"), "surface.chi")
    k2 = _as_int(_need(obj, "K2", "surface"), "surface.K2")
    knt = _need(obj, "K_num_trivial", "surface")
    if not isinstance(knt, bool):
        raise SchemaError("surface.K_num_trivial: expected a boolean")
    return SurfaceInvariants(kind=kind, chi=chi, K2=k2, K_num_trivial=knt, n=n)


def _parse_curve(obj) -> CurveClass:
    if not isinstance(obj, dict):
        raise SchemaError("curves[]: expected an object")
    _no_extras(obj, _CURVE_KEYS, "curves[]")
    name = _need(obj, "name", "curves[]")
    if not isinstance(name, str) or not name:
        raise SchemaError("curves[].name: expected a nonempty string")
    tags = obj.get("tags", [])
    if not isinstance(tags, list) or any(not isinstance(t, str) for t in tags):
        raise SchemaError(f"curve {name}: tags must be a list of strings")
    return CurveClass(
        name=name,
        self_int=_as_int(_need(obj, "self", f"curve {name}"), f"curve {name}.self"),
        genus=_as_int(_need(obj, "genus", f"curve {name}"), f"curve {name}.genus"),
        K_deg=_as_int(_need(obj, "Kdeg", f"curve {name}"), f"curve {name}.Kdeg"),
        tags=frozenset(tags),
    )


def _parse_branches(raw, where: str) -> tuple[tuple[str, int], ...]:
    if not isinstance(raw, list) or not raw:
        raise SchemaError(f"{where}: branches must be a nonempty list")
    branches = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"{where}: each branch is [curveName, multiplicity]")
        cname, mult = item
        if not isinstance(cname, str):
            raise SchemaError(f"{where}: branch curve name must be a string")
        mult = _as_int(mult, f"{where}: branch multiplicity")
        if mult < 1:
            raise SchemaError(f"{where}: branch multiplicity must be >= 1")
        branches.append((cname, mult))
    return tuple(branches)


def parse(document) -> Document:
    """Parse and validate a configuration document.

    Accepts a JSON string or an already-decoded dict.  Schema errors raise
    SchemaError, unresolved names raise UnknownCurveError, and mathematical
    inconsistencies raise ValidationError carrying all violations.
    """
    doc = parse_unvalidated(document)
    violations = validate(doc.configuration)
    if violations:
        raise ValidationError(violations)
    return doc


def parse_unvalidated(document) -> Document:
    """Parse without the final validation pass (schema and names only)."""
    from .blowup import parse_blowups  # local import to avoid a cycle
    from .smoothing import parse_plan

    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise SchemaError("top level: expected a JSON object")
    _no_extras(document, _TOP_KEYS, "top level")

    surface = _parse_surface(_need(document, "surface", "top level"))
    raw_curves = _need(document, "curves", "top level")
    if not isinstance(raw_curves, list) or not raw_curves:
        raise SchemaError("curves: expected a nonempty array")
    curves = tuple(_parse_curve(c) for c in raw_curves)
    names = [c.name for c in curves]
    if len(set(names)) != len(names):
        raise SchemaError("curves: duplicate curve names")
    idx = {n: i for i, n in enumerate(names)}

    grid = [[0] * len(curves) for _ in curves]
    for i, c in enumerate(curves):
        grid[i][i] = c.self_int
    seen_pairs = set()
    for item in document.get("pairing", []):
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError("pairing: entries are [nameA, nameB, value]")
        a, b, value = item
        value = _as_int(value, f"pairing {a}.{b}")
        for nm in (a, b):
            if nm not in idx:
                raise UnknownCurveError(f"pairing references undeclared curve {nm!r}")
        if a == b:
            raise SchemaError(f"pairing {a}.{b}: self-intersections belong in the curve entry")
        key = frozenset((a, b))
        if key in seen_pairs:
            raise SchemaError(f"pairing {a}.{b}: duplicate pair")
        seen_pairs.add(key)
        grid[idx[a]][idx[b]] = value
        grid[idx[b]][idx[a]] = value

    points = []
    point_names = set()
    for item in document.get("points", []):
        if not isinstance(item, dict):
            raise SchemaError("points[]: expected an object")
        _no_extras(item, _POINT_KEYS, "points[]")
        pname = _need(item, "name", "points[]")
        if pname in point_names:
            raise SchemaError(f"points: duplicate point name {pname!r}")
        point_names.add(pname)
        branches = _parse_branches(_need(item, "branches", f"point {pname}"), f"point {pname}")
        for cname, _ in branches:
            if cname not in idx:
                raise UnknownCurveError(f"point {pname} references undeclared curve {cname!r}")
        points.append(PointSpec(name=pname, branches=branches))

    fibration = None
    if "fibration" in document:
        fibration = parse_fibration(document["fibration"], known_curves=set(names))

    configuration = Configuration(
        surface=surface,
        curves=curves,
        pairing=tuple(tuple(row) for row in grid),
        points=tuple(points),
        fibration=fibration,
        blowup_count=0,
    )

    blowups = parse_blowups(document.get("blowups", []))
    plan = parse_plan(document["plan"]) if "plan" in document else None
    name = document.get("name")
    notes = tuple(document.get("notes", []))
    return Document(configuration=configuration, blowups=blowups, plan=plan, name=name, notes=notes)


def to_document(doc: Document) -> dict:
    """Re-serialize a parsed document to its JSON form (round-trips parse)."""
    cfg = doc.configuration
    out: dict = {}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.notes:
        out["notes"] = list(doc.notes)
    surface = {"kind": cfg.surface.kind, "chi": cfg.surface.chi, "K2": cfg.surface.K2,
               "K_num_trivial": cfg.surface.K_num_trivial}
    if cfg.surface.n is not None:
        surface["n"] = cfg.surface.n
    out["surface"] = surface
    out["curves"] = [
        {"name": c.name, "self": c.self_int, "genus": c.genus, "Kdeg": c.K_deg,
         "tags": sorted(c.tags)}
        for c in cfg.curves
    ]
    pairing = []
    for i in range(len(cfg.curves)):
        for j in range(i + 1, len(cfg.curves)):
            if cfg.pairing[i][j]:
                pairing.append([cfg.curves[i].name, cfg.curves[j].name, cfg.pairing[i][j]])
    out["pairing"] = pairing
    out["points"] = [
        {"name": p.name, "branches": [[c, m] for c, m in p.branches]} for p in cfg.points
    ]
    if cfg.fibration is not None:
        out["fibration"] = cfg.fibration.to_json()
    if doc.blowups:
        out["blowups"] = [
            {"label": s.label, "branches": [[c, m] for c, m in s.branches]}
            for s in doc.blowups
        ]
    if doc.plan is not None:
        out["plan"] = {
            "chains": [list(ch) for ch in doc.plan.chains],
            "q": doc.plan.declared_q,
            "assumptions": list(doc.plan.assumptions),
        }
    return out


def validate(config: Configuration) -> list[Violation]:
    """All mathematical consistency violations, as data (never raises)."""
    out: list[Violation] = []
    s = config.surface
    expected = {"enriques": (1, 0, True), "k3": (2, 0, True)}
    if s.kind in expected:
        chi, k2, knt = expected[s.kind]
        if (s.chi, s.K2) != (chi, k2) or s.K_num_trivial is not knt:
            out.append(Violation("surface", s.kind,
                                 f"expected chi={chi}, K2={k2}, K_num_trivial={knt}"))
    elif s.kind == "e":
        if s.chi != s.n or s.K2 != 0:
            out.append(Violation("surface", s.kind, f"E(n) needs chi=n={s.n} and K2=0"))

    for c in config.curves:
        if c.genus < 0:
            out.append(Violation("genus", c.name, f"negative genus {c.genus}"))
        if not c.adjunction_holds():
            out.append(Violation(
                "adjunction", c.name,
                f"2*{c.genus}-2 != {c.self_int} + {c.K_deg}"))
        if config.blowup_count == 0 and s.K_num_trivial and c.K_deg != 0:
            out.append(Violation("K-degree", c.name,
                                 "numerically trivial K forces K.C = 0 before blow-ups"))
        if (config.blowup_count == 0 and s.kind == "enriques"
                and c.genus == 0 and c.self_int != -2):
            out.append(Violation("enriques-rational", c.name,
                                 f"smooth rational curve must be a (-2)-curve, got {c.self_int}"))

    n = len(config.curves)
    for i in range(n):
        if config.pairing[i][i] != config.curves[i].self_int:
            out.append(Violation("pairing-diagonal", config.curves[i].name,
                                 "diagonal differs from declared self-intersection"))
        for j in range(i + 1, n):
            if config.pairing[i][j] != config.pairing[j][i]:
                out.append(Violation("pairing-symmetry",
                                     f"{config.curves[i].name}.{config.curves[j].name}",
                                     "pairing not symmetric"))
            elif config.pairing[i][j] < 0:
                out.append(Violation("pairing-sign",
                                     f"{config.curves[i].name}.{config.curves[j].name}",
                                     f"negative off-diagonal {config.pairing[i][j]}"))

    # declared points must not claim more local intersection than the pairing
    known = set(config.names)
    local: dict[frozenset, int] = {}
    for p in config.points:
        branch_curves = [c for c, _ in p.branches]
        if any(c not in known for c in branch_curves):
            out.append(Violation("point", p.name, "branch references unknown curve"))
            continue
        if len(set(branch_curves)) != len(branch_curves):
            out.append(Violation("point", p.name, "repeated curve in branches"))
            continue
        for (ca, ma) in p.branches:
            curve = config.curve(ca)
            if curve.genus < ma * (ma - 1) // 2:
                out.append(Violation("point", p.name,
                                     f"multiplicity {ma} exceeds genus budget of {ca}"))
        for k1 in range(len(p.branches)):
            for k2 in range(k1 + 1, len(p.branches)):
                (ca, ma), (cb, mb) = p.branches[k1], p.branches[k2]
                key = frozenset((ca, cb))
                local[key] = local.get(key, 0) + ma * mb
    for key, total in local.items():
        a, b = sorted(key)
        if total > config.pairing_of(a, b):
            out.append(Violation("point-pairing", f"{a}.{b}",
                                 f"declared points account for {total} > pairing {config.pairing_of(a, b)}"))

    if config.fibration is not None:
        out.extend(config.fibration.validate(config))
    return out


def independence_certificate(config: Configuration, candidates: Sequence[str]) -> IndependenceCertificate:
    """Numerical independence of the candidates, tested against all curves.

    Builds the (candidates x all-curves) pairing matrix and computes its
    exact rank; full row rank certifies independence.  Testing against every
    configured curve (not just the candidates) matters: curves outside the
    candidate set supply the eliminating intersections.
    """
    cand = tuple(candidates)
    for name in cand:
        if not config.has_curve(name):
            raise UnknownCurveError(name)
    rows = [
        [config.pairing[config.index_of(c)][j] for j in range(len(config.curves))]
        for c in cand
    ]
    matrix = RatMatrix(rows)
    r = rank(matrix)
    return IndependenceCertificate(candidates=cand, test_matrix=matrix, rank=r,
                                   verdict=(r == len(cand)))


def snc_certificate(config: Configuration, divisor: Sequence[str]) -> list[Violation]:
    """Simple-normal-crossing check for the named divisor.

    Empty iff every point touching a divisor curve is a transverse crossing
    of at most two branches, every positive pairing inside the divisor is
    fully accounted for by declared points, and all divisor curves are
    rational.  A positive pairing with no declared points at all raises
    MissingPointDataError (the data cannot decide the question).
    """
    names = list(divisor)
    for name in names:
        if not config.has_curve(name):
            raise UnknownCurveError(name)
    in_divisor = set(names)
    out: list[Violation] = []

    for name in names:
        if config.curve(name).genus != 0:
            out.append(Violation("snc-component", name,
                                 f"component has genus {config.curve(name).genus}, not rational"))

    accounted: dict[frozenset, int] = {}
    for p in config.points:
        touches = [c for c, _ in p.branches if c in in_divisor]
        if not touches:
            continue
        if any(m != 1 for _, m in p.branches):
            out.append(Violation("snc-point", p.name,
                                 "non-transverse branch (multiplicity > 1)"))
        if len(p.branches) > 2:
            out.append(Violation("snc-point", p.name,
                                 f"triple point ({len(p.branches)} branches)"))
        for k1 in range(len(p.branches)):
            for k2 in range(k1 + 1, len(p.branches)):
                (ca, ma), (cb, mb) = p.branches[k1], p.branches[k2]
                if ca in in_divisor and cb in in_divisor:
                    key = frozenset((ca, cb))
                    accounted[key] = accounted.get(key, 0) + ma * mb

    for i, a in enumerate(names):
        for b in names[i + 1:]:
            entry = config.pairing_of(a, b)
            if entry <= 0:
                continue
            key = frozenset((a, b))
            have = accounted.get(key, 0)
            if have == 0:
                raise MissingPointDataError(
                    f"{a}.{b} = {entry} but no declared points on the pair")
            if have != entry:
                out.append(Violation("snc-accounting", f"{a}.{b}",
                                     f"declared points account for {have} of pairing {entry}"))
    return out


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(config: Configuration) -> str:
    """Dual graph in DOT form: one vertex per curve, one edge per unit of
    intersection; deterministic ordering."""
    lines = ["graph configuration {"]
    for c in config.curves:
        lines.append(f'  {_dot_quote(c.name)} [label="{c.name} ({c.self_int})"];')
    n = len(config.curves)
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(max(config.pairing[i][j], 0)):
                lines.append(
                    f"  {_dot_quote(config.curves[i].name)}"
                    f" -- {_dot_quote(config.curves[j].name)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
