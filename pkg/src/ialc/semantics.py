"""Constructive finite interpretations and validity.

An interpretation carries a finite set of entities, a refinement
preorder, one binary relation per role, hereditary atom extensions, and
an assignment of nominals to entities.  Concept extension follows the
constructive clauses: negation and subsumption quantify over all
refinements of the evaluation point, ``all R.C`` quantifies refinements
and then successors, ``some R.C`` looks at direct successors only.

Role relations must interact with refinement through two frame
conditions:

    F1: w <= w' and w R v   implies some v' with w' R v' and v <= v'
    F2: v <= v' and w R v   implies some w' with w' R v' and w <= w'

Sequent validity quantifies a vector of worlds above the interpretation
of each outer nominal (shared across occurrences of the same nominal)
plus one world for pure-concept members; antecedent subsumption concepts
may optionally be read globally (the theory reading).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional, Union

from .syntax import (
    And, Atom, Bot, Concept, ConceptF, Exists, Forall, Formula,
    NominalAssertion, Not, Or, RoleAssertion, Sequent, Subs, Top,
    outer_nominal,
)

__all__ = [
    "Interpretation", "Violation", "ValidationReport", "UnassignedNominalError",
    "ModelFileError", "validate_interpretation", "extension", "satisfies",
    "sequent_valid", "entails", "reflexive_transitive_closure",
    "load_model", "save_model", "model_to_dict", "model_from_dict",
]

World = Union[int, str]


class UnassignedNominalError(Exception):
    """A formula mentions a nominal the interpretation does not assign."""

    def __init__(self, nominal: str):
        self.nominal = nominal
        super().__init__(f"nominal {nominal!r} is not assigned to any entity")


def reflexive_transitive_closure(pairs: Iterable[tuple[World, World]],
                                 worlds: Iterable[World]) -> frozenset:
    worlds = list(worlds)
    closure = set(pairs)
    closure.update((w, w) for w in worlds)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(closure):
            for (c, d) in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    return frozenset(closure)


@dataclass(frozen=True)
class Interpretation:
    worlds: tuple[World, ...]
    leq: frozenset                      # refinement pairs (w, v): w <= v
    roles: Mapping[str, frozenset]
    atoms: Mapping[str, frozenset]
    nominals: Mapping[str, World]
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    @staticmethod
    def make(worlds: Iterable[World],
             leq: Iterable[tuple[World, World]] = (),
             roles: Mapping[str, Iterable[tuple[World, World]]] | None = None,
             atoms: Mapping[str, Iterable[World]] | None = None,
             nominals: Mapping[str, World] | None = None) -> "Interpretation":
        """Normalize and sanity-check field shapes (not the frame laws)."""
        ws = tuple(dict.fromkeys(worlds))
        if not ws:
            raise ValueError("interpretation needs a nonempty entity set")
        wset = set(ws)
        leq = frozenset((a, b) for (a, b) in leq)
        for (a, b) in leq:
            if a not in wset or b not in wset:
                raise ValueError(f"refinement pair {(a, b)!r} outside the entity set")
        roles = {r: frozenset(map(tuple, rel)) for r, rel in (roles or {}).items()}
        for r, rel in roles.items():
            for (a, b) in rel:
                if a not in wset or b not in wset:
                    raise ValueError(f"role {r}: pair {(a, b)!r} outside the entity set")
        atoms = {a: frozenset(ext) for a, ext in (atoms or {}).items()}
        for a, ext in atoms.items():
            if not ext <= wset:
                raise ValueError(f"atom {a}: extension outside the entity set")
        return Interpretation(ws, leq, roles, atoms, dict(nominals or {}))

    def up(self, w: World) -> tuple:
        """All refinements of w (including w when the order is reflexive)."""
        ups = self._cache.get("up")
        if ups is None:
            ups = {v: tuple(u for u in self.worlds if (v, u) in self.leq)
                   for v in self.worlds}
            self._cache["up"] = ups
        try:
            return ups[w]
        except (KeyError, TypeError):
            raise ValueError(f"entity {w!r} is not in the domain") from None

    def successors(self, role: str, w: World) -> tuple:
        key = ("succ", role)
        succ = self._cache.get(key)
        if succ is None:
            rel = self.roles.get(role, frozenset())
            succ = {v: tuple(u for u in self.worlds if (v, u) in rel)
                    for v in self.worlds}
            self._cache[key] = succ
        try:
            return succ[w]
        except (KeyError, TypeError):
            raise ValueError(f"entity {w!r} is not in the domain") from None

    def entity_of(self, nominal: str) -> World:
        try:
            return self.nominals[nominal]
        except KeyError:
            raise UnassignedNominalError(nominal) from None


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str          # reflexivity | transitivity | heredity | F1 | F2 | dangling-nominal
    witnesses: tuple

    def __str__(self):
        return f"{self.kind}{self.witnesses!r}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(map(str, self.violations))


def validate_interpretation(I: Interpretation) -> ValidationReport:
    """Check the preorder laws, heredity, F1/F2, and nominal targets."""
    out: list[Violation] = []
    for w in I.worlds:
        if (w, w) not in I.leq:
            out.append(Violation("reflexivity", (w,)))
    for (a, b) in sorted(I.leq, key=repr):
        for (c, d) in sorted(I.leq, key=repr):
            if b == c and (a, d) not in I.leq:
                out.append(Violation("transitivity", (a, b, d)))
    for name in sorted(I.atoms):
        ext = I.atoms[name]
        for (w, v) in sorted(I.leq, key=repr):
            if w in ext and v not in ext:
                out.append(Violation("heredity", (name, w, v)))
    for role in sorted(I.roles):
        rel = I.roles[role]
        for (w, w2) in sorted(I.leq, key=repr):
            for (a, v) in sorted(rel, key=repr):
                if a != w:
                    continue
                if not any((w2, v2) in rel and (v, v2) in I.leq for v2 in I.worlds):
                    out.append(Violation("F1", (role, w, w2, v)))
        for (v, v2) in sorted(I.leq, key=repr):
            for (w, b) in sorted(rel, key=repr):
                if b != v:
                    continue
                if not any((w2, v2) in rel and (w, w2) in I.leq for w2 in I.worlds):
                    out.append(Violation("F2", (role, w, v, v2)))
    for nom in sorted(I.nominals):
        # equality-based scan: stays total even for malformed targets
        if not any(I.nominals[nom] == w for w in I.worlds):
            out.append(Violation("dangling-nominal", (nom, I.nominals[nom])))
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# Concept extension and satisfaction
# ---------------------------------------------------------------------------

def extension(I: Interpretation, c: Concept) -> frozenset:
    """The set of entities satisfying c, per the constructive clauses."""
    cache = I._cache.setdefault("ext", {})
    hit = cache.get(c)
    if hit is not None:
        return hit
    if isinstance(c, Atom):
        result = I.atoms.get(c.name, frozenset())
    elif isinstance(c, Top):
        result = frozenset(I.worlds)
    elif isinstance(c, Bot):
        result = frozenset()
    elif isinstance(c, Not):
        body = extension(I, c.body)
        result = frozenset(w for w in I.worlds
                           if all(v not in body for v in I.up(w)))
    elif isinstance(c, And):
        result = extension(I, c.left) & extension(I, c.right)
    elif isinstance(c, Or):
        result = extension(I, c.left) | extension(I, c.right)
    elif isinstance(c, Subs):
        le, ri = extension(I, c.left), extension(I, c.right)
        result = frozenset(w for w in I.worlds
                           if all(v in ri for v in I.up(w) if v in le))
    elif isinstance(c, Exists):
        body = extension(I, c.body)
        result = frozenset(w for w in I.worlds
                           if any(v in body for v in I.successors(c.role, w)))
    elif isinstance(c, Forall):
        body = extension(I, c.body)
        result = frozenset(w for w in I.worlds
                           if all(z in body
                                  for v in I.up(w)
                                  for z in I.successors(c.role, v)))
    else:
        raise TypeError(f"not a concept: {c!r}")
    cache[c] = result
    return result


def _role_holds(I: Interpretation, f: RoleAssertion) -> bool:
    # hybrid clause: all refinement pairs above the two anchors are related
    rel = I.roles.get(f.role, frozenset())
    zx = I.up(I.entity_of(f.subject))
    zy = I.up(I.entity_of(f.object))
    return all((a, b) in rel for a in zx for b in zy)


def _body_holds_at(I: Interpretation, body: Formula, e: World) -> bool:
    """Truth of an assertion body at entity e.

    A nested assertion re-anchors at its own nominal, so its truth does
    not depend on e.
    """
    if isinstance(body, ConceptF):
        return e in extension(I, body.concept)
    return satisfies(I, body)


def satisfies(I: Interpretation, f: Formula) -> bool:
    """Hybrid satisfaction: assertions hold hereditarily above their
    anchors; a bare concept holds when its extension is the whole domain."""
    if isinstance(f, ConceptF):
        return extension(I, f.concept) == frozenset(I.worlds)
    if isinstance(f, RoleAssertion):
        return _role_holds(I, f)
    if isinstance(f, NominalAssertion):
        anchor = I.entity_of(f.nominal)
        return all(_body_holds_at(I, f.body, z) for z in I.up(anchor))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Sequent validity
# ---------------------------------------------------------------------------

def _member_holds(I: Interpretation, f: Formula, z: Mapping[str, World],
                  w: World, global_subs: bool) -> bool:
    if isinstance(f, RoleAssertion):
        return _role_holds(I, f)
    if isinstance(f, NominalAssertion):
        return _body_holds_at(I, f.body, z[f.nominal])
    c = f.concept
    if global_subs and isinstance(c, Subs):
        return extension(I, c) == frozenset(I.worlds)
    return w in extension(I, c)


def sequent_valid(I: Interpretation, s: Sequent, tbox_global: bool = True) -> bool:
    """Validity of a sequent on one interpretation.

    Quantifies one world z_x >= x^I per outer nominal x of the sequent's
    assertions, and one shared world w for pure-concept members on both
    sides.  With tbox_global, antecedent members that are top-level
    subsumption concepts must hold at every world instead of just w.
    """
    members = list(s.antecedent)
    outers: list[str] = []
    for f in members + [s.succedent]:
        x = outer_nominal(f)
        if x is not None and x not in outers:
            outers.append(x)
    outers.sort()
    domains = [I.up(I.entity_of(x)) for x in outers]
    for choice in product(*domains):
        z = dict(zip(outers, choice))
        for w in I.worlds:
            if all(_member_holds(I, m, z, w, tbox_global) for m in members):
                if not _member_holds(I, s.succedent, z, w, False):
                    return False
    return True


def entails(models: Iterable[Interpretation], s: Sequent,
            tbox_global: bool = True) -> Optional[Interpretation]:
    """First model in the stream on which s fails; None if none fails."""
    for I in models:
        if not sequent_valid(I, s, tbox_global):
            return I
    return None


# ---------------------------------------------------------------------------
# Model files
# ---------------------------------------------------------------------------

class ModelFileError(Exception):
    """The model file is malformed or fails frame validation."""


def model_to_dict(I: Interpretation) -> dict:
    return {
        "worlds": list(I.worlds),
        "leq": sorted([list(p) for p in I.leq]),
        "roles": {r: sorted([list(p) for p in rel]) for r, rel in sorted(I.roles.items())},
        "atoms": {a: sorted(ext, key=repr) for a, ext in sorted(I.atoms.items())},
        "nominals": {n: w for n, w in sorted(I.nominals.items())},
    }


def model_from_dict(doc: dict, raw: bool = False) -> tuple[Interpretation, list[str]]:
    """Build an interpretation from a parsed model document.

    Applies the reflexive-transitive closure to ``leq`` and the heredity
    closure to atom extensions (warning when that changes anything);
    rejects on frame violations unless raw is set.  Returns the model
    and a list of warnings.
    """
    warnings = []
    try:
        worlds = list(doc["worlds"])
        leq_in = [(p[0], p[1]) for p in doc.get("leq", [])]
        roles = {r: [(p[0], p[1]) for p in rel]
                 for r, rel in doc.get("roles", {}).items()}
        atoms = {a: list(ext) for a, ext in doc.get("atoms", {}).items()}
        nominals = dict(doc.get("nominals", {}))
        leq = reflexive_transitive_closure(leq_in, worlds)
        closed_atoms = {}
        for a, ext in atoms.items():
            closed = set(ext)
            for w in ext:
                closed.update(v for v in worlds if (w, v) in leq)
            if closed != set(ext):
                warnings.append(f"atom {a}: extension closed under refinement "
                                f"(added {sorted(closed - set(ext), key=repr)})")
            closed_atoms[a] = frozenset(closed)
        I = Interpretation.make(worlds, leq, roles, closed_atoms, nominals)
    except (KeyError, IndexError, TypeError, AttributeError, ValueError) as e:
        raise ModelFileError(f"malformed model document: {e}") from None
    if not raw:
        report = validate_interpretation(I)
        if not report.ok:
            raise ModelFileError(f"model violates frame conditions: {report}")
    return I, warnings


def load_model(path: str, raw: bool = False) -> tuple[Interpretation, list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ModelFileError(f"{path}: {e}") from None
    return model_from_dict(doc, raw=raw)


def save_model(I: Interpretation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(I), fh, indent=2, sort_keys=False)
        fh.write("\n")
