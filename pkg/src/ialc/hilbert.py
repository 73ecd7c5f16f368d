"""Axiomatic (Hilbert-style) proofs: schemata, instantiation, checking.

The base consists of nine standard intuitionistic propositional schemata
(a1..a9) over the subsumption arrow, plus two schemata relating primitive
negation to ``C -> bot`` (a10, a11).  On top sit five modal axiom
schemata (ik1..ik5) and the rules modus ponens and necessitation.

Proof files carry one step per line::

    <concept> ; ipl a1 [C := A, D := B]
    <concept> ; ik 4 [R := S]
    <concept> ; mp 2 3
    <concept> ; nec 5 R

Line references are 1-based and must point at earlier lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .syntax import (
    Atom, BOT, Concept, Exists, Forall, Not, And, Or, Subs,
    ParseError, parse_concept, render,
)

__all__ = [
    "IPL_SCHEMATA", "IK_SCHEMATA", "SchemaError",
    "ipl_instance", "axiom_instance",
    "IplAx", "IkAx", "ModusPonens", "Necessitation",
    "ProofLine", "HilbertProof", "CheckResult", "check_hilbert_proof",
    "parse_hilbert_proof", "render_hilbert_proof", "identity_proof",
]


class SchemaError(Exception):
    """Unknown schema id or missing metavariable binding."""


_C, _D, _E = Atom("C"), Atom("D"), Atom("E")

# a1..a9: the usual implicational/lattice base; a10/a11: not C = C -> bot
IPL_SCHEMATA: dict[str, Concept] = {
    "a1": Subs(_C, Subs(_D, _C)),
    "a2": Subs(Subs(_C, Subs(_D, _E)), Subs(Subs(_C, _D), Subs(_C, _E))),
    "a3": Subs(And(_C, _D), _C),
    "a4": Subs(And(_C, _D), _D),
    "a5": Subs(_C, Subs(_D, And(_C, _D))),
    "a6": Subs(_C, Or(_C, _D)),
    "a7": Subs(_D, Or(_C, _D)),
    "a8": Subs(Subs(_C, _E), Subs(Subs(_D, _E), Subs(Or(_C, _D), _E))),
    "a9": Subs(BOT, _C),
    "a10": Subs(Not(_C), Subs(_C, BOT)),
    "a11": Subs(Subs(_C, BOT), Not(_C)),
}

# modal schemata over a role metavariable R
IK_SCHEMATA: dict[int, Concept] = {
    1: Subs(Forall("R", Subs(_C, _D)), Subs(Forall("R", _C), Forall("R", _D))),
    2: Subs(Forall("R", Subs(_C, _D)), Subs(Exists("R", _C), Exists("R", _D))),
    3: Subs(Exists("R", Or(_C, _D)), Or(Exists("R", _C), Exists("R", _D))),
    4: Subs(Exists("R", BOT), BOT),
    5: Subs(Subs(Exists("R", _C), Forall("R", _D)), Forall("R", Subs(_C, _D))),
}


def _instantiate(template: Concept, subst: Mapping[str, Union[Concept, str]]) -> Concept:
    if isinstance(template, Atom):
        try:
            value = subst[template.name]
        except KeyError:
            raise SchemaError(f"missing binding for metavariable {template.name}") from None
        if not isinstance(value, Concept):
            raise SchemaError(f"metavariable {template.name} needs a concept, got {value!r}")
        return value
    if isinstance(template, Not):
        return Not(_instantiate(template.body, subst))
    if isinstance(template, (And, Or, Subs)):
        cls = type(template)
        return cls(_instantiate(template.left, subst), _instantiate(template.right, subst))
    if isinstance(template, (Exists, Forall)):
        try:
            role = subst[template.role]
        except KeyError:
            raise SchemaError(f"missing binding for role metavariable {template.role}") from None
        if not isinstance(role, str):
            raise SchemaError(f"role metavariable {template.role} needs a role name")
        return type(template)(role, _instantiate(template.body, subst))
    return template           # top / bot


def ipl_instance(schema: str, subst: Mapping[str, Union[Concept, str]]) -> Concept:
    if schema not in IPL_SCHEMATA:
        raise SchemaError(f"unknown propositional schema {schema!r}")
    return _instantiate(IPL_SCHEMATA[schema], subst)


def axiom_instance(axiom: int, subst: Mapping[str, Union[Concept, str]]) -> Concept:
    if axiom not in IK_SCHEMATA:
        raise SchemaError(f"unknown modal axiom {axiom!r}")
    return _instantiate(IK_SCHEMATA[axiom], subst)


# ---------------------------------------------------------------------------
# Proof objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IplAx:
    schema: str
    subst: tuple[tuple[str, Union[Concept, str]], ...]


@dataclass(frozen=True)
class IkAx:
    axiom: int
    subst: tuple[tuple[str, Union[Concept, str]], ...]


@dataclass(frozen=True)
class ModusPonens:
    i: int                 # line proving C
    j: int                 # line proving C -> D


@dataclass(frozen=True)
class Necessitation:
    i: int
    role: str


Justification = Union[IplAx, IkAx, ModusPonens, Necessitation]


@dataclass(frozen=True)
class ProofLine:
    concept: Concept
    justification: Justification


@dataclass(frozen=True)
class HilbertProof:
    lines: tuple[ProofLine, ...]


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    line: int | None = None        # 1-based first bad line
    reason: str | None = None

    def __str__(self):
        return "accepted" if self.ok else f"rejected at line {self.line}: {self.reason}"


def check_hilbert_proof(p: HilbertProof) -> CheckResult:
    """Accept iff every line is a schema instance or a correct rule
    application over strictly earlier lines."""
    for idx, line in enumerate(p.lines, start=1):
        j = line.justification
        if isinstance(j, (IplAx, IkAx)):
            try:
                if isinstance(j, IplAx):
                    want = ipl_instance(j.schema, dict(j.subst))
                else:
                    want = axiom_instance(j.axiom, dict(j.subst))
            except SchemaError as e:
                return CheckResult(False, idx, str(e))
            if line.concept != want:
                return CheckResult(False, idx,
                                   f"stated concept is not the schema instance {render(want)}")
        elif isinstance(j, ModusPonens):
            if not (1 <= j.i < idx and 1 <= j.j < idx):
                return CheckResult(False, idx, "modus ponens must cite earlier lines")
            premise = p.lines[j.i - 1].concept
            implication = p.lines[j.j - 1].concept
            if implication != Subs(premise, line.concept):
                return CheckResult(False, idx,
                                   f"line {j.j} is not {render(premise)} -> {render(line.concept)}")
        elif isinstance(j, Necessitation):
            if not 1 <= j.i < idx:
                return CheckResult(False, idx, "necessitation must cite an earlier line")
            if line.concept != Forall(j.role, p.lines[j.i - 1].concept):
                return CheckResult(False, idx,
                                   f"concept is not all {j.role}. of line {j.i}")
        else:
            return CheckResult(False, idx, f"unknown justification {j!r}")
    return CheckResult(True)


# ---------------------------------------------------------------------------
# Proof files
# ---------------------------------------------------------------------------

_MP_RE = re.compile(r"^mp\s+(\d+)\s+(\d+)$")
_NEC_RE = re.compile(r"^nec\s+(\d+)\s+([A-Z][A-Za-z0-9_']*)$")
_AX_RE = re.compile(r"^(ipl\s+[a-z0-9]+|ik\s+\d+)\s*(\[.*\])?$")


def _parse_subst(text: str, lineno: int) -> tuple[tuple[str, Union[Concept, str]], ...]:
    body = text.strip()[1:-1].strip()
    if not body:
        return ()
    out = []
    for part in body.split(","):
        if ":=" not in part:
            raise ParseError(f"bad binding {part.strip()!r}", lineno, 1)
        name, value = part.split(":=", 1)
        name = name.strip()
        value = value.strip()
        if name == "R":
            out.append((name, value))
        else:
            out.append((name, parse_concept(value)))
    return tuple(out)


def parse_hilbert_proof(text: str) -> HilbertProof:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            raise ParseError("expected '<concept> ; <justification>'", lineno, 1)
        concept_text, just_text = line.split(";", 1)
        try:
            concept = parse_concept(concept_text.strip())
        except ParseError as e:
            raise ParseError(e.args[0], lineno, e.col, e.expected) from None
        just_text = just_text.strip()
        m = _MP_RE.match(just_text)
        if m:
            lines.append(ProofLine(concept, ModusPonens(int(m.group(1)), int(m.group(2)))))
            continue
        m = _NEC_RE.match(just_text)
        if m:
            lines.append(ProofLine(concept, Necessitation(int(m.group(1)), m.group(2))))
            continue
        m = _AX_RE.match(just_text)
        if m:
            head = m.group(1).split()
            subst = _parse_subst(m.group(2), lineno) if m.group(2) else ()
            if head[0] == "ipl":
                lines.append(ProofLine(concept, IplAx(head[1], subst)))
            else:
                lines.append(ProofLine(concept, IkAx(int(head[1]), subst)))
            continue
        raise ParseError(f"bad justification {just_text!r}", lineno, 1)
    return HilbertProof(tuple(lines))


def _render_subst(subst) -> str:
    if not subst:
        return ""
    parts = ", ".join(f"{k} := {v if isinstance(v, str) else render(v)}"
                      for k, v in subst)
    return f" [{parts}]"


def render_hilbert_proof(p: HilbertProof) -> str:
    out = []
    for line in p.lines:
        j = line.justification
        if isinstance(j, IplAx):
            jtext = f"ipl {j.schema}{_render_subst(j.subst)}"
        elif isinstance(j, IkAx):
            jtext = f"ik {j.axiom}{_render_subst(j.subst)}"
        elif isinstance(j, ModusPonens):
            jtext = f"mp {j.i} {j.j}"
        else:
            jtext = f"nec {j.i} {j.role}"
        out.append(f"{render(line.concept)} ; {jtext}")
    return "\n".join(out) + "\n"


def identity_proof(c: Concept, role: str) -> HilbertProof:
    """Machine-built derivation of ``all role.(c -> c)`` from a1/a2 via
    modus ponens, closed by necessitation."""
    cc = Subs(c, c)
    l1 = ProofLine(Subs(c, cc), IplAx("a1", (("C", c), ("D", c))))
    l2 = ProofLine(Subs(c, Subs(cc, c)), IplAx("a1", (("C", c), ("D", cc))))
    l3 = ProofLine(
        Subs(Subs(c, Subs(cc, c)), Subs(Subs(c, cc), cc)),
        IplAx("a2", (("C", c), ("D", cc), ("E", c))))
    l4 = ProofLine(Subs(Subs(c, cc), cc), ModusPonens(2, 3))
    l5 = ProofLine(cc, ModusPonens(1, 4))
    l6 = ProofLine(Forall(role, cc), Necessitation(5, role))
    return HilbertProof((l1, l2, l3, l4, l5, l6))
