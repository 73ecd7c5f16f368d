"""Sequent calculus: rule checking, proof trees, bounded backward search.

Antecedents are sets, so exchange and contraction are invisible;
weakening is an explicit rule node and cut is checkable but never used
by the search.  Rule labels:

    axiom, bot-l                      initial sequents
    forall-r, forall-l                role quantification, universal
    exists-r, exists-l                role quantification, existential
    sub-r, sub-l, and-r, and-l,       propositional rules; each has a
    or1-r, or2-r, or-l                nominal variant (prefix ``n-``)
                                      carrying one shared outer nominal
    p-exists, p-forall, p-nom         promotion rules: quantify or prefix
                                      every concept of the antecedent,
                                      assertions pass through untouched
    cut, weaken                       structural

``exists-l`` requires its witness nominal not to occur in the
conclusion.  ``forall-r`` carries no such side condition for the
checker; the search engine nevertheless always instantiates it with an
engine-fresh nominal (reserved names ``_n0``, ``_n1``, ...).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import count
from typing import Iterator, Optional, Sequence

from .modelgen import Signature, enumerate_models
from .semantics import Interpretation, sequent_valid
from .syntax import (
    And, Bot, ConceptF, Exists, Forall, Formula, NominalAssertion,
    Or, RoleAssertion, Sequent, Subs, nominals_of, parse_formula,
    parse_sequent, render,
)

__all__ = [
    "RuleParams", "ProofTree", "CheckResult", "RULE_ARITY", "RULE_LABELS",
    "check_step", "check_proof", "prove", "ProveResult", "find_countermodel",
    "weaken_tree", "tree_to_dict", "tree_from_dict", "load_proof", "save_proof",
    "ProofFileError",
]

RULE_ARITY = {
    "axiom": 0, "bot-l": 0,
    "forall-r": 1, "forall-l": 1, "exists-r": 2, "exists-l": 1,
    "sub-r": 1, "sub-l": 2, "and-r": 2, "and-l": 1,
    "or1-r": 1, "or2-r": 1, "or-l": 2,
    "p-exists": 1, "p-forall": 1, "p-nom": 1,
    "cut": 2, "weaken": 1,
}

_NOMINAL_VARIANTS = {"sub-r", "sub-l", "and-r", "and-l", "or1-r", "or2-r", "or-l"}

RULE_LABELS = tuple(sorted(RULE_ARITY) + sorted("n-" + r for r in _NOMINAL_VARIANTS))


def _split_rule(label: str) -> Optional[tuple[str, bool]]:
    if label in RULE_ARITY:
        return label, False
    if label.startswith("n-") and label[2:] in _NOMINAL_VARIANTS:
        return label[2:], True
    return None


@dataclass(frozen=True)
class RuleParams:
    principal: Optional[Formula] = None   # the formula the rule acts on
    role: Optional[str] = None
    nominal: Optional[str] = None         # witness nominal (exists-l, forall-r, ...)
    prefix: Optional[str] = None          # the x of p-nom
    cut_formula: Optional[Formula] = None


_NO_PARAMS = RuleParams()


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    rule: str
    params: RuleParams = _NO_PARAMS
    premises: tuple["ProofTree", ...] = ()


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    path: Optional[tuple[int, ...]] = None   # premise indices from the root
    reason: Optional[str] = None

    def __str__(self):
        if self.ok:
            return "accepted"
        where = "root" if not self.path else "node " + ".".join(map(str, self.path))
        return f"rejected at {where}: {self.reason}"


# ---------------------------------------------------------------------------
# Rule schema checking
# ---------------------------------------------------------------------------

def _nom_concept(f: Formula):
    """(nominal, concept) when f is ``x : C`` with a concept body."""
    if isinstance(f, NominalAssertion) and isinstance(f.body, ConceptF):
        return f.nominal, f.body.concept
    return None


def _split_binary(f: Formula, op, nominal: bool):
    """Left/right components of a binary principal, hatted with the
    shared outer nominal for the nominal variants."""
    if nominal:
        nc = _nom_concept(f)
        if nc is None or not isinstance(nc[1], op):
            return None
        x, c = nc
        return (NominalAssertion(x, ConceptF(c.left)),
                NominalAssertion(x, ConceptF(c.right)))
    if isinstance(f, ConceptF) and isinstance(f.concept, op):
        return ConceptF(f.concept.left), ConceptF(f.concept.right)
    return None


def _is_bot_member(f: Formula) -> bool:
    if isinstance(f, ConceptF) and isinstance(f.concept, Bot):
        return True
    nc = _nom_concept(f)
    return nc is not None and isinstance(nc[1], Bot)


def _promote(members, make) -> frozenset:
    """Apply ``make`` to every concept member, pass assertions through."""
    out = set()
    for m in members:
        out.add(make(m) if isinstance(m, ConceptF) else m)
    return frozenset(out)


def check_step(rule: str, params: Optional[RuleParams],
               premises: Sequence[Sequent], conclusion: Sequent) -> bool:
    """True iff premises/conclusion instantiate the rule schema exactly.

    Params narrow the principal/witness choice when given; otherwise all
    decompositions are tried.
    """
    split = _split_rule(rule)
    if split is None:
        return False
    base, nominal = split
    if len(premises) != RULE_ARITY[base]:
        return False
    p = params or _NO_PARAMS
    ant, succ = conclusion.antecedent, conclusion.succedent

    if base == "axiom":
        return succ in ant

    if base == "bot-l":
        return any(_is_bot_member(m) for m in ant)

    if base == "weaken":
        (prem,) = premises
        return prem.succedent == succ and prem.antecedent <= ant

    if base == "cut":
        p1, p2 = premises
        gamma = p1.succedent
        if p.cut_formula is not None and p.cut_formula != gamma:
            return False
        return (gamma in p2.antecedent and p2.succedent == succ
                and p1.antecedent | (p2.antecedent - {gamma}) == ant)

    if base == "forall-r":
        (prem,) = premises
        nc = _nom_concept(succ)
        if nc is None or not isinstance(nc[1], Forall):
            return False
        x, q = nc
        ps = _nom_concept(prem.succedent)
        if ps is None or ps[1] != q.body:
            return False
        y = ps[0]
        if p.role is not None and p.role != q.role:
            return False
        if p.nominal is not None and p.nominal != y:
            return False
        return prem.antecedent == ant | {RoleAssertion(x, q.role, y)}

    if base == "forall-l":
        (prem,) = premises
        if prem.succedent != succ:
            return False
        for m in ant:
            nc = _nom_concept(m)
            if nc is None or not isinstance(nc[1], Forall):
                continue
            if p.principal is not None and p.principal != m:
                continue
            x, q = nc
            for m2 in ant:
                if not (isinstance(m2, RoleAssertion)
                        and m2.subject == x and m2.role == q.role):
                    continue
                if p.nominal is not None and p.nominal != m2.object:
                    continue
                added = NominalAssertion(m2.object, ConceptF(q.body))
                if prem.antecedent == ant | {added}:
                    return True
        return False

    if base == "exists-r":
        p1, p2 = premises
        nc = _nom_concept(succ)
        if nc is None or not isinstance(nc[1], Exists):
            return False
        x, q = nc
        if p1.antecedent != ant or p2.antecedent != ant:
            return False
        ra = p1.succedent
        if not (isinstance(ra, RoleAssertion) and ra.subject == x
                and ra.role == q.role):
            return False
        if p.nominal is not None and p.nominal != ra.object:
            return False
        return p2.succedent == NominalAssertion(ra.object, ConceptF(q.body))

    if base == "exists-l":
        (prem,) = premises
        if prem.succedent != succ:
            return False
        conol = nominals_of(conclusion)
        for m in ant:
            nc = _nom_concept(m)
            if nc is None or not isinstance(nc[1], Exists):
                continue
            if p.principal is not None and p.principal != m:
                continue
            x, q = nc
            rest = ant - {m}
            if p.nominal is not None:
                ys = [p.nominal]
            else:
                ys = sorted({f.object for f in prem.antecedent
                             if isinstance(f, RoleAssertion)
                             and f.subject == x and f.role == q.role})
            for y in ys:
                if y in conol:
                    continue
                fresh = {RoleAssertion(x, q.role, y),
                         NominalAssertion(y, ConceptF(q.body))}
                if prem.antecedent == rest | fresh:
                    return True
        return False

    if base == "sub-r":
        (prem,) = premises
        split2 = _split_binary(succ, Subs, nominal)
        if split2 is None:
            return False
        ahat, bhat = split2
        return (prem.succedent == bhat
                and prem.antecedent == ant | {ahat})

    if base == "sub-l":
        p1, p2 = premises
        if p2.succedent != succ:
            return False
        for m in ant:
            split2 = _split_binary(m, Subs, nominal)
            if split2 is None:
                continue
            if p.principal is not None and p.principal != m:
                continue
            ahat, bhat = split2
            if p1.succedent != ahat or bhat not in p2.antecedent:
                continue
            if p1.antecedent | (p2.antecedent - {bhat}) | {m} == ant:
                return True
        return False

    if base == "and-r":
        p1, p2 = premises
        split2 = _split_binary(succ, And, nominal)
        if split2 is None:
            return False
        ahat, bhat = split2
        return (p1.antecedent == ant and p2.antecedent == ant
                and p1.succedent == ahat and p2.succedent == bhat)

    if base == "and-l":
        (prem,) = premises
        if prem.succedent != succ:
            return False
        for m in ant:
            split2 = _split_binary(m, And, nominal)
            if split2 is None:
                continue
            if p.principal is not None and p.principal != m:
                continue
            ahat, bhat = split2
            if prem.antecedent == (ant - {m}) | {ahat, bhat}:
                return True
        return False

    if base in ("or1-r", "or2-r"):
        (prem,) = premises
        split2 = _split_binary(succ, Or, nominal)
        if split2 is None:
            return False
        want = split2[0] if base == "or1-r" else split2[1]
        return prem.succedent == want and prem.antecedent == ant

    if base == "or-l":
        p1, p2 = premises
        if p1.succedent != succ or p2.succedent != succ:
            return False
        for m in ant:
            split2 = _split_binary(m, Or, nominal)
            if split2 is None:
                continue
            if p.principal is not None and p.principal != m:
                continue
            ahat, bhat = split2
            rest = ant - {m}
            if (p1.antecedent == rest | {ahat}
                    and p2.antecedent == rest | {bhat}):
                return True
        return False

    if base == "p-exists":
        (prem,) = premises
        if not (isinstance(succ, ConceptF) and isinstance(succ.concept, Exists)):
            return False
        role = succ.concept.role
        if p.role is not None and p.role != role:
            return False
        if prem.succedent != ConceptF(succ.concept.body):
            return False
        for alpha in prem.antecedent:
            if not isinstance(alpha, ConceptF):
                continue
            if p.principal is not None and p.principal != alpha:
                continue
            delta = prem.antecedent - {alpha}
            lifted = _promote(delta, lambda m: ConceptF(Forall(role, m.concept)))
            if lifted | {ConceptF(Exists(role, alpha.concept))} == ant:
                return True
        return False

    if base == "p-forall":
        (prem,) = premises
        if not (isinstance(succ, ConceptF) and isinstance(succ.concept, Forall)):
            return False
        role = succ.concept.role
        if p.role is not None and p.role != role:
            return False
        if prem.succedent != ConceptF(succ.concept.body):
            return False
        lifted = _promote(prem.antecedent,
                          lambda m: ConceptF(Forall(role, m.concept)))
        return lifted == ant

    if base == "p-nom":
        (prem,) = premises
        if isinstance(prem.succedent, ConceptF):
            if not (isinstance(succ, NominalAssertion) and succ.body == prem.succedent):
                return False
            candidates = [succ.nominal]
        else:
            if succ != prem.succedent:
                return False
            if p.prefix is not None:
                candidates = [p.prefix]
            else:
                candidates = sorted({m.nominal for m in ant
                                     if isinstance(m, NominalAssertion)})
                if not candidates and prem.antecedent == ant:
                    return True
        for x in candidates:
            if p.prefix is not None and p.prefix != x:
                continue
            lifted = _promote(prem.antecedent,
                              lambda m: NominalAssertion(x, m))
            if lifted == ant:
                return True
        return False

    raise AssertionError(f"unhandled rule {base}")


def check_proof(t: ProofTree) -> CheckResult:
    """Accept iff every node instantiates its rule; first bad node wins
    (preorder: a node is reported before its premises)."""
    stack: list[tuple[ProofTree, tuple[int, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        if _split_rule(node.rule) is None:
            return CheckResult(False, path, f"unknown rule {node.rule!r}")
        got = len(node.premises)
        base = _split_rule(node.rule)[0]
        if got != RULE_ARITY[base]:
            return CheckResult(False, path,
                               f"{node.rule} needs {RULE_ARITY[base]} premises, got {got}")
        if not check_step(node.rule, node.params,
                          [c.conclusion for c in node.premises], node.conclusion):
            return CheckResult(False, path,
                               f"{node.rule} does not derive {render(node.conclusion)}")
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[i], path + (i,)))
    return CheckResult(True)


def weaken_tree(t: ProofTree, extra: Formula) -> ProofTree:
    """A proof of the conclusion weakened by one antecedent formula.

    Context-preserving rules absorb the extra formula; initial sequents,
    promotions, and cut get an explicit weaken node instead (promotions
    rewrite their whole context, so the extra formula cannot be pushed
    through them unchanged).
    """
    target = Sequent(t.conclusion.antecedent | {extra}, t.conclusion.succedent)
    base = _split_rule(t.rule)[0]
    if RULE_ARITY[base] == 0 or base in ("p-exists", "p-forall", "p-nom", "cut"):
        return ProofTree(target, "weaken", _NO_PARAMS, (t,))
    return ProofTree(target, t.rule, t.params,
                     tuple(weaken_tree(c, extra) for c in t.premises))


# ---------------------------------------------------------------------------
# Proof files
# ---------------------------------------------------------------------------

class ProofFileError(Exception):
    pass


def tree_to_dict(t: ProofTree) -> dict:
    d: dict = {"rule": t.rule, "conclusion": render(t.conclusion)}
    params = {}
    if t.params.principal is not None:
        params["principal"] = render(t.params.principal)
    if t.params.role is not None:
        params["role"] = t.params.role
    if t.params.nominal is not None:
        params["nominal"] = t.params.nominal
    if t.params.prefix is not None:
        params["prefix"] = t.params.prefix
    if t.params.cut_formula is not None:
        params["cut"] = render(t.params.cut_formula)
    if params:
        d["params"] = params
    d["premises"] = [tree_to_dict(c) for c in t.premises]
    return d


def tree_from_dict(d: dict) -> ProofTree:
    try:
        rule = d["rule"]
        if not isinstance(rule, str):
            raise ProofFileError(f"rule must be a string, got {rule!r}")
        conclusion = parse_sequent(d["conclusion"])
        raw = d.get("params", {})
        params = RuleParams(
            principal=parse_formula(raw["principal"]) if "principal" in raw else None,
            role=raw.get("role"),
            nominal=raw.get("nominal"),
            prefix=raw.get("prefix"),
            cut_formula=parse_formula(raw["cut"]) if "cut" in raw else None,
        )
        premises = tuple(tree_from_dict(c) for c in d.get("premises", []))
    except (KeyError, TypeError, AttributeError) as e:
        raise ProofFileError(f"malformed proof node: {e}") from None
    return ProofTree(conclusion, rule, params, premises)


def load_proof(path: str) -> ProofTree:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ProofFileError(f"{path}: {e}") from None
    return tree_from_dict(doc)


def save_proof(t: ProofTree, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tree_to_dict(t), fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Backward proof search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProveResult:
    tree: Optional[ProofTree]
    visited: int

    @property
    def proved(self) -> bool:
        return self.tree is not None


_ENGINE_NOMINAL = re.compile(r"^_n\d+$")


def _nominals_in_order(f: Formula) -> list[str]:
    if isinstance(f, RoleAssertion):
        return [f.subject, f.object]
    if isinstance(f, NominalAssertion):
        return [f.nominal] + _nominals_in_order(f.body)
    return []


def _rename_formula(f: Formula, mapping: dict) -> Formula:
    if isinstance(f, RoleAssertion):
        return RoleAssertion(mapping.get(f.subject, f.subject), f.role,
                             mapping.get(f.object, f.object))
    if isinstance(f, NominalAssertion):
        return NominalAssertion(mapping.get(f.nominal, f.nominal),
                                _rename_formula(f.body, mapping))
    return f


class _Search:
    """Depth-first backward search with loop pruning and a failure cache.

    Failures are cached against the depth budget they had available and
    only when no ancestor-loop pruning occurred underneath, so a cache
    hit is always a sound reason to fail again.
    """

    def __init__(self, root: Sequent, max_depth: int, max_visited: int):
        self.max_depth = max_depth
        self.max_visited = max_visited
        self.visited = 0
        self.exhausted = False
        self.failed: dict[Sequent, int] = {}
        self.used_nominals = set(nominals_of(root))
        self.counter = count()

    def fresh_nominal(self) -> str:
        while True:
            name = f"_n{next(self.counter)}"
            if name not in self.used_nominals:
                self.used_nominals.add(name)
                return name

    def normalize(self, seq: Sequent) -> Sequent:
        order: list[str] = []
        scan = sorted(seq.antecedent, key=render) + [seq.succedent]
        for f in scan:
            for nom in _nominals_in_order(f):
                if _ENGINE_NOMINAL.match(nom) and nom not in order:
                    order.append(nom)
        if not order:
            return seq
        mapping = {n: f"_c{i}" for i, n in enumerate(order)}
        return Sequent(frozenset(_rename_formula(f, mapping) for f in seq.antecedent),
                       _rename_formula(seq.succedent, mapping))

    def prove(self, seq: Sequent, depth: int,
              ancestors: frozenset) -> tuple[Optional[ProofTree], bool]:
        """Returns (tree or None, clean) where clean means the failure is
        depth-cacheable (no loop pruning was involved)."""
        if self.exhausted:
            return None, False
        key = self.normalize(seq)
        if key in ancestors:
            return None, False
        if self.failed.get(key, -1) >= depth:
            return None, True
        self.visited += 1
        if self.visited > self.max_visited:
            self.exhausted = True
            return None, False
        clean = True
        if depth > 0:
            inner = ancestors | {key}
            for rule, params, subgoals in self._candidates(seq):
                trees = []
                for sub in subgoals:
                    t, sub_clean = self.prove(sub, depth - 1, inner)
                    clean = clean and sub_clean
                    if t is None:
                        break
                    trees.append(t)
                else:
                    return ProofTree(seq, rule, params, tuple(trees)), True
        else:
            clean = False
        if clean:
            prev = self.failed.get(key, -1)
            if depth > prev:
                self.failed[key] = depth
        return None, clean

    def _candidates(self, seq: Sequent) -> Iterator[tuple[str, RuleParams, tuple]]:
        ant, succ = seq.antecedent, seq.succedent
        members = sorted(ant, key=render)

        if succ in ant:
            yield "axiom", _NO_PARAMS, ()
            return
        if any(_is_bot_member(m) for m in members):
            yield "bot-l", _NO_PARAMS, ()
            return

        # invertible decompositions first
        for m in members:
            for nominal in (False, True):
                split = _split_binary(m, And, nominal)
                if split:
                    prem = Sequent((ant - {m}) | set(split), succ)
                    yield ("n-and-l" if nominal else "and-l",
                           RuleParams(principal=m), (prem,))

        for m in members:
            nc = _nom_concept(m)
            if nc and isinstance(nc[1], Exists):
                x, q = nc
                y = self.fresh_nominal()
                prem = Sequent((ant - {m}) | {RoleAssertion(x, q.role, y),
                                              NominalAssertion(y, ConceptF(q.body))},
                               succ)
                yield ("exists-l",
                       RuleParams(principal=m, role=q.role, nominal=y), (prem,))

        for nominal in (False, True):
            split = _split_binary(succ, And, nominal)
            if split:
                yield ("n-and-r" if nominal else "and-r", _NO_PARAMS,
                       (Sequent(ant, split[0]), Sequent(ant, split[1])))
            split = _split_binary(succ, Subs, nominal)
            if split:
                yield ("n-sub-r" if nominal else "sub-r", _NO_PARAMS,
                       (Sequent(ant | {split[0]}, split[1]),))

        for m in members:
            for nominal in (False, True):
                split = _split_binary(m, Or, nominal)
                if split:
                    rest = ant - {m}
                    yield ("n-or-l" if nominal else "or-l",
                           RuleParams(principal=m),
                           (Sequent(rest | {split[0]}, succ),
                            Sequent(rest | {split[1]}, succ)))

        nc = _nom_concept(succ)
        if nc and isinstance(nc[1], Forall):
            x, q = nc
            y = self.fresh_nominal()
            prem = Sequent(ant | {RoleAssertion(x, q.role, y)},
                           NominalAssertion(y, ConceptF(q.body)))
            yield "forall-r", RuleParams(role=q.role, nominal=y), (prem,)

        # branching / non-invertible choices
        for nominal in (False, True):
            split = _split_binary(succ, Or, nominal)
            if split:
                yield ("n-or1-r" if nominal else "or1-r", _NO_PARAMS,
                       (Sequent(ant, split[0]),))
                yield ("n-or2-r" if nominal else "or2-r", _NO_PARAMS,
                       (Sequent(ant, split[1]),))

        if nc and isinstance(nc[1], Exists):
            x, q = nc
            for m in members:
                if (isinstance(m, RoleAssertion) and m.subject == x
                        and m.role == q.role):
                    yield ("exists-r", RuleParams(role=q.role, nominal=m.object),
                           (Sequent(ant, m),
                            Sequent(ant, NominalAssertion(m.object, ConceptF(q.body)))))

        for m in members:
            for nominal in (False, True):
                split = _split_binary(m, Subs, nominal)
                if split:
                    ahat, bhat = split
                    yield ("n-sub-l" if nominal else "sub-l",
                           RuleParams(principal=m),
                           (Sequent(ant, ahat),
                            Sequent((ant - {m}) | {bhat}, succ)))

        for m in members:
            nc2 = _nom_concept(m)
            if nc2 and isinstance(nc2[1], Forall):
                x, q = nc2
                for m2 in members:
                    if (isinstance(m2, RoleAssertion) and m2.subject == x
                            and m2.role == q.role):
                        added = NominalAssertion(m2.object, ConceptF(q.body))
                        if added in ant:
                            continue
                        yield ("forall-l",
                               RuleParams(principal=m, role=q.role,
                                          nominal=m2.object),
                               (Sequent(ant | {added}, succ),))

        yield from self._promotions(seq, members)

    def _promotions(self, seq: Sequent, members) -> Iterator:
        ant, succ = seq.antecedent, seq.succedent
        concepts = [m for m in members if isinstance(m, ConceptF)]
        assertions = [m for m in members if not isinstance(m, ConceptF)]

        if isinstance(succ, ConceptF) and isinstance(succ.concept, Exists):
            role, body = succ.concept.role, succ.concept.body
            for alpha in concepts:
                if not (isinstance(alpha.concept, Exists)
                        and alpha.concept.role == role):
                    continue
                others = [c for c in concepts if c != alpha]
                if not all(isinstance(c.concept, Forall) and c.concept.role == role
                           for c in others):
                    continue
                prem_ant = ({ConceptF(c.concept.body) for c in others}
                            | set(assertions) | {ConceptF(alpha.concept.body)})
                yield ("p-exists",
                       RuleParams(principal=ConceptF(alpha.concept.body), role=role),
                       (Sequent(frozenset(prem_ant), ConceptF(body)),))

        if isinstance(succ, ConceptF) and isinstance(succ.concept, Forall):
            role, body = succ.concept.role, succ.concept.body
            if all(isinstance(c.concept, Forall) and c.concept.role == role
                   for c in concepts):
                prem_ant = ({ConceptF(c.concept.body) for c in concepts}
                            | set(assertions))
                yield ("p-forall", RuleParams(role=role),
                       (Sequent(frozenset(prem_ant), ConceptF(body)),))

        if isinstance(succ, NominalAssertion) and isinstance(succ.body, ConceptF):
            if not concepts:
                x = succ.nominal
                prem_ant = set()
                for m in assertions:
                    nc = _nom_concept(m)
                    if nc is not None and nc[0] == x:
                        prem_ant.add(ConceptF(nc[1]))
                    else:
                        prem_ant.add(m)
                prem = Sequent(frozenset(prem_ant), succ.body)
                if prem.antecedent != ant or prem.succedent != succ:
                    yield ("p-nom", RuleParams(prefix=x), (prem,))


def prove(s: Sequent, max_depth: int = 24, max_visited: int = 100_000) -> ProveResult:
    """Bounded, deterministic, cut-free backward search.

    Returns a tree whose root is s and which check_proof accepts, or no
    tree at all; exhausting either budget is an honest unknown, never a
    refutation.
    """
    search = _Search(s, max_depth, max_visited)
    tree, _ = search.prove(s, max_depth, frozenset())
    return ProveResult(tree, search.visited)


def find_countermodel(s: Sequent, sig: Signature,
                      tbox_global: bool = True) -> Optional[Interpretation]:
    """First enumerated model on which s fails, None if all satisfy it."""
    for I in enumerate_models(sig):
        if not sequent_valid(I, s, tbox_global):
            return I
    return None
