"""Sequent corpora for soundness sweeps: axiom roots and random instances."""

from __future__ import annotations

import random
from typing import Sequence

from .syntax import (
    And, Atom, BOT, Concept, ConceptF, Exists, Forall, NominalAssertion,
    Not, Or, Sequent, Subs, TOP,
)

__all__ = ["axiom_root_sequent", "random_concept", "schema_instance_corpus"]


def axiom_root_sequent(i: int, alpha: Concept, beta: Concept,
                       role: str = "R", nominal: str = "x") -> Sequent:
    """Root sequent of the i-th axiom derivation, with alpha/beta
    substituted for the schematic concepts."""
    ex, fa = Exists(role, alpha), Forall(role, alpha)
    exb, fab = Exists(role, beta), Forall(role, beta)
    if i == 1:
        return Sequent.make([ConceptF(Forall(role, Subs(alpha, beta)))],
                            ConceptF(Subs(ex, exb)))
    if i == 2:
        return Sequent.make([ConceptF(Forall(role, Subs(alpha, beta)))],
                            ConceptF(Subs(fa, fab)))
    if i == 3:
        return Sequent.make(
            [], NominalAssertion(nominal, ConceptF(Subs(Exists(role, BOT), BOT))))
    if i == 4:
        return Sequent.make(
            [NominalAssertion(nominal, ConceptF(Exists(role, Or(alpha, beta))))],
            NominalAssertion(nominal, ConceptF(Or(ex, exb))))
    if i == 5:
        return Sequent.make(
            [], NominalAssertion(nominal, ConceptF(
                Subs(Subs(ex, fab), Forall(role, Subs(alpha, beta))))))
    raise ValueError(f"axiom index {i} out of range")


def random_concept(rng: random.Random, atoms: Sequence[str],
                   roles: Sequence[str], depth: int) -> Concept:
    """Random concept of the given maximum connective depth."""
    if depth <= 0:
        roll = rng.random()
        if roll < 0.8:
            return Atom(rng.choice(list(atoms)))
        return TOP if roll < 0.9 else BOT
    kind = rng.choice(["atom", "not", "and", "or", "subs", "exists", "forall"])
    if kind == "atom":
        return Atom(rng.choice(list(atoms)))
    if kind == "not":
        return Not(random_concept(rng, atoms, roles, depth - 1))
    if kind in ("and", "or", "subs"):
        cls = {"and": And, "or": Or, "subs": Subs}[kind]
        return cls(random_concept(rng, atoms, roles, depth - 1),
                   random_concept(rng, atoms, roles, depth - 1))
    cls = Exists if kind == "exists" else Forall
    return cls(rng.choice(list(roles)), random_concept(rng, atoms, roles, depth - 1))


def schema_instance_corpus(per_axiom: int, seed: int,
                           atoms: Sequence[str] = ("A", "B"),
                           roles: Sequence[str] = ("R",),
                           depth: int = 2) -> list[Sequent]:
    """The five axiom roots plus per_axiom random instances of each."""
    rng = random.Random(seed)
    out = [axiom_root_sequent(i, Atom("A"), Atom("B")) for i in range(1, 6)]
    for i in range(1, 6):
        for _ in range(per_axiom):
            alpha = random_concept(rng, atoms, roles, depth)
            beta = random_concept(rng, atoms, roles, depth)
            out.append(axiom_root_sequent(i, alpha, beta))
    return out
