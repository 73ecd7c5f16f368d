"""Exhaustive and random generation of validated interpretations.

Enumeration walks every interpretation over 1..max_worlds entities in a
fixed lexicographic order (world count, preorder bitmask, role bitmasks,
atom bitmasks, nominal assignment), keeping only role relations that
satisfy the frame conditions and only refinement-closed atom extensions.
Random generation rejection-samples roles against the frame conditions,
so both paths emit models that pass validation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

from .semantics import Interpretation, reflexive_transitive_closure
from .syntax import Sequent, atoms_of, nominals_of, roles_of

__all__ = [
    "Signature", "GenerationBudgetError", "enumerate_models",
    "heredity_closure", "random_model", "signature_for",
]


@dataclass(frozen=True)
class Signature:
    atoms: tuple[str, ...] = ()
    roles: tuple[str, ...] = ()
    nominals: tuple[str, ...] = ()
    max_worlds: int = 2

    def __post_init__(self):
        for kind, names in (("atom", self.atoms), ("role", self.roles),
                            ("nominal", self.nominals)):
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate {kind} names: {names}")
        if self.max_worlds < 1:
            raise ValueError("max_worlds must be at least 1")


class GenerationBudgetError(RuntimeError):
    """Rejection sampling exhausted its retry budget."""


def signature_for(s: Sequent, max_worlds: int) -> Signature:
    """Smallest signature covering the symbols of a sequent."""
    return Signature(
        atoms=tuple(sorted(atoms_of(s))),
        roles=tuple(sorted(roles_of(s))),
        nominals=tuple(sorted(nominals_of(s))),
        max_worlds=max_worlds,
    )


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n)]


def _relation(mask: int, pairs: list[tuple[int, int]]) -> frozenset:
    return frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)


def _is_preorder(rel: frozenset, n: int) -> bool:
    if any((w, w) not in rel for w in range(n)):
        return False
    return all((a, d) in rel for (a, b) in rel for (c, d) in rel if b == c)


def frame_ok(rel: frozenset, leq: frozenset, worlds: Iterable[int]) -> bool:
    """Both frame conditions for one role relation against a preorder."""
    worlds = list(worlds)
    for (w, w2) in leq:
        for (a, v) in rel:
            if a != w:
                continue
            if not any((w2, v2) in rel and (v, v2) in leq for v2 in worlds):
                return False
    for (v, v2) in leq:
        for (w, b) in rel:
            if b != v:
                continue
            if not any((w2, v2) in rel and (w, w2) in leq for w2 in worlds):
                return False
    return True


@lru_cache(maxsize=None)
def _preorders(n: int) -> tuple[frozenset, ...]:
    pairs = _pairs(n)
    return tuple(rel for mask in range(1 << n * n)
                 for rel in [_relation(mask, pairs)] if _is_preorder(rel, n))


@lru_cache(maxsize=None)
def _frame_relations(n: int, leq: frozenset) -> tuple[frozenset, ...]:
    pairs = _pairs(n)
    return tuple(rel for mask in range(1 << n * n)
                 for rel in [_relation(mask, pairs)]
                 if frame_ok(rel, leq, range(n)))


@lru_cache(maxsize=None)
def _upclosed_sets(n: int, leq: frozenset) -> tuple[frozenset, ...]:
    out = []
    for mask in range(1 << n):
        s = frozenset(w for w in range(n) if mask >> w & 1)
        if all(v in s for w in s for v in range(n) if (w, v) in leq):
            out.append(s)
    return tuple(out)


def enumerate_models(sig: Signature) -> Iterator[Interpretation]:
    """Every interpretation over 1..max_worlds entities, in a fixed order."""
    for n in range(1, sig.max_worlds + 1):
        worlds = tuple(range(n))
        for leq in _preorders(n):
            role_choices = _frame_relations(n, leq)
            atom_choices = _upclosed_sets(n, leq)
            for role_vec in product(role_choices, repeat=len(sig.roles)):
                for atom_vec in product(atom_choices, repeat=len(sig.atoms)):
                    for nom_vec in product(worlds, repeat=len(sig.nominals)):
                        yield Interpretation.make(
                            worlds, leq,
                            roles=dict(zip(sig.roles, role_vec)),
                            atoms=dict(zip(sig.atoms, atom_vec)),
                            nominals=dict(zip(sig.nominals, nom_vec)),
                        )


def heredity_closure(valuation: Mapping[str, Iterable], leq: frozenset) -> dict:
    """Smallest refinement-closed superset of each atom extension."""
    closed = {}
    for name, ext in valuation.items():
        ext = set(ext)
        closed[name] = frozenset(ext | {v for (w, v) in leq if w in ext})
    return closed


_EDGE_P = 0.3      # off-diagonal refinement edges
_ROLE_P = 0.25     # role pairs per draw
_ATOM_P = 0.4      # atom membership before closure


def random_model(sig: Signature, seed: int, max_retries: int = 200) -> Interpretation:
    """Deterministic random model on exactly max_worlds entities.

    Roles are redrawn until they satisfy the frame conditions; raises
    GenerationBudgetError when max_retries draws all fail.
    """
    rng = random.Random(seed)
    n = sig.max_worlds
    worlds = tuple(range(n))
    base = [(i, j) for i in range(n) for j in range(n)
            if i != j and rng.random() < _EDGE_P]
    leq = reflexive_transitive_closure(base, worlds)
    roles = {}
    for role in sig.roles:
        for _ in range(max_retries):
            rel = frozenset(p for p in _pairs(n) if rng.random() < _ROLE_P)
            if frame_ok(rel, leq, worlds):
                roles[role] = rel
                break
        else:
            raise GenerationBudgetError(
                f"no frame-compatible relation for role {role} "
                f"after {max_retries} draws (seed {seed})")
    raw_atoms = {a: {w for w in worlds if rng.random() < _ATOM_P}
                 for a in sig.atoms}
    atoms = heredity_closure(raw_atoms, leq)
    nominals = {x: rng.choice(worlds) for x in sig.nominals}
    return Interpretation.make(worlds, leq, roles, atoms, nominals)
