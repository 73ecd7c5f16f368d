import json

import pytest

from ialc.golden import AXIOM_ROOTS, axiom_trees
from ialc.sequent import (
    ProofTree, RULE_LABELS, check_proof, load_proof, tree_to_dict,
)
from ialc.syntax import parse_sequent


@pytest.fixture(scope="module")
def trees():
    return axiom_trees()


def test_all_five_trees_accepted(trees):
    for i, t in trees.items():
        assert check_proof(t).ok, i


def test_roots_are_the_published_sequents(trees):
    for i, t in trees.items():
        assert t.conclusion == parse_sequent(AXIOM_ROOTS[i])


def test_tree_shapes(trees):
    def rules_of(t):
        yield t.rule
        for c in t.premises:
            yield from rules_of(c)
    assert list(rules_of(trees[1])) == ["sub-r", "p-exists", "sub-l",
                                        "axiom", "axiom"]
    assert list(rules_of(trees[2])) == ["sub-r", "p-forall", "sub-l",
                                        "axiom", "axiom"]
    assert list(rules_of(trees[3])) == ["n-sub-r", "exists-l", "bot-l"]
    assert "n-or-l" in set(rules_of(trees[4]))
    assert list(rules_of(trees[5])) == [
        "n-sub-r", "forall-r", "n-sub-r", "n-sub-l",
        "exists-r", "axiom", "axiom", "forall-l", "axiom"]


def _paths(tree, path=()):
    yield path
    for i, c in enumerate(tree.premises):
        yield from _paths(c, path + (i,))


def _relabel(tree, path, label):
    if not path:
        return ProofTree(tree.conclusion, label, tree.params, tree.premises)
    premises = list(tree.premises)
    premises[path[0]] = _relabel(premises[path[0]], path[1:], label)
    return ProofTree(tree.conclusion, tree.rule, tree.params, tuple(premises))


def _rule_at(tree, path):
    for i in path:
        tree = tree.premises[i]
    return tree.rule


def test_every_single_label_mutation_rejected(trees):
    for i, tree in trees.items():
        for path in _paths(tree):
            original = _rule_at(tree, path)
            for label in RULE_LABELS:
                if label == original:
                    continue
                mutated = _relabel(tree, path, label)
                assert not check_proof(mutated).ok, (i, path, label)


def test_steps_check_without_params_too(trees):
    # params only narrow the instantiation search; inference alone must
    # validate every golden node
    from ialc.sequent import check_step

    def walk(t):
        yield t
        for c in t.premises:
            yield from walk(c)

    for i, tree in trees.items():
        for node in walk(tree):
            assert check_step(node.rule, None,
                              [c.conclusion for c in node.premises],
                              node.conclusion), (i, node.rule)


def test_repository_files_match_generated_trees(trees, golden_dir):
    for i, tree in trees.items():
        path = golden_dir / f"axiom{i}.prf"
        on_disk = json.loads(path.read_text())
        assert on_disk == tree_to_dict(tree), path
        assert check_proof(load_proof(str(path))).ok
