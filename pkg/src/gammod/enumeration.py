"""Enumeration of increasing semimodules as a rooted tree of lattice paths.

Each node extends its parent's generator list by one gap g with g above the
parent's last collision value u_s and g outside the parent semimodule.  A
brute-force enumerator over all lean sets serves as the exhaustive oracle.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotAGap, NotIncreasing, TooLarge
from .semigroup import Semigroup
from .semimodule import GammaSemimodule, is_increasing, u_sequence

BRUTE_FORCE_BOUND = 80


@dataclass
class TreeNode:
    semimodule: GammaSemimodule
    u_last: int
    children: list = field(default_factory=list)

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children)

    def level_counts(self) -> list[int]:
        """Number of nodes per depth, the node itself at depth 0."""
        counts = []

        def walk(node, depth):
            if depth == len(counts):
                counts.append(0)
            counts[depth] += 1
            for c in node.children:
                walk(c, depth + 1)

        walk(self, 0)
        return counts


def candidate_generators(sm: GammaSemimodule) -> list[int]:
    """Gaps g outside the semimodule with g > u_s, in increasing order.

    For the one-generator semimodule every gap is a candidate.
    """
    inc, useq = is_increasing(sm)
    if not inc:
        raise NotIncreasing(f"{sm.generators} is not increasing")
    if len(sm.generators) == 1:
        return [g.value for g in sm.semigroup.gaps()]
    u_last = useq.values[-1]
    return [g.value for g in sm.semigroup.gaps()
            if g.value > u_last and not sm.contains(g.value)]


def _build(node: TreeNode) -> TreeNode:
    sm = node.semimodule
    for g in candidate_generators(sm):
        child_sm = GammaSemimodule(sm.semigroup, sm.generators + [g])
        child = TreeNode(child_sm, u_sequence(child_sm).values[-1])
        node.children.append(_build(child))
    return node


def increasing_tree(semigroup: Semigroup, g1: int | None = None) -> TreeNode:
    """Complete tree of increasing semimodules with first generator g1.

    With g1 = None, returns the forest over all gaps under a synthetic
    super-root for the semimodule [0].  Children are ordered by increasing
    gap value, so the serialized output is canonical.
    """
    if g1 is None:
        root = TreeNode(GammaSemimodule(semigroup, [0]), 0)
        return _build(root)
    if g1 <= 0 or semigroup.contains(g1):
        raise NotAGap(f"{g1} is not a gap of <{semigroup.alpha},{semigroup.beta}>")
    sm = GammaSemimodule(semigroup, [0, g1])
    root = TreeNode(sm, u_sequence(sm).values[-1])
    return _build(root)


def brute_force_increasing(semigroup: Semigroup,
                           bound: int = BRUTE_FORCE_BOUND) -> list[GammaSemimodule]:
    """All increasing semimodules, by filtering every lean set.

    Lean sets are enumerated as chains of lattice points with strictly
    increasing a and strictly decreasing b.  Intended for small semigroups;
    TooLarge beyond the configured bound on alpha*beta.
    """
    if semigroup.alpha * semigroup.beta > bound:
        raise TooLarge(
            f"alpha*beta = {semigroup.alpha * semigroup.beta} exceeds bound {bound}")
    gaps = sorted(semigroup.gaps(), key=lambda g: (g.a, g.b))
    out = []

    def extend(chain, start):
        sm = GammaSemimodule(semigroup, [0] + sorted(g.value for g in chain))
        if is_increasing(sm)[0]:
            out.append(sm)
        last = chain[-1] if chain else None
        for idx in range(start, len(gaps)):
            g = gaps[idx]
            if last is None or (g.a > last.a and g.b < last.b):
                extend(chain + [g], idx + 1)

    extend([], 0)
    return sorted(out, key=lambda sm: tuple(sm.generators))


def export_tree(node: TreeNode, fmt: str) -> str:
    """Serialize a tree to DOT or JSON.

    The JSON schema is {"generators": [...], "u_last": n, "children": [...]}
    applied recursively; both formats are deterministic.
    """
    if fmt == "json":
        return json.dumps(_to_dict(node), separators=(",", ":"))
    if fmt == "dot":
        lines = ["digraph increasing_semimodules {"]
        counter = [0]

        def walk(n):
            my_id = f"n{counter[0]}"
            counter[0] += 1
            label = "[" + ",".join(str(g) for g in n.semimodule.generators) + "]"
            lines.append(f'  {my_id} [label="{label}"];')
            for c in n.children:
                child_id = walk(c)
                lines.append(f"  {my_id} -> {child_id};")
            return my_id

        walk(node)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown tree format {fmt!r}")


def _to_dict(node: TreeNode) -> dict:
    return {
        "generators": list(node.semimodule.generators),
        "u_last": node.u_last,
        "children": [_to_dict(c) for c in node.children],
    }


def tree_from_json(semigroup: Semigroup, text: str) -> TreeNode:
    """Inverse of the JSON export; round-trips exactly."""

    def build(d):
        sm = GammaSemimodule(semigroup, d["generators"])
        node = TreeNode(sm, d["u_last"])
        node.children = [build(c) for c in d["children"]]
        return node

    return build(json.loads(text))
