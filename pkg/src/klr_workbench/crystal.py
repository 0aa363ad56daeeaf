"""The Kashiwara crystal on p-restricted partitions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cartan import Content, cartan_entry
from .partitions import (
    Node,
    Partition,
    add_node,
    addable_nodes,
    content,
    format_partition,
    remove_node,
    removable_nodes,
)


@dataclass(frozen=True)
class SignatureReport:
    i: int
    nodes: tuple[Node, ...]
    signs: tuple[str, ...]
    reduced: tuple[str, ...]
    normal: tuple[int, ...]
    conormal: tuple[int, ...]

    @property
    def epsilon(self) -> int:
        return len(self.normal)

    @property
    def phi(self) -> int:
        return len(self.conormal)

    def normal_nodes(self) -> list[Node]:
        """i-normal nodes, left to right."""
        return [self.nodes[k] for k in sorted(self.normal)]

    def conormal_nodes(self) -> list[Node]:
        return [self.nodes[k] for k in self.conormal]

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "nodes": [list(A) for A in self.nodes],
            "signs": "".join(self.signs),
            "reduced": "".join(self.reduced),
            "epsilon": self.epsilon,
            "phi": self.phi,
        }


def cancel_signs(signs: list[str]) -> list[str]:
    """Cancel +- pairs with a stack: each - kills the nearest unmatched + to its left."""
    out = list(signs)
    stack = []
    for k, s in enumerate(signs):
        if s == "+":
            stack.append(k)
        elif s == "-" and stack:
            out[stack.pop()] = "0"
            out[k] = "0"
    return out


def cancel_signs_literal(signs: list[str]) -> list[str]:
    """Fixed-point version: repeatedly zero a + and a later - with only zeros between."""
    out = list(signs)
    changed = True
    while changed:
        changed = False
        for r in range(len(out)):
            if out[r] != "+":
                continue
            s = r + 1
            while s < len(out) and out[s] == "0":
                s += 1
            if s < len(out) and out[s] == "-":
                out[r] = out[s] = "0"
                changed = True
    return out


def signature(p: int, mu: Partition, i: int) -> SignatureReport:
    i %= p
    tagged = [(A, "+") for A in addable_nodes(mu, p, i)] + [(A, "-") for A in removable_nodes(mu, p, i)]
    tagged.sort(key=lambda x: x[0][1])
    nodes = tuple(A for A, _ in tagged)
    signs = tuple(s for _, s in tagged)
    reduced = tuple(cancel_signs(list(signs)))
    normal = tuple(k for k in range(len(reduced) - 1, -1, -1) if reduced[k] == "-")
    conormal = tuple(k for k in range(len(reduced)) if reduced[k] == "+")
    return SignatureReport(i, nodes, signs, reduced, normal, conormal)


def epsilon(p: int, mu: Partition, i: int) -> int:
    return signature(p, mu, i).epsilon


def phi(p: int, mu: Partition, i: int) -> int:
    return signature(p, mu, i).phi


def e_tilde(p: int, mu: Partition, i: int) -> Partition | None:
    sig = signature(p, mu, i)
    if not sig.normal:
        return None
    return remove_node(mu, sig.nodes[sig.normal[0]])


def f_tilde(p: int, mu: Partition, i: int) -> Partition | None:
    sig = signature(p, mu, i)
    if not sig.conormal:
        return None
    return add_node(mu, sig.nodes[sig.conormal[0]])


@dataclass(frozen=True)
class Weight:
    """Lambda_0 - cont(mu)."""

    p: int
    content: Content

    def pair(self, i: int) -> int:
        """(wt, alpha_i) using (Lambda_0, alpha_j) = delta_{0j}."""
        i %= self.p
        return (1 if i == 0 else 0) - sum(cartan_entry(self.p, i, j) * c for j, c in enumerate(self.content.counts))

    def to_json(self) -> dict:
        return {"Lambda0": 1, "minus_content": self.content.to_json()}


def weight(p: int, mu: Partition) -> Weight:
    return Weight(p, content(p, mu))


@dataclass
class CrystalGraph:
    p: int
    n_max: int
    levels: list[list[Partition]]
    edges: list[tuple[Partition, int, Partition]]

    @property
    def vertices(self) -> list[Partition]:
        return [mu for level in self.levels for mu in level]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n_max": self.n_max,
            "vertices": [list(mu) for mu in self.vertices],
            "edges": [{"source": list(a), "color": i, "target": list(b)} for a, i, b in self.edges],
        }

    def to_dot(self) -> str:
        palette = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"]
        lines = ["digraph crystal {"]
        for mu in self.vertices:
            lines.append(f'  "{format_partition(mu)}";')
        for a, i, b in self.edges:
            color = palette[i % len(palette)]
            lines.append(f'  "{format_partition(a)}" -> "{format_partition(b)}" [label="{i}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(p: int, n_max: int) -> CrystalGraph:
    """All vertices reachable from the empty partition within size n_max, level by level."""
    levels: list[list[Partition]] = [[()]]
    edges = []
    for n in range(n_max):
        found = set()
        for mu in levels[n]:
            for i in range(p):
                nu = f_tilde(p, mu, i)
                if nu is not None:
                    edges.append((mu, i, nu))
                    found.add(nu)
        levels.append(sorted(found, reverse=True))
    return CrystalGraph(p, n_max, levels, edges)


def reachable_from_empty(p: int, n_max: int) -> set[Partition]:
    seen = {()}
    queue = deque([()])
    while queue:
        mu = queue.popleft()
        if sum(mu) >= n_max:
            continue
        for i in range(p):
            nu = f_tilde(p, mu, i)
            if nu is not None and nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return seen
