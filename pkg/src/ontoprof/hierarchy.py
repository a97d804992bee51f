"""Asserted subsumption graphs and the quantities structural features use.

Hierarchies connect named entities only; complex expressions never become
nodes.  Depth is measured on the strongly-connected-component condensation,
so asserted cycles cannot make it unbounded.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .model import (
    EquivalentClasses, NamedClass, Ontology, SubClassOf, SubObjectPropertyOf,
    named_classes_in,
)


@dataclass(frozen=True)
class Hierarchy:
    """Direct child-to-parent subsumption edges over a fixed node set."""

    nodes: frozenset[str]
    direct_edges: frozenset[tuple[str, str]]
    ndhc: int = field(init=False, compare=False)
    nidhc: int = field(init=False, compare=False)
    scc_map: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "ndhc", len(self.direct_edges))
        closure_size = _count_reachable_pairs(self.direct_edges)
        object.__setattr__(self, "nidhc", closure_size - len(self.direct_edges))
        object.__setattr__(self, "scc_map", _scc_map(self.nodes, self.direct_edges))

    def parents(self) -> dict[str, set[str]]:
        out: dict[str, set[str]] = defaultdict(set)
        for child, parent in self.direct_edges:
            out[child].add(parent)
        return out

    def children(self) -> dict[str, set[str]]:
        out: dict[str, set[str]] = defaultdict(set)
        for child, parent in self.direct_edges:
            out[parent].add(child)
        return out


def _adjacency(edges) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
    return adj


def _count_reachable_pairs(edges) -> int:
    """Number of (u, v) pairs with a directed path of length >= 1 from u to v.

    Counts per source without materializing the closure, so deep hierarchies
    cost memory proportional to the node count, not the pair count.
    """
    adj = _adjacency(edges)
    total = 0
    for source in list(adj):
        seen: set[str] = set()
        stack = list(adj[source])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj.get(v, ()))
        total += len(seen)
    return total


def _scc_map(nodes, edges) -> dict[str, int]:
    """Tarjan's algorithm, iterative; component ids in discovery order."""
    adj = _adjacency(edges)
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comp: dict[str, int] = {}
    counter = 0
    n_comps = 0

    for root in sorted(nodes):
        if root in index:
            continue
        work = [(root, iter(sorted(adj[root])))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = n_comps
                    if w == v:
                        break
                n_comps += 1
    return comp


def build_class_hierarchy(o: Ontology) -> Hierarchy:
    """Edges from named-to-named SubClassOf plus mutual edges for all-named
    equivalences; axioms with any complex side contribute nothing."""
    edges: set[tuple[str, str]] = set()
    for ax in o.tbox:
        if isinstance(ax, SubClassOf):
            if isinstance(ax.sub, NamedClass) and isinstance(ax.sup, NamedClass):
                edges.add((ax.sub.iri, ax.sup.iri))
        elif isinstance(ax, EquivalentClasses):
            if all(isinstance(op, NamedClass) for op in ax.operands):
                names = [op.iri for op in ax.operands]
                for a in names:
                    for b in names:
                        if a != b:
                            edges.add((a, b))
    return Hierarchy(nodes=o.signature.classes, direct_edges=frozenset(edges))


def build_property_hierarchy(o: Ontology) -> Hierarchy:
    """Edges only from named-to-named SubObjectPropertyOf; chains and all
    characteristic axioms are ignored."""
    edges: set[tuple[str, str]] = set()
    for ax in o.rbox:
        if isinstance(ax, SubObjectPropertyOf) and not ax.is_chain:
            if isinstance(ax.sub, str) and isinstance(ax.sup, str):
                edges.add((ax.sub, ax.sup))
    return Hierarchy(nodes=o.signature.object_properties, direct_edges=frozenset(edges))


def max_depth(h: Hierarchy) -> int:
    """Longest path (in edges) through the condensation of the direct graph."""
    comp = h.scc_map
    if not comp and not h.nodes:
        return 0
    comp_ids = set(comp.values())
    succ: dict[int, set[int]] = defaultdict(set)
    indegree: dict[int, int] = {c: 0 for c in comp_ids}
    for child, parent in h.direct_edges:
        cu, cv = comp[child], comp[parent]
        if cu != cv and cv not in succ[cu]:
            succ[cu].add(cv)
            indegree[cv] += 1
    # Longest-path DP over a topological order of the condensation DAG.
    dist = {c: 0 for c in comp_ids}
    queue = [c for c in comp_ids if indegree[c] == 0]
    while queue:
        u = queue.pop()
        for v in succ[u]:
            dist[v] = max(dist[v], dist[u] + 1)
            indegree[v] -= 1
            if indegree[v] == 0:
                queue.append(v)
    return max(dist.values(), default=0)


def fanout_stats(h: Hierarchy) -> tuple[int, float]:
    """(max direct children per node, direct edges divided by node count)."""
    if not h.nodes:
        return 0, 0.0
    children = h.children()
    msb = max((len(c) for c in children.values()), default=0)
    return msb, len(h.direct_edges) / len(h.nodes)


def tangledness(h: Hierarchy) -> tuple[int, int]:
    """(nodes with two or more direct parents, max direct-parent count)."""
    parents = h.parents()
    if not h.nodes:
        return 0, 0
    count = sum(1 for p in parents.values() if len(p) >= 2)
    max_parents = max((len(p) for p in parents.values()), default=0)
    return count, max_parents


def cyclic_classes(o: Ontology) -> frozenset[str]:
    """Named classes on an explicit definition cycle.

    A depends on B when B occurs anywhere in the defining sides of A's
    SubClassOf or EquivalentClasses axioms; cycles are self-loops or
    components of size two or more in that dependency graph.
    """
    deps: dict[str, set[str]] = defaultdict(set)
    for ax in o.tbox:
        if isinstance(ax, SubClassOf) and isinstance(ax.sub, NamedClass):
            deps[ax.sub.iri] |= named_classes_in(ax.sup)
        elif isinstance(ax, EquivalentClasses):
            for i, op in enumerate(ax.operands):
                if not isinstance(op, NamedClass):
                    continue
                for j, other in enumerate(ax.operands):
                    if i != j:
                        deps[op.iri] |= named_classes_in(other)
    nodes = set(deps)
    for targets in deps.values():
        nodes |= targets
    edges = {(a, b) for a, targets in deps.items() for b in targets}
    comp = _scc_map(nodes, edges)
    sizes: dict[int, int] = defaultdict(int)
    for c in comp.values():
        sizes[c] += 1
    cyclic = {n for n in nodes if sizes[comp[n]] >= 2}
    cyclic |= {a for a, b in edges if a == b}
    return frozenset(cyclic)
