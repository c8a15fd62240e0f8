#!/usr/bin/env python3
"""
BGG EMBEDDING GRAPH
Reducibility points, the Weyl orbit of a starting signature, intertwining
differential operators between orbit nodes and their transitive reduction.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from .rational import format_rational, is_natural
from .rootsys import Root, RootSystem, WeylGroup, default_root_system, weyl_group
from .weights import (
    Signature,
    WeightLabels,
    hc_param,
    shifted_action,
    signature_of,
    subtract_root_multiple,
)

logger = logging.getLogger(__name__)


class MultipletGraphError(RuntimeError):
    """Raised when an orbit or its edges break an internal consistency rule"""


class EdgeKind(Enum):
    DIFF_OP = "DiffOp"
    KNAPP_STEIN = "KnappStein"
    DEGENERATED_KS = "DegeneratedKS"


EDGE_KIND_ORDER = {EdgeKind.DIFF_OP: 0, EdgeKind.DEGENERATED_KS: 1, EdgeKind.KNAPP_STEIN: 2}


@dataclass(frozen=True)
class ReduciblePoint:
    root: Root
    degree: int


@dataclass
class MultipletNode:
    """One orbit element, named by the canonical reduced word that reaches it"""
    id: str
    labels: WeightLabels
    signature: Signature
    aliases: List[str] = field(default_factory=list)

    @property
    def display_id(self) -> str:
        return self.id or "0"

    def names(self) -> List[str]:
        return [self.id] + list(self.aliases)

    def to_dict(self) -> Dict:
        return {
            "id": self.id,
            "n1": format_rational(self.labels.n1),
            "n2": format_rational(self.labels.n2),
            "c": format_rational(self.signature.c),
            "d": format_rational(self.signature.d),
            "aliases": list(self.aliases),
        }


@dataclass(frozen=True)
class Edge:
    """A directed arrow between two orbit nodes.

    root/degree are set for DiffOp and DegeneratedKS; frame_root is the
    root seen from the identity frame, w⁻¹(β) for a source with word w.
    """
    source: str
    target: str
    kind: EdgeKind
    root: Optional[int] = None
    degree: Optional[int] = None
    frame_root: Optional[int] = None
    compact: bool = False
    visible: bool = True
    direct: bool = True

    def to_dict(self) -> Dict:
        data = {
            "from": self.source,
            "to": self.target,
            "kind": self.kind.value,
            "root": self.root,
            "degree": self.degree,
        }
        if self.kind is EdgeKind.DIFF_OP:
            data["frame_root"] = self.frame_root
            data["compact"] = self.compact
        if self.kind is EdgeKind.DEGENERATED_KS:
            data["direct"] = self.direct
        return data


def reducibility_points(labels: WeightLabels, root_system: Optional[RootSystem] = None) -> List[ReduciblePoint]:
    """Positive roots whose Harish-Chandra parameter lies in ℕ"""
    rs = root_system or default_root_system()
    points = []
    for beta in rs.positive_roots():
        m = hc_param(labels, beta, rs)
        if is_natural(m):
            points.append(ReduciblePoint(beta, int(m)))
    return points


def orbit(start: WeightLabels, group: Optional[WeylGroup] = None) -> List[MultipletNode]:
    """Distinct images of start under W(G2), first reaching word as id.

    Group elements come shortest-then-lexicographic, so the first element
    to reach a label is its canonical name and later ones become aliases.
    """
    group = group or weyl_group()
    by_labels: Dict[WeightLabels, MultipletNode] = {}
    nodes: List[MultipletNode] = []

    for element in group:
        labels = shifted_action(element, start)
        if labels in by_labels:
            by_labels[labels].aliases.append(element.word)
            continue
        node = MultipletNode(element.word, labels, signature_of(labels))
        by_labels[labels] = node
        nodes.append(node)

    logger.debug("🔧 Orbit of %s has %d nodes", start.render(), len(nodes))
    return nodes


def node_index(nodes: Sequence[MultipletNode]) -> Dict[str, int]:
    return {node.id: position for position, node in enumerate(nodes)}


def embedding_graph(
    nodes: Sequence[MultipletNode],
    root_system: Optional[RootSystem] = None,
    group: Optional[WeylGroup] = None,
) -> List[Edge]:
    """Every DiffOp u → v with v = u - m_β(u)·β and m_β(u) ∈ ℕ"""
    rs = root_system or default_root_system()
    group = group or weyl_group(rs)
    by_labels = {node.labels: node for node in nodes}
    order = node_index(nodes)
    edges: List[Edge] = []

    for node in nodes:
        element = group.element(node.id)
        for point in reducibility_points(node.labels, rs):
            target_labels = subtract_root_multiple(node.labels, point.degree, point.root, rs)
            target = by_labels.get(target_labels)
            if target is None:
                raise MultipletGraphError(
                    f"{point.root.name} from χ_{node.display_id} lands outside the orbit at {target_labels.render()}"
                )

            frame = element.inverse_apply_root(point.root, rs)
            edges.append(
                Edge(
                    source=node.id,
                    target=target.id,
                    kind=EdgeKind.DIFF_OP,
                    root=point.root.index,
                    degree=point.degree,
                    frame_root=frame.index if frame is not None else None,
                )
            )

    return sort_edges(edges, order)


def sort_edges(edges: Iterable[Edge], order: Dict[str, int]) -> List[Edge]:
    return sorted(
        edges,
        key=lambda e: (EDGE_KIND_ORDER[e.kind], order[e.source], order[e.target], e.root or 0),
    )


def as_digraph(edges: Iterable[Edge], nodes: Optional[Sequence[MultipletNode]] = None) -> nx.DiGraph:
    graph = nx.DiGraph()
    if nodes is not None:
        graph.add_nodes_from(node.id for node in nodes)
    for edge in edges:
        graph.add_edge(edge.source, edge.target)
    return graph


def transitive_reduction(edges: Sequence[Edge]) -> List[Edge]:
    """DiffOp edges not implied by a longer directed path"""
    diff_ops = [e for e in edges if e.kind is EdgeKind.DIFF_OP]
    graph = as_digraph(diff_ops)
    if not nx.is_directed_acyclic_graph(graph):
        raise MultipletGraphError("embedding graph has a directed cycle")

    reduced = nx.transitive_reduction(graph)
    kept = [e for e in diff_ops if reduced.has_edge(e.source, e.target)]
    logger.debug("🔧 Transitive reduction kept %d of %d arrows", len(kept), len(diff_ops))
    return kept


