#!/usr/bin/env python3
"""
MULTIPLET ASSEMBLY
Builds the full multiplet graph for (m1, m2, parabolic): orbit, DiffOp and
Knapp-Stein edges, components, case classification and special subspaces.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

import networkx as nx

from .bgg import (
    Edge,
    EdgeKind,
    MultipletNode,
    embedding_graph,
    node_index,
    orbit,
    sort_edges,
    transitive_reduction,
)
from .parabolic import (
    ParabolicDesc,
    ParabolicName,
    classify_edges,
    get_parabolic,
    ks_degenerations,
    ks_pairs,
    ks_partner_map,
)
from .rational import RationalLike, checked, format_rational, in_lattice, is_natural
from .rootsys import RootSystem, default_root_system, weyl_group
from .weights import WeightLabels, hc_params, weyl_dim

logger = logging.getLogger(__name__)


class CaseKind(Enum):
    MAIN_MINIMAL = "MainMinimal"
    REDUCED_M1 = "ReducedM1"
    REDUCED_M2 = "ReducedM2"
    REMARK_DOUBLET = "RemarkDoublet"
    P1_MAIN_GENERIC = "P1MainGeneric"
    P1_MAIN_HALF_RELAXED = "P1MainHalfRelaxed"
    M11 = "M11"
    M12_GENERIC = "M12Generic"
    M12_HALF_RELAXED = "M12HalfRelaxed"
    P2_MAIN_GENERIC = "P2MainGeneric"
    P2_MAIN_HALF_RELAXED = "P2MainHalfRelaxed"
    P2_MAIN_THIRD_RELAXED = "P2MainThirdRelaxed"
    M22 = "M22"
    M21_GENERIC = "M21Generic"
    M21_HALF_RELAXED = "M21HalfRelaxed"
    M21_THIRD_QUARTET = "M21ThirdQuartet"
    UNLISTED = "Unlisted"


@dataclass(frozen=True)
class CaseLabel:
    kind: CaseKind
    k: Optional[int] = None

    @property
    def name(self) -> str:
        if self.kind is CaseKind.REMARK_DOUBLET:
            return f"{self.kind.value}({self.k})"
        return self.kind.value


class SubspaceKind(Enum):
    FINITE_DIM = "FiniteDim"
    D0 = "DiscreteSeriesD0"
    D1 = "DiscreteSeriesD1"
    D2 = "DiscreteSeriesD2"
    D_PRIME0 = "SubrepDPrime0"
    D_PRIME1 = "SubrepDPrime1"


@dataclass
class SpecialSubspace:
    node_id: str
    kind: SubspaceKind
    d: Fraction
    dim: Optional[int] = None

    def to_dict(self) -> Dict:
        return {
            "node": self.node_id,
            "kind": self.kind.value,
            "d": format_rational(self.d),
            "dim": self.dim,
        }


@dataclass
class Component:
    node_ids: List[str]
    subtype: str = "none"
    parabolic: ParabolicName = ParabolicName.P0

    @property
    def label(self) -> str:
        if self.subtype in ("A", "B", "C"):
            return f"{self.subtype}{self.parabolic.value[1]}"
        return self.subtype

    def to_dict(self) -> Dict:
        return {"nodes": list(self.node_ids), "subtype": self.subtype, "label": self.label}


@dataclass
class MultipletGraph:
    m1: Fraction
    m2: Fraction
    parabolic: ParabolicDesc
    nodes: List[MultipletNode]
    edges: List[Edge]
    reduced_edges: List[Edge]
    suppressed_edges: List[Edge]
    case: CaseLabel
    components: List[Component] = field(default_factory=list)
    specials: List[SpecialSubspace] = field(default_factory=list)
    ks_partners: Dict[str, str] = field(default_factory=dict)

    def node(self, node_id: str) -> MultipletNode:
        for node in self.nodes:
            if node_id in node.names():
                return node
        raise KeyError(f"no node named {node_id!r}")

    def edges_of(self, kind: EdgeKind) -> List[Edge]:
        return [e for e in self.edges if e.kind is kind]

    def component_of(self, node_id: str) -> Component:
        canonical = self.node(node_id).id
        for component in self.components:
            if canonical in component.node_ids:
                return component
        raise KeyError(f"{node_id!r} is in no component")

    def to_dict(self) -> Dict:
        return {
            "parameters": {"m1": format_rational(self.m1), "m2": format_rational(self.m2)},
            "parabolic": self.parabolic.name.value,
            "case": self.case.name,
            "nodes": [node.to_dict() for node in self.nodes],
            "edges": [edge.to_dict() for edge in self.edges],
            "reduced_edges": [edge.to_dict() for edge in self.reduced_edges],
            "suppressed_edges": [edge.to_dict() for edge in self.suppressed_edges],
            "components": [component.to_dict() for component in self.components],
            "specials": [special.to_dict() for special in self.specials],
        }


def _on_small_lattice(value: Fraction) -> bool:
    return any(in_lattice(value, k) for k in (1, 2, 3))


def classify(m1: RationalLike, m2: RationalLike, parabolic) -> CaseLabel:
    """Case of (m1, m2) for parabolic; anything outside the catalog is Unlisted"""
    m1, m2 = checked(Fraction(m1)), checked(Fraction(m2))
    desc = get_parabolic(parabolic)
    unlisted = CaseLabel(CaseKind.UNLISTED)
    if m1 < 0 or m2 < 0:
        return unlisted

    if desc.name is ParabolicName.P0:
        if m1 == 0:
            return CaseLabel(CaseKind.REDUCED_M1) if is_natural(m2) else unlisted
        if m2 == 0:
            return CaseLabel(CaseKind.REDUCED_M2) if is_natural(m1) else unlisted
        if is_natural(m1) and is_natural(m2):
            return CaseLabel(CaseKind.MAIN_MINIMAL)
        naturals = hc_params(WeightLabels(m1, m2)).naturals()
        if len(naturals) == 1 and (_on_small_lattice(m1) or _on_small_lattice(m2)):
            return CaseLabel(CaseKind.REMARK_DOUBLET, next(iter(naturals)))
        return unlisted

    if desc.name is ParabolicName.P1:
        if m1 == 0:
            return CaseLabel(CaseKind.M11) if is_natural(m2) else unlisted
        if m2 == 0:
            if is_natural(m1):
                return unlisted
            if in_lattice(m1, 2):
                return CaseLabel(CaseKind.M12_HALF_RELAXED)
            return CaseLabel(CaseKind.M12_GENERIC)
        if is_natural(m2):
            if is_natural(m1):
                return unlisted
            if in_lattice(m1, 2):
                return CaseLabel(CaseKind.P1_MAIN_HALF_RELAXED)
            return CaseLabel(CaseKind.P1_MAIN_GENERIC)
        return unlisted

    # P2
    if m2 == 0:
        return CaseLabel(CaseKind.M22) if is_natural(m1) else unlisted
    if m1 == 0:
        if is_natural(m2):
            return unlisted
        if in_lattice(m2, 2):
            return CaseLabel(CaseKind.M21_HALF_RELAXED)
        if in_lattice(m2, 3):
            return CaseLabel(CaseKind.M21_THIRD_QUARTET)
        return CaseLabel(CaseKind.M21_GENERIC)
    if is_natural(m1):
        if is_natural(m2):
            return unlisted
        if in_lattice(m2, 2):
            return CaseLabel(CaseKind.P2_MAIN_HALF_RELAXED)
        if in_lattice(m2, 3):
            return CaseLabel(CaseKind.P2_MAIN_THIRD_RELAXED)
        return CaseLabel(CaseKind.P2_MAIN_GENERIC)
    return unlisted


CHAIN_CASES = {CaseKind.REDUCED_M1, CaseKind.REDUCED_M2, CaseKind.M11, CaseKind.M22}

LETTERED_CASES = {
    CaseKind.P1_MAIN_GENERIC,
    CaseKind.P1_MAIN_HALF_RELAXED,
    CaseKind.M12_GENERIC,
    CaseKind.M12_HALF_RELAXED,
    CaseKind.P2_MAIN_GENERIC,
    CaseKind.P2_MAIN_HALF_RELAXED,
    CaseKind.P2_MAIN_THIRD_RELAXED,
    CaseKind.M21_GENERIC,
    CaseKind.M21_HALF_RELAXED,
}


def _subtype(ids: List[str], names: List[str], case: CaseLabel, desc: ParabolicDesc) -> str:
    """Component tag; ids are canonical node ids, names add their aliases"""
    if case.kind in CHAIN_CASES:
        return "chain"
    if case.kind is CaseKind.M21_THIRD_QUARTET:
        return "quartet" if len(ids) == 4 else "none"
    if case.kind in LETTERED_CASES:
        if "" in names:
            return "A"
        if ("1" if desc.name is ParabolicName.P1 else "2") in names:
            return "B"
        return "C"
    return "none"


def _components(
    nodes: List[MultipletNode], edges: List[Edge], case: CaseLabel, desc: ParabolicDesc
) -> List[Component]:
    graph = nx.Graph()
    graph.add_nodes_from(node.id for node in nodes)
    graph.add_edges_from((e.source, e.target) for e in edges)

    order = node_index(nodes)
    by_id = {node.id: node for node in nodes}
    components = []
    for members in nx.connected_components(graph):
        ids = sorted(members, key=order.__getitem__)
        names = [name for node_id in ids for name in by_id[node_id].names()]
        components.append(Component(ids, _subtype(ids, names, case, desc), desc.name))
    components.sort(key=lambda c: order[c.node_ids[0]])
    return components


def special_subspaces(graph: MultipletGraph, root_system: Optional[RootSystem] = None) -> List[SpecialSubspace]:
    """Finite-dimensional and discrete-series subspaces singled out by the case"""
    kind = graph.case.kind
    bottom = graph.node("")
    top = graph.node(graph.ks_partners[bottom.id])
    specials = []

    if kind is CaseKind.MAIN_MINIMAL:
        dim = weyl_dim(bottom.labels, root_system)
        specials.append(SpecialSubspace(bottom.id, SubspaceKind.FINITE_DIM, bottom.signature.d, int(dim)))
        specials.append(SpecialSubspace(top.id, SubspaceKind.D0, top.signature.d))
    elif kind in (CaseKind.REDUCED_M1, CaseKind.M11):
        specials.append(SpecialSubspace(top.id, SubspaceKind.D1, top.signature.d))
    elif kind in (CaseKind.REDUCED_M2, CaseKind.M22):
        specials.append(SpecialSubspace(top.id, SubspaceKind.D2, top.signature.d))
    elif kind is CaseKind.P2_MAIN_HALF_RELAXED:
        specials.append(SpecialSubspace(top.id, SubspaceKind.D_PRIME0, top.signature.d))
    elif kind is CaseKind.M21_HALF_RELAXED:
        specials.append(SpecialSubspace(top.id, SubspaceKind.D_PRIME1, top.signature.d))
    return specials


def build(
    m1: RationalLike,
    m2: RationalLike,
    parabolic,
    root_system: Optional[RootSystem] = None,
) -> MultipletGraph:
    """Assemble the multiplet for starting labels (m1, m2) under parabolic"""
    rs = root_system or default_root_system()
    desc = get_parabolic(parabolic)
    start = WeightLabels(Fraction(m1), Fraction(m2))
    group = weyl_group(rs)

    nodes = orbit(start, group)
    order = node_index(nodes)
    diff_ops = classify_edges(embedding_graph(nodes, rs, group), desc, start)
    visible = [e for e in diff_ops if e.visible]
    suppressed = [e for e in diff_ops if not e.visible]
    reduced = transitive_reduction(visible)

    degenerate, knapp_stein = ks_degenerations(nodes, ks_pairs(nodes), visible, reduced)
    edges = sort_edges(visible + degenerate + knapp_stein, order)
    case = classify(start.n1, start.n2, desc)

    graph = MultipletGraph(
        m1=start.n1,
        m2=start.n2,
        parabolic=desc,
        nodes=nodes,
        edges=edges,
        reduced_edges=reduced,
        suppressed_edges=suppressed,
        case=case,
        components=_components(nodes, edges, case, desc),
        ks_partners=ks_partner_map(nodes),
    )
    graph.specials = special_subspaces(graph, rs)

    logger.info(
        "✅ Built %s multiplet at %s: %d nodes, %d edges, case %s",
        desc.name.value,
        start.render(),
        len(nodes),
        len(edges),
        case.name,
    )
    return graph


def verify_paper_fixtures(root_system: Optional[RootSystem] = None):
    """Run the tabulated fixture suite; see paper_fixtures.run_fixtures"""
    from .paper_fixtures import run_fixtures

    return run_fixtures(root_system)
