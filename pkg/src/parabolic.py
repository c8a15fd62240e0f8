#!/usr/bin/env python3
"""
CUSPIDAL PARABOLICS OF G2(2)
Catalog of P0, P1, P2, their nilradicals, the compact-root and visibility
classification of DiffOp edges, and Knapp-Stein pairing of orbit nodes.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .bgg import Edge, EdgeKind, MultipletGraphError, MultipletNode, node_index, sort_edges
from .rational import is_nonnegative_integer
from .rootsys import RootSystem, default_root_system, discrete_series_count
from .weights import WeightLabels, ks_partner

logger = logging.getLogger(__name__)


class ParabolicName(Enum):
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True)
class ParabolicDesc:
    name: ParabolicName
    m_compact_roots: FrozenSet[int]
    dim_a: int
    dim_n: int
    levi: str
    # Root index whose coefficient defines n (None for the minimal parabolic)
    grading_root: Optional[int] = None
    # Starting label that must be integral for the induced family
    integral_label: Optional[int] = None
    # Bruhat data, carried by the minimal parabolic only
    dim_n_tilde: Optional[int] = None
    m0: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            "name": self.name.value,
            "m_compact_roots": sorted(self.m_compact_roots),
            "dim_a": self.dim_a,
            "dim_n": self.dim_n,
            "levi": self.levi,
            "dim_n_tilde": self.dim_n_tilde,
            "m0": self.m0,
        }


@dataclass
class NilradicalReport:
    parabolic: ParabolicName
    roots: List[int]
    derived_roots: List[int]
    center_roots: List[int]
    lower_central_series: List[List[int]] = field(default_factory=list)

    @property
    def step(self) -> int:
        return len(self.lower_central_series)

    def to_dict(self) -> Dict:
        return {
            "parabolic": self.parabolic.value,
            "roots": self.roots,
            "derived": self.derived_roots,
            "center": self.center_roots,
            "step": self.step,
        }


CATALOG_CONSTANTS: Dict[ParabolicName, ParabolicDesc] = {
    ParabolicName.P0: ParabolicDesc(
        name=ParabolicName.P0,
        m_compact_roots=frozenset(),
        dim_a=2,
        dim_n=6,
        levi="M0 = Z2 x Z2, minimal",
        dim_n_tilde=6,
        m0="0",
    ),
    ParabolicName.P1: ParabolicDesc(
        name=ParabolicName.P1,
        m_compact_roots=frozenset({1}),
        dim_a=1,
        dim_n=5,
        levi="M1 = SL±(2,R) on α1, Heisenberg nilradical",
        grading_root=2,
        integral_label=2,
    ),
    ParabolicName.P2: ParabolicDesc(
        name=ParabolicName.P2,
        m_compact_roots=frozenset({2}),
        dim_a=1,
        dim_n=5,
        levi="M2 = SL±(2,R) on α2",
        grading_root=1,
        integral_label=1,
    ),
}


# Discrete series of G2(2): |W| / |W(K)| with K = su(2) + su(2)
DISCRETE_SERIES_COUNT = discrete_series_count()

def catalog() -> List[ParabolicDesc]:
    return [CATALOG_CONSTANTS[name] for name in ParabolicName]


def get_parabolic(name) -> ParabolicDesc:
    """Look up a parabolic by enum member or by its text name"""
    if isinstance(name, ParabolicDesc):
        return name
    try:
        key = name if isinstance(name, ParabolicName) else ParabolicName(str(name).upper())
    except ValueError:
        raise ValueError(f"unknown parabolic {name!r}; choose P0, P1 or P2") from None
    return CATALOG_CONSTANTS[key]


def nilradical(parabolic, root_system: Optional[RootSystem] = None) -> NilradicalReport:
    """Roots of n, its derived algebra, center and lower central series"""
    rs = root_system or default_root_system()
    desc = get_parabolic(parabolic)

    if desc.grading_root is None:
        roots = [r.index for r in rs.positive_roots()]
    else:
        slot = desc.grading_root - 1
        roots = [r.index for r in rs.positive_roots() if r.simple_coords[slot] > 0]
    root_set = set(roots)

    def bracket(left: Set[int], right: Set[int]) -> Set[int]:
        out = set()
        for i in left:
            for j in right:
                total = rs.root_sum(rs.root(i), rs.root(j))
                if total is not None and total.is_positive and total.index in root_set:
                    out.add(total.index)
        return out

    series = []
    term = set(root_set)
    while term:
        series.append(sorted(term))
        term = bracket(root_set, term)

    center = [i for i in roots if not bracket({i}, root_set)]
    return NilradicalReport(
        parabolic=desc.name,
        roots=sorted(roots),
        derived_roots=sorted(bracket(root_set, root_set)),
        center_roots=center,
        lower_central_series=series,
    )


def relaxed_label(desc: ParabolicDesc, start: WeightLabels) -> Optional[Fraction]:
    """The starting label that is allowed to be non-integral for this parabolic"""
    if desc.integral_label is None:
        return None
    return start.n1 if desc.integral_label == 2 else start.n2


def is_edge_visible(edge: Edge, desc: ParabolicDesc, start: WeightLabels) -> bool:
    """Whether the induced picture for desc retains this DiffOp.

    Non-compact roots along the grading frame always survive, simple roots
    survive off that frame, and an integral relaxed label keeps everything.
    """
    if desc.grading_root is None:
        return True
    relaxed = relaxed_label(desc, start)
    if relaxed is not None and is_nonnegative_integer(relaxed):
        return True

    compact = edge.root in desc.m_compact_roots
    if edge.frame_root == desc.grading_root:
        return not compact
    return edge.root in (1, 2)


def classify_edges(edges: Sequence[Edge], parabolic, start: WeightLabels) -> List[Edge]:
    """Mark each DiffOp with its compact flag and visibility under parabolic"""
    desc = get_parabolic(parabolic)
    classified = []
    for edge in edges:
        if edge.kind is not EdgeKind.DIFF_OP:
            classified.append(edge)
            continue
        classified.append(
            replace(
                edge,
                compact=edge.root in desc.m_compact_roots,
                visible=is_edge_visible(edge, desc, start),
            )
        )

    hidden = sum(1 for e in classified if not e.visible)
    if hidden:
        logger.debug("🔧 %s hides %d DiffOp edges", desc.name.value, hidden)
    return classified


def ks_partner_map(nodes: Sequence[MultipletNode]) -> Dict[str, str]:
    by_labels = {node.labels: node for node in nodes}
    partners = {}
    for node in nodes:
        partner = ks_partner(node.signature)
        match = by_labels.get(partner.labels)
        if match is None:
            raise MultipletGraphError(f"χ_{node.display_id} has no Knapp-Stein partner in the orbit")
        partners[node.id] = match.id
    return partners


def ks_pairs(nodes: Sequence[MultipletNode]) -> List[Edge]:
    """One KnappStein edge per partner pair, from the earlier node to the later"""
    order = node_index(nodes)
    partners = ks_partner_map(nodes)
    edges = []
    for source, target in partners.items():
        if order[source] < order[target]:
            edges.append(Edge(source=source, target=target, kind=EdgeKind.KNAPP_STEIN))
    return sort_edges(edges, order)


def ks_degenerations(
    nodes: Sequence[MultipletNode],
    ks_edges: Sequence[Edge],
    visible_edges: Sequence[Edge],
    reduced_edges: Sequence[Edge],
) -> Tuple[List[Edge], List[Edge]]:
    """Split KS pairs into degenerate ones and the rest.

    A pair degenerates when a visible DiffOp joins its two members; the
    DegeneratedKS arrow follows that DiffOp, and the surviving KnappStein
    arrow for the pair then runs back from the plus member.
    """
    order = node_index(nodes)
    by_pair = {(e.source, e.target): e for e in visible_edges if e.kind is EdgeKind.DIFF_OP}
    reduced = {(e.source, e.target) for e in reduced_edges}

    degenerate: List[Edge] = []
    knapp_stein: List[Edge] = []
    for ks in ks_edges:
        diff_op = by_pair.get((ks.source, ks.target)) or by_pair.get((ks.target, ks.source))
        if diff_op is None:
            knapp_stein.append(ks)
            continue
        degenerate.append(
            Edge(
                source=diff_op.source,
                target=diff_op.target,
                kind=EdgeKind.DEGENERATED_KS,
                root=diff_op.root,
                degree=diff_op.degree,
                frame_root=diff_op.frame_root,
                direct=(diff_op.source, diff_op.target) in reduced,
            )
        )
        knapp_stein.append(Edge(source=diff_op.target, target=diff_op.source, kind=EdgeKind.KNAPP_STEIN))

    return sort_edges(degenerate, order), sort_edges(knapp_stein, order)
