#!/usr/bin/env python3
"""
OUTPUT FORMATS
Text table, JSON and DOT emitters for the CLI documents. Every emitter is
deterministic: fixed key order, canonical sort, LF newlines, no timestamps.
"""

import json
from typing import Any, Dict, List, Sequence

from .bgg import Edge, EdgeKind
from .multiplets import MultipletGraph
from .paper_fixtures import FixtureReport
from .parabolic import DISCRETE_SERIES_COUNT, NilradicalReport, ParabolicDesc
from .rational import format_rational
from .rootsys import Root, RootSystem, WeylElement

SEPARATOR = " | "


def render_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _table(header: Sequence[str], rows: List[Sequence[str]]) -> List[str]:
    return [SEPARATOR.join(header)] + [SEPARATOR.join(str(cell) for cell in row) for row in rows]


def _term(coeff, symbol: str) -> str:
    if coeff == 1:
        return symbol
    if coeff == -1:
        return f"-{symbol}"
    return f"{format_rational(coeff)}{symbol}"


def linear_text(coeffs: Sequence, symbols: Sequence[str]) -> str:
    """Sparse sum such as "3α1+2α2" or "-n1+3n2"; zero renders as "0" """
    text = ""
    for coeff, symbol in zip(coeffs, symbols):
        if coeff == 0:
            continue
        term = _term(coeff, symbol)
        text += term if not text or term.startswith("-") else f"+{term}"
    return text or "0"


def vector_text(values: Sequence) -> str:
    return "(" + ",".join(format_rational(v) for v in values) + ")"


# ----------------------------------------------------------------------
# roots


def root_row(root: Root, rs: RootSystem) -> List[str]:
    scale = rs.coroot_scale(root)
    coroot = root.name if scale == 1 else f"{root.name}/{format_rational(1 / scale)}"
    return [
        root.name,
        linear_text(root.simple_coords, ("α1", "α2")),
        vector_text(root.eps_coords),
        root.length.value,
        coroot,
        linear_text(rs.coroot(root), ("α1∨", "α2∨")),
    ]


def render_roots_table(rs: RootSystem) -> str:
    header = ("root", "simple", "eps", "length", "coroot", "coroot over simple coroots")
    rows = [root_row(root, rs) for root in rs.positive_roots()]
    return "\n".join(_table(header, rows)) + "\n"


def roots_document(rs: RootSystem) -> Dict[str, Any]:
    return {
        "roots": [
            {
                "index": root.index,
                "simple": list(root.simple_coords),
                "eps": list(root.eps_coords),
                "length": root.length.value,
                "norm": format_rational(rs.norm_squared(root)),
                "coroot": [format_rational(x) for x in rs.coroot(root)],
                "pairing_row": [format_rational(x) for x in rs.pairing_row(root)],
            }
            for root in rs.positive_roots()
        ]
    }


# ----------------------------------------------------------------------
# weyl


def _weyl_row(element: WeylElement) -> List[str]:
    (a, b), (c, d) = element.matrix
    return [
        element.display_name,
        str(element.length),
        str(element.determinant),
        f"[[{format_rational(a)},{format_rational(b)}],[{format_rational(c)},{format_rational(d)}]]",
        f"({linear_text((a, b), ('n1', 'n2'))}, {linear_text((c, d), ('n1', 'n2'))})",
    ]


def render_weyl_table(elements: Sequence[WeylElement]) -> str:
    header = ("word", "length", "det", "matrix", "action on (n1, n2)")
    return "\n".join(_table(header, [_weyl_row(e) for e in elements])) + "\n"


def weyl_document(elements: Sequence[WeylElement]) -> Dict[str, Any]:
    return {
        "elements": [
            {
                "word": e.word,
                "length": e.length,
                "det": e.determinant,
                "matrix": [[format_rational(x) for x in row] for row in e.matrix],
            }
            for e in elements
        ]
    }


# ----------------------------------------------------------------------
# multiplet


def _display(node_id: str) -> str:
    return node_id or "0"


def _edge_row(edge: Edge) -> List[str]:
    return [
        _display(edge.source),
        _display(edge.target),
        edge.kind.value,
        f"α{edge.root}" if edge.root is not None else "",
        format_rational(edge.degree) if edge.degree is not None else "",
    ]


def render_multiplet_table(graph: MultipletGraph) -> str:
    lines = [
        f"multiplet m1={format_rational(graph.m1)} m2={format_rational(graph.m2)} "
        f"parabolic={graph.parabolic.name.value} case={graph.case.name}",
        "",
        "nodes",
    ]
    node_rows = [
        [
            _display(node.id),
            format_rational(node.labels.n1),
            format_rational(node.labels.n2),
            format_rational(node.signature.c),
            format_rational(node.signature.d),
            ",".join(_display(a) for a in node.aliases),
        ]
        for node in graph.nodes
    ]
    lines += _table(("id", "n1", "n2", "c", "d", "aliases"), node_rows)

    lines += ["", "edges"]
    lines += _table(("from", "to", "kind", "root", "degree"), [_edge_row(e) for e in graph.edges])

    if graph.suppressed_edges:
        lines += ["", "suppressed"]
        lines += _table(("from", "to", "kind", "root", "degree"), [_edge_row(e) for e in graph.suppressed_edges])

    lines += ["", "components"]
    for component in graph.components:
        lines.append(f"{component.label}{SEPARATOR}{', '.join(_display(n) for n in component.node_ids)}")

    if graph.specials:
        lines += ["", "specials"]
        for special in graph.specials:
            dim = f"{SEPARATOR}dim={special.dim}" if special.dim is not None else ""
            lines.append(
                f"{special.kind.value}{SEPARATOR}{_display(special.node_id)}{SEPARATOR}d={format_rational(special.d)}{dim}"
            )
    return "\n".join(lines) + "\n"


def _dot_id(node_id: str) -> str:
    return f'"w_{node_id or "e"}"'


def render_multiplet_dot(graph: MultipletGraph) -> str:
    """Digraph of the reduced DiffOp arrows plus Knapp-Stein pairs"""
    lines = [
        "digraph multiplet {",
        f"  // m1={format_rational(graph.m1)} m2={format_rational(graph.m2)} "
        f"parabolic={graph.parabolic.name.value} case={graph.case.name}",
        "  node [shape=box];",
    ]
    for node in graph.nodes:
        label = f"χ_{{{_display(node.id)}}} {node.signature.render()}"
        lines.append(f'  {_dot_id(node.id)} [label="{label}"];')

    for edge in graph.reduced_edges:
        lines.append(
            f'  {_dot_id(edge.source)} -> {_dot_id(edge.target)} '
            f'[label="α{edge.root} ^ {format_rational(edge.degree)}", style=solid];'
        )
    for edge in graph.edges:
        if edge.kind is EdgeKind.DEGENERATED_KS:
            lines.append(
                f'  {_dot_id(edge.source)} -> {_dot_id(edge.target)} '
                f'[label="α{edge.root} ^ {format_rational(edge.degree)}", style=bold];'
            )
        elif edge.kind is EdgeKind.KNAPP_STEIN:
            lines.append(f"  {_dot_id(edge.source)} -> {_dot_id(edge.target)} [style=dashed, dir=both];")

    for component in graph.components:
        members = ", ".join(_display(n) for n in component.node_ids)
        lines.append(f"  // component {component.label}: {members}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# parabolics, verify


def parabolics_document(entries: Sequence[ParabolicDesc], reports: Sequence[NilradicalReport]) -> Dict[str, Any]:
    return {
        "parabolics": [
            dict(desc.to_dict(), nilradical=report.to_dict()) for desc, report in zip(entries, reports)
        ],
        "discrete_series_count": DISCRETE_SERIES_COUNT,
    }


def render_parabolics_table(entries: Sequence[ParabolicDesc], reports: Sequence[NilradicalReport]) -> str:
    header = ("name", "dim a", "dim n", "dim ñ0", "m0", "m-compact", "n roots", "derived", "center", "step", "levi")
    rows = []
    for desc, report in zip(entries, reports):
        rows.append([
            desc.name.value,
            str(desc.dim_a),
            str(desc.dim_n),
            str(desc.dim_n_tilde) if desc.dim_n_tilde is not None else "-",
            desc.m0 or "-",
            ",".join(f"α{i}" for i in sorted(desc.m_compact_roots)) or "-",
            ",".join(f"α{i}" for i in report.roots),
            ",".join(f"α{i}" for i in report.derived_roots) or "-",
            ",".join(f"α{i}" for i in report.center_roots) or "-",
            str(report.step),
            desc.levi,
        ])
    lines = _table(header, rows) + ["", f"discrete series: {DISCRETE_SERIES_COUNT}"]
    return "\n".join(lines) + "\n"


def render_verify_table(report: FixtureReport) -> str:
    lines = []
    for result in report.results:
        lines.append(f"{result.status:<4}  {result.name}")
        if not result.passed:
            lines.append(f"      expected: {json.dumps(result.expected, ensure_ascii=False)}")
            lines.append(f"      actual:   {json.dumps(result.actual, ensure_ascii=False)}")
    lines.append(report.summary())
    return "\n".join(lines) + "\n"
