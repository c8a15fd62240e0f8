#!/usr/bin/env python3
"""
TABULATED MULTIPLET FIXTURES
Regression harness comparing the engine against the tabulated G2(2) data in
paper_fixtures.json. Failures are reported as data, never raised.
"""

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .bgg import EdgeKind, reducibility_points
from .multiplets import MultipletGraph, build, classify
from .parabolic import catalog, nilradical
from .rational import format_rational, parse_rational
from .rootsys import RootSystem, default_root_system, discrete_series_count, weyl_group
from .weights import WeightLabels, subtract_root_multiple, weyl_dim

logger = logging.getLogger(__name__)

FIXTURE_FILE = Path(__file__).with_name("paper_fixtures.json")
MAX_WORKERS = 4


@dataclass
class FixtureResult:
    """Outcome of one fixture, PASS or FAIL with both sides recorded"""
    name: str
    status: str
    expected: Any
    actual: Any
    details: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class FixtureReport:
    results: List[FixtureResult] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failed(self) -> List[FixtureResult]:
        return [r for r in self.results if not r.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failed

    def summary(self) -> str:
        if self.all_passed:
            return f"all fixtures passed ({self.total}/{self.total})"
        return f"{len(self.failed)} of {self.total} fixtures failed"

    def to_list(self) -> List[Dict[str, Any]]:
        return [result.to_dict() for result in self.results]


def load_fixture_table(path: Optional[Path] = None) -> Dict[str, Any]:
    """Read the fixture resource shipped next to this module"""
    with open(path or FIXTURE_FILE, "r", encoding="utf-8") as f:
        return json.load(f)


# ----------------------------------------------------------------------
# Helpers


def _q(text) -> Fraction:
    return parse_rational(str(text))


def _linear(coeffs: List[int], m1: Fraction, m2: Fraction) -> Fraction:
    return coeffs[0] * m1 + coeffs[1] * m2


def _build(fixture: Dict, rs: RootSystem) -> MultipletGraph:
    return build(_q(fixture["m1"]), _q(fixture["m2"]), fixture.get("parabolic", "P0"), rs)


def _component_shapes(graph: MultipletGraph) -> List[Dict]:
    diff_ops = graph.edges_of(EdgeKind.DIFF_OP)
    shapes = []
    for component in graph.components:
        members = set(component.node_ids)
        roots = sorted({e.root for e in diff_ops if e.source in members})
        shapes.append({"label": component.label, "nodes": list(component.node_ids), "roots": roots})
    return shapes


# ----------------------------------------------------------------------
# Checkers: each returns (expected, actual) as plain JSON values

Checker = Callable[[Dict, RootSystem, Dict], Tuple[Any, Any]]


def _check_root_eps_coords(fixture, rs, tables):
    actual = {r.name: list(r.eps_coords) for r in rs.positive_roots()}
    return fixture["expected"], actual


def _check_inner_products(fixture, rs, tables):
    a1, a2 = rs.simple_roots()
    actual = {
        "(α1,α1)": format_rational(rs.inner(a1, a1)),
        "(α2,α2)": format_rational(rs.inner(a2, a2)),
        "(α1,α2)": format_rational(rs.inner(a1, a2)),
    }
    return fixture["expected"], actual


def _check_coroots(fixture, rs, tables):
    actual = {r.name: [format_rational(x) for x in rs.coroot(r)] for r in rs.positive_roots()}
    return fixture["expected"], actual


def _check_root_lengths(fixture, rs, tables):
    actual = {"short": [], "long": []}
    for root in rs.positive_roots():
        actual[root.length.value].append(root.index)
    return fixture["expected"], actual


def _check_weyl_group(fixture, rs, tables):
    group = weyl_group(rs)
    rotation = group.word_matrix("12")
    identity = np.array([[1, 0], [0, 1]], dtype=object)
    power, order = rotation, 1
    while not (power == identity).all() and order <= 2 * len(group):
        power = power @ rotation
        order += 1

    longest = group.longest
    negates = (longest.array == -identity).all()
    actual = {
        "order": len(group),
        "rotation_order": order,
        "longest_word": longest.word,
        "longest_negates_labels": bool(negates),
    }
    return fixture["expected"], actual


def _check_main_signatures(fixture, rs, tables):
    m1, m2 = _q(fixture["m1"]), _q(fixture["m2"])
    formulas = tables["main_formulas"]["nodes"]
    expected = {
        node_id: [
            format_rational(_linear(f["n1"], m1, m2)),
            format_rational(_linear(f["n2"], m1, m2)),
            format_rational(_linear(f["c2"], m1, m2) / 2),
        ]
        for node_id, f in formulas.items()
    }
    graph = build(m1, m2, "P0", rs)
    actual = {
        node.id: [
            format_rational(node.labels.n1),
            format_rational(node.labels.n2),
            format_rational(node.signature.c),
        ]
        for node in graph.nodes
    }
    return expected, actual


def _check_main_relations(fixture, rs, tables):
    relations = tables["main_formulas"]["relations"]
    expected, actual = [], []
    for p1, p2 in fixture["params"]:
        m1, m2 = _q(p1), _q(p2)
        graph = build(m1, m2, "P0", rs)
        arrows = {(e.source, e.target, e.root, e.degree) for e in graph.edges_of(EdgeKind.DIFF_OP)}
        for rel in relations:
            k = _linear(rel["k"], m1, m2)
            source = graph.node(rel["source"])
            shifted = subtract_root_multiple(source.labels, k, rs.root(rel["root"]), rs)
            tag = f"({p1},{p2}) {rel['target']}"
            expected.append([tag, True, True])
            actual.append([
                tag,
                shifted == graph.node(rel["target"]).labels,
                (rel["source"], rel["target"], rel["root"], k) in arrows,
            ])

        # The longest element closes the list: labels change sign
        tag = f"({p1},{p2}) 121212"
        expected.append([tag, True, True])
        top = graph.node("121212").labels
        actual.append([tag, top == WeightLabels(-m1, -m2), weyl_group(rs).element("212121").word == "121212"])
    return expected, actual


def _check_hasse(fixture, rs, tables):
    graph = _build(fixture, rs)
    actual = {
        "nodes": len(graph.nodes),
        "reduced_arrows": len(graph.reduced_edges),
        "components": len(graph.components),
        "case": graph.case.name,
    }
    return fixture["expected"], actual


def _check_c_formula(fixture, rs, tables):
    violations = []
    for p1, p2, parabolic in fixture["cases"]:
        graph = build(_q(p1), _q(p2), parabolic, rs)
        for node in graph.nodes:
            if node.signature.c != -(node.labels.n1 + 2 * node.labels.n2) / 2:
                violations.append(f"({p1},{p2},{parabolic}) χ_{node.display_id}")
    return fixture["expected"], violations


def _check_ks_identifications(fixture, rs, tables):
    expected, actual = {}, {}
    for p1, p2 in fixture["params"]:
        graph = build(_q(p1), _q(p2), "P0", rs)
        involution = all(graph.ks_partners[graph.ks_partners[n]] == n for n in graph.ks_partners)
        tag = f"({p1},{p2})"
        expected[tag] = {"pairs": fixture["expected"], "involution": True}
        actual[tag] = {
            "pairs": {source: graph.ks_partners.get(source) for source in fixture["expected"]},
            "involution": involution,
        }
    return expected, actual


def _check_chain(fixture, rs, tables):
    graph = _build(fixture, rs)
    actual = {
        "case": graph.case.name,
        "nodes": [node.id for node in graph.nodes],
        "chain": [[e.root, format_rational(e.degree)] for e in graph.reduced_edges],
        "direct_degenerations": [
            [e.source, e.target, e.root, format_rational(e.degree)]
            for e in graph.edges_of(EdgeKind.DEGENERATED_KS)
            if e.direct
        ],
    }
    return fixture["expected"], actual


def _check_components(fixture, rs, tables):
    graph = _build(fixture, rs)
    return fixture["expected"], {"case": graph.case.name, "components": _component_shapes(graph)}


def _check_relaxed_edges(fixture, rs, tables):
    graph = _build(fixture, rs)
    start = WeightLabels(_q(fixture["m1"]), _q(fixture["m2"]))
    component = next(c for c in graph.components if c.label == fixture["component"])
    members = set(component.node_ids)
    extra = [
        [e.source, e.target, e.root, format_rational(e.degree), e.frame_root]
        for e in graph.edges_of(EdgeKind.DIFF_OP)
        if e.source in members and e.root != fixture["base_root"]
    ]
    actual = {
        "case": graph.case.name,
        "reducibility_points": [[p.root.index, format_rational(p.degree)] for p in reducibility_points(start, rs)],
        "extra_edges": extra,
    }
    return fixture["expected"], actual


def _check_degenerations(fixture, rs, tables):
    graph = _build(fixture, rs)
    actual = {
        "case": graph.case.name,
        "visible": [
            [e.source, e.target, e.root, format_rational(e.degree)] for e in graph.edges_of(EdgeKind.DIFF_OP)
        ],
        "degenerations": [
            [e.source, e.target, e.root, format_rational(e.degree)]
            for e in graph.edges_of(EdgeKind.DEGENERATED_KS)
        ],
    }
    return fixture["expected"], actual


def _check_weyl_dim(fixture, rs, tables):
    actual = {}
    for key in fixture["expected"]:
        n1, n2 = (int(x) for x in key.split(","))
        actual[key] = format_rational(weyl_dim(WeightLabels.of(n1, n2), rs))
    return fixture["expected"], actual


def _check_parabolics(fixture, rs, tables):
    actual = {}
    for desc in catalog():
        entry = {"dim_a": desc.dim_a, "dim_n": desc.dim_n, "m_compact": sorted(desc.m_compact_roots)}
        if desc.dim_n_tilde is not None:
            entry["dim_n_tilde"] = desc.dim_n_tilde
            entry["m0"] = desc.m0
        if desc.grading_root is not None:
            report = nilradical(desc, rs)
            entry["derived"] = report.derived_roots
            entry["step"] = report.step
            if "center" in fixture["expected"][desc.name.value]:
                entry["center"] = report.center_roots
        actual[desc.name.value] = entry
    return fixture["expected"], actual


def _check_discrete_series(fixture, rs, tables):
    families = []
    for p1, p2, parabolic in fixture["cases"]:
        graph = build(_q(p1), _q(p2), parabolic, rs)
        for special in graph.specials:
            if special.kind.value.startswith("DiscreteSeries"):
                families.append([special.kind.value, special.node_id, format_rational(special.d)])
    return fixture["expected"], {"count": discrete_series_count(rs), "families": families}


def _check_classification(fixture, rs, tables):
    expected, actual = [], []
    for p1, p2, parabolic, case in fixture["cases"]:
        expected.append([p1, p2, parabolic, case])
        actual.append([p1, p2, parabolic, classify(_q(p1), _q(p2), parabolic).name])
    return expected, actual


CHECKERS: Dict[str, Checker] = {
    "root_eps_coords": _check_root_eps_coords,
    "inner_products": _check_inner_products,
    "coroots": _check_coroots,
    "root_lengths": _check_root_lengths,
    "weyl_group": _check_weyl_group,
    "main_signatures": _check_main_signatures,
    "main_relations": _check_main_relations,
    "hasse": _check_hasse,
    "c_formula": _check_c_formula,
    "ks_identifications": _check_ks_identifications,
    "chain": _check_chain,
    "components": _check_components,
    "relaxed_edges": _check_relaxed_edges,
    "degenerations": _check_degenerations,
    "weyl_dim": _check_weyl_dim,
    "parabolics": _check_parabolics,
    "discrete_series": _check_discrete_series,
    "classification": _check_classification,
}


def evaluate_fixture(fixture: Dict, root_system: RootSystem, tables: Dict) -> FixtureResult:
    start = time.time()
    name = fixture["name"]
    try:
        expected, actual = CHECKERS[fixture["kind"]](fixture, root_system, tables)
    except Exception as exc:
        logger.warning("❌ Fixture %s raised %s: %s", name, type(exc).__name__, exc)
        return FixtureResult(
            name=name,
            status="FAIL",
            expected=fixture.get("expected"),
            actual={"error": f"{type(exc).__name__}: {exc}"},
            details=[str(exc)],
            duration=time.time() - start,
        )

    status = "PASS" if expected == actual else "FAIL"
    details = [] if status == "PASS" else [f"expected {expected!r}", f"actual {actual!r}"]
    if status == "FAIL":
        logger.warning("❌ Fixture %s failed", name)
    return FixtureResult(name, status, expected, actual, details, time.time() - start)


def run_fixtures(root_system: Optional[RootSystem] = None, path: Optional[Path] = None) -> FixtureReport:
    """Evaluate every declared fixture; report order equals declaration order"""
    rs = root_system or default_root_system()
    tables = load_fixture_table(path)
    fixtures = tables["fixtures"]

    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as pool:
        results = list(pool.map(lambda f: evaluate_fixture(f, rs, tables), fixtures))

    report = FixtureReport(results)
    logger.info("🧪 %s", report.summary())
    return report


