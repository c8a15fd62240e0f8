"""
G2(2) Multiplet Engine - Source Package
Exact root data, Weyl group, BGG embedding graphs and multiplet assembly
"""

from .rootsys import RootSystem, WeylElement, WeylGroup, build_g2, weyl_group
from .weights import WeightLabels, Signature, hc_params, weyl_dim
from .parabolic import ParabolicName, catalog, nilradical
from .multiplets import MultipletGraph, CaseLabel, build, classify, special_subspaces, verify_paper_fixtures

__version__ = "1.0.0"

__all__ = [
    'RootSystem',
    'WeylElement',
    'WeylGroup',
    'build_g2',
    'weyl_group',
    'WeightLabels',
    'Signature',
    'hc_params',
    'weyl_dim',
    'ParabolicName',
    'catalog',
    'nilradical',
    'MultipletGraph',
    'CaseLabel',
    'build',
    'classify',
    'special_subspaces',
    'verify_paper_fixtures',
]
