"""Exact-geometry planarization of redundancy-coexistence graphs, a
distributed-variant simulator, and an SMT proof-obligation harness."""

from .geometry import (Point, RationalPoint, left, between, intersects,
                       inside, intersection_point, NotIntersecting,
                       CollinearOverlap)
from .axioms import check_axioms, AxiomReport, UnknownAxiomId
from .graph import (GeoGraph, PropertyReport, check_redundancy,
                    check_coexistence, is_rcg, crossing_pairs, components,
                    two_hop, check_collinear_closure, is_plane, is_connected)
from .planarize import (CpTrace, cp_global, cp_condition, deleting,
                        verify_lemma1, verify_lemma2, verify_lemma3,
                        verify_theorem1, verify_kept_contract, hull_path,
                        HullPath, lex_order, seeded_order)
from .distsim import cp_distributed, detectability_check, SimResult
from .generators import (unit_disk, quasi_unit_disk, sample_rcg, fixture,
                         FIXTURE_NAMES, FIXTURE_LABELS)
from .graphio import load_graph, save_graph

__version__ = "0.1.0"
