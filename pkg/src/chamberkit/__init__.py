"""chamberkit: combinatorics of triangle complexes with deleted chambers.

Modules:
    mgraph     metric multigraphs: girth, spectra, isomorphism, canonical forms
    plane      projective-plane incidence graphs and building recognition
    surgery    chamber-removal classification and the G1..G6 catalog
    rank       the exact local-rank functional on graphs and complexes
    complexes  polygonal presentations, links, curvature, homology, catalog
    extend     extension invariant, saturated ample families, extensions
    develop    universal-cover balls, covering checks, flat disks
    prescribe  exhaustive search for complexes with a prescribed link
    io         text/JSON formats
    cli        command-line entry point
"""

from .mgraph import (INFINITE, MetricGraph, automorphism_group, canonical_form,
                     girth, is_isomorphic, length_spectrum, subdivide_to_unit)
from .plane import (BuildingCertificate, complete_into_building, heawood,
                    incidence_graph, is_building_A2, projective_order)
from .surgery import catalog, classify_removals, disjoint_edge_sets, distance_profile
from .rank import (graph_rank, is_rank_one_plus, local_rank_complex,
                   one_missing_rank, root_census, roots)
from .complexes import (ShapeComplex, catalog_complexes, complex_isomorphic,
                        from_face_words, homology_h1, is_npc, link,
                        presentation, triangulate, validate)
from .extend import (alternating_six_cycles, build_extension, count_extensions,
                     extension_invariant, is_building_with_chambers_missing,
                     saturated_ample_families)
from .develop import DevelopedBall, develop_ball, flat_disk_radius, verify_cover
from .prescribe import prescribe_link

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
