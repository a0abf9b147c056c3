"""Segal conditions, completeness and univalence on finite semisimplicial sets."""
from .bridge import (DegeneracyStructure, degeneracies_from_identities, derive_outer_degeneracies,
                     extract_category, extract_transitive_graph, generalized_associator, nerve,
                     search_degeneracies, validate_degeneracies)
from .catstruct import (Graph, Poset, Precategory, ReflexiveTransitiveGraph, TransitiveGraph,
                        WildSemicategory)
from .completeness import (check_completeness, check_univalence, is_iso, is_neutral,
                           synthesize_degeneracies)
from .horns import Horn, HornFiller, Spine, check_segal, enumerate_horns, horn_fillers
from .report import CheckReport, PreconditionError, SegalViolation, SegalkitError, StructuralError
from .sscore import Boundary, SemiSimplicialSet, SimplexId, boundaries, validate

__version__ = "0.1.0"
