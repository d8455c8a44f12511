"""Induced subgraphs of the square lattice."""
from .build import Construction, build_corner_representant, build_representant
from .embedding import (GridEmbedding, Kind, Square, classify, corner_nodes, end_squares,
                        load_embedding, parse_embedding, squares, to_labeled_graph)
from .forbidden import FCheck, find_X, is_F_avoiding
from .goodlabel import representant_from_good_labeling, trace_good_labeling
from .lines import (CornerNodeError, glue_line_length1, k_suitable,
                    necessary_conditions_line)

__all__ = ["Construction", "CornerNodeError", "FCheck", "GridEmbedding", "Kind", "Square",
           "build_corner_representant", "build_representant", "classify", "corner_nodes",
           "end_squares", "find_X", "glue_line_length1", "is_F_avoiding", "k_suitable",
           "load_embedding", "necessary_conditions_line", "parse_embedding",
           "representant_from_good_labeling", "squares", "to_labeled_graph",
           "trace_good_labeling"]
