"""Deciding and certifying 12-representability of graphs, with grid-graph constructions."""
from ._accel import backend
from .graphs import LabeledGraph
from .represent import Decision, is_12_representable, represents
from .words import Word, parse_word, format_word

__all__ = ["LabeledGraph", "Word", "Decision", "backend", "is_12_representable",
           "represents", "parse_word", "format_word"]
__version__ = "0.1.0"
