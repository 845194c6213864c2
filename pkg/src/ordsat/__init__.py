"""Saturation of ordered and cyclically ordered graphs."""

__version__ = "0.1.0"

from .graphcore import CyclicGraph, GraphFormatError, OrderedGraph, generate, parse_graph, serialize

__all__ = ["CyclicGraph", "GraphFormatError", "OrderedGraph", "generate", "parse_graph", "serialize", "__version__"]
