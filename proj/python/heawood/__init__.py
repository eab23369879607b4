"""Colouring schemes and audits for planar triangulations.

Graphs, colourings and reports are plain dicts in the JSON layout used by the
``heawood`` command-line tool.
"""

import json

from . import _heawood
from ._heawood import Error, brute_force_count, closed_form_count, statements

SCHEMA = _heawood.SCHEMA

__all__ = [
    "Error",
    "SCHEMA",
    "audit",
    "brute_force_count",
    "closed_form_count",
    "convert",
    "generate",
    "hamilton_circuit",
    "is_proper",
    "polygons",
    "solve",
    "split",
    "statements",
    "to_dot",
]

_VERTEX_COLORS = "CMYK"
_EDGE_COLORS = "rgb"


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def generate(kind, **params):
    """Builds a named triangulation; params as in ``heawood gen``."""
    return json.loads(_heawood.generate(kind, **params))


def solve(graph, base=None):
    """Four-colours ``graph``. Returns {"schema", "coloring", "trace"}."""
    return json.loads(_heawood.solve(_text(graph), tuple(base) if base else None))


def split(graph, circuit=None, base=None):
    return json.loads(_heawood.split(_text(graph), circuit, tuple(base) if base else None))


def hamilton_circuit(graph):
    return _heawood.hamilton_circuit(_text(graph))


def convert(graph, document, to, edge=0, edge_color="r", vertex=0, vertex_color="C"):
    """Converts a scheme document ({"scheme", "values"}) to scheme ``to``."""
    return json.loads(
        _heawood.convert(
            _text(graph),
            _text(document),
            to,
            edge,
            _EDGE_COLORS.index(edge_color),
            vertex,
            _VERTEX_COLORS.index(vertex_color),
        )
    )


def audit(statement, max_v=0, max_triangles=0, budget=0.0, jobs=0, timing=False):
    return json.loads(_heawood.audit(statement, max_v, max_triangles, budget, jobs, timing))


def polygons(v):
    """Every triangulated polygon on v vertices with base (v-1, 0)."""
    return [json.loads(p) for p in _heawood.polygons(v)]


def is_proper(graph, coloring):
    return _heawood.is_proper(_text(graph), _text(coloring))


def to_dot(graph, coloring=None):
    return _heawood.to_dot(_text(graph), None if coloring is None else _text(coloring))
