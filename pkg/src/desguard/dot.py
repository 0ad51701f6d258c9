"""Graphviz DOT export for automata, observers, and product automata.

Output is deterministic: nodes and edges are emitted in sorted order, so
repeated exports of the same object are byte-identical.
"""

from __future__ import annotations

from typing import Union

from .automata import Automaton
from .attacks import EPSILON
from .observability import ProductAutomaton
from .observer import Observer

EPSILON_LABEL = "ε"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _digraph(name: str, nodes, edges, initial) -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for node in nodes:
        lines.append(f"  {_quote(node)} [shape=circle];")
    lines.append(f"  __start -> {_quote(initial)};")
    for src, label, dst in edges:
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _estimate_label(estimate) -> str:
    return "{" + ",".join(sorted(estimate)) + "}"


def _triple_label(triple) -> str:
    return "(" + ",".join(triple) + ")"


def export_dot(obj: Union[Automaton, Observer, ProductAutomaton]) -> str:
    """Render the object as a DOT digraph."""
    if isinstance(obj, Automaton):
        edges = sorted((src, ev, dst) for (src, ev), dst in obj.transitions.items())
        return _digraph("automaton", sorted(obj.states), edges, obj.initial)
    if isinstance(obj, Observer):
        nodes = sorted(_estimate_label(s) for s in obj.states)
        edges = sorted(
            (_estimate_label(src), t, _estimate_label(dst))
            for (src, t), dst in obj.transitions.items()
        )
        return _digraph("observer", nodes, edges, _estimate_label(obj.initial))
    if isinstance(obj, ProductAutomaton):
        nodes = sorted(_triple_label(t) for t in obj.triples)

        def pair_label(pair) -> str:
            a, b = pair
            a = a if a != EPSILON else EPSILON_LABEL
            b = b if b != EPSILON else EPSILON_LABEL
            return f"({a},{b})"

        edges = sorted(
            (_triple_label(src), pair_label(pair), _triple_label(dst))
            for (src, pair), dst in obj.transitions.items()
        )
        return _digraph("product", nodes, edges, _triple_label(obj.initial))
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")
