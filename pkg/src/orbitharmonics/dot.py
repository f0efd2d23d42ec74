"""Graphviz DOT export.

One color per label; size-one edges are drawn as self-loops and larger
hyperedges as closed cycles through their members, matching the figure
conventions.  Vertices of equal rank share a rank=same block.
"""

from __future__ import annotations

from .hypergraph import OrbitHypergraph

PALETTE = (
    "#e6b400", "#2ca02c", "#1f77b4", "#d62728",
    "#9467bd", "#8c564b", "#17becf", "#7f7f7f",
)


def label_colors(labels) -> dict:
    return {label: PALETTE[i % len(PALETTE)] for i, label in enumerate(sorted(labels))}


def hypergraph_to_dot(g: OrbitHypergraph, name: str = "hypergraph") -> str:
    colors = label_colors(g.labels)
    lines = [f'graph "{name}" {{']
    lines.append("  node [shape=circle, width=0.25, fixedsize=true];")
    by_rank: dict[int, list[str]] = {}
    for v in g.vertices:
        by_rank.setdefault(g.rank_of[v], []).append(v)
    for rank in sorted(by_rank, reverse=True):
        lines.append("  { rank = same; "
                     + " ".join(f'"{v}";' for v in sorted(by_rank[rank])) + " }")
    for e in g.edges:
        color = colors[e.label]
        members = e.sorted_members()
        attrs = f'[color="{color}", label="{e.label}"]'
        if len(members) == 1:
            lines.append(f'  "{members[0]}" -- "{members[0]}" {attrs};')
        elif len(members) == 2:
            lines.append(f'  "{members[0]}" -- "{members[1]}" {attrs};')
        else:
            cycle = list(members) + [members[0]]
            path = " -- ".join(f'"{v}"' for v in cycle)
            lines.append(f"  {path} {attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
