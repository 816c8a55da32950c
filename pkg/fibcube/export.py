"""Text formats: canonical edge list, DOT, and serialized factorizations.

Edge list (ASCII, LF):
    # fibcube family=<O|I> p=<p> r=<r> n=<n>     (or "# fibcube graph")
    <|V|> <|E|>
    <word label>                                   |V| lines, only when labeled
    <u> <v>                                        |E| lines, u < v, sorted
"""

from typing import Optional

from jinja2 import Template

from .errors import InvalidGraphError
from .graph import Graph
from .words import CubeParams, Family, Word

GRAPH_HEADER = "# fibcube graph"

DOT_TEMPLATE = Template(
    """graph "{{ title }}" {
    node [shape=circle, fontname="Courier"];
{%- for name in names %}
    "{{ name }}";
{%- endfor %}
{%- for u, v in edges %}
    "{{ names[u] }}" -- "{{ names[v] }}";
{%- endfor %}
}
""",
    keep_trailing_newline=True,
)


def _header(G: Graph) -> str:
    if G.params is None:
        return GRAPH_HEADER
    p = G.params
    return f"# fibcube family={p.family.value} p={p.p} r={p.r} n={p.n}"


def write_edge_list(G: Graph) -> str:
    lines = [_header(G), f"{G.vertex_count} {G.edge_count}"]
    if G.labels is not None:
        lines.extend(str(w) for w in G.labels)
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "".join(line + "\n" for line in lines)


def _parse_header(line: str) -> Optional[CubeParams]:
    if line == GRAPH_HEADER:
        return None
    fields = line.split()
    if fields[:2] != ["#", "fibcube"] or len(fields) != 6:
        raise InvalidGraphError(f"unrecognized edge-list header: {line!r}")
    try:
        values = dict(field.split("=", 1) for field in fields[2:])
        return CubeParams(
            Family.parse(values["family"]),
            int(values["p"]),
            int(values["r"]),
            int(values["n"]),
        )
    except (KeyError, ValueError) as exc:
        raise InvalidGraphError(f"bad edge-list header {line!r}: {exc}") from None


def read_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise InvalidGraphError("edge list needs a header and a count line")
    params = _parse_header(lines[0].strip())
    try:
        vertex_count, edge_count = (int(x) for x in lines[1].split())
    except ValueError:
        raise InvalidGraphError(f"bad count line: {lines[1]!r}") from None

    body = lines[2:]
    if len(body) == vertex_count + edge_count:
        labels = [Word(line.strip()) for line in body[:vertex_count]]
        edge_lines = body[vertex_count:]
    elif len(body) == edge_count:
        labels, edge_lines = None, body
    else:
        raise InvalidGraphError(
            f"expected {edge_count} or {vertex_count + edge_count} body lines, got {len(body)}"
        )
    if params is not None and labels is None:
        raise InvalidGraphError("cube edge lists must carry word labels")

    edges = []
    for line in edge_lines:
        try:
            u, v = (int(x) for x in line.split())
        except ValueError:
            raise InvalidGraphError(f"bad edge line: {line!r}") from None
        edges.append((u, v))
    return Graph.from_edges(vertex_count, edges, labels=labels, params=params)


def write_dot(G: Graph) -> str:
    if G.labels is not None:
        names = [str(w) for w in G.labels]
    else:
        names = [str(v) for v in range(G.vertex_count)]
    title = G.params.label() if G.params is not None else "graph"
    return DOT_TEMPLATE.render(title=title, names=names, edges=G.edges)


def serialize_factorization(F) -> str:
    """factors=<k>, each factor as an edge list, then one coordinate line per vertex."""
    parts = [f"factors={len(F.factors)}\n"]
    parts.extend(write_edge_list(factor) for factor in F.factors)
    parts.extend(
        "vertex (" + ",".join(str(x) for x in coordinate) + ")\n" for coordinate in F.coordinates
    )
    return "".join(parts)
