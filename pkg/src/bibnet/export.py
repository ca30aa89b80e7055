"""Network serialization: edge list, Pajek, and JSON-records formats.

Weights are printed as integers for full counting and with six fractional
digits (round half to even) otherwise, which keeps exported files stable
across platforms. The records format preserves weights exactly and can be
parsed back.
"""

from __future__ import annotations

import json

from .core import CountingScheme, NetworkMatrix


def format_weight(weight: float, scheme: CountingScheme) -> str:
    if scheme is CountingScheme.FULL:
        return str(int(round(weight)))
    return f"{weight:.6f}"


def _sorted_id_pairs(net: NetworkMatrix) -> list[tuple[str, str, float]]:
    entries = []
    for id_a, id_b, weight in net.pairs():
        if net.symmetric and id_b < id_a:
            id_a, id_b = id_b, id_a
        entries.append((id_a, id_b, weight))
    entries.sort(key=lambda entry: (entry[0], entry[1]))
    return entries


def format_edgelist(net: NetworkMatrix) -> str:
    """One ``id_a<TAB>id_b<TAB>weight`` line per stored pair, sorted by ids."""
    return "".join(
        f"{a}\t{b}\t{format_weight(w, net.scheme)}\n"
        for a, b, w in _sorted_id_pairs(net)
    )


def parse_edgelist(text: str) -> list[tuple[str, str, float]]:
    entries = []
    for line in text.splitlines():
        if not line:
            continue
        id_a, id_b, weight = line.split("\t")
        entries.append((id_a, id_b, float(weight)))
    return entries


def format_pajek(net: NetworkMatrix) -> str:
    """Pajek format: quoted vertex ids, then *Edges or *Arcs with 1-based indices."""
    lines = [f"*Vertices {net.n_units}"]
    lines.extend(
        f'{i} "{uid}"' for i, uid in enumerate(net.unit_ids, start=1)
    )
    lines.append("*Edges" if net.symmetric else "*Arcs")
    for (i, j) in sorted(net.weights):
        weight = format_weight(net.weights[(i, j)], net.scheme)
        lines.append(f"{i + 1} {j + 1} {weight}")
    return "\n".join(lines) + "\n"


def format_records(net: NetworkMatrix) -> str:
    """JSON Lines of ``{"a", "b", "weight"}`` objects; weights round-trip exactly."""
    return "".join(
        json.dumps({"a": a, "b": b, "weight": w}, separators=(",", ":")) + "\n"
        for a, b, w in _sorted_id_pairs(net)
    )


def parse_records(text: str) -> list[tuple[str, str, float]]:
    entries = []
    for line in text.splitlines():
        if not line:
            continue
        obj = json.loads(line)
        entries.append((obj["a"], obj["b"], float(obj["weight"])))
    return entries


FORMATTERS = {
    "edgelist": format_edgelist,
    "pajek": format_pajek,
    "records": format_records,
}
