"""Instance generators and the line-oriented instance/solution text formats.

Instance file::

    # label: <free text>            (optional, first line)
    cds 1 <n> <m> <flags>           flags: "-", "w", "c" or "wc"
    e <u> <v>                       m lines, u < v, sorted
    w <v> <value>                   n lines if flag w
    c <v> <value>                   n lines if flag c

Solution file::

    # <key>: <value>                metadata, sorted by key
    sol <objective> <size>
    v <id> <id> ...                 sorted chosen vertices
    t <u> <v>                       size - 1 tree edges
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .errors import ParseError
from .graph import Graph, components, from_edge_list


@dataclass(frozen=True)
class Instance:
    graph: Graph
    weights: tuple[int, ...] | None = None
    capacities: tuple[int, ...] | None = None
    label: str = ""

    def __post_init__(self):
        for name in ("weights", "capacities"):
            vec = getattr(self, name)
            if vec is not None and len(vec) != self.graph.n:
                raise ValueError(f"{name} has length {len(vec)}, expected {self.graph.n}")


def gen_spider(heads: int, path_len: int, leg_count: int, leg_len: int = 1) -> Instance:
    """Spider heads joined in a line by paths of path_len + 1 edges, each head
    carrying leg_count pendant paths of leg_len vertices.

    Numbering: heads 0..heads-1, then connector vertices path by path, then
    legs head by head.
    """
    if heads < 2 or path_len < 1 or leg_count < 1 or leg_len < 0:
        raise ValueError("need heads >= 2, path_len >= 1, leg_count >= 1, leg_len >= 0")
    edges = []
    nxt = heads
    for h in range(heads - 1):
        prev = h
        for _ in range(path_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, h + 1))
    for h in range(heads):
        for _ in range(leg_count):
            prev = h
            for _ in range(leg_len):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    label = f"spider-h{heads}-c{path_len}-m{leg_count}-l{leg_len}"
    return Instance(from_edge_list(nxt, edges), label=label)


def largest_component(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Induced subgraph on the largest component (ties: the one holding the
    smaller vertex), relabeled 0..n'-1 in increasing original id."""
    g = from_edge_list(n, edges)
    comp = max(components(g), key=lambda c: (len(c), -c[0]))
    index = {v: i for i, v in enumerate(comp)}
    return from_edge_list(len(comp), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index])


def gen_gnp(n: int, edge_prob: float, seed: int) -> Instance:
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < edge_prob
    g = largest_component(n, list(zip(iu[keep].tolist(), ju[keep].tolist())))
    return Instance(g, label=f"gnp-n{n}-p{edge_prob:g}-s{seed}")


def gen_unit_disk(n: int, radius: float, seed: int) -> Instance:
    if radius <= 0:
        raise ValueError("radius must be positive")
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=-1)
    iu, ju = np.triu_indices(n, k=1)
    keep = d2[iu, ju] <= radius * radius
    g = largest_component(n, list(zip(iu[keep].tolist(), ju[keep].tolist())))
    return Instance(g, label=f"unitdisk-n{n}-r{radius:g}-s{seed}")


def gnp_corpus(count: int = 200, n_range: tuple[int, int] = (6, 12),
               probs: Sequence[float] = (0.2, 0.35, 0.5), seed: int = 0) -> list[Instance]:
    """Deterministic list of connected G(n, p) instances whose largest
    component has between n_range[0] and n_range[1] vertices."""
    lo, hi = n_range
    out = []
    s = seed
    while len(out) < count:
        n = lo + s % (hi - lo + 1)
        p = probs[(s // (hi - lo + 1)) % len(probs)]
        inst = gen_gnp(n, p, s)
        if lo <= inst.graph.n <= hi:
            out.append(inst)
        s += 1
    return out


def with_profiles(inst: Instance, seed: int, weight_range=(0, 9), cap_range=(1, 3)) -> Instance:
    rng = np.random.default_rng(seed)
    n = inst.graph.n
    w = tuple(int(x) for x in rng.integers(weight_range[0], weight_range[1] + 1, n))
    c = tuple(int(x) for x in rng.integers(cap_range[0], cap_range[1] + 1, n))
    return Instance(inst.graph, w, c, inst.label)


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    flags = ("w" if inst.weights is not None else "") + ("c" if inst.capacities is not None else "")
    lines = []
    if inst.label:
        lines.append(f"# label: {inst.label}")
    edges = g.edges()
    lines.append(f"cds 1 {g.n} {len(edges)} {flags or '-'}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    if inst.weights is not None:
        lines.extend(f"w {v} {x}" for v, x in enumerate(inst.weights))
    if inst.capacities is not None:
        lines.extend(f"c {v} {x}" for v, x in enumerate(inst.capacities))
    return "\n".join(lines) + "\n"


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_instance(text: str) -> Instance:
    label = ""
    header = None
    edges: list[tuple[int, int]] = []
    vectors: dict[str, dict[int, int]] = {"w": {}, "c": {}}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("label:") and header is None:
                label = body[len("label:"):].strip()
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "cds" or len(tok) not in (4, 5):
                raise ParseError("expected header 'cds 1 <n> <m> <flags>'", lineno)
            version, n, m = _ints(tok[1:4], lineno)
            if version != 1:
                raise ParseError(f"unsupported format version {version}", lineno)
            flags = tok[4] if len(tok) == 5 else "-"
            if flags != "-" and (set(flags) - {"w", "c"} or len(set(flags)) != len(flags)):
                raise ParseError(f"bad flags {flags!r}", lineno)
            if n < 1 or m < 0:
                raise ParseError("n must be >= 1 and m >= 0", lineno)
            header = (n, m, set(flags) - {"-"})
            continue
        n, m, flags = header
        kind = tok[0]
        if kind == "e":
            if len(tok) != 3:
                raise ParseError("edge line needs two endpoints", lineno)
            u, v = _ints(tok[1:], lineno)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ParseError(f"invalid edge ({u}, {v})", lineno)
            edges.append((u, v))
        elif kind in ("w", "c"):
            if kind not in flags:
                raise ParseError(f"'{kind}' line but header does not declare it", lineno)
            if len(tok) != 3:
                raise ParseError(f"'{kind}' line needs a vertex and a value", lineno)
            v, x = _ints(tok[1:], lineno)
            if not 0 <= v < n or v in vectors[kind]:
                raise ParseError(f"bad or repeated vertex {v}", lineno)
            if x < 0:
                raise ParseError("values must be nonnegative", lineno)
            vectors[kind][v] = x
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing header", 1)
    n, m, flags = header
    last = len(text.splitlines())
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", last)
    out = {}
    for kind in ("w", "c"):
        if kind in flags:
            if len(vectors[kind]) != n:
                raise ParseError(f"header declares '{kind}' values, found {len(vectors[kind])} of {n}", last)
            out[kind] = tuple(vectors[kind][v] for v in range(n))
    return Instance(from_edge_list(n, edges), out.get("w"), out.get("c"), label)


def read_edge_list(text: str, label: str = "") -> Instance:
    """Plain 'u v' lines (0-based); '#' and '%' start comments."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].split("%")[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) < 2:
            raise ParseError("expected 'u v'", lineno)
        edges.append(tuple(_ints(tok[:2], lineno)))
    n = max((max(e) for e in edges), default=0) + 1
    return Instance(from_edge_list(n, edges), label=label)


@dataclass
class SolutionRecord:
    objective: int
    vertices: list[int]
    edges: list[tuple[int, int]]
    meta: dict[str, str] = field(default_factory=dict)


def serialize_solution(sol: Any) -> str:
    lines = [f"# {k}: {sol.meta[k]}" for k in sorted(sol.meta)]
    verts = sorted(sol.chosen)
    lines.append(f"sol {sol.objective} {len(verts)}")
    lines.append(" ".join(["v"] + [str(v) for v in verts]))
    lines.extend(f"t {u} {v}" for u, v in sorted(tuple(sorted(e)) for e in sol.tree.edges))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> SolutionRecord:
    meta = {}
    head = None
    verts = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            meta[key.strip()] = value.strip()
            continue
        tok = line.split()
        if tok[0] == "sol":
            if head is not None or len(tok) != 3:
                raise ParseError("expected a single 'sol <objective> <size>' line", lineno)
            head = _ints(tok[1:], lineno)
        elif tok[0] == "v":
            if head is None or verts is not None:
                raise ParseError("'v' line must follow the 'sol' line once", lineno)
            verts = _ints(tok[1:], lineno)
            if len(verts) != head[1]:
                raise ParseError(f"'sol' declares {head[1]} vertices, found {len(verts)}", lineno)
        elif tok[0] == "t":
            if verts is None or len(tok) != 3:
                raise ParseError("tree edge line must follow the vertex line and name two vertices", lineno)
            edges.append(tuple(_ints(tok[1:], lineno)))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if head is None:
        raise ParseError("missing 'sol' line", 1)
    if verts is None:
        verts = [] if head[1] == 0 else None
        if verts is None:
            raise ParseError("missing vertex line", len(text.splitlines()))
    return SolutionRecord(head[0], verts, edges, meta)
