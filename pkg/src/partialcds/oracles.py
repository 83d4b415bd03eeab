"""Exhaustive optima over connected vertex subsets, for small graphs.

Results can be cached on disk: set PARTIALCDS_ORACLE_CACHE to a directory.
Each entry is one file named by the SHA-256 of the query, laid out as

    8 bytes   magic  b"CDSORACL"
    u16       format version (1)
    i64       objective
    u32       set size s
    s * u32   sorted vertex ids

all little-endian. A file with a different magic or version is ignored.
"""
from __future__ import annotations

import hashlib
import os
import struct
import threading
from pathlib import Path
from typing import Iterator

from .errors import Infeasible, TooLarge
from .graph import Graph, iter_connected_masks, mask_members
from .profits import ProfitFn, domination_count
from .solution import Solution, make_solution

ENUM_LIMIT = 20
ORACLE_LIMIT = 14
CACHE_ENV = "PARTIALCDS_ORACLE_CACHE"
_MAGIC = b"CDSORACL"
_VERSION = 1


def enumerate_connected_subsets(g: Graph, max_size: int) -> Iterator[frozenset[int]]:
    """Connected subsets of size <= max_size in size-then-lexicographic order."""
    if g.n > ENUM_LIMIT:
        raise TooLarge(f"enumeration is limited to n <= {ENUM_LIMIT}")
    keyed = sorted((m.bit_count(), mask_members(m)) for m in iter_connected_masks(g, max_size))
    for _, members in keyed:
        yield frozenset(members)


_tables: dict[tuple, tuple] = {}
_tables_lock = threading.Lock()


def _rows(f: ProfitFn) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """(size, value, sorted members) for every connected subset, memoized per profile."""
    if f.graph.n > ORACLE_LIMIT:
        raise TooLarge(f"oracles are limited to n <= {ORACLE_LIMIT}")
    key = f.key()
    with _tables_lock:
        rows = _tables.get(key)
    if rows is None:
        rows = tuple((m.bit_count(), f.eval_mask(m), tuple(mask_members(m)))
                     for m in iter_connected_masks(f.graph))
        with _tables_lock:
            if len(_tables) >= 256:
                _tables.clear()
            _tables[key] = rows
    return rows


def _cache_path(problem: str, f: ProfitFn, param: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    g = f.graph
    ident = repr((problem, g.n, g.edges(), f.kind, f.params(), int(param))).encode()
    return Path(root) / (hashlib.sha256(ident).hexdigest() + ".bin")


def _cache_load(path: Path | None):
    if path is None or not path.exists():
        return None
    data = path.read_bytes()
    head = struct.calcsize("<8sHqI")
    if len(data) < head:
        return None
    magic, version, objective, size = struct.unpack_from("<8sHqI", data)
    if magic != _MAGIC or version != _VERSION or len(data) != head + 4 * size:
        return None
    return objective, struct.unpack_from(f"<{size}I", data, head)


def _cache_store(path: Path | None, objective: int, members) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    members = sorted(members)
    blob = struct.pack("<8sHqI", _MAGIC, _VERSION, objective, len(members))
    blob += struct.pack(f"<{len(members)}I", *members)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(blob)
    tmp.replace(path)


def opt_pgcds(g: Graph, f: ProfitFn, q: int, problem: str = "pgcds") -> Solution:
    """Smallest connected set with f >= q (ties: lexicographically smallest)."""
    if f.graph is not g and f.graph != g:
        raise ValueError("profit function belongs to a different graph")
    if g.n > ORACLE_LIMIT:
        raise TooLarge(f"oracles are limited to n <= {ORACLE_LIMIT}")
    if q <= 0:
        return make_solution(g, (), f, problem=problem, quota=q, oracle=True)
    path = _cache_path(problem, f, q)
    hit = _cache_load(path)
    if hit is not None:
        return make_solution(g, hit[1], f, problem=problem, quota=q, oracle=True)
    best = None
    for size, value, members in _rows(f):
        if value >= q and (best is None or (size, members) < (len(best), best)):
            best = members
    if best is None:
        raise Infeasible(f"no connected set reaches {q}")
    sol = make_solution(g, best, f, problem=problem, quota=q, oracle=True)
    _cache_store(path, sol.objective, best)
    return sol


def opt_bgcds(g: Graph, f: ProfitFn, k: int, problem: str = "bgcds") -> Solution:
    """Connected set of at most k vertices maximizing f (ties: lexicographically smallest)."""
    if f.graph is not g and f.graph != g:
        raise ValueError("profit function belongs to a different graph")
    if k < 1:
        raise ValueError("budget must be at least 1")
    if g.n > ORACLE_LIMIT:
        raise TooLarge(f"oracles are limited to n <= {ORACLE_LIMIT}")
    path = _cache_path(problem, f, k)
    hit = _cache_load(path)
    if hit is not None:
        return make_solution(g, hit[1], f, problem=problem, budget=k, oracle=True)
    best_val, best = None, None
    for size, value, members in _rows(f):
        if size > k:
            continue
        if best_val is None or value > best_val or (value == best_val and members < best):
            best_val, best = value, members
    sol = make_solution(g, best, f, problem=problem, budget=k, oracle=True)
    _cache_store(path, sol.objective, best)
    return sol


def opt_pcds(g: Graph, quota: int) -> Solution:
    return opt_pgcds(g, domination_count(g), quota, problem="pcds")


def opt_bcds(g: Graph, k: int) -> Solution:
    return opt_bgcds(g, domination_count(g), k, problem="bcds")
