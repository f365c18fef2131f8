"""Ordered parallel depth- and breadth-first search.

Both drivers visit vertices in exactly the order of their sequential
textbook counterparts scanning adjacency lists left to right; what is
parallel is the arc elimination fired once per visit, which unlinks all
incoming arcs of the fresh vertex in one block.  Because of that, the
"first live arc" of any vertex always points at an unvisited target, and
the drivers never rescan dead arcs.  One block per visit means a run that
visits k vertices costs exactly k synchronization steps at any processor
count, and the result is identical for every processor count and backend.

Sequential driver steps are metered on the engine one unit per constant-
time action: visiting (numbering plus parent/distance bookkeeping),
checking a vertex for a live arc, and for breadth-first runs enqueue,
dequeue, and per-level queue swap.  A run visiting k vertices charges
fewer than 4k units (depth-first) or 7k (breadth-first).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

from .elim import ElimGraph
from .engine import SIMULATED, ParEngine
from .errors import ElimGraphReused, InvalidStart
from .graph import Graph
from .oracle import seq_bfs, seq_dfs
from .result import TraversalResult

DFS = "dfs"
BFS = "bfs"
KINDS = (DFS, BFS)

Trace = Callable[[str], None]


def _claim(eg: ElimGraph, s: int) -> None:
    if not 0 <= s < eg.n:
        raise InvalidStart(s, eg.n)
    if eg._traversed:
        raise ElimGraphReused(
            "this search structure already ran a traversal; build a fresh one"
        )
    eg._traversed = True


def _result(eg: ElimGraph, next_number: int) -> TraversalResult:
    return TraversalResult.collect(eg.traversal, eg.parent, eg.distance, next_number)


def _dfs(eg: ElimGraph, s: int, number: int, engine: ParEngine, trace: Optional[Trace]) -> int:
    monitor = eg.monitor
    eg.eliminate_incoming(s, engine)
    eg.traversal[s] = number
    number += 1
    engine.seq_tick()
    if monitor is not None:
        monitor.after_visit(s)
    if trace is not None:
        trace(f"visit {s} number={number - 1} level=0")
    stack = [s]
    while stack:
        v = stack[-1]
        engine.seq_tick()  # the "any live arc left?" test at v
        w = eg.first_live_target(v)
        if w is None:
            stack.pop()
            continue
        # w is necessarily unvisited: a visited vertex has no live incoming arc
        eg.parent[w] = v
        eg.eliminate_incoming(w, engine)
        eg.traversal[w] = number
        number += 1
        engine.seq_tick()
        if monitor is not None:
            monitor.after_visit(w)
        if trace is not None:
            trace(f"visit {w} number={number - 1} level={len(stack)}")
        stack.append(w)
    return number


def _bfs(eg: ElimGraph, s: int, number: int, engine: ParEngine, trace: Optional[Trace]) -> int:
    monitor = eg.monitor
    eg.eliminate_incoming(s, engine)
    level = 0
    eg.traversal[s] = number
    number += 1
    eg.distance[s] = 0
    engine.seq_tick()
    if monitor is not None:
        monitor.after_visit(s)
    if trace is not None:
        trace(f"visit {s} number={number - 1} level=0")
    q: deque[int] = deque([s])
    engine.seq_tick()  # enqueue s
    q_next: deque[int] = deque()
    while q:
        level += 1
        engine.seq_tick()  # level advance and queue swap
        if monitor is not None:
            monitor.before_level(level, q)
        while q:
            u = q.popleft()
            engine.seq_tick()  # dequeue
            while True:
                engine.seq_tick()  # the "any live arc left?" test at u
                v = eg.first_live_target(u)
                if v is None:
                    break
                eg.eliminate_incoming(v, engine)
                eg.traversal[v] = number
                number += 1
                eg.distance[v] = level
                eg.parent[v] = u
                engine.seq_tick()
                if monitor is not None:
                    monitor.after_visit(v)
                if trace is not None:
                    trace(f"visit {v} number={number - 1} level={level}")
                q_next.append(v)
                engine.seq_tick()  # enqueue
        if monitor is not None:
            monitor.after_level(level, q_next)
        q, q_next = q_next, q
    return number


def dfs(
    eg: ElimGraph,
    s: int,
    a: int = 0,
    engine: Optional[ParEngine] = None,
    trace: Optional[Trace] = None,
) -> TraversalResult:
    """Ordered depth-first search from s, numbering from a.

    Recursion is replaced by an explicit stack; after a subtree returns,
    re-reading the parent's first live arc resumes the scan exactly where
    the recursive procedure would, because visiting the child eliminated
    the arc that was scanned.
    """
    _claim(eg, s)
    if engine is None:
        engine = ParEngine()
    number = _dfs(eg, s, a, engine, trace)
    if eg.monitor is not None:
        eg.monitor.finish()
    return _result(eg, number)


def bfs(
    eg: ElimGraph,
    s: int,
    a: int = 0,
    engine: Optional[ParEngine] = None,
    trace: Optional[Trace] = None,
) -> TraversalResult:
    """Ordered breadth-first search from s, numbering from a.

    Two-queue level structure: the current level is drained while
    discoveries are collected for the next one.  Eliminating each fresh
    vertex's incoming arcs up front guarantees no vertex enters a queue
    twice, and no live arc ever connects two members of the next queue.
    """
    _claim(eg, s)
    if engine is None:
        engine = ParEngine()
    number = _bfs(eg, s, a, engine, trace)
    if eg.monitor is not None:
        eg.monitor.finish()
    return _result(eg, number)


def sweep(
    eg: ElimGraph,
    kind: str,
    a: int = 0,
    engine: Optional[ParEngine] = None,
    trace: Optional[Trace] = None,
) -> TraversalResult:
    """Full-graph extension: restart the search on every still-unvisited
    vertex in id order, numbering continuously.  Parents form a forest,
    one tree per restart."""
    if kind not in KINDS:
        raise ValueError(f"unknown traversal kind {kind!r}")
    if eg._traversed:
        raise ElimGraphReused(
            "this search structure already ran a traversal; build a fresh one"
        )
    eg._traversed = True
    if engine is None:
        engine = ParEngine()
    run = _dfs if kind == DFS else _bfs
    number = a
    for r in range(eg.n):
        if eg.traversal[r] is None:
            number = run(eg, r, number, engine, trace)
    if eg.monitor is not None:
        eg.monitor.finish()
    return _result(eg, number)


@dataclass(frozen=True)
class MatchReport:
    """Field-by-field comparison of two traversal results."""

    ok: bool
    mismatches: tuple[str, ...]


def compare_results(driver: TraversalResult, oracle: TraversalResult) -> MatchReport:
    diffs: list[str] = []
    if len(driver.traversal) != len(oracle.traversal):
        diffs.append(
            f"vertex count: driver={len(driver.traversal)} oracle={len(oracle.traversal)}"
        )
        return MatchReport(False, tuple(diffs))
    for field in ("traversal", "parent", "distance"):
        got = getattr(driver, field)
        want = getattr(oracle, field)
        for v, (x, y) in enumerate(zip(got, want)):
            if x != y:
                diffs.append(f"{field}[{v}]: driver={x} oracle={y}")
    if driver.visited_count != oracle.visited_count:
        diffs.append(
            f"visited_count: driver={driver.visited_count} oracle={oracle.visited_count}"
        )
    if driver.next_number != oracle.next_number:
        diffs.append(
            f"next_number: driver={driver.next_number} oracle={oracle.next_number}"
        )
    return MatchReport(not diffs, tuple(diffs))


def verify_against_oracle(
    g: Graph,
    s: int,
    kind: str,
    processors: int = 1,
    backend: str = SIMULATED,
    monitor=None,
) -> MatchReport:
    """Run the arc-elimination driver and the sequential reference from s
    (both numbering from 0) and report field-by-field equality."""
    if kind not in KINDS:
        raise ValueError(f"unknown traversal kind {kind!r}")
    with ParEngine(processors, backend=backend) as engine:
        eg = ElimGraph.build(g, engine, monitor=monitor)
        if kind == DFS:
            got = dfs(eg, s, 0, engine)
            want = seq_dfs(g, s, 0)
        else:
            got = bfs(eg, s, 0, engine)
            want = seq_bfs(g, s, 0)
    return compare_results(got, want)
