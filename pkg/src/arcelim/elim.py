"""Mutable search structure: incoming-arc tables and unlinkable out-lists.

The traversal drivers never scan an arc twice because arcs die the moment
their target is visited: visiting v removes every arc into v, in parallel,
from the out-lists of all its sources.  To support that, each vertex u
carries

* ``in_arcs[u]``: the (source, slot) pairs of u's original incoming arcs,
* ``nxt``/``prv``/``first``: a doubly linked list threaded over u's fixed
  adjacency array, giving O(1) unlink of any slot.

The adjacency arrays themselves are never modified; a removed slot is only
linked out.  ``first[u] == outdeg(u)`` means u's live list is exhausted;
``prv`` uses -1 (NIL) before the first live slot.

The core invariant, established by every visit and relied on by both
drivers: a visited vertex has no live incoming arc, so following the first
live arc of any list always discovers an unvisited vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from .errors import AlreadyEliminated
from .graph import ArcRef, Graph

if TYPE_CHECKING:
    from .engine import ParEngine
    from .instrument import InvariantMonitor

NIL = -1


@dataclass
class ElimVertex:
    """Inspection view of one vertex's search-structure state."""

    out: tuple[int, ...]
    outdeg: int
    in_arcs: list[ArcRef]
    indeg: int
    nxt: list[int]
    prv: list[int]
    first: int
    traversal: int | None
    distance: int | None
    parent: int | None


class ElimGraph:
    """Per-vertex elimination state plus traversal result fields.

    Mutated only inside parallel blocks issued by a single sequential
    driver; block bodies write pairwise-disjoint locations.  Within one
    visit's block this holds structurally: the incoming arcs of a vertex
    come from pairwise-distinct sources (simple digraph), and unlinking a
    slot touches only its own list's first/nxt/prv entries, one slot per
    source list per block.
    """

    def __init__(self, graph: Graph):
        n = graph.num_vertices
        self.graph = graph
        self.n = n
        self.out = graph.out_lists
        self.outdeg = [len(ts) for ts in graph.out_lists]
        self.first = [0] * n
        self.nxt: list[list[int]] = [[0] * d for d in self.outdeg]
        self.prv: list[list[int]] = [[0] * d for d in self.outdeg]
        self.indeg = [0] * n
        self.in_arcs: list[list[ArcRef]] = [[] for _ in range(n)]
        self.traversal: list[int | None] = [None] * n
        self.distance: list[int | None] = [None] * n
        self.parent: list[int | None] = [None] * n
        self.monitor: InvariantMonitor | None = None
        self._traversed = False

    @classmethod
    def build(cls, graph: Graph, engine: ParEngine | None = None,
              monitor: InvariantMonitor | None = None) -> ElimGraph:
        """Construct the search structure: one init block, then one block
        per vertex filling incoming-arc tables and list links.

        The sequential outer loop runs in ascending vertex id, so each
        in-table ends up ordered by source id.  Within one vertex's block
        all targets are distinct, so every location has a single writer.
        Costs exactly n+1 synchronization steps and
        ceil(n/p) + sum_u ceil(outdeg(u)/p) time steps; in-tables are
        pre-sized by an untimed counting pass, so the timed phase never
        reallocates.
        """
        from .engine import ParEngine

        if engine is None:
            engine = ParEngine()
        eg = cls(graph)
        n, out = eg.n, eg.out

        counts = [0] * n
        for targets in out:
            for t in targets:
                counts[t] += 1
        in_arcs = eg.in_arcs
        for v in range(n):
            if counts[v]:
                in_arcs[v] = [ArcRef(0, 0)] * counts[v]

        indeg, first = eg.indeg, eg.first
        log = engine.log_write if engine.validate_writes else None

        def init_body(u: int) -> None:
            indeg[u] = 0
            first[u] = 0
            if log is not None:
                log(("indeg", u))
                log(("first", u))

        engine.par_for(n, init_body)

        for u in range(n):
            targets = out[u]
            nxt_u, prv_u = eg.nxt[u], eg.prv[u]

            def arc_body(i: int, u: int = u, targets: tuple[int, ...] = targets,
                         nxt_u: list[int] = nxt_u, prv_u: list[int] = prv_u) -> None:
                v = targets[i]
                d = indeg[v]
                in_arcs[v][d] = ArcRef(u, i)
                indeg[v] = d + 1
                nxt_u[i] = i + 1
                prv_u[i] = i - 1
                if log is not None:
                    log(("in", v))
                    log(("nxt", u, i))
                    log(("prv", u, i))

            engine.par_for(len(targets), arc_body)

        if monitor is not None:
            monitor.attach(eg)
        return eg

    # -- elimination ---------------------------------------------------------

    def eliminate(self, source: int, slot: int) -> None:
        """Unlink one slot from its source's live list in O(1).

        Raises AlreadyEliminated if the slot is not live: a live slot is
        pointed at by its predecessor (or by first), and unlink removes that
        one pointer, so liveness is an O(1) test.
        """
        nxt_u = self.nxt[source]
        prv_u = self.prv[source]
        p = prv_u[slot]
        x = nxt_u[slot]
        if p == NIL:
            if self.first[source] != slot:
                raise AlreadyEliminated(source, slot)
            self.first[source] = x
        else:
            if nxt_u[p] != slot:
                raise AlreadyEliminated(source, slot)
            nxt_u[p] = x
        if x < self.outdeg[source]:
            prv_u[x] = p
        if self.monitor is not None:
            self.monitor.on_eliminate(source, slot)

    def _eliminate_logged(self, source: int, slot: int, log: Callable[[tuple], None]) -> None:
        # eliminate() plus write logging for the engine's validation mode
        nxt_u = self.nxt[source]
        prv_u = self.prv[source]
        p = prv_u[slot]
        x = nxt_u[slot]
        if p == NIL:
            if self.first[source] != slot:
                raise AlreadyEliminated(source, slot)
            self.first[source] = x
            log(("first", source))
        else:
            if nxt_u[p] != slot:
                raise AlreadyEliminated(source, slot)
            nxt_u[p] = x
            log(("nxt", source, p))
        if x < self.outdeg[source]:
            prv_u[x] = p
            log(("prv", source, x))
        if self.monitor is not None:
            self.monitor.on_eliminate(source, slot)

    def eliminate_incoming(self, v: int, engine: ParEngine) -> None:
        """Remove every incoming arc of v in one parallel block.

        The sources of v's incoming arcs are pairwise distinct, so the
        block's writes are disjoint.  Always costs one synchronization step,
        even for indeg(v) == 0.
        """
        arcs = self.in_arcs[v]
        if engine.validate_writes:
            log = engine.log_write

            def body(i: int) -> None:
                u, j = arcs[i]
                self._eliminate_logged(u, j, log)

        else:
            eliminate = self.eliminate

            def body(i: int) -> None:
                u, j = arcs[i]
                eliminate(u, j)

        engine.par_for(len(arcs), body)

    # -- queries -------------------------------------------------------------

    def first_live_target(self, u: int) -> int | None:
        """Target of u's first live arc, or None if the list is exhausted."""
        i = self.first[u]
        if i < self.outdeg[u]:
            return self.out[u][i]
        return None

    def live_slots(self, u: int) -> list[int]:
        """Slot indices of u's live arcs, in list order."""
        slots = []
        i = self.first[u]
        d = self.outdeg[u]
        while i < d:
            slots.append(i)
            i = self.nxt[u][i]
        return slots

    def live_targets(self, u: int) -> list[int]:
        return [self.out[u][i] for i in self.live_slots(u)]

    def vertex(self, u: int) -> ElimVertex:
        return ElimVertex(
            out=self.out[u],
            outdeg=self.outdeg[u],
            in_arcs=list(self.in_arcs[u]),
            indeg=self.indeg[u],
            nxt=list(self.nxt[u]),
            prv=list(self.prv[u]),
            first=self.first[u],
            traversal=self.traversal[u],
            distance=self.distance[u],
            parent=self.parent[u],
        )

    def dump(self) -> str:
        """Deterministic per-vertex state dump, for golden tests."""
        lines = []
        for u in range(self.n):
            live = ",".join(str(t) for t in self.live_targets(u))
            lines.append(f"{u}: live=[{live}] first={self.first[u]} indeg={self.indeg[u]}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"ElimGraph(n={self.n}, m={self.graph.num_arcs})"
