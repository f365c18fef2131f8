"""Execution contract for data-parallel blocks, with cost accounting.

All parallelism in this package goes through ``ParEngine.par_for``: a loop
over an index range whose bodies may read anything but must write pairwise
disjoint locations (concurrent-read, exclusive-write), followed by a full
barrier.  The driver code between blocks is strictly sequential.

Two backends share identical semantics and identical cost accounting:

* ``simulated`` runs bodies inline, in index order.  Deterministic and
  machine-independent; the default for benchmarks.
* ``threaded`` runs bodies on a fixed pool of ``processors`` worker threads,
  one contiguous chunk of ceil(k/p) indices per worker, with a real barrier
  per block.

Cost model, charged identically by both backends:

* a block over k indices costs ceil(k/p) time steps, one synchronization
  step, and k units of work; an empty block still synchronizes;
* ``seq_tick`` charges driver actions (one unit each); traversal drivers
  tick once per visit, per while-condition evaluation, per queue enqueue or
  dequeue, and per level advance;
* with p = 1, time_steps == work + seq_steps.

An optional validation mode records every location mutated within a block
(bodies report them via ``log_write``) and fails the block on any duplicate,
enforcing the exclusive-write contract.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .errors import DisjointWriteViolation

SIMULATED = "simulated"
THREADED = "threaded"

CSV_FIELDS = ("time_steps", "sync_steps", "work", "seq_steps")


@dataclass(frozen=True)
class CostReport:
    """Snapshot of an engine's accumulated cost counters."""

    time_steps: int = 0
    sync_steps: int = 0
    work: int = 0
    seq_steps: int = 0

    def __sub__(self, other: CostReport) -> CostReport:
        return CostReport(
            self.time_steps - other.time_steps,
            self.sync_steps - other.sync_steps,
            self.work - other.work,
            self.seq_steps - other.seq_steps,
        )

    def as_kv_block(self) -> str:
        """Flat key=value serialization, one counter per line."""
        return "\n".join(f"{name}={getattr(self, name)}" for name in CSV_FIELDS)

    def as_csv_row(self) -> str:
        return ",".join(str(getattr(self, name)) for name in CSV_FIELDS)


class ParEngine:
    """Parallel-for executor with PRAM-style cost accounting.

    ``processors`` is the modelled processor count p >= 1.  The threaded
    backend allocates its worker pool lazily and should be closed after use
    (it is also a context manager); closing a simulated engine is a no-op.
    """

    def __init__(self, processors: int = 1, backend: str = SIMULATED,
                 validate_writes: bool = False):
        if processors < 1:
            raise ValueError(f"processors must be >= 1, got {processors}")
        if backend not in (SIMULATED, THREADED):
            raise ValueError(f"unknown backend {backend!r}")
        self.processors = processors
        self.backend = backend
        self.validate_writes = validate_writes
        self.time_steps = 0
        self.sync_steps = 0
        self.work = 0
        self.seq_steps = 0
        self._pool: _WorkerPool | None = None
        self._write_log: list[tuple] = []
        self._log_lock = threading.Lock()

    # -- execution ----------------------------------------------------------

    def par_for(self, count: int, body: Callable[[int], None]) -> None:
        """Run body(i) for 0 <= i < count, then synchronize.

        Bodies must write pairwise-disjoint locations (caller obligation,
        checked only in validation mode).  Accounting: ceil(count/p) time
        steps, one synchronization step, count units of work.
        """
        p = self.processors
        self.time_steps += -(-count // p)
        self.sync_steps += 1
        self.work += count
        if self.validate_writes:
            self._write_log.clear()
        if self.backend == SIMULATED:
            for i in range(count):
                body(i)
        else:
            if self._pool is None:
                self._pool = _WorkerPool(p)
            self._pool.run_block(body, count)
        if self.validate_writes:
            self._check_block_writes()

    def seq_tick(self, units: int = 1) -> None:
        """Charge sequential driver work: units time steps outside any block."""
        self.seq_steps += units
        self.time_steps += units

    def report(self) -> CostReport:
        return CostReport(self.time_steps, self.sync_steps, self.work, self.seq_steps)

    # -- write validation ----------------------------------------------------

    def log_write(self, cell: tuple) -> None:
        """Record one mutated location of the current block (validation mode)."""
        with self._log_lock:
            self._write_log.append(cell)

    def _check_block_writes(self) -> None:
        seen = set()
        for cell in self._write_log:
            if cell in seen:
                raise DisjointWriteViolation(cell)
            seen.add(cell)
        self._write_log.clear()

    # -- lifecycle -----------------------------------------------------------

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool = None

    def __enter__(self) -> ParEngine:
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def __repr__(self) -> str:
        return f"ParEngine(processors={self.processors}, backend={self.backend!r})"


class _WorkerPool:
    """Fixed pool of worker threads executing one chunked block at a time.

    Drivers and workers meet at two reusable barriers per block, so the
    engine's sync_steps counter equals the number of real barrier episodes.
    """

    def __init__(self, workers: int):
        self.workers = workers
        self._begin = threading.Barrier(workers + 1)
        self._end = threading.Barrier(workers + 1)
        self._task: tuple[Callable[[int], None], int, int] | None = None
        self._errors: list[BaseException | None] = [None] * workers
        self._threads = [
            threading.Thread(target=self._worker_loop, args=(w,), daemon=True)
            for w in range(workers)
        ]
        for t in self._threads:
            t.start()

    def _worker_loop(self, w: int) -> None:
        while True:
            self._begin.wait()
            task = self._task
            if task is None:
                return
            body, count, chunk = task
            lo = w * chunk
            hi = min(count, lo + chunk)
            try:
                for i in range(lo, hi):
                    body(i)
            except BaseException as exc:  # propagated by the driver
                self._errors[w] = exc
            self._end.wait()

    def run_block(self, body: Callable[[int], None], count: int) -> None:
        chunk = -(-count // self.workers) if count else 0
        self._task = (body, count, chunk)
        self._begin.wait()
        self._end.wait()
        self._task = None
        first = next((exc for exc in self._errors if exc is not None), None)
        if first is not None:
            self._errors = [None] * self.workers
            raise first

    def close(self) -> None:
        self._task = None
        self._begin.wait()
        for t in self._threads:
            t.join()
