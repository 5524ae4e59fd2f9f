"""Double-buffered worklist of active node ids.

One iteration reads from `current` (frozen) while pushes append to the next
buffer through a shared cursor; `swap_and_sort` is the quiescence point that
promotes the next buffer, sorted ascending so the processing order is
deterministic regardless of how concurrent pushes interleaved.

Callers guarantee each node is pushed at most once per iteration, so a
preallocated buffer of `capacity` slots can never legitimately overflow;
overflow therefore raises rather than resizes.
"""

from __future__ import annotations

import threading

import numpy as np

from .graph import ID_DTYPE


class Worklist:
    def __init__(self, capacity: int, initial: np.ndarray | None = None):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        if initial is None:
            initial = np.empty(0, dtype=ID_DTYPE)
        self._current = np.ascontiguousarray(initial, dtype=ID_DTYPE)
        self._current.flags.writeable = False
        # shared append state: kernels bump `cursor` with atomic fetch-add,
        # Python-level push serializes on the lock
        self.next_storage = np.empty(capacity, dtype=ID_DTYPE)
        self.cursor = np.zeros(1, dtype=ID_DTYPE)
        self._lock = threading.Lock()

    @classmethod
    def init_full(cls, n: int) -> "Worklist":
        return cls(n, np.arange(n, dtype=ID_DTYPE))

    @property
    def current(self) -> np.ndarray:
        return self._current

    @property
    def next_count(self) -> int:
        return int(self.cursor[0])

    def push(self, node: int) -> None:
        if not 0 <= node < self.capacity:
            raise RuntimeError(f"push of node {node} outside capacity {self.capacity}")
        with self._lock:
            i = int(self.cursor[0])
            if i >= self.capacity:
                raise RuntimeError(
                    "worklist overflow: more pushes than capacity "
                    "(at-most-once-per-iteration contract broken)"
                )
            self.next_storage[i] = node
            self.cursor[0] = i + 1

    def push_many(self, nodes: np.ndarray) -> None:
        """Bulk append; one cursor reservation for the whole batch."""
        k = len(nodes)
        if k == 0:
            return
        with self._lock:
            i = int(self.cursor[0])
            if i + k > self.capacity:
                raise RuntimeError(
                    "worklist overflow: more pushes than capacity "
                    "(at-most-once-per-iteration contract broken)"
                )
            self.next_storage[i : i + k] = nodes
            self.cursor[0] = i + k

    def swap_and_sort(self) -> int:
        """Promote the next buffer to `current`, sorted ascending; return its size."""
        m = int(self.cursor[0])
        if m > self.capacity:
            raise RuntimeError(
                f"worklist overflow: {m} pushes into capacity {self.capacity}"
            )
        self._current = np.sort(self.next_storage[:m])
        if __debug__ and m > 1:
            assert not (self._current[1:] == self._current[:-1]).any(), (
                "duplicate id pushed within one iteration"
            )
        self._current.flags.writeable = False
        self.cursor[0] = 0
        return m

    def __len__(self) -> int:
        return self._current.shape[0]


def init_full(n: int) -> Worklist:
    """Worklist holding every node id in [0, n)."""
    return Worklist.init_full(n)
