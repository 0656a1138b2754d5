"""Per-class repair engine.

Repairs one partition class at a time. FDs whose whole lhs lies in earlier
classes (pilot FDs) go first; the rest are ordered by estimated attribute
reliability: the more tuples an attribute would need changed under
independent per-FD majority resolution (Vio), the earlier its FDs run.
A disjoint set forest per attribute records which tuples must end up with
equal values; fixing an FD merges forest classes and rewrites every
multi-valued class with the attribute's repair function. When a fix
changes an attribute appearing in the lhs of an already-processed FD,
that FD is pushed back for revision; unary FDs whose lhs attribute uses a
preservative function may skip that step, backed by a closing sweep that
re-enqueues anything a skipped revision left violated.
"""

import heapq
from collections import Counter
from dataclasses import dataclass, field

from .dsf import DisjointSetForest
from .fds import group_rows, violates


@dataclass
class RepairStats:
    """Counters for one class repair."""
    fixes_per_fd: Counter = field(default_factory=Counter)
    polls_per_fd: Counter = field(default_factory=Counter)
    revisions: int = 0
    cells_changed: int = 0
    vio_sizes: dict = field(default_factory=dict)
    priority: list = field(default_factory=list)


def majority_value(rel, lhs, x_value, a, rng, null_equals_null=True):
    """Highest-multiplicity value of ``a`` among tuples with lhs == x_value."""
    groups = group_rows(rel, sorted(lhs), null_equals_null)
    key = tuple(x_value)
    if key not in groups:
        raise ValueError("no tuples with %r = %r" % (sorted(lhs), x_value))
    return _group_majority(rel, groups[key], a, rng)


def _group_majority(rel, tids, a, rng):
    counts = Counter(rel.get(t, a) for t in tids)
    best = max(counts.values())
    tied = sorted({v for v, c in counts.items() if c == best},
                  key=lambda v: (v is None, v))
    if len(tied) == 1:
        return tied[0]
    return rng.choice(tied)


def vio_fd(rel, fd, rng, null_equals_null=True):
    """Tuples whose rhs value differs from the per-group majority."""
    out = set()
    for tids in group_rows(rel, sorted(fd.lhs), null_equals_null).values():
        mv = _group_majority(rel, tids, fd.rhs, rng)
        out.update(t for t in tids if rel.get(t, fd.rhs) != mv)
    return out


def vio(rel, a, cover, rng, null_equals_null=True):
    """Union of vio_fd over all cover FDs with rhs == a."""
    out = set()
    for fd in cover:
        if fd.rhs == a:
            out |= vio_fd(rel, fd, rng, null_equals_null)
    return out


def estimate_priority(rel, class_attrs, cover, rng, null_equals_null=True):
    """Class attributes ordered for repair: larger |Vio| first, then by
    schema index. Returns (ordered attributes, per-attribute |Vio|)."""
    sizes = {a: len(vio(rel, a, cover, rng, null_equals_null))
             for a in class_attrs}
    order = sorted(class_attrs,
                   key=lambda a: (-sizes[a], rel.schema.index(a)))
    return order, sizes


def pilot_fds(class_attrs, fds_i, priority=None):
    """Split the class's FDs into (pilot, non_pilot).

    Pilots (lhs disjoint from the class) keep declaration order; the rest
    are sorted by the priority rank of their rhs, ties by declaration order.
    """
    cls = set(class_attrs)
    pilots = [fd for fd in fds_i if not (fd.lhs & cls)]
    rest = [fd for fd in fds_i if fd.lhs & cls]
    if priority is not None:
        rank = {a: i for i, a in enumerate(priority)}
        rest.sort(key=lambda fd: rank[fd.rhs])
    return pilots, rest


def update_dsf(rel, fd, dsf, null_equals_null=True):
    """Merge forest classes so tuples with equal lhs values share a root."""
    idx = rel.schema.indices(sorted(fd.lhs))
    roots = {}
    for tid, row in zip(rel.tids, rel.rows):
        key = tuple(row[i] for i in idx)
        if not null_equals_null and any(v is None for v in key):
            continue  # NULL keys never match anything, including each other
        root = roots.get(key)
        if root is None:
            roots[key] = dsf.find(tid)
        else:
            dsf.union(tid, root)
            roots[key] = dsf.find(tid)


def fix(rel, fd, dsf, fn, rng, stats=None, change_log=None,
        null_equals_null=True):
    """Fix violations of ``fd``: after updating the forest, rewrite every
    class showing more than one rhs value with the repair function.
    Returns the number of violated classes."""
    update_dsf(rel, fd, dsf, null_equals_null)
    rhs_i = rel.schema.index(fd.rhs)
    width = len(rel.schema)
    fixes = 0
    for tids in dsf.classes():
        rows = [rel.row_of(t) for t in tids]
        values = [row[rhs_i] for row in rows]
        if len(set(values)) <= 1:
            continue
        null_counts = [sum(1 for c in row if c is None) for row in rows]
        v_fix = fn(values, null_counts, width, rng)
        for tid, row in zip(tids, rows):
            if row[rhs_i] != v_fix:
                if change_log is not None:
                    change_log.append((tid, fd.rhs, row[rhs_i], v_fix))
                if stats is not None:
                    stats.cells_changed += 1
                row[rhs_i] = v_fix
        fixes += 1
    return fixes


def skip_revision_unary(fd, functions):
    """Unary FDs whose lhs attribute repairs preservatively never need revision."""
    if len(fd.lhs) != 1:
        return False
    (a,) = fd.lhs
    fn = functions.get(a)
    return fn is not None and fn.preservative


class _FDStack:
    """Stack of pending FDs that maintains priority order at all times."""

    def __init__(self, fds_in_order):
        self._rank = {fd: i for i, fd in enumerate(fds_in_order)}
        self._heap = list(range(len(fds_in_order)))
        heapq.heapify(self._heap)
        self._fds = fds_in_order
        self._pending = set(fds_in_order)

    def __bool__(self):
        return bool(self._heap)

    def __contains__(self, fd):
        return fd in self._pending

    def poll(self):
        fd = self._fds[heapq.heappop(self._heap)]
        self._pending.discard(fd)
        return fd

    def add(self, fd):
        if fd not in self._pending:
            heapq.heappush(self._heap, self._rank[fd])
            self._pending.add(fd)


def priority_repair(rel, fds_i, class_attrs, functions, rng, stats=None,
                    change_log=None, priority=None, null_equals_null=True,
                    skip_unary_revision=True):
    """Repair one partition class in place (mutates ``rel``).

    ``functions`` maps attribute -> RepairFunction. ``priority`` overrides
    the estimated attribute order (manual supervisor input).
    """
    if stats is None:
        stats = RepairStats()
    pilots, rest = pilot_fds(class_attrs, fds_i, priority=None)
    if rest:
        if priority is None:
            priority, stats.vio_sizes = estimate_priority(
                rel, class_attrs, fds_i, rng, null_equals_null)
        _, rest = pilot_fds(class_attrs, fds_i, priority)
    stats.priority = list(priority or [])
    ordered = pilots + rest
    stack = _FDStack(ordered)
    forests = {a: DisjointSetForest(rel.tids) for a in class_attrs}

    # Termination guard: every productive pass merges forest classes, so
    # polls are bounded by roughly |fds_i| * (n + 1).
    budget = (len(ordered) + 1) * (len(rel) + 2)
    while True:
        while stack:
            budget -= 1
            assert budget >= 0, "priority repair exceeded its iteration bound"
            fd = stack.poll()
            stats.polls_per_fd[fd] += 1
            fixes = fix(rel, fd, forests[fd.rhs], functions[fd.rhs], rng,
                        stats, change_log, null_equals_null)
            stats.fixes_per_fd[fd] += fixes
            if fixes:
                for other in ordered:
                    if other in stack or fd.rhs not in other.lhs:
                        continue
                    if skip_unary_revision and skip_revision_unary(other, functions):
                        continue
                    stack.add(other)
                    stats.revisions += 1
        # Closing sweep: the unary-revision shortcut is unsound on cyclic
        # classes of three or more attributes (a later fix can change an lhs
        # attribute of an FD whose revision was skipped), so re-enqueue
        # anything still violated rather than trust the shortcut blindly.
        still_bad = [fd for fd in ordered
                     if violates(rel, fd, null_equals_null)]
        if not still_bad:
            return stats
        for fd in still_bad:
            stack.add(fd)
            stats.revisions += 1
