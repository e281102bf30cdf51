"""Enumeration of candidate partitions.

Partitions are unordered; the canonical form is a tuple of blocks sorted by
smallest element, each block a sorted tuple of labels.  Generation places
the smallest unassigned label first (into the lowest-indexed open block or
a fresh one), so every unordered partition is produced exactly once, in a
deterministic order.
"""

from .errors import InvalidParameters


def canonical(blocks):
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def partitions_with_max_block(labels, q, max_size):
    """All partitions of `labels` into exactly q non-empty blocks of size
    <= max_size, streamed in canonical order."""
    labels = list(labels)
    n = len(labels)
    if q * max_size < n or q > n:
        return

    blocks = []

    def rec(i):
        if i == n:
            if len(blocks) == q:
                yield tuple(tuple(b) for b in blocks)
            return
        remaining = n - i
        open_slots = sum(max_size - len(b) for b in blocks)
        missing = q - len(blocks)
        label = labels[i]
        # Place into an existing block: still need `missing` labels to open
        # the remaining blocks, and capacity for everything else.
        if remaining - 1 >= missing and open_slots - 1 + missing * max_size >= remaining - 1:
            for b in blocks:
                if len(b) < max_size:
                    b.append(label)
                    yield from rec(i + 1)
                    b.pop()
        # Open a fresh block (blocks are opened in label order, which keeps
        # the emitted partition canonical).
        if missing > 0 and open_slots + missing * max_size >= remaining:
            blocks.append([label])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


def enumerate_candidate_partitions(n, q, d):
    """Candidate Tverberg partitions: q non-empty blocks of size <= d+1
    covering {0..n-1}, with n = (d+1)(q-1)+1."""
    if n != (d + 1) * (q - 1) + 1:
        raise InvalidParameters(f"n={n} incompatible with q={q}, d={d}")
    yield from partitions_with_max_block(range(n), q, d + 1)


def equal_size_partitions(labels, k, size):
    """Partitions of `labels` into k blocks of exactly `size` elements."""
    labels = sorted(labels)
    if len(labels) != k * size:
        raise InvalidParameters("label count is not k * size")

    from itertools import combinations

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        rest = remaining[1:]
        for companions in combinations(rest, size - 1):
            block = (first,) + companions
            left = [x for x in rest if x not in companions]
            for tail in rec(left):
                yield (block,) + tail

    yield from rec(labels)
