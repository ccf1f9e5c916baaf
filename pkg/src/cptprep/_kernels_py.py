"""Pure-Python kernels.

Same contracts as the compiled module cptprep._kernels_c; cptprep.kernels
picks whichever is available. Symbol pairs are packed into a single int as
(a << 32) | b, so symbol ids must stay below 2**31.
"""

from __future__ import annotations


def merge_ranked(syms: list[int], table: dict[int, int]) -> list[int]:
    """Apply ranked pair merges to a symbol sequence until none applies.

    `table` maps packed (left, right) pairs to (rank << 32) | new_id. Each
    round merges the lowest-rank pair present, leftmost occurrence first.
    The input list may be mutated; the merged list is returned.
    """
    n = len(syms)
    while n > 1:
        best_val = -1
        best_pos = -1
        prev = syms[0]
        for i in range(n - 1):
            cur = syms[i + 1]
            val = table.get((prev << 32) | cur, -1)
            if val >= 0 and (best_val < 0 or val < best_val):
                best_val = val
                best_pos = i
            prev = cur
        if best_pos < 0:
            break
        syms[best_pos : best_pos + 2] = [best_val & 0xFFFFFFFF]
        n -= 1
    return syms


def count_pairs(seqs: list[list[int]], weights: list[int]) -> dict[int, int]:
    """Count adjacent symbol pairs across all sequences, weighted per sequence."""
    counts: dict[int, int] = {}
    for seq, w in zip(seqs, weights):
        prev = -1
        for cur in seq:
            if prev >= 0:
                key = (prev << 32) | cur
                counts[key] = counts.get(key, 0) + w
            prev = cur
    return counts


def replace_pair(seqs: list[list[int]], left: int, right: int, new_id: int) -> int:
    """Rewrite every sequence replacing adjacent (left, right) with new_id.

    Replacements are leftmost-first and non-overlapping within a sequence.
    Returns the total number of replacements.
    """
    replaced = 0
    for si, seq in enumerate(seqs):
        n = len(seq)
        if n < 2:
            continue
        out: list[int] | None = None
        i = 0
        while i < n:
            if i + 1 < n and seq[i] == left and seq[i + 1] == right:
                if out is None:
                    out = seq[:i]
                out.append(new_id)
                replaced += 1
                i += 2
            else:
                if out is not None:
                    out.append(seq[i])
                i += 1
        if out is not None:
            seqs[si] = out
    return replaced


def window_pairs(ids: list[int], window: int, acc: dict[int, int]) -> None:
    """Accumulate co-occurrence counts for positions i < j <= i + window.

    Pairs of equal ids are skipped; keys are packed (min << 32) | max.
    """
    n = len(ids)
    for i in range(n - 1):
        a = ids[i]
        stop = i + window
        if stop > n - 1:
            stop = n - 1
        for j in range(i + 1, stop + 1):
            b = ids[j]
            if a == b:
                continue
            key = (a << 32) | b if a < b else (b << 32) | a
            acc[key] = acc.get(key, 0) + 1
