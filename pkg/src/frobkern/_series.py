"""Dense truncated integer power series (plain coefficient lists)."""

from __future__ import annotations


def mul_trunc(a: list[int], b: list[int], d_max: int) -> list[int]:
    """Product of two coefficient lists, truncated to degree d_max."""
    out = [0] * (d_max + 1)
    for i, ai in enumerate(a[: d_max + 1]):
        if ai:
            for j, bj in enumerate(b[: d_max + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def geometric(step: int, d_max: int) -> list[int]:
    """Expansion of 1 / (1 - t^step) to degree d_max."""
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    out = [0] * (d_max + 1)
    for k in range(0, d_max + 1, step):
        out[k] = 1
    return out
