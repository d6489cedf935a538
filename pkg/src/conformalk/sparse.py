"""Small helpers for dict-based sparse vectors with GaussScalar values."""

from __future__ import annotations

from .scalar import ZERO, GaussScalar


def acc(d: dict, key, c) -> None:
    """d[key] += c, deleting the entry if it becomes exactly zero."""
    if not c:
        return
    old = d.get(key)
    if old is None:
        d[key] = c if isinstance(c, GaussScalar) else GaussScalar.coerce(c)
        return
    new = old + c
    if new:
        d[key] = new
    else:
        del d[key]


def add_scaled(d: dict, src: dict, c) -> None:
    """d += c * src."""
    if not c:
        return
    for k, v in src.items():
        acc(d, k, v * c)


def scaled(src: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in src.items()}


def clean(d: dict) -> dict:
    return {k: (v if isinstance(v, GaussScalar) else GaussScalar.coerce(v))
            for k, v in d.items() if v}


def dict_equal(a: dict, b: dict) -> bool:
    if a.keys() != b.keys():
        return False
    return all(a[k] == b[k] for k in a)


def diff(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        acc(out, k, -v)
    return out


__all__ = ["acc", "add_scaled", "scaled", "clean", "dict_equal", "diff", "ZERO"]
