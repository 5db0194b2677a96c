"""Enumeration budgets.

Every exhaustive routine checks its search size against one of these limits
and raises :class:`~crcodes.errors.BudgetExceeded` instead of silently
running for hours. Limits are held in a context variable so that the CLI
(or a test) can override them for a block of code::

    with budgets(cosets=2**12):
        covering_radius(code)
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace

from .errors import BudgetExceeded


@dataclass(frozen=True)
class Budgets:
    codewords: int = 2**24
    cosets: int = 2**20
    oracle: int = 2**20
    monomials: int = 10**7

    def __post_init__(self):
        for name in ("codewords", "cosets", "oracle", "monomials"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name!r} must be positive")


_current = contextvars.ContextVar("crcodes_budgets", default=Budgets())


def current() -> Budgets:
    return _current.get()


@contextlib.contextmanager
def budgets(**overrides):
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def check(kind: str, size: int, what: str | None = None) -> None:
    limit = getattr(current(), kind)
    if size > limit:
        raise BudgetExceeded(what or kind, size, limit, kind)
