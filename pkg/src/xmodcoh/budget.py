"""Enumeration budget guardrail.

Every enumeration kernel estimates its candidate count up front and calls
:func:`check` before starting.  The ceiling defaults to 10**8 and can be
overridden with the ``CMX_BUDGET`` environment variable or the
:func:`budget` context manager.
"""

import contextlib
import contextvars
import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8

_budget = contextvars.ContextVar("cmx_budget", default=None)


def current():
    value = _budget.get()
    if value is not None:
        return value
    env = os.environ.get("CMX_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@contextlib.contextmanager
def budget(limit):
    token = _budget.set(int(limit))
    try:
        yield
    finally:
        _budget.reset(token)


def check(estimate):
    limit = current()
    if estimate > limit:
        raise BudgetExceeded(estimate, limit)
