"""Run configuration and the step budget that guards every Groebner computation."""

from __future__ import annotations

import contextlib
import contextvars
import json
import os
from dataclasses import asdict, dataclass, fields

from .errors import BudgetExceeded, InputError


@dataclass(frozen=True)
class Config:
    max_steps: int = 10**7  # reduction steps per budget scope
    e_max: int = 3
    seed: int = 0
    threads: int = 1
    enum_budget: int = 10**4  # socle elements / subspaces enumerated exhaustively
    minor_budget: int = 5000  # Jacobian minors before is_smooth gives up

    def snapshot(self) -> dict:
        return asdict(self)

    @classmethod
    def load(cls, path=None) -> Config:
        data = {}
        if path:
            try:
                with open(path, encoding="utf-8") as fh:
                    data = json.load(fh)
            except OSError as exc:
                raise InputError(f"cannot read config {path}: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise InputError(f"config {path}: {exc}") from None
            if not isinstance(data, dict):
                raise InputError("config file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        threads = os.environ.get("FSING_THREADS")
        if threads and "threads" not in data:
            data["threads"] = int(threads)
        cfg = cls(**data)
        for f in fields(cls):
            v = getattr(cfg, f.name)
            if not isinstance(v, int) or v < 0:
                raise InputError(f"config {f.name} must be a nonnegative integer")
        return cfg


class Budget:
    """Counts reduction steps; raises BudgetExceeded past ``max_steps``."""

    __slots__ = ("max_steps", "steps")

    def __init__(self, max_steps: int):
        self.max_steps = max_steps
        self.steps = 0

    def charge(self, n: int):
        self.steps += n
        if self.steps > self.max_steps:
            raise BudgetExceeded(f"exceeded {self.max_steps} reduction steps")


_config: contextvars.ContextVar[Config] = contextvars.ContextVar("fsing_config", default=Config())
_budget: contextvars.ContextVar[Budget | None] = contextvars.ContextVar("fsing_budget", default=None)


def current_config() -> Config:
    return _config.get()


@contextlib.contextmanager
def using_config(cfg: Config):
    token = _config.set(cfg)
    try:
        yield cfg
    finally:
        _config.reset(token)


@contextlib.contextmanager
def budget_scope(max_steps: int | None = None):
    """Give the enclosed computations one shared, fresh budget."""
    b = Budget(current_config().max_steps if max_steps is None else max_steps)
    token = _budget.set(b)
    try:
        yield b
    finally:
        _budget.reset(token)


def active_budget() -> Budget:
    b = _budget.get()
    if b is None:
        # outside any scope each engine call gets its own allowance
        b = Budget(current_config().max_steps)
    return b
