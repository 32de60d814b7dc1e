from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Status(str, enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNDETERMINED = "UNDETERMINED"

    def __str__(self):
        return self.value


@dataclass
class Verdict:
    """Outcome of a singularity test.

    ``certificate`` is a JSON-friendly dict whose contents can be re-checked
    with ideal operations alone; ``log`` holds one record per level tried.
    """

    status: Status
    certificate: dict | None = None
    log: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.status is Status.TRUE

    def to_json(self) -> dict:
        return {
            "verdict": self.status.value,
            "certificate": self.certificate,
            "log": self.log,
        }
