from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import InconclusiveError


@dataclass(frozen=True, eq=False)
class Verdict:
    """Outcome of a decision procedure.

    ``holds`` is ``None`` when the procedure could not decide; the truth
    value of such a verdict raises instead of guessing.
    """

    holds: bool | None
    witness: Any = None
    info: dict = field(default_factory=dict)

    @property
    def unknown(self) -> bool:
        return self.holds is None

    def __bool__(self):
        if self.holds is None:
            raise InconclusiveError(self.info.get("reason", "undecided verdict"))
        return self.holds
