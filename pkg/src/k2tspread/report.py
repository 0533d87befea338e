"""Machine-readable command reports: JSON plus an aligned text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS, FAIL, INFO = "pass", "fail", "info"


@dataclass
class Assertion:
    name: str
    status: str
    detail: str = ""
    tol: float | None = None


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    rows: list[dict] = field(default_factory=list)
    assertions: list[Assertion] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "", tol: float | None = None) -> bool:
        self.assertions.append(Assertion(name, PASS if ok else FAIL, detail, tol))
        return ok

    def info(self, name: str, detail: str = "", tol: float | None = None) -> None:
        self.assertions.append(Assertion(name, INFO, detail, tol))

    @property
    def ok(self) -> bool:
        return all(a.status != FAIL for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "assertions": [asdict(a) for a in self.assertions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(
            d["command"],
            d.get("params", {}),
            d.get("rows", []),
            [Assertion(**a) for a in d.get("assertions", [])],
        )

    def to_text(self) -> str:
        lines = [f"== {self.command} " + " ".join(f"{k}={v}" for k, v in self.params.items())]
        if self.rows:
            cols = list(self.rows[0])
            cells = [[_fmt(r.get(c)) for c in cols] for r in self.rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
            lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
            lines.extend("  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells)
        for a in self.assertions:
            tol = f" (tol {a.tol:g})" if a.tol is not None else ""
            lines.append(f"[{a.status.upper():4}] {a.name}{tol}: {a.detail}")
        return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)
