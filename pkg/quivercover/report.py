import json
from dataclasses import dataclass, field

REPORT_KIND = "quiver_cover_report"


@dataclass
class Report:
    """Output of one command: text lines for people, ``data`` for ``--json``."""

    title: str
    lines: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, line=""):
        self.lines.append(str(line))
        return self

    def extend(self, lines):
        self.lines.extend(str(line) for line in lines)
        return self

    def text(self):
        return "\n".join(self.lines) + "\n" if self.lines else ""

    def to_json(self):
        payload = {"kind": REPORT_KIND, "command": self.title, "lines": list(self.lines), "data": self.data}
        return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"

    def render(self, as_json=False):
        return self.to_json() if as_json else self.text()
