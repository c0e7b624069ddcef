from __future__ import annotations

from pydantic import BaseModel, Field

from .bijection import GluingReport
from .counting import CountRow


class CountRowResponse(BaseModel):
    g: int
    d_star: str
    d_type1: str
    d_type2: str
    d_all: str

    @classmethod
    def from_row(cls, row: CountRow) -> "CountRowResponse":
        return cls(
            g=row.g,
            d_star=str(row.d_star),
            d_type1=str(row.d_type1),
            d_type2=str(row.d_type2),
            d_all=str(row.d_all),
        )

    def to_plain(self) -> str:
        return f"g={self.g} d_star={self.d_star} d_type1={self.d_type1} d_type2={self.d_type2} d_all={self.d_all}"


class CountTableResponse(BaseModel):
    rows: list[CountRowResponse]

    def to_plain(self) -> str:
        return "\n".join(row.to_plain() for row in self.rows)


class CellMismatch(BaseModel):
    g: int
    column: str
    expected: str
    computed: str


class VerifyTableReport(BaseModel):
    max_genus: int
    checked: int
    mismatches: list[CellMismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_plain(self) -> str:
        lines = [f"checked {self.checked} reference cells for g=1..{self.max_genus}"]
        for m in self.mismatches:
            lines.append(f"MISMATCH g={m.g} {m.column}: expected {m.expected}, computed {m.computed}")
        lines.append("ok" if self.ok else f"{len(self.mismatches)} mismatching cells")
        return "\n".join(lines)


class OracleCheck(BaseModel):
    name: str
    g: int
    oracle: str
    formula: str
    details: dict[str, str] = Field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.oracle == self.formula

    def to_plain(self) -> str:
        line = f"{self.name} g={self.g} oracle={self.oracle} formula={self.formula} {'ok' if self.agree else 'MISMATCH'}"
        extra = " ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{line} {extra}" if extra else line


class OracleReport(BaseModel):
    checks: list[OracleCheck]

    @property
    def ok(self) -> bool:
        return all(c.agree for c in self.checks)

    def to_plain(self) -> str:
        return "\n".join(c.to_plain() for c in self.checks)


class GluingReportResponse(BaseModel):
    vertex_count: int
    face_count: int
    orientable: bool
    euler_genus: int

    @classmethod
    def from_report(cls, report: GluingReport) -> "GluingReportResponse":
        return cls(
            vertex_count=report.vertex_count,
            face_count=report.face_count,
            orientable=report.orientable,
            euler_genus=report.euler_genus,
        )

    def to_plain(self) -> str:
        kind = "orientable" if self.orientable else "non-orientable"
        return f"V={self.vertex_count} F={self.face_count} {kind} euler_genus={self.euler_genus}"


class BijectionResponse(BaseModel):
    direction: str
    input: str
    output: str
    gluing: GluingReportResponse
    split: dict[str, str] = Field(default_factory=dict)

    def to_plain(self) -> str:
        lines = [self.output, self.gluing.to_plain()]
        if self.split:
            lines.append(" ".join(f"{k}={v}" for k, v in self.split.items()))
        return "\n".join(lines)


class EnumerationSummary(BaseModel):
    chords: int
    count: str

    def to_plain(self) -> str:
        return self.count
