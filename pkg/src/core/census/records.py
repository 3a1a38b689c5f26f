"""
One census row per (tuple, characteristic, property)
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..algebra.domain import DegreeTuple, Status, Verdict


CSV_COLUMNS = ("degrees", "normalized", "char", "property", "status", "method", "witness", "runtime_micros")


class CensusRecord(BaseModel):
    """A decided (or undecided) case; serializes with a fixed key order"""

    degrees: List[int] = Field(description="Degrees in input order")
    normalized: List[int] = Field(description="Degrees sorted nonincreasing")
    char: int = Field(description="Characteristic, 0 or a prime")
    property: str = Field(description="'wlp' or 'slp'")
    status: Status
    method: str
    witness: Optional[Dict[str, Any]] = Field(default=None, description="Witness without null fields")
    runtime_micros: int = Field(default=0, description="Wall time of the decision")

    @classmethod
    def from_verdict(
        cls, d: DegreeTuple, char: int, prop: str, verdict: Verdict, runtime_micros: int = 0
    ) -> 'CensusRecord':
        return cls(
            degrees=list(d.original),
            normalized=list(d.degrees),
            char=char,
            property=prop,
            status=verdict.status,
            method=verdict.method,
            witness=verdict.witness.to_dict() if verdict.witness else None,
            runtime_micros=runtime_micros,
        )

    def to_json_line(self) -> str:
        return json.dumps(self.model_dump(mode="json"), separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> 'CensusRecord':
        return cls(**json.loads(line))

    def to_csv_row(self) -> List[str]:
        witness = json.dumps(self.witness, separators=(",", ":")) if self.witness else ""
        return [
            " ".join(str(e) for e in self.degrees),
            " ".join(str(e) for e in self.normalized),
            str(self.char),
            self.property,
            self.status.value,
            self.method,
            witness,
            str(self.runtime_micros),
        ]

    @classmethod
    def from_csv_row(cls, row: Dict[str, str]) -> 'CensusRecord':
        return cls(
            degrees=[int(e) for e in row["degrees"].split()],
            normalized=[int(e) for e in row["normalized"].split()],
            char=int(row["char"]),
            property=row["property"],
            status=Status(row["status"]),
            method=row["method"],
            witness=json.loads(row["witness"]) if row["witness"] else None,
            runtime_micros=int(row["runtime_micros"]),
        )

    def stable_dict(self) -> Dict[str, Any]:
        """Record without the timing field, for determinism checks"""
        return self.model_dump(mode="json", exclude={"runtime_micros"})
