from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class ClassificationReport(BaseModel):
    """Flags computed by `classify` for a single quandle."""

    model_config = ConfigDict(populate_by_name=True)

    order: int
    trivial: bool
    quasi_trivial: bool
    connected: bool
    c_connected: bool
    c_separated: bool
    # membership of the class of quandles without non-trivial connected subquandles
    in_z: bool = Field(alias="in_Z")
    orbits: int

    def lines(self) -> List[str]:
        """Aligned `key: value` lines followed by a one-line summary."""
        fields = self.model_dump(by_alias=True)
        width = max(len(key) for key in fields) + 1
        out = [f"{key + ':':<{width}} {flag_text(value)}" for key, value in fields.items()]
        out.append(" ".join(f"{key}={flag_text(value)}" for key, value in fields.items()))
        return out


class SuiteResult(BaseModel):
    """Outcome of one property suite run by `verify`."""

    name: str
    anchor: str = ""
    statement: str
    instances: int
    passed: bool
    # first failing instance, smallest order first
    witness: Optional[str] = None
    seconds: float = 0.0


class VerifyReport(BaseModel):
    max_order: int
    suites: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


def flag_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
