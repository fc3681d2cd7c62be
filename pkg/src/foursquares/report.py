"""Outcome record for a single verification run.

One :class:`CheckReport` captures one identity check: the identity's name,
where it was evaluated (truncation order and/or a point in the upper half
plane and/or a matrix), whether it passed, and a witness.  For
coefficient-exact checks the witness is the first failing index together
with the two disagreeing values; for floating-point checks it is the
maximum observed error against the tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    identity: str
    passed: bool
    order: int | None = None
    tau: complex | None = None
    matrix: str | None = None
    error: float | None = None
    tol: float | None = None
    witness: str | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None and self.error is None:
            raise ValueError("a failing report needs a witness or an error value")

    def to_json_dict(self) -> dict:
        out: dict = {
            "identity": self.identity,
            "tau": [self.tau.real, self.tau.imag] if self.tau is not None else None,
            "matrix": self.matrix,
            "error": self.error,
            "tol": self.tol,
            "pass": self.passed,
        }
        if self.order is not None:
            out["order"] = self.order
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def describe(self) -> str:
        """One human-readable line, stable enough for CI logs."""
        bits = [f"{'PASS' if self.passed else 'FAIL'} {self.identity}"]
        if self.order is not None:
            bits.append(f"order={self.order}")
        if self.tau is not None:
            bits.append(f"tau={self.tau.real:g}{self.tau.imag:+g}i")
        if self.matrix is not None:
            bits.append(f"matrix={self.matrix}")
        if self.error is not None:
            bits.append(f"error={self.error:.3e}")
        if self.tol is not None:
            bits.append(f"tol={self.tol:.1e}")
        if self.witness is not None:
            bits.append(f"witness: {self.witness}")
        return "  ".join(bits)
