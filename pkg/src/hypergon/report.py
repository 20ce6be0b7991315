"""Verification report type shared by the lemma checks and the partition
sweeps, with JSON-friendly (de)serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["LEMMA_IDS", "SCHEMA_VERSION", "VerificationReport"]

SCHEMA_VERSION = 1

# Check identifiers accepted by the `verify` CLI subcommand.  T3_1 (the
# partition merge theorem) is reported by the certify sweep, not here.
LEMMA_IDS = (
    "L4_2",
    "L4_3",
    "P4_1",
    "C4_4",
    "L5_1",
    "T5_2_instance",
    "L5_3",
    "P6_1",
    "L6_2_phi",
    "L6_3",
    "L7_1",
    "PSI_ENDPOINTS",
    "ANGLE_BALANCE",
)


@dataclass
class VerificationReport:
    """Outcome of one certification run.

    ``params`` fully determine the check, so reports are reproducible
    bit-for-bit.  Margins are oriented so positive means the verified
    property holds with slack, giving the invariant passed == (worst_margin
    > 0).  ``witness`` locates the worst margin.
    """

    lemma_id: str
    params: dict
    passed: bool
    worst_margin: float
    witness: dict = field(default_factory=dict)
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "lemma_id": self.lemma_id,
            "params": dict(self.params),
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "witness": dict(self.witness),
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            lemma_id=d["lemma_id"],
            params=dict(d["params"]),
            passed=d["passed"],
            worst_margin=d["worst_margin"],
            witness=dict(d["witness"]),
            notes=d.get("notes", ""),
        )
