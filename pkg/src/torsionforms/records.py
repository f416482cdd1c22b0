"""Persistable curve records with decimal-string JSON serialization.

Big integers are serialized as decimal strings so downstream consumers with
fixed-width numeric types can read them; records re-validate on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .curves import Curve, Point, on_curve, point_order
from .errors import FamilyDataError
from .torsion import MAZUR_LABELS


@dataclass(frozen=True)
class CurveRecord:
    n: int
    p: int
    q: int
    k: Fraction
    curve: Curve
    delta: int
    points: tuple[Point, ...]
    group_label: str
    provenance: str          # "generated" | "detected"
    form: str                # "ab" (direct model) | "fg6" (its 6-twist)

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "p": str(self.p),
            "q": str(self.q),
            "k": str(self.k),
            "A": str(self.curve.A),
            "B": str(self.curve.B),
            "delta": str(self.delta),
            "points": [[str(P.x), str(P.y)] for P in self.points],
            "group_label": self.group_label,
            "provenance": self.provenance,
            "form": self.form,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_csv_row(self) -> str:
        return ",".join(
            [str(self.n), str(self.p), str(self.q), str(self.k),
             str(self.curve.A), str(self.curve.B), self.group_label]
        )

    @classmethod
    def from_dict(cls, d: dict) -> "CurveRecord":
        rec = cls(
            n=int(d["n"]),
            p=int(d["p"]),
            q=int(d["q"]),
            k=Fraction(d["k"]),
            curve=Curve(int(d["A"]), int(d["B"])),
            delta=int(d["delta"]),
            points=tuple(Point(Fraction(x), Fraction(y)) for x, y in d["points"]),
            group_label=d["group_label"],
            provenance=d["provenance"],
            form=d["form"],
        )
        rec.validate()
        return rec

    @classmethod
    def from_json_line(cls, line: str) -> "CurveRecord":
        return cls.from_dict(json.loads(line))

    def validate(self) -> None:
        """Re-check the record's internal claims: discriminant, membership of
        every point, and exact point orders."""
        if self.curve.disc != self.delta:
            raise FamilyDataError(
                f"stored delta {self.delta} != discriminant {self.curve.disc}"
            )
        if self.group_label not in MAZUR_LABELS:
            raise FamilyDataError(f"unrecognized group label {self.group_label!r}")
        for P in self.points:
            if not on_curve(self.curve, P):
                raise FamilyDataError(f"recorded point {P!r} is not on {self.curve!r}")
            order = point_order(self.curve, P)
            if order != self.n:
                raise FamilyDataError(
                    f"recorded point {P!r} has order {order}, expected {self.n}"
                )
