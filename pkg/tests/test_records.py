import json
from fractions import Fraction as F

import pytest

from torsionforms import FamilyDataError, Witness, generate_curve
from torsionforms.records import CurveRecord


@pytest.fixture(scope="module")
def record():
    return generate_curve(Witness(5, 1, 1, F(1)))


class TestSerialization:
    def test_all_values_are_decimal_strings(self, record):
        d = record.to_dict()
        for key in ("n", "p", "q", "A", "B", "delta"):
            int(d[key])  # parses exactly
        for x, y in d["points"]:
            int(x), int(y)
        assert d["k"] == "1"
        assert d["provenance"] == "generated"

    def test_round_trip(self, record):
        line = record.to_json_line()
        again = CurveRecord.from_json_line(line)
        assert again == record
        assert again.to_json_line() == line

    def test_csv_row(self, record):
        assert record.to_csv_row() == "5,1,1,1,-432,8208,Z/5Z"

    def test_fractional_branch_round_trip(self):
        rec = generate_curve(Witness(7, 2, 1, F(1, 3)))
        d = rec.to_dict()
        assert d["k"] == "1/3"
        assert CurveRecord.from_dict(d) == rec


class TestValidation:
    def test_tampered_delta_rejected(self, record):
        d = record.to_dict()
        d["delta"] = str(int(d["delta"]) + 1)
        with pytest.raises(FamilyDataError):
            CurveRecord.from_dict(d)

    def test_off_curve_point_rejected(self, record):
        d = record.to_dict()
        d["points"][0] = ["1", "1"]
        with pytest.raises(FamilyDataError):
            CurveRecord.from_dict(d)

    def test_wrong_order_rejected(self, record):
        d = record.to_dict()
        d["n"] = "7"
        with pytest.raises(FamilyDataError):
            CurveRecord.from_dict(d)

    def test_bad_label_rejected(self, record):
        d = record.to_dict()
        d["group_label"] = "Z/11Z"
        with pytest.raises(FamilyDataError):
            CurveRecord.from_dict(d)

    def test_json_is_plain(self, record):
        parsed = json.loads(record.to_json_line())
        assert all(isinstance(v, (str, list)) for v in parsed.values())
