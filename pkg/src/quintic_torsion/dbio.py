"""Curve database ingestion, generator-config loading, and report JSON.

Curve files are plain CSV (label,conductor,a1,a2,a3,a4,a6); a conductor of
0 marks a record whose conductor is unknown (synthetic sample rows), and
such rows never enter conductor-sliced scans.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .curves import CurveQ
from .gl2 import LevelData, MatGroup, level_data, mat_transpose


@dataclass(frozen=True)
class CurveRecord:
    label: str
    conductor: int
    a_invariants: tuple

    def curve(self) -> CurveQ:
        return CurveQ(*self.a_invariants)


class IngestError(ValueError):
    pass


def parse_curves(stream, source="<stream>"):
    """Parse curve records from CSV text; malformed lines raise with their
    line number, duplicate labels are rejected."""
    records = []
    seen = set()
    reader = csv.reader(stream)
    for lineno, row in enumerate(reader, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if row[0].lstrip().startswith("#"):
            continue
        if len(row) != 7:
            raise IngestError("%s line %d: expected 7 fields, got %d"
                              % (source, lineno, len(row)))
        label = row[0].strip()
        if not label:
            raise IngestError("%s line %d: empty label" % (source, lineno))
        if label in seen:
            raise IngestError("%s line %d: duplicate label %r" % (source, lineno, label))
        try:
            conductor = int(row[1])
            ainv = tuple(int(v) for v in row[2:7])
        except ValueError as exc:
            raise IngestError("%s line %d: %s" % (source, lineno, exc))
        if conductor < 0:
            raise IngestError("%s line %d: negative conductor" % (source, lineno))
        try:
            CurveQ(*ainv)
        except ValueError:
            raise IngestError("%s line %d: singular curve %s" % (source, lineno, list(ainv)))
        seen.add(label)
        records.append(CurveRecord(label, conductor, ainv))
    return records


def ingest_curves(path):
    with open(path, newline="") as fh:
        return parse_curves(fh, source=str(path))


def bundled_records():
    text = resources.files(__package__).joinpath("data/curves_sample.csv").read_text()
    return parse_curves(io.StringIO(text), source="curves_sample.csv")


# ---------------------------------------------------------------------------
# Generator config and the mod-p image table.

def load_generator_config(path=None):
    if path is None:
        text = resources.files(__package__).joinpath("data/gl2_generators.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def validate_table(config):
    """Recompute the (d0, dv, d) data of every configured group and diff it
    against the expected values, trying the column-action convention first
    and the transposed (row) convention if any row disagrees.

    Returns (convention, rows) where rows maps label to a dict with the
    recomputed and expected triples and a match flag; raises if neither
    convention reproduces the table.
    """
    for convention in ("columns", "rows"):
        rows = {}
        all_match = True
        for label, spec in sorted(config["groups"].items()):
            gens = [tuple(g) for g in spec["generators"]]
            if convention == "rows":
                gens = [mat_transpose(g) for g in gens]
            G = MatGroup.generate(gens, spec["modulus"])
            got = level_data(G)
            expected = (spec["expected"]["d0"], sorted(spec["expected"]["dv"]),
                        spec["expected"]["d"])
            match = got.as_tuple() == expected
            all_match = all_match and match
            rows[label] = {"computed": got.as_tuple(), "expected": expected,
                           "match": match}
        if all_match:
            return convention, rows
    raise AssertionError("generator config reproduces the image table under "
                         "neither action convention")


def cm_d1_table(config=None):
    if config is None:
        config = load_generator_config()
    return dict(config["cm_d1_mod11"])


# ---------------------------------------------------------------------------
# Report round-trips.

def report_to_json(report_dict) -> str:
    return json.dumps(report_dict, sort_keys=True)


def report_from_json(text) -> dict:
    return json.loads(text)
