#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.tempered.records

Result records (Eisenstein tempered forms, 2-and-2 forms, scan rows)
and their versioned CSV and JSON serialisation
"""

import json
from fractions import Fraction
from io import StringIO
from typing import List, NamedTuple

import pandas as pd

from ..config import conf
from ..forms.bqf import Form


class TemperedRecord:
    """an s-and-s' tempered form on the hexagonal lattice, witnessed
    by a primitive vector of its sublattice"""

    CSV_COLUMNS = ["kind", "ell", "tau2_num", "tau2_den", "wx", "wy"]

    def __init__(self, properties: dict):
        self.kind = properties["kind"]
        self.ell = properties["ell"]
        self.s = properties["s"]
        self.s_prime = properties["s_prime"]
        self.tau2 = Fraction(properties["tau2"])
        self.witness = properties.get("witness", None)

    def __eq__(self, other):
        return (isinstance(other, TemperedRecord)
                and self.to_dict() == other.to_dict())

    def __repr__(self):
        return "TemperedRecord({})".format(self.to_dict())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ell": self.ell,
            "tau2_num": self.tau2.numerator,
            "tau2_den": self.tau2.denominator,
            "witness": list(self.witness) if self.witness else None
        }

    def to_row(self) -> list:
        wx, wy = self.witness
        return [self.kind, self.ell, self.tau2.numerator,
                self.tau2.denominator, wx, wy]

    def save(self, database, run_id: int):
        """insert into the eisenstein_record table"""
        database.insert("eisenstein_record", {
            "run_id": run_id,
            "kind": self.kind,
            "ell": self.ell,
            "tau2_num": self.tau2.numerator,
            "tau2_den": self.tau2.denominator,
            "wx": self.witness[0],
            "wy": self.witness[1]
        })

    @staticmethod
    def from_row(row: dict):
        kind = str(row["kind"])
        s, s_prime = (int(x) for x in kind.split("and"))
        return TemperedRecord({
            "kind": kind,
            "ell": int(row["ell"]),
            "s": s,
            "s_prime": s_prime,
            "tau2": Fraction(int(row["tau2_num"]), int(row["tau2_den"])),
            "witness": (int(row["wx"]), int(row["wy"]))
        })

    @staticmethod
    def from_dict(data: dict):
        row = dict(data)
        row["wx"], row["wy"] = data["witness"]
        return TemperedRecord.from_row(row)


class TwoTwoRecord:
    """a 2-and-2 form: ambient class (a, b, a), sublattice class
    (u1, v1, u1), tau^2 = l * u1 / a"""

    CSV_COLUMNS = ["ell", "D", "aL", "bL", "aM", "bM",
                   "tau2_num", "tau2_den"]

    def __init__(self, properties: dict):
        self.ell = properties["ell"]
        self.discriminant = properties["discriminant"]
        self.class_L = properties["class_L"]
        self.class_M = properties["class_M"]
        self.tau2 = Fraction(properties["tau2"])

    def __eq__(self, other):
        return (isinstance(other, TwoTwoRecord)
                and self.to_dict() == other.to_dict())

    def __repr__(self):
        return "TwoTwoRecord({})".format(self.to_dict())

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "D": self.discriminant,
            "classL": self.class_L.to_dict(),
            "classM": self.class_M.to_dict(),
            "tau2_num": self.tau2.numerator,
            "tau2_den": self.tau2.denominator
        }

    def to_row(self) -> list:
        return [self.ell, self.discriminant, self.class_L.a, self.class_L.b,
                self.class_M.a, self.class_M.b, self.tau2.numerator,
                self.tau2.denominator]

    def save(self, database, run_id: int):
        """insert into the two_two_record table"""
        database.insert("two_two_record", {
            "run_id": run_id,
            "ell": self.ell,
            "discriminant": self.discriminant,
            "a_L": self.class_L.a,
            "b_L": self.class_L.b,
            "a_M": self.class_M.a,
            "b_M": self.class_M.b,
            "tau2_num": self.tau2.numerator,
            "tau2_den": self.tau2.denominator
        })

    @staticmethod
    def create(ell: int, d: int, class_L: Form, class_M: Form):
        """record with tau^2 = l * u1 / a"""
        return TwoTwoRecord({
            "ell": ell,
            "discriminant": d,
            "class_L": class_L,
            "class_M": class_M,
            "tau2": Fraction(ell * class_M.a, class_L.a)
        })

    @staticmethod
    def from_row(row: dict):
        a_L, b_L, a_M, b_M = (int(row[k]) for k in ("aL", "bL", "aM", "bM"))
        return TwoTwoRecord({
            "ell": int(row["ell"]),
            "discriminant": int(row["D"]),
            "class_L": Form(a_L, b_L, a_L),
            "class_M": Form(a_M, b_M, a_M),
            "tau2": Fraction(int(row["tau2_num"]), int(row["tau2_den"]))
        })

    @staticmethod
    def from_dict(data: dict):
        return TwoTwoRecord({
            "ell": data["ell"],
            "discriminant": data["D"],
            "class_L": Form(**data["classL"]),
            "class_M": Form(**data["classM"]),
            "tau2": Fraction(data["tau2_num"], data["tau2_den"])
        })


class ScanRow(NamedTuple):
    """largest |D| found for one prime, and |D| / l^2"""
    ell: int
    discriminant: int
    ratio: Fraction

    CSV_COLUMNS = ["ell", "D", "ratio_num", "ratio_den"]

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "D": self.discriminant,
            "ratio_num": self.ratio.numerator,
            "ratio_den": self.ratio.denominator
        }

    def to_row(self) -> list:
        return [self.ell, self.discriminant, self.ratio.numerator,
                self.ratio.denominator]

    def save(self, database, run_id: int):
        database.insert("scan_row", dict(self.to_dict(), run_id=run_id))

    @staticmethod
    def from_row(row: dict):
        return ScanRow(int(row["ell"]), int(row["D"]),
                       Fraction(int(row["ratio_num"]), int(row["ratio_den"])))

    @staticmethod
    def from_dict(data: dict):
        return ScanRow.from_row(data)


RECORD_TYPES = [TemperedRecord, TwoTwoRecord, ScanRow]


def to_csv(records: List, record_type=None) -> str:
    """versioned csv text; record_type is needed for empty lists"""
    if record_type is None:
        if not records:
            raise ValueError("record type of an empty list is unknown")
        record_type = type(records[0])
    table = pd.DataFrame([record.to_row() for record in records],
                         columns=record_type.CSV_COLUMNS)
    return conf["csv_header"] + "\n" + table.to_csv(index=False)


def from_csv(text: str) -> List:
    """parse the output of to_csv back into records"""
    header, _, body = text.partition("\n")
    if header.strip() != conf["csv_header"]:
        raise ValueError("unsupported csv header '{}'".format(header))
    table = pd.read_csv(StringIO(body), dtype=str, keep_default_na=False)
    columns = list(table.columns)
    for record_type in RECORD_TYPES:
        if columns == record_type.CSV_COLUMNS:
            return [record_type.from_row(row)
                    for row in table.to_dict(orient="records")]
    raise ValueError("unknown csv columns {}".format(columns))


def to_json(records: List) -> str:
    return json.dumps([record.to_dict() for record in records], indent=1)


def from_json(text: str, record_type) -> List:
    return [record_type.from_dict(data) for data in json.loads(text)]
