#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.output.tables

Emission of command results as an aligned text table, csv or json
"""

import sys
from typing import List

import pandas as pd

from ..config import conf
from ..tempered import records as codecs

FORMATS = ("table", "csv", "json")


class OutputConfig:
    """one output format, an optional output path and svg overrides"""

    def __init__(self, properties: dict):
        self.format = properties.get("format", "table")
        self.out_path = properties.get("out_path", None)
        self.svg = dict(conf["svg"])
        self.svg.update(properties.get("svg", {}))
        if self.format not in FORMATS:
            raise ValueError("unknown output format '{}'".format(self.format))

    @staticmethod
    def from_args(args):
        """from parsed --json / --csv [FILE] / --out flags"""
        output_format = "table"
        out_path = getattr(args, "out", None)
        csv = getattr(args, "csv", False)
        if getattr(args, "json", False):
            output_format = "json"
        elif csv:
            output_format = "csv"
            if isinstance(csv, str):
                if out_path is not None and out_path != csv:
                    raise ValueError(
                        "--csv {} and --out {} name different files".format(
                            csv, out_path))
                out_path = csv
        return OutputConfig({
            "format": output_format,
            "out_path": out_path
        })


def render_frame(frame: pd.DataFrame, config: OutputConfig) -> str:
    if config.format == "csv":
        return conf["csv_header"] + "\n" + frame.to_csv(index=False)
    if config.format == "json":
        return frame.to_json(orient="records", indent=1) + "\n"
    if frame.empty:
        return "(no rows)\n"
    return frame.to_string(index=False) + "\n"


def render_records(records: List, record_type,
                   config: OutputConfig) -> str:
    """records through the versioned codecs for csv and json, or an
    aligned table of the csv columns"""
    if config.format == "csv":
        return codecs.to_csv(records, record_type)
    if config.format == "json":
        return codecs.to_json(records) + "\n"
    frame = pd.DataFrame([record.to_row() for record in records],
                         columns=record_type.CSV_COLUMNS)
    return render_frame(frame, config)


def emit(text: str, config: OutputConfig):
    """write text to the output path, or to stdout"""
    if config.out_path:
        with open(config.out_path, "w") as out_file:
            out_file.write(text)
    else:
        sys.stdout.write(text)
