#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.cli

Command line surface over the class group, Eisenstein, 2-and-2 and
verifier modules
"""

import argparse
import sys
from copy import deepcopy
from fractions import Fraction
from typing import List

import pandas as pd
from sympy import isprime

from .config import conf
from .data.database import Database
from .forms.classgroup import (ambiguous_classes, class_group,
                               element_order, genus_of, genus_partition,
                               genus_values, has_wr_discriminant,
                               smallest_primes, well_rounded_classes)
from .lattice import eisenstein
from .lattice.geometry import Gram
from .lattice.verifier import PairLattice, classify, oracle_eisenstein
from .output.figure import FigureSpec, figure_for_record, render_figure
from .output.tables import OutputConfig, emit, render_frame, render_records
from .tempered import two_two
from .tempered.records import ScanRow, TemperedRecord, TwoTwoRecord
from .utils import format_fraction, log, parse_int_list

KINDS = ("3and3", "3and1", "1and3", "2and2")


def prime_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer".format(text))
    if not isprime(value):
        raise argparse.ArgumentTypeError("{} is not prime".format(value))
    return value


def positive_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("{} is not positive".format(value))
    return value


def _fractions(text: str, count: int) -> List[Fraction]:
    parts = text.split(",")
    if len(parts) != count:
        raise ValueError("expected {} comma separated numbers, got '{}'".format(
            count, text))
    try:
        return [Fraction(part.strip()) for part in parts]
    except ZeroDivisionError:
        raise ValueError("zero denominator in '{}'".format(text))


def _bool(flag: bool) -> str:
    return "yes" if flag else "no"


def _save(db_path: str, records: List, args):
    if not db_path:
        return
    params = {key: value for key, value in vars(args).items()
              if key != "func"}
    with Database(db_path) as database:
        run_id = database.save_records(records, params)
    log("saved {} records as run {} in {}".format(
        len(records), run_id, db_path))


def cmd_classgroup(args, output: OutputConfig) -> str:
    g = class_group(args.disc)
    ambiguous = set(ambiguous_classes(g))
    wr = set(well_rounded_classes(g))
    primes = smallest_primes(g)
    frame = pd.DataFrame([{
        "index": i,
        "form": str(f),
        "order": element_order(g, i),
        "ambiguous": _bool(i in ambiguous),
        "well_rounded": _bool(i in wr),
        "genus": genus_of(g, i),
        "p": primes[i] if primes[i] is not None else ""
    } for i, f in enumerate(g.classes)])
    return render_frame(frame, output)


def _temperaments(kind: str, ell: int) -> List:
    if kind == "3and3":
        record = eisenstein.three_three(ell)
        return [record] if record else []
    if kind == "3and1":
        return eisenstein.three_one(ell)
    if kind == "1and3":
        return eisenstein.one_three(ell)
    return two_two.enumerate(ell)


def cmd_temperaments(args, output: OutputConfig) -> str:
    records = _temperaments(args.kind, args.ell)
    _save(args.db, records, args)
    record_type = TwoTwoRecord if args.kind == "2and2" else TemperedRecord
    return render_records(records, record_type, output)


def cmd_verify(args, output: OutputConfig) -> str:
    a, b, c = _fractions(args.gram, 3)
    h11, h12, h21, h22 = parse_int_list(args.sub, 4)
    pair = PairLattice.create(Gram.create(a, b / 2, c),
                              ((h11, h12), (h21, h22)), args.ell)
    result = classify(pair)
    row = {
        "tempered": _bool(result.tempered),
        "kind": result.kind,
        "tau2": format_fraction(result.tau2),
        "m_L": format_fraction(result.m_L),
        "m_M": format_fraction(result.m_M),
        "S": " ".join("{},{}".format(*v) for v in result.S),
        "S_prime": " ".join("{},{}".format(*v) for v in result.S_prime)
    }
    return render_frame(pd.DataFrame([row]), output)


def cmd_oracle(args, output: OutputConfig) -> str:
    rows = []
    for hnf, result in oracle_eisenstein(args.ell):
        rows.append({
            "h11": hnf[0][0],
            "h12": hnf[0][1],
            "h22": hnf[1][1],
            "kind": result.kind,
            "tempered": _bool(result.tempered),
            "tau2": format_fraction(result.tau2)
        })
    return render_frame(pd.DataFrame(rows), output)


def cmd_genus(args, output: OutputConfig) -> str:
    g = class_group(args.disc)
    rows = []
    for genus_id, members in enumerate(genus_partition(g)):
        values = genus_values(g, members)
        rows.append({
            "genus": genus_id,
            "forms": " ".join(str(g.classes[i]) for i in members),
            "count": len(values),
            "residues": " ".join(str(v) for v in values)
        })
    return render_frame(pd.DataFrame(rows), output)


def cmd_wellrounded(args, output: OutputConfig) -> str:
    frame = pd.DataFrame(
        [w._asdict() for w in has_wr_discriminant(args.disc)],
        columns=["F", "G", "a", "b"])
    return render_frame(frame, output)


def cmd_ells_for_disc(args, output: OutputConfig) -> str:
    frame = pd.DataFrame([
        {"ell": ell, "classL": str(class_L), "classM": str(class_M)}
        for ell, class_L, class_M in two_two.ells_for_disc(args.disc, args.max)
    ], columns=["ell", "classL", "classM"])
    return render_frame(frame, output)


def cmd_congruences(args, output: OutputConfig) -> str:
    result = two_two.congruence_classes(args.disc)
    if result is None:
        log("congruences cannot decide for D={}: a genus holds more "
            "than one class".format(args.disc))
        frame = pd.DataFrame([{"modulus": -args.disc, "decidable": "no",
                               "residues": ""}])
    else:
        modulus, residue_sets = result
        frame = pd.DataFrame([
            {"modulus": modulus, "decidable": "yes",
             "residues": " ".join(str(v) for v in residues)}
            for residues in residue_sets
        ], columns=["modulus", "decidable", "residues"])
    return render_frame(frame, output)


def cmd_primeclass(args, output: OutputConfig) -> str:
    g = class_group(args.disc)
    frame = pd.DataFrame([
        {"index": i, "form": str(g.classes[i]), "principal": _bool(principal),
         "x": witness[0], "y": witness[1]}
        for i, principal, witness in two_two.prime_class(args.disc, args.p)
    ], columns=["index", "form", "principal", "x", "y"])
    return render_frame(frame, output)


def cmd_scan(args, output: OutputConfig) -> str:
    rows = two_two.max_ratio_scan(args.max_ell,
                                  cache_folder=args.cache_folder)
    _save(args.db, rows, args)
    text = render_records(rows, ScanRow, output)
    best, holds = two_two.scan_summary(rows)
    if best is None:
        summary = "no 2-and-2 forms for ell <= {}".format(args.max_ell)
    else:
        summary = ("max |D|/l^2 = {} ({:.4f}) at ell={}, D={}; "
                   "|D| <= 3 l^2 holds: {}").format(
                       format_fraction(best.ratio), float(best.ratio),
                       best.ell, best.discriminant, _bool(holds))
    log(summary)
    if output.format == "table":
        return text + summary + "\n"
    print(summary, file=sys.stderr, flush=True)
    return text


def cmd_figure(args, output: OutputConfig) -> str:
    if args.disc is not None:
        records = two_two.records_for_disc(args.disc, args.ell)
    elif args.kind in ("3and3", "3and1", "1and3"):
        records = _temperaments(args.kind, args.ell)
    else:
        raise ValueError("figure needs --disc or an Eisenstein --kind")
    if args.index >= len(records):
        raise ValueError("only {} matching records for ell={}".format(
            len(records), args.ell))
    spec = figure_for_record(records[args.index], args.window)
    spec = FigureSpec.create(spec.pair, spec.window,
                             draw_inner=not args.no_inner,
                             draw_outer=not args.no_outer)
    return render_figure(spec, output.svg) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out_format = common.add_mutually_exclusive_group()
    out_format.add_argument("--json", action="store_true",
                            help="emit json instead of a table")
    out_format.add_argument("--csv", nargs="?", const=True, default=False,
                            metavar="FILE",
                            help="emit versioned csv instead of a table, "
                            "written to FILE when given")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the output to PATH instead of stdout")
    common.add_argument("--verbose", action="store_true",
                        help="print progress messages to stderr")
    common.add_argument("--num-threads", type=positive_arg,
                        default=conf["num_threads"],
                        help="worker processes (default: {})".format(
                            conf["num_threads"]))

    parser = argparse.ArgumentParser(
        prog="temperedforms",
        description="tempered perfect forms of prime index in the plane")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def add(name, func, help_text):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(func=func)
        return sub

    sub = add("classgroup", cmd_classgroup, "reduced forms of a discriminant")
    sub.add_argument("--disc", type=int, required=True)

    sub = add("temperaments", cmd_temperaments,
              "tempered forms of one index and kind")
    sub.add_argument("--ell", type=prime_arg, required=True)
    sub.add_argument("--kind", choices=KINDS, required=True)
    sub.add_argument("--db", default=None, metavar="FILE",
                     help="also store the records in an sqlite3 file")

    sub = add("verify", cmd_verify, "classify one lattice pair")
    sub.add_argument("--gram", required=True, metavar="a,b,c",
                     help="form coefficients, rationals allowed")
    sub.add_argument("--sub", required=True, metavar="h11,h12,h21,h22")
    sub.add_argument("--ell", type=prime_arg, required=True)

    sub = add("oracle", cmd_oracle,
              "classify every index-ell sublattice of Z[w]")
    sub.add_argument("--ell", type=prime_arg, required=True)

    sub = add("genus", cmd_genus, "residues mod |D| of each genus")
    sub.add_argument("--disc", type=int, required=True)

    sub = add("wellrounded", cmd_wellrounded,
              "factorisations certifying a well-rounded class")
    sub.add_argument("--disc", type=int, required=True)

    sub = add("ells-for-disc", cmd_ells_for_disc,
              "primes with a 2-and-2 form of discriminant D")
    sub.add_argument("--disc", type=int, required=True)
    sub.add_argument("--max", type=positive_arg, required=True)

    sub = add("congruences", cmd_congruences,
              "congruence classes of the primes with a 2-and-2 form")
    sub.add_argument("--disc", type=int, required=True)

    sub = add("primeclass", cmd_primeclass,
              "classes of the primes above p, by representation")
    sub.add_argument("--disc", type=int, required=True)
    sub.add_argument("--p", type=prime_arg, required=True)

    sub = add("scan", cmd_scan, "largest 2-and-2 discriminant per prime")
    sub.add_argument("--max-ell", type=positive_arg, required=True)
    sub.add_argument("--cache-folder", default=None, metavar="DIR",
                     help="reuse per-prime results pickled in DIR")
    sub.add_argument("--db", default=None, metavar="FILE")

    sub = add("figure", cmd_figure, "svg drawing of a tempered pair")
    sub.add_argument("--ell", type=prime_arg, required=True)
    sub.add_argument("--disc", type=int, default=None)
    sub.add_argument("--kind", choices=KINDS, default=None)
    sub.add_argument("--index", type=int, default=0,
                     help="which matching record to draw (default: 0)")
    sub.add_argument("--window", type=float, default=None,
                     help="radius in minimal vector lengths")
    sub.add_argument("--no-inner", action="store_true")
    sub.add_argument("--no-outer", action="store_true")
    return parser


def run(argv: List[str]) -> int:
    """parse argv, dispatch, return the exit code"""
    saved = deepcopy(conf)
    try:
        args = build_parser().parse_args(argv)
        conf["verbose"] = args.verbose
        conf["num_threads"] = args.num_threads
        output = OutputConfig.from_args(args)
        emit(args.func(args, output), output)
        return 0
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 2
    except ValueError as e:
        print("error: {}".format(e), file=sys.stderr, flush=True)
        return 1
    finally:
        conf.clear()
        conf.update(saved)
