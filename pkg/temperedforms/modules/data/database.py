#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.data.database

SQLite3 store for computed records, one run row per invocation
"""

import json
import re
import sqlite3
from os import path
from typing import List


def _dict_factory(cursor, row):
    return {col[0]: row[idx] for idx, col in enumerate(cursor.description)}


class Database:
    """Wrapper around an SQLite3 results file. Inserts are buffered
    and written by commit_inserts; not safe for multiple writer
    processes."""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def __init__(self, db_path: str):
        self._db_path = db_path
        self._insert_queue = []
        self._last_indexes = {}

        with open(path.join(path.dirname(path.abspath(__file__)),
                            "schema.sql"), "r") as sql_file:
            sql_schema = sql_file.read()
        self.schema_ver = re.search(
            r"\n-- schema ver\.: (?P<ver>\d+\.\d+\.\d+)",
            sql_schema).group("ver")

        exists = db_path != ":memory:" and path.exists(db_path)
        self._connection = sqlite3.connect(db_path)
        if exists:
            db_schema_ver = self.select("schema", "WHERE 1")[0]["ver"]
            if db_schema_ver != self.schema_ver:
                raise Exception(
                    "SQLite3 database exists but contains different schema "
                    "version ({} rather than {})".format(
                        db_schema_ver, self.schema_ver))
        else:
            self._connection.executescript(sql_schema)

        for row in self.select("sqlite_sequence", "WHERE 1"):
            self._last_indexes[row["name"]] = row["seq"]

    def close(self):
        self._connection.close()

    def select(self, table: str, clause: str, parameters: tuple = None,
               props: list = None) -> List[dict]:
        """execute a SELECT ... FROM ... WHERE, rows as dicts"""
        sql = "SELECT {} FROM {} {}".format(
            ",".join(props) if props else "*", table, clause)
        db_cur = self._connection.cursor()
        db_cur.row_factory = _dict_factory
        return db_cur.execute(sql, parameters or ()).fetchall()

    def insert(self, table: str, data: dict) -> int:
        """queue an INSERT and return the id it will receive once
        committed"""
        if "id" in data:
            raise Exception("Don't specify id for INSERTs!")
        new_id = self._last_indexes.get(table, 0) + 1
        self._last_indexes[table] = new_id
        self._insert_queue.append((table, data))
        return new_id

    def commit_inserts(self):
        """perform the queued inserts in one transaction"""
        db_cur = self._connection.cursor()
        for table, data in self._insert_queue:
            keys = list(data.keys())
            sql = "INSERT INTO {}({}) VALUES ({})".format(
                table, ",".join(keys), ",".join("?" for _ in keys))
            db_cur.execute(sql, tuple(data[key] for key in keys))
        self._connection.commit()
        self._insert_queue = []

        for row in self.select("sqlite_sequence", "WHERE 1"):
            if self._last_indexes[row["name"]] != row["seq"]:
                raise Exception("buffered indexes no longer in sync with "
                                "sqlite_sequence, database might be corrupted")

    def start_run(self, prog_params: dict) -> int:
        """insert a run row holding the invocation parameters"""
        return self.insert("run", {
            "prog_params": json.dumps(prog_params, sort_keys=True)
        })

    def save_records(self, records: List, prog_params: dict) -> int:
        """store records under a new run and commit"""
        run_id = self.start_run(prog_params)
        for record in records:
            record.save(self, run_id)
        self.commit_inserts()
        return run_id
