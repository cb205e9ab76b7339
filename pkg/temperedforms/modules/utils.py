#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.utils

Utility functions shared by the computation modules: chunked
parallel mapping, pickle caching and progress printing
"""

import os
import sys
import pickle
from contextlib import contextmanager
from fractions import Fraction
from hashlib import md5
from multiprocessing import Pool
from time import time
from typing import Callable, List, Sequence

from .config import conf


def log(message: str):
    """print a progress message to stderr when verbose"""
    if conf["verbose"]:
        print(message, file=sys.stderr, flush=True)


@contextmanager
def timed(message: str):
    """print message, run the block, then print the elapsed time"""
    start = time()
    if conf["verbose"]:
        print(message + "...", end=" ", file=sys.stderr, flush=True)
    yield
    if conf["verbose"]:
        print("{0:.4f}s".format(time() - start), file=sys.stderr, flush=True)


def get_chunk(items: Sequence, num_threads: int, chunk_size: int = None):
    """split items into chunks no larger than an equal share per
    thread, yielding each chunk with an md5 name of its content
    """
    if chunk_size is None:
        chunk_size = conf["chunk_size"]
    per_thread = len(items) // max(1, num_threads)
    chunk_size = max(1, min(chunk_size, per_thread))
    for start in range(0, len(items), chunk_size):
        chunk = list(items[start:start + chunk_size])
        chunk_name = md5(",".join(
            map(str, chunk)).encode("utf-8")).hexdigest()
        yield (chunk, chunk_name)


def _apply_chunk(args):
    func, chunk = args
    return [func(item) for item in chunk]


def parallel_map(func: Callable, items: Sequence,
                 num_threads: int = None) -> List:
    """map func over items, in a process pool when num_threads > 1;
    result order always follows the input order"""
    if num_threads is None:
        num_threads = conf["num_threads"]
    if num_threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    jobs = [(func, chunk) for chunk, _ in get_chunk(items, num_threads)]
    results = []
    with Pool(processes=num_threads) as pool:
        for chunk_result in pool.imap(_apply_chunk, jobs):
            results.extend(chunk_result)
    return results


def store_pickle(stored_object: object, pickle_path: str):
    """ save pickle """
    with open(pickle_path, "wb") as fp:
        pickle.dump(stored_object, fp)


def load_pickle(pickle_path: str):
    """ load pickle, None if it is not there yet """
    if not os.path.exists(pickle_path):
        return None
    with open(pickle_path, "rb") as fp:
        return pickle.load(fp)


def format_fraction(value: Fraction) -> str:
    """'n' for integers, 'n/d' otherwise"""
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_int_list(text: str, count: int) -> List[int]:
    """parse 'a,b,c' style command line values"""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise ValueError("expected {} comma separated integers, got '{}'".format(
            count, text))
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise ValueError("not an integer list: '{}'".format(text))
