#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.config

Global default settings, overridable per invocation from the command line
"""

conf = {
    # first line of every emitted csv file
    "csv_header": "# tempered-forms v1",
    # print progress messages to stderr
    "verbose": False,
    # parallel processing
    "num_threads": 1,
    "chunk_size": 50,
    # memoised class groups per process
    "class_group_cache_size": 4096,
    # upper limit when looking for the smallest prime of a class
    "max_prime_scan": 100000,
    # grid entries of the (x, y) mod |D| grid evaluated per numpy block
    "genus_block_elements": 1 << 22,
    # svg figure defaults
    "svg": {
        "canvas": 480,
        "margin": 20,
        "point_radius": 3,
        "ring_radius": 6,
        "window": 2.5,
        "stroke": 1,
        "inner_circle_color": "#1f77b4",
        "outer_circle_color": "#d62728",
        "precision": 6
    }
}
