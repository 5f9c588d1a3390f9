"""Finite pseudo BE-algebras with existential and universal quantifiers.

The heavy lifting is in the compiled ``_core`` module. Functions here return
the same JSON payloads as the ``mpbe`` command line tool, decoded to dicts.
"""

import json

from . import _core
from ._core import Document, Error, ParseError

__version__ = _core.__version__

__all__ = [
    "Document",
    "Error",
    "ParseError",
    "check",
    "generated",
    "laws",
    "load",
    "mop",
    "parse",
    "search",
    "systems",
    "verify",
]


def parse(text):
    return Document.parse(text)


def load(path):
    return Document.load(str(path))


def check(doc):
    return json.loads(_core.check(doc))


def mop(doc, mode="plain", unpruned=False):
    return json.loads(_core.mop(doc, mode, unpruned))


def systems(doc, pairs=()):
    return json.loads(_core.systems(doc, list(pairs)))


def generated(doc, elements):
    return _core.generated(doc, list(elements))


def verify(doc, pairs=(), laws=(), conjectures=False, threads=1):
    return json.loads(_core.verify(doc, list(pairs), list(laws), conjectures, threads))


def search(law="", min_size=1, max_size=4, require=(), forbid=(), iso=True, prune=True, budget=0, threads=1):
    return json.loads(
        _core.search(law, min_size, max_size, list(require), list(forbid), iso, prune, budget, threads)
    )


def laws():
    return json.loads(_core.laws())["laws"]
