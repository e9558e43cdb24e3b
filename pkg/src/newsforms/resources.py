"""Locating the data files shipped with the package.

The resource root holds ``*.txt`` code tables, ``sentiment.tsv``, and the
``lexicons/``, ``rules/``, and ``kb/`` directories. The packaged copy is the
default; the ``NEWSFORM_DATA`` environment variable or explicit paths
override it.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def packaged_data_root() -> Path:
    return Path(resources.files("newsforms") / "data")


def default_data_root() -> Path:
    override = os.environ.get("NEWSFORM_DATA")
    if override:
        return Path(override)
    return packaged_data_root()


def read_code_table(path: Path) -> frozenset[str]:
    """Read a one-code-per-line table, ignoring blanks and # comments."""
    codes = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            codes.add(line)
    return frozenset(codes)
