"""Toolkit for free-group encodings of finite-support integer functions.

Subpackages cover: exact/bounded evaluation of the set operations on
finite-support functions (:mod:`benign.efun`), free-group words, encodings and
the conjugates-collecting process (:mod:`benign.words`), Stallings automata
for subgroup membership (:mod:`benign.subgroup`), presentation builders and
rewriting systems for HNN-extensions and amalgams (:mod:`benign.construct`,
:mod:`benign.rewrite`, :mod:`benign.catalog`), an executable verification
catalog (:mod:`benign.verify`), and a CLI (:mod:`benign.cli`).
"""

from benign.kernel import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
