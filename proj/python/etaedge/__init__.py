"""Additive edge colorings of regular graphs: verification, label-set
constructions, spaced recoloring walks, and exhaustive oracles."""

try:
    from ._etaedge import *  # installed package layout
    from ._etaedge import oracle
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _etaedge import *  # noqa: F401,F403
    from _etaedge import oracle  # noqa: F401

__version__ = "0.1.0"
