"""Query structures used by the Minibox edge algorithms."""

from .kdtree import KdTree
from .pst import PopResult, PrioritySearchTree, RectItem
from .range_tree import LayeredRangeTree
from .staircase import OrderedStaircase

__all__ = [
    "KdTree",
    "LayeredRangeTree",
    "OrderedStaircase",
    "PopResult",
    "PrioritySearchTree",
    "RectItem",
]
