"""Max-Cut objective evaluators selectable by tag."""
from .base import Evaluator
from .registry import EVALUATOR_CLASSES, make_evaluator

__all__ = ["Evaluator", "EVALUATOR_CLASSES", "make_evaluator"]
