from .ast import WorksheetProgram, pretty_print
from .evaluate import EvaluationReport, WorksheetRuntimeError, evaluate
from .parse import WorksheetSyntaxError, parse

__all__ = [
    "WorksheetProgram",
    "EvaluationReport",
    "WorksheetRuntimeError",
    "WorksheetSyntaxError",
    "parse",
    "pretty_print",
    "evaluate",
]
