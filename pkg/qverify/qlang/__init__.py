from .ast import QExpr, SourceSpan  # noqa: F401
from .evaluator import Evaluator, evaluate, lower_eta_term  # noqa: F401
from .parser import parse  # noqa: F401
from .printer import to_text  # noqa: F401
