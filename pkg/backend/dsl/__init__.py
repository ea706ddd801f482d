from .elaborate import elaborate, load_expr, parse_expr
from .parser import parse, parse_gq
from .printer import print_expr

__all__ = ["elaborate", "load_expr", "parse", "parse_expr", "parse_gq", "print_expr"]
