"""Finitary languages, eraser calculi, pushdown automata and ω-power membership."""

from .words import Alphabet, LassoWord, Word, parse_lasso, parse_word

__all__ = ["Alphabet", "LassoWord", "Word", "parse_lasso", "parse_word"]
__version__ = "0.1.0"
