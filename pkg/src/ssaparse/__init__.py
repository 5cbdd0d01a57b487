"""Structured sentiment analysis as partially-observed projective dependency parsing.

A TreeCRF toolkit: sentiment tuples become latent-tree constraint sets,
training runs a constrained second-order inside algorithm with headed-span
scores, decoding is two-stage constrained Viterbi, and tuples are recovered
from subtree yields.
"""

from .structures import DepTree, Sentence, SentimentTuple, Span

__all__ = ["DepTree", "Sentence", "SentimentTuple", "Span"]
__version__ = "0.1.0"
