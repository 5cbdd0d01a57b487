"""Core data structures: token spans, sentiment tuples, sentences, dependency trees.

Two coordinate systems are used throughout the package.  Annotation-level
objects (``Span``, ``SentimentTuple``) index *tokens*, 0-based, root excluded.
Parsing-level objects (``DepTree``, score tables, masks) index *positions*
0..n where position 0 is the artificial root and position t corresponds to
token t-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractError

POSITIVE = "Positive"
NEGATIVE = "Negative"
NEUTRAL = "Neutral"
POLARITIES = (POSITIVE, NEGATIVE, NEUTRAL)

NULL_LABEL = "null"
EXP_NEUTRAL = "exp:neutral"
EXP_POSITIVE = "exp:positive"
EXP_NEGATIVE = "exp:negative"
EXP_INCOMPLETE = "exp:incomplete"
HOLDER_LABEL = "holder"
TARGET_LABEL = "target"

#: Canonical label set shared by both parsing stages.  Index 0 is the null
#: label assigned to arcs that carry no annotation.
LABELS = (
    NULL_LABEL,
    EXP_NEUTRAL,
    EXP_POSITIVE,
    EXP_NEGATIVE,
    EXP_INCOMPLETE,
    HOLDER_LABEL,
    TARGET_LABEL,
)
LABEL_INDEX = {name: i for i, name in enumerate(LABELS)}

POLARITY_TO_LABEL = {
    NEUTRAL: EXP_NEUTRAL,
    POSITIVE: EXP_POSITIVE,
    NEGATIVE: EXP_NEGATIVE,
}
LABEL_TO_POLARITY = {v: k for k, v in POLARITY_TO_LABEL.items()}
EXPRESSION_LABELS = frozenset(POLARITY_TO_LABEL.values())


@dataclass(frozen=True, order=True)
class Span:
    """Inclusive token interval, 0-based over sentence tokens."""

    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start <= self.end):
            raise ContractError(f"bad span ({self.start}, {self.end})")

    def __len__(self):
        return self.end - self.start + 1

    def tokens(self):
        return range(self.start, self.end + 1)

    def overlaps(self, other: "Span") -> bool:
        return self.start <= other.end and other.start <= self.end


def _check_segments(segments, what):
    segs = tuple(sorted(segments))
    for a, b in zip(segs, segs[1:]):
        if a.overlaps(b):
            raise ContractError(f"overlapping {what} segments {a} and {b}")
    return segs


@dataclass(frozen=True)
class SentimentTuple:
    """One opinion: holder / target / expression span lists plus a polarity.

    Any role may be multi-segment (discontinuous); holder and target may be
    empty, the expression never is.
    """

    holder: tuple[Span, ...]
    target: tuple[Span, ...]
    expression: tuple[Span, ...]
    polarity: str

    def __post_init__(self):
        object.__setattr__(self, "holder", _check_segments(self.holder, "holder"))
        object.__setattr__(self, "target", _check_segments(self.target, "target"))
        object.__setattr__(self, "expression", _check_segments(self.expression, "expression"))
        if not self.expression:
            raise ContractError("expression must have at least one segment")
        if self.polarity not in POLARITIES:
            raise ContractError(f"unknown polarity {self.polarity!r}")

    def role_tokens(self, role: str) -> frozenset[int]:
        segs = getattr(self, role)
        return frozenset(t for s in segs for t in s.tokens())

    def key(self, with_polarity: bool = True):
        k = (
            self.role_tokens("holder"),
            self.role_tokens("target"),
            self.role_tokens("expression"),
        )
        return k + (self.polarity,) if with_polarity else k


@dataclass(frozen=True)
class Sentence:
    """Whitespace-tokenized input sentence."""

    tokens: tuple[str, ...]
    sent_id: str = ""
    text: str = ""
    token_offsets: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not self.tokens:
            raise ContractError("sentence must have at least one token")
        if not self.text:
            object.__setattr__(self, "text", " ".join(self.tokens))
        if not self.token_offsets:
            offs, pos = [], 0
            for i, tok in enumerate(self.tokens):
                start = self.text.index(tok, pos) if tok in self.text[pos:] else pos
                offs.append((start, start + len(tok)))
                pos = start + len(tok)
            object.__setattr__(self, "token_offsets", tuple(offs))

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class DepTree:
    """Projective dependency tree over positions 0..n (0 = artificial root).

    ``heads[m-1]`` is the head position of modifier m; ``labels[m-1]`` the
    label id of the arc into m (defaults to the null label everywhere).
    """

    heads: tuple[int, ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        n = len(self.heads)
        if n == 0:
            raise ContractError("empty tree")
        if not self.labels:
            object.__setattr__(self, "labels", (0,) * n)
        if len(self.labels) != n:
            raise ContractError("labels length does not match heads")
        for m, h in enumerate(self.heads, start=1):
            if not (0 <= h <= n) or h == m:
                raise ContractError(f"bad head {h} for modifier {m}")

    @property
    def n(self) -> int:
        return len(self.heads)

    def head_of(self, m: int) -> int:
        return self.heads[m - 1]

    def label_of(self, m: int) -> int:
        return self.labels[m - 1]

    def children(self) -> list[list[int]]:
        kids = [[] for _ in range(self.n + 1)]
        for m, h in enumerate(self.heads, start=1):
            kids[h].append(m)
        return kids

    def root_children(self) -> list[int]:
        return [m for m, h in enumerate(self.heads, start=1) if h == 0]

    def is_tree(self) -> bool:
        """True when every position is reachable from the root (no cycles)."""
        kids = self.children()
        seen, stack = {0}, [0]
        while stack:
            for c in kids[stack.pop()]:
                if c in seen:
                    return False
                seen.add(c)
                stack.append(c)
        return len(seen) == self.n + 1

    def yields(self) -> list[tuple[int, int]]:
        """Per-position inclusive yield intervals; entry 0 covers 0..n.

        Raises ContractError when the structure is cyclic or non-projective
        (some yield is not contiguous).
        """
        if not self.is_tree():
            raise ContractError("input is not a tree rooted at 0")
        n = self.n
        lo = list(range(n + 1))
        hi = list(range(n + 1))
        size = [1] * (n + 1)
        kids = self.children()
        order = []
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(kids[v])
        for v in reversed(order):
            for c in kids[v]:
                lo[v] = min(lo[v], lo[c])
                hi[v] = max(hi[v], hi[c])
                size[v] += size[c]
        for v in range(n + 1):
            if hi[v] - lo[v] + 1 != size[v]:
                raise ContractError(f"non-projective: yield of {v} is not contiguous")
        return list(zip(lo, hi))

    def sibling_triples(self) -> list[tuple[int, int, int]]:
        """Adjacent-sibling factors (head, inner sibling, outer modifier).

        Modifiers on each side of a head are ordered outward; consecutive
        pairs on the same side form one triple.
        """
        triples = []
        for h, ms in enumerate(self.children()):
            left = sorted((m for m in ms if m < h), reverse=True)
            right = sorted(m for m in ms if m > h)
            for side in (left, right):
                for s, m in zip(side, side[1:]):
                    triples.append((h, s, m))
        return triples
