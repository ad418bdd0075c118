"""Bag-of-words document-term matrix with optional diminishing-importance weighting.

Rows are profiles (user-list order), columns are vocabulary tokens. Counts are
the default representation; TF-IDF reweighting multiplies each count by
``idf(j) = ln((1 + m) / (1 + df(j))) + 1`` and rescales every nonzero row to
unit Euclidean norm, so tokens shared by most profiles lose influence while
rare-token-only profiles are never zeroed out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .content_synthesis import ContentDocument
from .errors import EmptyCorpusError


class Weighting(enum.Enum):
    COUNTS = "counts"
    TFIDF = "tfidf"


@dataclass(frozen=True)
class Vocabulary:
    """Token <-> column-index bijection, lexicographically ordered for stable matrices."""

    index_to_token: tuple[str, ...]

    @property
    def token_to_index(self) -> dict[str, int]:
        return {token: i for i, token in enumerate(self.index_to_token)}

    def __len__(self) -> int:
        return len(self.index_to_token)

    def __contains__(self, token: str) -> bool:
        return token in self.token_to_index


@dataclass(frozen=True)
class DocTermMatrix:
    values: np.ndarray
    row_labels: tuple[str, ...]
    vocabulary: Vocabulary
    weighting: Weighting

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


def build_vocabulary(documents: Sequence[ContentDocument]) -> Vocabulary:
    """Distinct tokens across all documents, indexed in ascending lexicographic order."""
    tokens = sorted({t for doc in documents for t in doc.tokens})
    if not tokens:
        raise EmptyCorpusError("no tokens in any document; nothing to match on")
    return Vocabulary(index_to_token=tuple(tokens))


def count_vectorize(documents: Sequence[ContentDocument],
                    vocabulary: Vocabulary) -> DocTermMatrix:
    """Entry (i, j) counts occurrences of token j in document i; unknown tokens are ignored."""
    if len(vocabulary) == 0:
        raise EmptyCorpusError("vocabulary is empty")
    index = vocabulary.token_to_index
    values = np.zeros((len(documents), len(vocabulary)), dtype=np.int64)
    for i, doc in enumerate(documents):
        for token in doc.tokens:
            j = index.get(token)
            if j is not None:
                values[i, j] += 1
    return DocTermMatrix(values=values, row_labels=tuple(d.username for d in documents),
                         vocabulary=vocabulary, weighting=Weighting.COUNTS)


def tfidf_transform(matrix: DocTermMatrix) -> DocTermMatrix:
    """Reweight a count matrix by smoothed idf, then L2-normalize nonzero rows.

    All-zero rows stay all-zero. idf is non-increasing in document frequency,
    so widely shared tokens are down-weighted.
    """
    if matrix.weighting is not Weighting.COUNTS:
        raise ValueError("tfidf_transform expects a counts-weighted matrix")
    counts = matrix.values.astype(np.float64)
    m = counts.shape[0]
    df = (counts > 0).sum(axis=0)
    idf = np.log((1.0 + m) / (1.0 + df)) + 1.0
    weighted = counts * idf
    norms = np.sqrt((weighted * weighted).sum(axis=1))
    nonzero = norms > 0
    weighted[nonzero] /= norms[nonzero, np.newaxis]
    return DocTermMatrix(values=weighted, row_labels=matrix.row_labels,
                         vocabulary=matrix.vocabulary, weighting=Weighting.TFIDF)


def export_matrix_tsv(matrix: DocTermMatrix) -> str:
    """Debug dump: header row of tokens, one row per profile led by its username."""
    lines = ["username\t" + "\t".join(matrix.vocabulary.index_to_token)]
    integral = matrix.weighting is Weighting.COUNTS
    for label, row in zip(matrix.row_labels, matrix.values):
        cells = (str(int(v)) if integral else repr(float(v)) for v in row)
        lines.append(label + "\t" + "\t".join(cells))
    return "\n".join(lines) + "\n"
