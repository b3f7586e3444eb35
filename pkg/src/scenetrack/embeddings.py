"""Text-to-vector providers: word vectors for labels/materials, sentence
embeddings for fine-grained descriptions.

The word table loads the plain text vector format (optional "count dim"
header, then one token per line). Descriptions go through either the
remote HTTP embedder or a deterministic local one so the suite runs
offline.
"""

from __future__ import annotations

import hashlib
import os
import string
from dataclasses import dataclass, field
from typing import Dict, IO, List, Optional, Union

import numpy as np
import requests

LOCAL_EMBEDDER_DIM = 256
DEFAULT_TIMEOUT_S = 10.0
API_KEY_ENV = "SCENETRACK_EMBED_API_KEY"

_PUNCT = str.maketrans("", "", string.punctuation)


class WordVectorFormatError(ValueError):
    """Malformed word-vector stream; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmbedderError(RuntimeError):
    """Remote embedder transport or protocol failure."""


@dataclass
class WordVectorTable:
    dimension: int
    entries: Dict[str, np.ndarray] = field(default_factory=dict)
    # per-session memo of phrase -> mean vector; entries stay immutable
    _phrase_cache: Dict[str, Optional[np.ndarray]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def get(self, token: str) -> Optional[np.ndarray]:
        return self.entries.get(token)

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_word_vectors(source: Union[IO, str, bytes]) -> WordVectorTable:
    """Parse the text vector format into a normalized lookup table.

    Tokens are lowercased and vectors L2-normalized on load; a token
    listed twice keeps its first vector.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    lines = text.splitlines()
    dimension: Optional[int] = None
    entries: Dict[str, np.ndarray] = {}
    start = 0
    if lines:
        head = lines[0].split()
        if len(head) == 2:
            try:
                int(head[0])
                dimension = int(head[1])
                start = 1
            except ValueError:
                pass

    for i in range(start, len(lines)):
        line = lines[i]
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 2:
            raise WordVectorFormatError(i + 1, "expected token followed by values")
        token = parts[0].lower()
        try:
            values = np.array([float(v) for v in parts[1:]], dtype=np.float64)
        except ValueError:
            raise WordVectorFormatError(i + 1, f"non-numeric value in vector for {token!r}")
        if dimension is None:
            dimension = values.size
        if values.size != dimension:
            raise WordVectorFormatError(
                i + 1, f"expected {dimension} values, found {values.size}"
            )
        if token in entries:
            continue
        norm = np.linalg.norm(values)
        if norm == 0.0:
            raise WordVectorFormatError(i + 1, f"zero vector for {token!r}")
        entries[token] = values / norm

    if dimension is None:
        raise WordVectorFormatError(1, "empty vector stream")
    return WordVectorTable(dimension=dimension, entries=entries)


def tokenize(text: str) -> List[str]:
    """Whitespace split, lowercase, punctuation stripped."""
    out = []
    for tok in text.lower().split():
        tok = tok.translate(_PUNCT)
        if tok:
            out.append(tok)
    return out


def _phrase_vector(text: str, table: WordVectorTable) -> Optional[np.ndarray]:
    if text in table._phrase_cache:
        return table._phrase_cache[text]
    vectors = [table.entries[t] for t in tokenize(text) if t in table.entries]
    result: Optional[np.ndarray] = None
    if vectors:
        mean = np.mean(vectors, axis=0)
        norm = np.linalg.norm(mean)
        if norm != 0.0:
            result = mean / norm
    table._phrase_cache[text] = result
    return result


def word_similarity(a: str, b: str, table: WordVectorTable) -> float:
    """Cosine of mean in-vocabulary token vectors, clamped to [0, 1].

    When either phrase has no known token the score degrades to exact
    case-insensitive equality.
    """
    va = _phrase_vector(a, table)
    vb = _phrase_vector(b, table)
    if va is None or vb is None:
        return 1.0 if a.lower() == b.lower() else 0.0
    return min(1.0, max(0.0, float(np.dot(va, vb))))


def _stable_bucket(gram: str, dim: int) -> int:
    digest = hashlib.md5(gram.encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "little") % dim


class LocalHashEmbedder:
    """Offline stand-in for the sentence model: character 3-grams hashed
    into a fixed-size bag, L2-normalized. Deterministic across runs and
    platforms."""

    kind = "deterministic-local"

    def __init__(self, dimension: int = LOCAL_EMBEDDER_DIM):
        self.dimension = dimension
        self._memo: Dict[str, np.ndarray] = {}

    def embed(self, text: str) -> np.ndarray:
        if not text:
            raise ValueError("cannot embed empty text")
        cached = self._memo.get(text)
        if cached is not None:
            return cached
        lowered = text.lower()
        counts = np.zeros(self.dimension, dtype=np.float64)
        if len(lowered) < 3:
            counts[_stable_bucket(lowered, self.dimension)] += 1.0
        else:
            for i in range(len(lowered) - 2):
                counts[_stable_bucket(lowered[i : i + 3], self.dimension)] += 1.0
        vec = counts / np.linalg.norm(counts)
        self._memo[text] = vec
        return vec


class RemoteEmbedder:
    """HTTP sentence embedder.

    POSTs {"texts": [...]} to the configured endpoint and expects
    {"embeddings": [[...], ...]}; vectors are normalized on receipt. An
    API key from the environment is sent as a bearer token when present.
    """

    kind = "remote"

    def __init__(
        self,
        endpoint: str,
        timeout: float = DEFAULT_TIMEOUT_S,
        session: Optional[requests.Session] = None,
    ):
        self.endpoint = endpoint
        self.timeout = timeout
        self._session = session or requests.Session()
        self._memo: Dict[str, np.ndarray] = {}
        self.dimension: Optional[int] = None

    def embed(self, text: str) -> np.ndarray:
        if not text:
            raise ValueError("cannot embed empty text")
        cached = self._memo.get(text)
        if cached is not None:
            return cached
        headers = {}
        api_key = os.environ.get(API_KEY_ENV)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        try:
            resp = self._session.post(
                self.endpoint,
                json={"texts": [text]},
                timeout=self.timeout,
                headers=headers,
            )
        except requests.RequestException as exc:
            raise EmbedderError(f"embedding request failed: {exc}") from exc
        if resp.status_code != 200:
            raise EmbedderError(
                f"embedding endpoint returned status {resp.status_code}"
            )
        try:
            vectors = resp.json()["embeddings"]
            values = np.array(vectors[0], dtype=np.float64)
        except (KeyError, IndexError, ValueError, TypeError) as exc:
            raise EmbedderError(f"malformed embedding response: {exc}") from exc
        norm = np.linalg.norm(values)
        if norm == 0.0 or values.ndim != 1:
            raise EmbedderError("embedding response is not a usable vector")
        vec = values / norm
        if self.dimension is None:
            self.dimension = vec.size
        self._memo[text] = vec
        return vec
