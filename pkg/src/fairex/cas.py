"""Content-addressed blob store: digest-keyed, immutable within a run.

In-memory map, with optional directory persistence (one file per digest,
filename = hex digest).
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path


class EmptyContentError(ValueError):
    pass


class NotFoundError(KeyError):
    pass


@dataclass(frozen=True)
class Digest:
    value: bytes

    @property
    def hex(self) -> str:
        return self.value.hex()


class ContentStore:
    def __init__(self, root: Path | str | None = None):
        self._blobs: dict[bytes, bytes] = {}
        self._root = Path(root) if root is not None else None
        if self._root is not None:
            self._root.mkdir(parents=True, exist_ok=True)
            for f in self._root.iterdir():
                if f.is_file():
                    self._blobs[bytes.fromhex(f.name)] = f.read_bytes()

    def put(self, content: bytes) -> Digest:
        if not content:
            raise EmptyContentError("refusing to store empty content")
        d = hashlib.sha256(content).digest()
        if d not in self._blobs:
            self._blobs[d] = content
            if self._root is not None:
                (self._root / d.hex()).write_bytes(content)
        return Digest(d)

    def get(self, digest: Digest) -> bytes:
        try:
            return self._blobs[digest.value]
        except KeyError:
            raise NotFoundError(f"unknown digest {digest.hex}") from None

    def __contains__(self, digest: Digest) -> bool:
        return digest.value in self._blobs
