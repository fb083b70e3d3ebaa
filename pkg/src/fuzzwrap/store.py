"""File-backed project store for pages, labels, models, and results.

Single-process, desk-scale: everything lives under one root directory
with an index document mapping ids to files.  Model files are content
addressed, so retraining on identical inputs reuses the same id, and a
written model is immutable.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
from pathlib import Path

from .errors import UnknownId
from .induction import WrapperModel, dump_model, load_model, model_id
from .page_model import ZoneLabels, labels_from_dict, labels_to_dict, validate_labels

_ID_RE = re.compile(r"^[A-Za-z0-9_-]+$")


class ProjectStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        for sub in ("pages", "labels", "models", "results", "corpora"):
            (self.root / sub).mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._index_path = self.root / "index.json"
        if self._index_path.exists():
            self._index = json.loads(self._index_path.read_text(encoding="utf-8"))
        else:
            self._index = {"pages": {}, "models": {}, "results": {}}
            self._write_index()

    def _write_index(self) -> None:
        tmp = self._index_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(self._index, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        os.replace(tmp, self._index_path)

    # -- pages --------------------------------------------------------------

    def add_page(self, html: str, page_id: str | None = None) -> str:
        if page_id is None:
            page_id = "p" + hashlib.sha256(html.encode("utf-8")).hexdigest()[:10]
        if not _ID_RE.match(page_id):
            raise ValueError(f"invalid page id {page_id!r}")
        with self._lock:
            (self.root / "pages" / f"{page_id}.html").write_text(html, encoding="utf-8")
            entry = self._index["pages"].setdefault(page_id, {})
            entry["html"] = f"pages/{page_id}.html"
            self._write_index()
        return page_id

    def page_ids(self) -> list[str]:
        return sorted(self._index["pages"])

    def page(self, page_id: str) -> str:
        entry = self._index["pages"].get(page_id)
        if entry is None:
            raise UnknownId(f"unknown page {page_id!r}")
        return (self.root / entry["html"]).read_text(encoding="utf-8")

    # -- labels (single writer per page) -------------------------------------

    def set_labels(self, page_id: str, labels: ZoneLabels) -> ZoneLabels:
        page = self.page(page_id)
        validate_labels(page, labels)
        with self._lock:
            path = self.root / "labels" / f"{page_id}.json"
            path.write_text(
                json.dumps(labels_to_dict(labels), indent=2) + "\n", encoding="utf-8"
            )
            self._index["pages"][page_id]["labels"] = f"labels/{page_id}.json"
            self._write_index()
        return labels

    def labels(self, page_id: str) -> ZoneLabels:
        entry = self._index["pages"].get(page_id)
        if entry is None or "labels" not in entry:
            raise UnknownId(f"no labels for page {page_id!r}")
        d = json.loads((self.root / entry["labels"]).read_text(encoding="utf-8"))
        return labels_from_dict(d, page_id=page_id)

    # -- models ---------------------------------------------------------------

    def add_model(self, model: WrapperModel) -> str:
        mid = model_id(model)
        with self._lock:
            path = self.root / "models" / f"{mid}.json"
            if not path.exists():
                path.write_text(dump_model(model), encoding="utf-8")
            self._index["models"][mid] = f"models/{mid}.json"
            self._write_index()
        return mid

    def model_ids(self) -> list[str]:
        return sorted(self._index["models"])

    def model(self, mid: str) -> WrapperModel:
        rel = self._index["models"].get(mid)
        if rel is None:
            raise UnknownId(f"unknown model {mid!r}")
        return load_model(self.root / rel)

    def model_bytes(self, mid: str) -> bytes:
        rel = self._index["models"].get(mid)
        if rel is None:
            raise UnknownId(f"unknown model {mid!r}")
        return (self.root / rel).read_bytes()

    # -- results ----------------------------------------------------------------

    def add_result(self, mid: str, page_id: str, result: dict) -> Path:
        with self._lock:
            path = self.root / "results" / f"{mid}__{page_id}.json"
            path.write_text(json.dumps(result, indent=2) + "\n", encoding="utf-8")
            self._index["results"][f"{mid}__{page_id}"] = f"results/{mid}__{page_id}.json"
            self._write_index()
        return path

    def result(self, mid: str, page_id: str) -> dict:
        rel = self._index["results"].get(f"{mid}__{page_id}")
        if rel is None:
            raise UnknownId(f"no result for model {mid!r} page {page_id!r}")
        return json.loads((self.root / rel).read_text(encoding="utf-8"))

    # -- corpora ----------------------------------------------------------------

    def corpus_dir(self, name: str, must_exist: bool = True) -> Path:
        if not _ID_RE.match(name):
            raise ValueError(f"invalid corpus name {name!r}")
        path = self.root / "corpora" / name
        if must_exist and not path.is_dir():
            raise UnknownId(f"unknown corpus {name!r}")
        return path


def store_root(cli_value: str | None = None) -> Path:
    """Store root from the command line or the FUZZWRAP_STORE variable."""
    if cli_value:
        return Path(cli_value)
    return Path(os.environ.get("FUZZWRAP_STORE", "./fuzzwrap-store"))
