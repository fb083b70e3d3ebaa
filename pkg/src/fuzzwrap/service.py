"""HTTP service exposing the label, train, extract, and eval loop.

A thin layer over the same core the CLI uses, backed by a ProjectStore.
Concurrent reads are unrestricted; label writes are serialized per page
by the store, and a training request that is already in flight for the
same inputs is rejected with 409.
"""

from __future__ import annotations

import hashlib
import json
import threading

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .corpus import load_corpus
from .errors import FuzzwrapError, GlobalZoneNotFound, LabelError, UnknownId
from .evaluator import evaluate
from .extractor import extract, result_to_dict
from .induction import WrapperConfig, train
from .page_model import labels_from_dict
from .store import ProjectStore
from .tokens import tokenize


class PageIn(BaseModel):
    html: str
    page_id: str | None = None


class TrainIn(BaseModel):
    page_ids: list[str]
    config: dict | None = None


class EvalIn(BaseModel):
    corpus: str
    model_id: str


def _token_payload(html: str) -> list[dict]:
    return [
        {"class": int(t.cls), "class_name": t.cls.name, "lexeme": t.lexeme, "span": list(t.span)}
        for t in tokenize(html)
    ]


def _model_summary(store: ProjectStore, mid: str) -> dict:
    model = store.model(mid)
    return {
        "model_id": mid,
        "window_len": model.window_len,
        "config": model.config.to_dict(),
        "attribute_names": list(model.attribute_names),
        "separators": [
            {
                "zone": s.zone.key,
                "edge": s.edge.value,
                "left": {
                    "n_instances": s.left.matrix.n_instances,
                    "cost_min": s.left.cost_min,
                    "cost_max": s.left.cost_max,
                    "cost_mid": s.left.cost_mid,
                },
                "right": {
                    "n_instances": s.right.matrix.n_instances,
                    "cost_min": s.right.cost_min,
                    "cost_max": s.right.cost_max,
                    "cost_mid": s.right.cost_mid,
                },
            }
            for s in model.separators
        ],
    }


def create_app(store: ProjectStore) -> FastAPI:
    app = FastAPI(title="fuzzwrap")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store
    app.state.in_flight = set()
    app.state.train_lock = threading.Lock()

    @app.exception_handler(LabelError)
    async def _label_error(request, exc: LabelError):
        body = {"error": exc.name, "detail": str(exc)}
        if exc.offset is not None:
            body["offset"] = exc.offset
        return JSONResponse(status_code=422, content=body)

    @app.exception_handler(UnknownId)
    async def _unknown_id(request, exc: UnknownId):
        return JSONResponse(status_code=404, content={"error": exc.name, "detail": str(exc)})

    @app.exception_handler(FuzzwrapError)
    async def _domain_error(request, exc: FuzzwrapError):
        return JSONResponse(status_code=422, content={"error": exc.name, "detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/pages")
    def add_page(body: PageIn):
        try:
            page_id = store.add_page(body.html, body.page_id)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"page_id": page_id, "tokens": _token_payload(body.html)}

    @app.get("/pages")
    def list_pages():
        return {"page_ids": store.page_ids()}

    @app.get("/pages/{page_id}")
    def get_page(page_id: str):
        html = store.page(page_id)
        out = {"page_id": page_id, "html": html, "tokens": _token_payload(html)}
        try:
            out["labels"] = _labels_payload(store, page_id)
        except UnknownId:
            out["labels"] = None
        return out

    def _labels_payload(store: ProjectStore, page_id: str) -> dict:
        from .page_model import labels_to_dict

        return labels_to_dict(store.labels(page_id))

    @app.put("/pages/{page_id}/labels")
    def put_labels(page_id: str, body: dict = Body(...)):
        labels = labels_from_dict(body, page_id=page_id)
        store.set_labels(page_id, labels)
        return {"page_id": page_id, "status": "stored"}

    @app.get("/pages/{page_id}/labels")
    def get_labels(page_id: str):
        return _labels_payload(store, page_id)

    @app.post("/train")
    def train_model(body: TrainIn):
        key = hashlib.sha256(
            json.dumps({"page_ids": body.page_ids, "config": body.config}, sort_keys=True).encode()
        ).hexdigest()
        with app.state.train_lock:
            if key in app.state.in_flight:
                raise HTTPException(status_code=409, detail="training already in flight")
            app.state.in_flight.add(key)
        try:
            pages = {pid: store.page(pid) for pid in body.page_ids}
            labels = [store.labels(pid) for pid in body.page_ids]
            config = WrapperConfig.from_dict(body.config) if body.config else WrapperConfig()
            model = train(pages, labels, config)
            mid = store.add_model(model)
        finally:
            with app.state.train_lock:
                app.state.in_flight.discard(key)
        return _model_summary(store, mid)

    @app.get("/models")
    def list_models():
        return {"model_ids": store.model_ids()}

    @app.get("/models/{mid}")
    def get_model(mid: str):
        return _model_summary(store, mid)

    @app.post("/models/{mid}/extract")
    def extract_page(mid: str, page: str = Query(...)):
        model = store.model(mid)
        html = store.page(page)
        try:
            result = result_to_dict(extract(html, model, page_id=page))
        except GlobalZoneNotFound as exc:
            return JSONResponse(
                status_code=422, content={"error": exc.name, "detail": str(exc)}
            )
        store.add_result(mid, page, result)
        return result

    @app.post("/eval")
    def eval_corpus(body: EvalIn):
        model = store.model(body.model_id)
        pages = load_corpus(store.corpus_dir(body.corpus))
        report = evaluate(pages, model, name=body.corpus)
        return report.to_dict()

    return app
