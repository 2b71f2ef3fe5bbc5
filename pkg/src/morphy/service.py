# -*- coding: utf-8 -*-
"""HTTP service: analysis, tagging, the lexicon-entry wizard and corpus
annotation storage for the browser editor.

All linguistics happens in the library; the service adds sessions,
persistence (plain-text files in a data directory) and optimistic
concurrency for sentence edits (per-sentence revision numbers)."""

from __future__ import annotations

import os
import threading
import time
import uuid

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from . import data as pkgdata
from .analysis import analyze_token
from .corpus import read_corpus, split_sentences, tokenize, write_corpus
from .dialogue import DialogueError, answer, start_classification
from .inflection import generate_forms
from .lexicon import LexiconEntry, LexiconError, format_entry
from .tagger import candidate_tags, load_models, tag_church, tag_varcontext, \
    train_models
from .tags import LARGE, TagError, format_tag, parse_tag


class SessionStore:
    """Dialogue sessions and corpus drafts with idle expiry."""

    def __init__(self, idle_timeout: float = 3600.0):
        self.idle_timeout = idle_timeout
        self._sessions = {}          # id -> (DialogueState, last access)
        self._lock = threading.Lock()

    def _prune(self):
        cutoff = time.monotonic() - self.idle_timeout
        for sid in [s for s, (_, t) in self._sessions.items() if t < cutoff]:
            del self._sessions[sid]

    def create(self, state) -> str:
        with self._lock:
            self._prune()
            sid = uuid.uuid4().hex[:12]
            self._sessions[sid] = (state, time.monotonic())
            return sid

    def get(self, sid):
        with self._lock:
            self._prune()
            entry = self._sessions.get(sid)
            if entry is None:
                return None
            state, _ = entry
            self._sessions[sid] = (state, time.monotonic())
            return state

    def update(self, sid, state):
        with self._lock:
            self._sessions[sid] = (state, time.monotonic())

    def drop(self, sid):
        with self._lock:
            self._sessions.pop(sid, None)


class AnalyzeBody(BaseModel):
    text: str


class TagBody(BaseModel):
    text: str
    tagset: str = "small"
    algo: str = "church"


class SessionBody(BaseModel):
    pos: str
    root: str


class AnswerBody(BaseModel):
    choice: int


class EntryBody(BaseModel):
    root: str
    pos: str
    inflection_class: str
    gender: str | None = None
    prefix: str | None = None
    prefix_kind: str = "none"
    flags: list[str] = []
    overrides: dict[str, str] = {}


class SentenceBody(BaseModel):
    tags: list[str]
    revision: int | None = None
    override: bool = False


def create_app(lex=None, classes=None, data_dir: str = ".",
               models_path: str | None = None,
               session_timeout: float = 3600.0) -> FastAPI:
    classes = classes or pkgdata.load_default_paradigms()
    lex = lex or pkgdata.load_seed_lexicon()
    if models_path:
        with open(models_path, encoding="utf-8") as fh:
            models = load_models(fh.read())
    else:
        models = train_models(read_corpus(pkgdata.read_desk_corpus_text()),
                              LARGE)

    app = FastAPI(title="morphy", version="0.1.0")
    sessions = SessionStore(idle_timeout=session_timeout)
    corpora_dir = os.path.join(data_dir, "corpora")
    lexicon_path = os.path.join(data_dir, "lexicon.tsv")
    corpora = {}                 # id -> {"corpus", "revisions", "lock"}
    corpora_lock = threading.Lock()
    abbreviations = {e.root for e in lex.entries if e.pos == "ABK"}

    def _corpus_record(cid: str):
        with corpora_lock:
            rec = corpora.get(cid)
            if rec is None:
                path = os.path.join(corpora_dir, f"{cid}.tsv")
                if not os.path.exists(path):
                    raise HTTPException(404, f"unknown corpus {cid!r}")
                with open(path, encoding="utf-8") as fh:
                    corpus = read_corpus(fh.read(), provenance=cid)
                rec = {"corpus": corpus,
                       "revisions": [0] * len(corpus.sentences),
                       "lock": threading.Lock()}
                corpora[cid] = rec
            return rec

    def _persist_corpus(cid: str, corpus):
        os.makedirs(corpora_dir, exist_ok=True)
        path = os.path.join(corpora_dir, f"{cid}.tsv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(write_corpus(corpus))

    def _sentence_view(sent, index, revision):
        surfaces = [s for s, _ in sent]
        decoded = tag_church(surfaces, models, lex, classes)
        tokens = []
        for i, (surface, gold) in enumerate(sent):
            cands, _unk = candidate_tags(surface, lex, models, classes,
                                         sentence_initial=(i == 0))
            tokens.append({
                "surface": surface,
                "gold": format_tag(gold),
                "candidates": [t for t, _ in cands],
                "predicted": format_tag(decoded.tokens[i][1]),
            })
        return {"index": index, "revision": revision, "tokens": tokens}

    @app.post("/analyze")
    def post_analyze(body: AnalyzeBody):
        out = []
        for token in tokenize(body.text, abbreviations):
            analyses = analyze_token(token, lex, classes,
                                     sentence_initial=True)
            out.append({
                "surface": token,
                "analyses": [{
                    "lemma": a.lemma,
                    "tag": format_tag(a.tag),
                    "segments": list(a.segments),
                } for a in analyses],
            })
        return {"tokens": out}

    @app.post("/tag")
    def post_tag(body: TagBody):
        if body.tagset != models.kind:
            raise HTTPException(
                400, f"loaded models use the {models.kind} tag set")
        if body.algo not in ("church", "varcontext"):
            raise HTTPException(400, f"unknown algorithm {body.algo!r}")
        decode = tag_church if body.algo == "church" else tag_varcontext
        sentences = []
        for sentence in split_sentences(tokenize(body.text, abbreviations)):
            tagged = decode(sentence, models, lex, classes)
            row = []
            for i, (surface, tag) in enumerate(tagged.tokens):
                cands, _unk = candidate_tags(surface, lex, models, classes,
                                             sentence_initial=(i == 0))
                row.append({"surface": surface, "tag": format_tag(tag),
                            "candidates": [t for t, _ in cands]})
            sentences.append(row)
        return {"sentences": sentences}

    @app.post("/lexicon/sessions")
    def post_session(body: SessionBody):
        try:
            state = start_classification(body.pos, body.root)
        except DialogueError as err:
            raise HTTPException(400, str(err)) from err
        sid = sessions.create(state)
        return {"session_id": sid, **_session_payload(state)}

    def _session_payload(state):
        if state.complete:
            entry = state.draft
            table = generate_forms(entry, classes)
            return {
                "done": True,
                "entry": _entry_json(entry),
                "forms": [[s, format_tag(t)] for s, t in table.rows],
            }
        q = state.pending
        return {"done": False,
                "question": {"id": q.qid, "text": q.text,
                             "alternatives": list(q.alternatives)}}

    @app.post("/lexicon/sessions/{sid}/answers")
    def post_answer(sid: str, body: AnswerBody):
        state = sessions.get(sid)
        if state is None:
            raise HTTPException(404, f"unknown session {sid!r}")
        try:
            state = answer(state, body.choice)
        except DialogueError as err:
            raise HTTPException(400, str(err)) from err
        sessions.update(sid, state)
        return {"session_id": sid, **_session_payload(state)}

    def _entry_json(entry):
        return {
            "root": entry.root,
            "pos": entry.pos,
            "inflection_class": entry.inflection_class,
            "gender": entry.gender,
            "prefix": entry.prefix,
            "prefix_kind": entry.prefix_kind,
            "flags": sorted(entry.flags),
            "overrides": dict(entry.overrides),
        }

    @app.post("/lexicon/entries")
    def post_entry(body: EntryBody):
        try:
            entry = LexiconEntry(
                root=body.root, pos=body.pos,
                inflection_class=body.inflection_class, gender=body.gender,
                prefix=body.prefix, prefix_kind=body.prefix_kind,
                flags=frozenset(body.flags),
                overrides=tuple(sorted(body.overrides.items())))
            if body.inflection_class not in classes:
                raise LexiconError(
                    f"unknown class id {body.inflection_class!r}")
            generate_forms(entry, classes)
            lex.add_entry(entry)
        except (LexiconError, ValueError) as err:
            raise HTTPException(400, str(err)) from err
        os.makedirs(data_dir, exist_ok=True)
        line = format_entry(entry)
        with open(lexicon_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
        return {"ok": True, "line": line}

    @app.get("/corpora/{cid}")
    def get_corpus(cid: str):
        rec = _corpus_record(cid)
        with rec["lock"]:
            corpus = rec["corpus"]
            views = [_sentence_view(sent, i, rec["revisions"][i])
                     for i, sent in enumerate(corpus.sentences)]
        return {"id": cid, "sentences": views}

    @app.put("/corpora/{cid}/sentences/{n}")
    def put_sentence(cid: str, n: int, body: SentenceBody):
        rec = _corpus_record(cid)
        with rec["lock"]:
            corpus = rec["corpus"]
            if not 0 <= n < len(corpus.sentences):
                raise HTTPException(404, f"no sentence {n}")
            if body.revision is not None and \
                    body.revision != rec["revisions"][n]:
                raise HTTPException(
                    409, "revision conflict: sentence was edited")
            sent = corpus.sentences[n]
            if len(body.tags) != len(sent):
                raise HTTPException(
                    400, f"expected {len(sent)} tags, got {len(body.tags)}")
            new_tokens = []
            for i, ((surface, _old), tag_str) in enumerate(
                    zip(sent, body.tags)):
                try:
                    tag = parse_tag(tag_str, LARGE)
                except TagError as err:
                    raise HTTPException(400, str(err)) from err
                if not body.override:
                    cands, _unk = candidate_tags(
                        surface, lex, models, classes,
                        sentence_initial=(i == 0))
                    if format_tag(tag) not in {t for t, _ in cands}:
                        raise HTTPException(
                            409, f"tag {tag_str!r} not a candidate for "
                                 f"{surface!r} (set override to force)")
                new_tokens.append((surface, tag))
            sentences = list(corpus.sentences)
            sentences[n] = tuple(new_tokens)
            rec["corpus"] = corpus.__class__(tuple(sentences),
                                             corpus.provenance)
            rec["revisions"][n] += 1
            _persist_corpus(cid, rec["corpus"])
            return {"revision": rec["revisions"][n]}

    @app.get("/corpora/{cid}/export", response_class=PlainTextResponse)
    def get_export(cid: str):
        rec = _corpus_record(cid)
        with rec["lock"]:
            return write_corpus(rec["corpus"])

    frontend = os.path.join(os.path.dirname(data_dir or "."), "frontend",
                            "dist")
    local_frontend = os.path.join(os.getcwd(), "frontend", "dist")
    for candidate in (frontend, local_frontend):
        if os.path.isdir(candidate):
            from fastapi.staticfiles import StaticFiles
            app.mount("/", StaticFiles(directory=candidate, html=True),
                      name="ui")
            break

    return app
