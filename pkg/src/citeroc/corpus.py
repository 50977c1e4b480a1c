"""Corpus data model, line-delimited record parsing and the indexed citation graph.

A corpus file holds one JSON object per line::

    {"id": "P1", "year": 2010, "type": "review", "authors": ["A1"],
     "journal": "J1", "publisher": "U1",
     "refs": [{"kind": "paper", "id": "P0"},
              {"kind": "external", "class": "webpage", "label": "example.org"}]}

Lines starting with ``#`` and blank lines are ignored.

After :func:`ingest` the corpus is immutable.  Its indexes are compressed
sparse rows (``ptr``/``data`` pairs of numpy arrays) keyed by the dense paper
position, which keeps a million-paper corpus in a few hundred megabytes.
The mapping properties (``made_index``, ``received_index`` and the entity
indexes) expose them with string ids.
"""
from __future__ import annotations

import enum
import gc
import json
import logging
from collections.abc import Iterable, Iterator, Mapping
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from itertools import repeat
from pathlib import Path
from typing import IO, NamedTuple

import numpy as np
import orjson

from .errors import EntityLookupError, IngestError, ParseError, RecordError

log = logging.getLogger(__name__)

PUB_TYPES = ("research", "review", "letter", "commentary", "other")
EXTERNAL_CLASSES = ("webpage", "patent", "dataset", "other")
YEAR_MIN, YEAR_MAX = 1500, 3000

INTERNAL = "internal"
EXTERNAL = "external"


class Scope(str, enum.Enum):
    PAPER = "paper"
    RESEARCHER = "researcher"
    JOURNAL = "journal"
    PUBLISHER = "publisher"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EntityRef:
    """A publication individual: a paper, researcher, journal (or conference) or publisher."""

    scope: Scope
    id: str

    def __post_init__(self):
        object.__setattr__(self, "scope", Scope(self.scope))

    @classmethod
    def parse(cls, selector: str) -> "EntityRef":
        """Parse a ``scope:id`` selector such as ``researcher:A7``."""
        scope, sep, ident = selector.partition(":")
        if not sep or not ident:
            raise ValueError(f"entity selector must look like scope:id, got {selector!r}")
        try:
            return cls(Scope(scope), ident)
        except ValueError:
            choices = ", ".join(s.value for s in Scope)
            raise ValueError(f"unknown scope {scope!r} (expected one of {choices})") from None

    def __str__(self) -> str:
        return f"{self.scope.value}:{self.id}"


class Reference(NamedTuple):
    """One entry of a reference list.

    Internal references name a paper id in ``target``.  External ones carry an
    opaque label in ``target`` and a class tag (webpage, patent, ...) in
    ``ref_class``.  External targets are citations made but can never be cited
    back.
    """

    kind: str
    target: str
    ref_class: str | None = None

    @classmethod
    def paper(cls, paper_id: str) -> "Reference":
        return cls(INTERNAL, paper_id)

    @classmethod
    def external(cls, ref_class: str, label: str) -> "Reference":
        return cls(EXTERNAL, label, ref_class)

    def to_json(self) -> dict:
        if self.kind == INTERNAL:
            return {"kind": "paper", "id": self.target}
        return {"kind": "external", "class": self.ref_class, "label": self.target}


@dataclass(frozen=True)
class PaperRecord:
    """A single publication.

    Reference lists are canonicalized on construction: repeated targets
    collapse to their first occurrence and a reference to the record's own id
    is dropped.  How many of each happened is kept on the record (outside of
    equality) so that ingest can report it.
    """

    id: str
    year: int
    pub_type: str
    authors: tuple[str, ...]
    journal: str
    publisher: str
    refs: tuple[Reference, ...] = ()
    deduplicated_refs: int = field(default=0, init=False, compare=False, repr=False)
    dropped_self_loops: int = field(default=0, init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise RecordError("id", "must be a non-empty string")
        if isinstance(self.year, bool) or not isinstance(self.year, int):
            raise RecordError("year", f"must be an integer, got {self.year!r}")
        if not YEAR_MIN <= self.year <= YEAR_MAX:
            raise RecordError("year", f"{self.year} outside [{YEAR_MIN}, {YEAR_MAX}]")
        if self.pub_type not in PUB_TYPES:
            raise RecordError("type", f"unknown publication type {self.pub_type!r}")
        authors = tuple(self.authors)
        if not authors:
            raise RecordError("authors", "must be non-empty")
        if len(set(authors)) != len(authors):
            raise RecordError("authors", "duplicate author id")
        object.__setattr__(self, "authors", authors)

        refs = tuple(self.refs)
        own = Reference(INTERNAL, self.id)
        loops = refs.count(own)
        unique = tuple(dict.fromkeys(r for r in refs if r != own) if loops else dict.fromkeys(refs))
        object.__setattr__(self, "dropped_self_loops", loops)
        object.__setattr__(self, "deduplicated_refs", len(refs) - loops - len(unique))
        object.__setattr__(self, "refs", unique)

    @property
    def citations_made(self) -> int:
        return len(self.refs)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "year": self.year,
            "type": self.pub_type,
            "authors": list(self.authors),
            "journal": self.journal,
            "publisher": self.publisher,
            "refs": [r.to_json() for r in self.refs],
        }


# -- parsing -----------------------------------------------------------------

_REQUIRED = ("id", "year", "authors", "journal", "publisher")


def _parse_ref(item, lineno: int | None) -> Reference:
    if not isinstance(item, dict):
        raise ParseError("refs", f"reference must be an object, got {item!r}", lineno)
    kind = item.get("kind")
    if kind == "paper":
        target = item.get("id")
        if not isinstance(target, str) or not target:
            raise ParseError("refs", "paper reference needs a string 'id'", lineno)
        return Reference(INTERNAL, target)
    if kind == "external":
        cls = item.get("class")
        label = item.get("label")
        if cls not in EXTERNAL_CLASSES:
            raise ParseError("refs", f"unknown external class {cls!r}", lineno)
        if not isinstance(label, str):
            raise ParseError("refs", "external reference needs a string 'label'", lineno)
        return Reference(EXTERNAL, label, cls)
    raise ParseError("refs", f"unknown reference kind {kind!r}", lineno)


def parse_record(line: str, lineno: int | None = None) -> PaperRecord:
    """Parse one corpus line into a :class:`PaperRecord`.

    Raises :class:`ParseError` naming the offending field (and line number,
    when given).
    """
    try:
        obj = orjson.loads(line)
    except orjson.JSONDecodeError as exc:
        raise ParseError("record", f"invalid JSON ({exc})", lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("record", "expected a JSON object", lineno)
    for name in _REQUIRED:
        if name not in obj:
            raise ParseError(name, "missing required field", lineno)
    for name in ("id", "journal", "publisher"):
        if not isinstance(obj[name], str):
            raise ParseError(name, "must be a string", lineno)
    authors = obj["authors"]
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise ParseError("authors", "must be an array of strings", lineno)
    refs = obj.get("refs", [])
    if not isinstance(refs, list):
        raise ParseError("refs", "must be an array", lineno)
    # fast path for well-formed paper references; anything odd goes through _parse_ref
    try:
        parsed = [Reference(INTERNAL, item["id"]) if item["kind"] == "paper" else _parse_ref(item, lineno)
                  for item in refs]
    except (KeyError, TypeError):
        parsed = [_parse_ref(item, lineno) for item in refs]
    if not all(type(r[1]) is str and r[1] for r in parsed if r[0] == INTERNAL):
        parsed = [_parse_ref(item, lineno) for item in refs]
    try:
        rec = PaperRecord(
            id=obj["id"],
            year=obj["year"],
            pub_type=obj.get("type", "research"),
            authors=tuple(authors),
            journal=obj["journal"],
            publisher=obj["publisher"],
            refs=tuple(parsed),
        )
    except ParseError:
        raise
    except RecordError as exc:
        raise ParseError(exc.field, str(exc).split(": ", 1)[-1], lineno) from None
    if rec.dropped_self_loops:
        log.warning("line %s: paper %s cites itself; reference dropped", lineno, rec.id)
    return rec


def read_records(source: str | Path | IO[str] | Iterable[str]) -> Iterator[PaperRecord]:
    """Yield records from a corpus file path, open file or iterable of lines."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            yield from read_records(fh)
        return
    for lineno, line in enumerate(source, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_record(stripped, lineno)


def write_records(records: Iterable[PaperRecord], out: IO[str]) -> int:
    n = 0
    for rec in records:
        out.write(json.dumps(rec.to_json(), ensure_ascii=False, separators=(",", ":")))
        out.write("\n")
        n += 1
    return n


# -- the indexed corpus ------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    dropped_self_loops: int = 0
    deduplicated_refs: int = 0
    unresolved_refs: int = 0
    total_papers: int = 0
    total_internal_edges: int = 0
    total_external_refs: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _csr_from_keys(keys: np.ndarray, n_rows: int, values: np.ndarray | None = None):
    """Group ``values`` (default: positions) by ``keys``; order inside a row is preserved."""
    order = np.argsort(keys, kind="stable")
    ptr = np.zeros(n_rows + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=n_rows), out=ptr[1:])
    data = order if values is None else values[order]
    return ptr, data.astype(np.int32)


def gather_rows(ptr: np.ndarray, data: np.ndarray, rows: np.ndarray):
    """Concatenate CSR rows ``rows``.

    Returns ``(owner, values)`` where ``owner[k]`` is the position in ``rows``
    that ``values[k]`` came from.
    """
    rows = np.asarray(rows, dtype=np.int64)
    starts = ptr[rows]
    lens = ptr[rows + 1] - starts
    total = int(lens.sum())
    owner = np.repeat(np.arange(len(rows), dtype=np.int64), lens)
    if total == 0:
        return owner, data[:0]
    offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(lens) - lens, lens)
    return owner, data[np.repeat(starts, lens) + offsets]


class _CsrMapping(Mapping):
    """Read-only ``id -> [ids]`` view over a CSR index."""

    def __init__(self, keys, key_pos, ptr, data, labels):
        self._keys = keys
        self._pos = key_pos
        self._ptr = ptr
        self._data = data
        self._labels = labels

    def __getitem__(self, key):
        row = self._pos[key]
        return [self._labels[i] for i in self._data[self._ptr[row]:self._ptr[row + 1]]]

    def __iter__(self):
        return iter(self._keys)

    def __len__(self):
        return len(self._keys)


class _PaperMapping(Mapping):
    def __init__(self, corpus: "Corpus"):
        self._corpus = corpus

    def __getitem__(self, key):
        return self._corpus.record(self._corpus.position(key))

    def __iter__(self):
        return iter(self._corpus.ids)

    def __len__(self):
        return len(self._corpus.ids)


class Corpus:
    """Validated, indexed and immutable citation graph.  Build with :func:`ingest`.

    Papers are addressed by their dense position ``0..n-1`` (ingest order).
    Every resolved internal reference is an edge; edges are stored grouped by
    citing paper (``made_ptr``/``made_dst``) and transposed, grouped by cited
    paper (``recv_ptr``/``recv_src``).
    """

    def __init__(self, *, ids, year, pub_type, journal, publisher, journal_ids, publisher_ids,
                 author_ids, author_ptr, author_data, made_ptr, made_dst, n_unresolved, n_external,
                 externals, unresolved, report):
        n = len(ids)
        self.ids: tuple[str, ...] = tuple(ids)
        self._pos = {pid: i for i, pid in enumerate(self.ids)}
        self.year = _frozen(year)
        self.pub_type = _frozen(pub_type)
        self.journal = _frozen(journal)
        self.publisher = _frozen(publisher)
        self.journal_ids: tuple[str, ...] = tuple(journal_ids)
        self.publisher_ids: tuple[str, ...] = tuple(publisher_ids)
        self.author_ids: tuple[str, ...] = tuple(author_ids)
        self.author_ptr = _frozen(author_ptr)
        self.author_data = _frozen(author_data)
        self.made_ptr = _frozen(made_ptr)
        self.made_dst = _frozen(made_dst)
        self.n_unresolved = _frozen(n_unresolved)
        self.n_external = _frozen(n_external)
        internal = np.diff(made_ptr)
        self.made_total = _frozen((internal + n_unresolved + n_external).astype(np.int64))
        self._externals = externals
        self._unresolved_src = _frozen(unresolved[0])
        self._unresolved_targets = unresolved[1]
        self.validation_report: ValidationReport = report

        self.edge_src = _frozen(np.repeat(np.arange(n, dtype=np.int32), internal))
        self.recv_ptr, recv_edges = _csr_from_keys(made_dst, n)
        self.recv_src = _frozen(self.edge_src[recv_edges])
        _frozen(self.recv_ptr)

        n_slots = np.diff(author_ptr)
        slot_paper = np.repeat(np.arange(n, dtype=np.int32), n_slots)
        self._by_author = _csr_from_keys(author_data, len(self.author_ids), slot_paper)
        self._by_journal = _csr_from_keys(journal, len(self.journal_ids))
        self._by_publisher = _csr_from_keys(publisher, len(self.publisher_ids))
        self._entity_pos = {
            Scope.RESEARCHER: {a: i for i, a in enumerate(self.author_ids)},
            Scope.JOURNAL: {j: i for i, j in enumerate(self.journal_ids)},
            Scope.PUBLISHER: {p: i for i, p in enumerate(self.publisher_ids)},
        }
        for arr in (*self._by_author, *self._by_journal, *self._by_publisher):
            _frozen(arr)

    def __len__(self) -> int:
        return len(self.ids)

    def __repr__(self) -> str:
        return f"<Corpus papers={len(self.ids)} edges={len(self.made_dst)}>"

    # -- lookups

    def position(self, paper_id: str) -> int:
        try:
            return self._pos[paper_id]
        except KeyError:
            raise EntityLookupError(f"unknown paper id {paper_id!r}") from None

    def has_entity(self, entity: EntityRef) -> bool:
        if entity.scope is Scope.PAPER:
            return entity.id in self._pos
        return entity.id in self._entity_pos[entity.scope]

    def entity_papers(self, entity: EntityRef) -> np.ndarray:
        """Positions of every paper belonging to ``entity`` (ascending)."""
        if entity.scope is Scope.PAPER:
            return np.array([self.position(entity.id)], dtype=np.int32)
        try:
            row = self._entity_pos[entity.scope][entity.id]
        except KeyError:
            raise EntityLookupError(f"unknown {entity.scope.value} id {entity.id!r}") from None
        ptr, data = self._grouping(entity.scope)
        return np.sort(data[ptr[row]:ptr[row + 1]])

    def _grouping(self, scope: Scope):
        return {
            Scope.RESEARCHER: self._by_author,
            Scope.JOURNAL: self._by_journal,
            Scope.PUBLISHER: self._by_publisher,
        }[scope]

    def entity_ids(self, scope: Scope) -> tuple[str, ...]:
        scope = Scope(scope)
        if scope is Scope.PAPER:
            return self.ids
        return {
            Scope.RESEARCHER: self.author_ids,
            Scope.JOURNAL: self.journal_ids,
            Scope.PUBLISHER: self.publisher_ids,
        }[scope]

    def paper_authors(self, pos: int) -> tuple[str, ...]:
        lo, hi = self.author_ptr[pos], self.author_ptr[pos + 1]
        return tuple(self.author_ids[a] for a in self.author_data[lo:hi])

    def record(self, pos: int) -> PaperRecord:
        """Rebuild the record at ``pos``: resolved, then unresolved, then external references."""
        lo, hi = self.made_ptr[pos], self.made_ptr[pos + 1]
        refs = [Reference(INTERNAL, self.ids[t]) for t in self.made_dst[lo:hi]]
        lo, hi = np.searchsorted(self._unresolved_src, [pos, pos + 1])
        refs.extend(Reference(INTERNAL, t) for t in self._unresolved_targets[lo:hi])
        refs.extend(self._externals.get(pos, ()))
        return PaperRecord(
            id=self.ids[pos],
            year=int(self.year[pos]),
            pub_type=PUB_TYPES[self.pub_type[pos]],
            authors=self.paper_authors(pos),
            journal=self.journal_ids[self.journal[pos]],
            publisher=self.publisher_ids[self.publisher[pos]],
            refs=tuple(refs),
        )

    def records(self) -> Iterator[PaperRecord]:
        for pos in range(len(self.ids)):
            yield self.record(pos)

    # -- mapping views

    @property
    def papers(self) -> Mapping[str, PaperRecord]:
        return _PaperMapping(self)

    @property
    def made_index(self) -> Mapping[str, list[str]]:
        """paper id -> ids of the papers it cites (resolved internal references only)."""
        return _CsrMapping(self.ids, self._pos, self.made_ptr, self.made_dst, self.ids)

    @property
    def received_index(self) -> Mapping[str, list[str]]:
        """paper id -> ids of the papers citing it."""
        return _CsrMapping(self.ids, self._pos, self.recv_ptr, self.recv_src, self.ids)

    @property
    def author_index(self) -> Mapping[str, list[str]]:
        return _CsrMapping(self.author_ids, self._entity_pos[Scope.RESEARCHER], *self._by_author, self.ids)

    @property
    def journal_index(self) -> Mapping[str, list[str]]:
        return _CsrMapping(self.journal_ids, self._entity_pos[Scope.JOURNAL], *self._by_journal, self.ids)

    @property
    def publisher_index(self) -> Mapping[str, list[str]]:
        return _CsrMapping(self.publisher_ids, self._entity_pos[Scope.PUBLISHER], *self._by_publisher, self.ids)

    def view(self, as_of_year: int | None = None) -> "CorpusView":
        return CorpusView(self, as_of_year)


class _Interner(dict):
    def __missing__(self, key):
        idx = self[key] = len(self)
        return idx


@contextmanager
def _gc_paused():
    # ingest allocates millions of acyclic tuples; generational GC passes over them dominate otherwise
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def ingest(records: Iterable[PaperRecord]) -> Corpus:
    """Build a :class:`Corpus` from a finite stream of records.

    Internal references to ids that never appear in the stream stay in the
    citations-made count but produce no edge; they are tallied as unresolved.
    """
    with _gc_paused():
        return _ingest(records)


def _ingest(records: Iterable[PaperRecord]) -> Corpus:
    ids: list[str] = []
    first_seen: dict[str, int] = {}
    years: list[int] = []
    types: list[int] = []
    journals, publishers, authors = _Interner(), _Interner(), _Interner()
    jn: list[int] = []
    pb: list[int] = []
    author_counts: list[int] = []
    author_data: list[int] = []
    ref_counts: list[int] = []
    targets: list[str] = []
    n_external: list[int] = []
    externals: dict[int, tuple[Reference, ...]] = {}
    type_code = {t: i for i, t in enumerate(PUB_TYPES)}
    deduped = self_loops = 0

    for rec in records:
        pos = len(ids)
        if rec.id in first_seen:
            raise IngestError(f"duplicate paper id {rec.id!r}: records #{first_seen[rec.id] + 1} and #{pos + 1}")
        first_seen[rec.id] = pos
        ids.append(rec.id)
        years.append(rec.year)
        types.append(type_code[rec.pub_type])
        jn.append(journals[rec.journal])
        pb.append(publishers[rec.publisher])
        author_counts.append(len(rec.authors))
        author_data.extend([authors[a] for a in rec.authors])
        deduped += rec.deduplicated_refs
        self_loops += rec.dropped_self_loops
        internal = [r.target for r in rec.refs if r.kind == INTERNAL]
        targets.extend(internal)
        ref_counts.append(len(internal))
        n_ext = len(rec.refs) - len(internal)
        n_external.append(n_ext)
        if n_ext:
            externals[pos] = tuple(r for r in rec.refs if r.kind != INTERNAL)

    n = len(ids)
    dst = np.fromiter(map(first_seen.get, targets, repeat(-1)), dtype=np.int64, count=len(targets))
    src = np.repeat(np.arange(n, dtype=np.int64), np.asarray(ref_counts, dtype=np.int64))
    resolved = dst >= 0
    unresolved_at = np.flatnonzero(~resolved)
    unresolved_src = src[unresolved_at]
    n_unresolved = np.bincount(unresolved_src, minlength=n).astype(np.int64)
    unresolved_targets = [targets[k] for k in unresolved_at.tolist()]
    src, dst = src[resolved], dst[resolved]
    made_ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=made_ptr[1:])

    year_arr = np.asarray(years, dtype=np.int32)
    forward = int(np.count_nonzero(year_arr[dst] > year_arr[src])) if len(dst) else 0
    if forward:
        log.warning("%d citation(s) point to papers published later than the citing paper", forward)

    n_ext_arr = np.asarray(n_external, dtype=np.int64)
    report = ValidationReport(
        dropped_self_loops=self_loops,
        deduplicated_refs=deduped,
        unresolved_refs=int(n_unresolved.sum()),
        total_papers=n,
        total_internal_edges=int(len(dst)),
        total_external_refs=int(n_ext_arr.sum()),
    )
    return Corpus(
        ids=ids,
        year=year_arr,
        pub_type=np.asarray(types, dtype=np.int8),
        journal=np.asarray(jn, dtype=np.int32),
        publisher=np.asarray(pb, dtype=np.int32),
        journal_ids=list(journals),
        publisher_ids=list(publishers),
        author_ids=list(authors),
        author_ptr=np.concatenate(([0], np.cumsum(author_counts, dtype=np.int64))).astype(np.int64),
        author_data=np.asarray(author_data, dtype=np.int32),
        made_ptr=made_ptr,
        made_dst=dst.astype(np.int32),
        n_unresolved=n_unresolved,
        n_external=n_ext_arr,
        externals=externals,
        unresolved=(unresolved_src, unresolved_targets),
        report=report,
    )


def load_corpus(path: str | Path) -> Corpus:
    return ingest(read_records(path))


# -- snapshots ---------------------------------------------------------------

@dataclass(frozen=True)
class CorpusView:
    """The corpus as of the end of ``as_of_year``.

    Only papers published in or before that year are visible, and a citation
    event is timestamped with its citing paper's publication year.  ``None``
    means the whole corpus.
    """

    corpus: Corpus
    as_of_year: int | None = None

    def visible(self, positions: np.ndarray) -> np.ndarray:
        """Boolean mask: which of ``positions`` are in this view."""
        if self.as_of_year is None:
            return np.ones(len(positions), dtype=bool)
        return self.corpus.year[positions] <= self.as_of_year

    def visible_positions(self) -> np.ndarray:
        if self.as_of_year is None:
            return np.arange(len(self.corpus), dtype=np.int32)
        return np.flatnonzero(self.corpus.year <= self.as_of_year).astype(np.int32)

    def paper_ids(self) -> list[str]:
        return [self.corpus.ids[p] for p in self.visible_positions()]

    def contains(self, entity: EntityRef) -> bool:
        if not self.corpus.has_entity(entity):
            return False
        papers = self.corpus.entity_papers(entity)
        return bool(self.visible(papers).any())

    def entity_papers(self, entity: EntityRef) -> np.ndarray:
        """Visible paper positions of ``entity``; lookup error when it has none."""
        papers = self.corpus.entity_papers(entity)
        papers = papers[self.visible(papers)]
        if len(papers) == 0:
            raise EntityLookupError(f"{entity} has no publications as of {self.as_of_year}")
        return papers

    def citing_positions(self, pos: int) -> np.ndarray:
        src = self.corpus.recv_src[self.corpus.recv_ptr[pos]:self.corpus.recv_ptr[pos + 1]]
        return src if self.as_of_year is None else src[self.corpus.year[src] <= self.as_of_year]

    def received(self, paper_id: str) -> list[str]:
        """Ids of papers citing ``paper_id`` inside this view."""
        pos = self.corpus.position(paper_id)
        if not self.visible(np.array([pos]))[0]:
            raise EntityLookupError(f"paper {paper_id!r} not in view as of {self.as_of_year}")
        return [self.corpus.ids[s] for s in self.citing_positions(pos)]

    def made(self, paper_id: str) -> list[str]:
        pos = self.corpus.position(paper_id)
        if not self.visible(np.array([pos]))[0]:
            raise EntityLookupError(f"paper {paper_id!r} not in view as of {self.as_of_year}")
        return self.corpus.made_index[paper_id]

    def citation_events(self) -> set[tuple[str, str]]:
        """All visible ``(citing, cited)`` pairs."""
        c = self.corpus
        src, dst = c.edge_src, c.made_dst
        if self.as_of_year is not None:
            keep = (c.year[src] <= self.as_of_year) & (c.year[dst] <= self.as_of_year)
            src, dst = src[keep], dst[keep]
        return {(c.ids[s], c.ids[d]) for s, d in zip(src.tolist(), dst.tolist())}


def snapshot(corpus: Corpus, year: int) -> CorpusView:
    return CorpusView(corpus, int(year))


def is_self_citation(corpus: Corpus, citing: str, cited: str, scope: Scope | str) -> bool:
    """Whether ``citing`` -> ``cited`` is a self-citation at ``scope``.

    Paper and researcher scopes use author overlap; journal and publisher
    scopes compare venue / publisher ids.
    """
    a, b = corpus.position(citing), corpus.position(cited)
    scope = Scope(scope)
    if scope is Scope.JOURNAL:
        return bool(corpus.journal[a] == corpus.journal[b])
    if scope is Scope.PUBLISHER:
        return bool(corpus.publisher[a] == corpus.publisher[b])
    return not set(corpus.paper_authors(a)).isdisjoint(corpus.paper_authors(b))
