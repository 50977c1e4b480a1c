"""Return on citation (ROC): citations received over citations made, for papers,
researchers, journals and publishers."""
from .baselines import ComparisonRow, citation_count, compare, h_index, if2y, if2y_all_items
from .corpus import (
    Corpus,
    CorpusView,
    EntityRef,
    PaperRecord,
    Reference,
    Scope,
    ValidationReport,
    ingest,
    is_self_citation,
    load_corpus,
    parse_record,
    read_records,
    snapshot,
    write_records,
)
from .engine import (
    MetricOptions,
    RocResult,
    citations_made,
    citations_received,
    corpus_roc,
    roc,
    roc_period,
    scope_rocs,
)
from .errors import (
    CiterocError,
    DataError,
    EmptyPortfolioError,
    EntityLookupError,
    GenerationError,
    IngestError,
    OptionsError,
    ParseError,
    UndefinedMetricError,
    UsageError,
)
from .portfolio import PortfolioStats, RocSeries, SeriesMode, portfolio, roc_series

__version__ = "0.1.0"

__all__ = [
    "citation_count",
    "citations_made",
    "citations_received",
    "CiterocError",
    "compare",
    "ComparisonRow",
    "Corpus",
    "corpus_roc",
    "CorpusView",
    "DataError",
    "EmptyPortfolioError",
    "EntityLookupError",
    "EntityRef",
    "GenerationError",
    "h_index",
    "if2y",
    "if2y_all_items",
    "ingest",
    "IngestError",
    "is_self_citation",
    "load_corpus",
    "MetricOptions",
    "OptionsError",
    "PaperRecord",
    "parse_record",
    "ParseError",
    "portfolio",
    "PortfolioStats",
    "read_records",
    "Reference",
    "roc",
    "roc_period",
    "roc_series",
    "RocResult",
    "RocSeries",
    "Scope",
    "scope_rocs",
    "SeriesMode",
    "snapshot",
    "UndefinedMetricError",
    "UsageError",
    "ValidationReport",
    "write_records",
]
