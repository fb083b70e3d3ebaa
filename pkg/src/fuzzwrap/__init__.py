"""fuzzwrap: trainable fuzzy web wrapper for semi-structured pages."""

from .baseline import DelimiterBaseline
from .corpus import AnomalyProfile, CorpusPage, GoldCorpus, generate_corpus, load_corpus, save_corpus
from .errors import (
    BoundaryInsideToken,
    EmptyTrainingSet,
    FuzzwrapError,
    GlobalZoneNotFound,
    InvalidLexeme,
    InvalidSpan,
    LabelError,
    NoRecords,
    OverlappingSpans,
    SpanOutsideParent,
    UnknownId,
    ZeroTotal,
)
from .evaluator import SetReport, evaluate, evaluate_pages, match_tuples, precision, recall
from .extractor import (
    AttributeValue,
    ExtractedRecord,
    ExtractionResult,
    SeparatorHit,
    extract,
    result_to_dict,
    scan_separator,
)
from .fuzzy import (
    DEFAULT_PARTITION,
    PartitionSpec,
    RULES,
    detector_error,
    fuzzify,
    infer_error_tot,
)
from .induction import (
    DetectorModel,
    FrequencyMatrix,
    SeparatorModel,
    WrapperConfig,
    WrapperModel,
    build_frequency_matrix,
    calibrate,
    detector_cost,
    dump_model,
    load_model,
    model_id,
    occurrence_truth,
    position_truth,
    save_model,
    token_cost,
    train,
)
from .page_model import (
    AttributeSpan,
    DetectorWindow,
    Edge,
    GLOBAL_ZONE,
    RECORD_ZONE,
    Side,
    ZoneKind,
    ZoneLabels,
    attribute_zone,
    compute_window_len,
    extract_windows,
    load_label_file,
    save_label_file,
    validate_labels,
)
from .store import ProjectStore
from .tokens import Token, TokenClass, classify, detokenize, tokenize

__version__ = "0.1.0"
