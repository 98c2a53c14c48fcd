"""codemark: embed and recover n-bit watermarks in source-code functions.

Embedding encodes each watermark bit as one semantics-preserving
transformation drawn from a four-category rule catalog; extraction retrieves
the most similar unmarked original from a candidate codebase and replays the
candidate rules, reading each bit from whether the replay moves the
reconstruction closer to the watermarked code. A deterministic offline
engine ("mock" backend) and a remote chat-completion backend share the same
interfaces.
"""

from .attacks import AttackSpec, paraphrase_attack, rename_attack, transform_attack
from .corpus import (
    CandidateCodebase,
    CodeSnippet,
    WatermarkRecord,
    ingest_directory,
    load_codebase,
    save_codebase,
)
from .embedder import EmbeddingPlan, WatermarkBits, embed, embed_batch, plan
from .errors import (
    CodemarkError,
    EmbeddingFailed,
    EngineUnsupported,
    MockUnsupported,
    NetworkError,
    NotApplicable,
    ParseError,
)
from .evaluator import MetricReport, RunArtifact, bit_acc, msg_acc, report, syntax_check
from .extractor import DecodingPolicy, ExtractionResult, RetrievalResult, extract, retrieve
from .features import (
    FeatureProfile,
    SimilarityWeights,
    combined_score,
    extract_profile,
    grid_search_weights,
    lev_dist,
    sim_name,
    sim_sem,
    sim_struct,
    sim_vars,
)
from .gateway import Backend, ProviderConfig, TransformVerdict, mock_backend
from .rules import RuleCatalog, TransformationRule, catalog

__version__ = "0.1.0"

__all__ = [
    "AttackSpec",
    "Backend",
    "CandidateCodebase",
    "CodeSnippet",
    "CodemarkError",
    "DecodingPolicy",
    "EmbeddingFailed",
    "EmbeddingPlan",
    "EngineUnsupported",
    "ExtractionResult",
    "FeatureProfile",
    "MetricReport",
    "MockUnsupported",
    "NetworkError",
    "NotApplicable",
    "ParseError",
    "ProviderConfig",
    "RetrievalResult",
    "RuleCatalog",
    "RunArtifact",
    "SimilarityWeights",
    "TransformVerdict",
    "TransformationRule",
    "WatermarkBits",
    "WatermarkRecord",
    "bit_acc",
    "catalog",
    "combined_score",
    "embed",
    "embed_batch",
    "extract",
    "extract_profile",
    "grid_search_weights",
    "ingest_directory",
    "lev_dist",
    "load_codebase",
    "mock_backend",
    "msg_acc",
    "paraphrase_attack",
    "plan",
    "rename_attack",
    "report",
    "retrieve",
    "save_codebase",
    "sim_name",
    "sim_sem",
    "sim_struct",
    "sim_vars",
    "syntax_check",
    "transform_attack",
]
