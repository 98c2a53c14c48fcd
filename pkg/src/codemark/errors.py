"""Exception types shared across the toolkit."""


class CodemarkError(Exception):
    """Base class for all toolkit errors."""


class NotApplicable(CodemarkError):
    """A transformation was applied to a snippet it does not match."""


class EngineUnsupported(CodemarkError):
    """The rule has no deterministic transformer; only an LLM backend can apply it."""


class NetworkError(CodemarkError):
    """Remote backend could not be reached after exhausting retries."""


class ParseError(CodemarkError):
    """A remote reply did not contain a parseable code block."""


class MockUnsupported(CodemarkError):
    """The requested operation is inherently model-driven and the mock backend refuses it."""


class EmbeddingFailed(CodemarkError):
    """At least one watermark bit could not be embedded."""


class ExecutionUnavailable(CodemarkError):
    """A test command is configured but no runtime is available to run it."""
