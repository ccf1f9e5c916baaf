"""Exception types shared across the package."""


class CPTPrepError(Exception):
    """Base class for input and configuration errors raised by this package."""


class CorpusFormatError(CPTPrepError):
    """Corpus file cannot be read or decoded."""


class TokenizerFormatError(CPTPrepError):
    """Tokenizer vocab/merges/added-tokens files are malformed or inconsistent."""


class ConfigError(CPTPrepError):
    """Pipeline configuration is invalid or incomplete for the requested command."""
