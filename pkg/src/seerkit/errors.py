"""Exception taxonomy shared across modules.

``ConfigError`` subclasses map to CLI exit code 1 (I/O or configuration),
``DomainError`` subclasses to exit code 2 (well-formed request the model
cannot answer).
"""


class SeerkitError(Exception):
    """Base class for everything this package raises on purpose."""


class ConfigError(SeerkitError):
    """Bad input files, paths, or configuration."""


class DomainError(SeerkitError):
    """Valid machinery, unanswerable request."""


class CorpusFormatError(ConfigError):
    pass


class LexiconFormatError(ConfigError):
    pass


class EngineDirError(ConfigError):
    pass


class EmptyQueryError(DomainError):
    pass


class EmptyCorpusError(DomainError):
    pass


class UnknownDocumentError(DomainError):
    pass


class UnknownAuthorError(DomainError):
    pass


class PhraseNotInLexiconError(DomainError):
    pass


class DuplicateDocumentError(DomainError):
    pass
