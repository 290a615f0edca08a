"""Exception types raised across the pipeline.

File-system failures are left as the builtin ``OSError`` family.
"""


class ArabcatError(Exception):
    """Base class for every error raised by this package."""


class EmptyCorpus(ArabcatError):
    def __init__(self, where: str = ""):
        super().__init__(f"empty corpus{': ' + where if where else ''}")
        self.where = where


class EmptyCategory(ArabcatError):
    def __init__(self, name: str):
        super().__init__(f"category {name!r} has no usable keywords after preprocessing")
        self.name = name


class UnseenTerm(ArabcatError, KeyError):
    def __init__(self, word: str):
        super().__init__(f"term {word!r} does not occur in the training vocabulary")
        self.word = word

    def __str__(self) -> str:
        return self.args[0]


class NoKeywords(ArabcatError):
    """No term with positive weight was left to act as a keyword."""


class Unclassifiable(ArabcatError):
    def __init__(self, doc_id: str):
        super().__init__(f"document {doc_id!r} yields no keywords")
        self.doc_id = doc_id


class ConfigMismatch(ArabcatError):
    def __init__(self, what: str, expected: str, got: str):
        super().__init__(
            f"{what} digest mismatch: model was trained with {expected}, got {got}"
        )
        self.what = what


class FormatError(ArabcatError):
    def __init__(self, line: int, msg: str = "malformed model file"):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class VersionError(ArabcatError):
    def __init__(self, version: str):
        super().__init__(f"unsupported model format version {version!r}")
        self.version = version


class EncodingError(ArabcatError):
    def __init__(self, offset: int, path: str = ""):
        super().__init__(f"{path or '<input>'}: invalid UTF-8 at byte offset {offset}")
        self.offset = offset
        self.path = path


class DuplicateDocumentId(ArabcatError):
    def __init__(self, doc_id: str):
        super().__init__(f"duplicate document id {doc_id!r}")
        self.doc_id = doc_id


class UnknownCategory(ArabcatError):
    def __init__(self, name: str):
        super().__init__(f"category {name!r} is not in the model")
        self.name = name
