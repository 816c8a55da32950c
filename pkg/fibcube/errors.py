"""Exception hierarchy shared by the library and the command line."""


class FibcubeError(Exception):
    """Base class for every error raised by fibcube."""


class WordIndexError(FibcubeError, IndexError):
    def __init__(self, index: int, length: int):
        super().__init__("index out of bounds")
        self.index = index
        self.length = length


class InvalidWordError(FibcubeError, ValueError):
    pass


class InvalidParamsError(FibcubeError, ValueError):
    pass


class InvalidGraphError(FibcubeError, ValueError):
    pass


class UnlabeledGraphError(FibcubeError, ValueError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a graph with word labels")


class DisconnectedGraphError(FibcubeError, ValueError):
    pass


class TrivialGraphError(FibcubeError, ValueError):
    pass


class GraphTooLargeError(FibcubeError, ValueError):
    pass


class NotAProductColoringError(FibcubeError, RuntimeError):
    def __init__(self, detail: str = ""):
        message = "not a product coloring"
        super().__init__(f"{message}: {detail}" if detail else message)
