"""Exception types shared across the package."""


class InputError(ValueError):
    """Bad user-supplied data: malformed documents, mismatched alphabets,
    empty input where an operation needs content.

    The CLI maps this (and I/O failures) to exit code 1.
    """
