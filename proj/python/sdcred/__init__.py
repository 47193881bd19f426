from sdcred._sdcred import (
    DecodeError,
    Error,
    KeyTriple,
    OutOfRangeError,
    Registry,
    keygen,
    pedersen_commit,
    present,
)

__version__ = "0.1.0"

__all__ = [
    "DecodeError",
    "Error",
    "KeyTriple",
    "OutOfRangeError",
    "Registry",
    "keygen",
    "pedersen_commit",
    "present",
]
