"""Tensor-product Markov chains on irreducible (Brauer) characters."""

__version__ = "0.1.0"
# Version of the JSON/CSV output schemas emitted by the CLI.
SCHEMA_VERSION = "1"
