"""Small-bias spaces from products of Hermitian codes concatenated with Walsh-Hadamard codes."""

__version__ = "0.1.0"
