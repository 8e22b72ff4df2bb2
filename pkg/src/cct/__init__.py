"""Exact-arithmetic toolkit for tilting and cotilting module classification
over concealed canonical algebras of domestic and tubular type."""

__version__ = "0.1.0"
