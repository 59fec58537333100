"""Serialization, text forms, the enumeration cache and the command line."""
from dqslab.cli_io.graph6 import Graph6Error, decode_graph6, encode_graph6

__all__ = ["Graph6Error", "decode_graph6", "encode_graph6"]
