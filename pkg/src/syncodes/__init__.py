"""Constacyclic code constructions and certified synchronizable-code
parameters over small finite fields."""

__version__ = "0.1.0"
