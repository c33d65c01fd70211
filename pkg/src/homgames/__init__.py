"""Graph homomorphisms, width measures and quantified colouring games,
with every construction cross-checked by brute-force oracles."""

__version__ = "0.1.0"
