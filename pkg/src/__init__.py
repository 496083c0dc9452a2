"""Key polynomials, Kohnert diagrams and Pieri rules."""

__version__ = "0.1.0"
