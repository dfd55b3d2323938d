"""Creative telescoping for Fuchsian D-finite functions via Hermite and polynomial reduction."""

__version__ = "0.1.0"
