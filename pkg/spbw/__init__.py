"""spbw - exact Groebner engine for bijective skew PBW extensions."""

__version__ = "0.1.0"
