"""Exact Euler characteristics of Out(F_n) and the machinery around them."""
__version__ = "0.1.0"
