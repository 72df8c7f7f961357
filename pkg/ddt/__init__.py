"""Distinct-degree diversity toolkit: f(G), hom(G) and neighbourhood-distance machinery."""
from ddt.constants import VERSION

__all__ = ["VERSION"]
