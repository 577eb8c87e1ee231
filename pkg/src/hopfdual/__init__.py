"""Exact verification toolkit for finite duals of GK-dimension one Hopf algebras."""

__version__ = "0.1.0"
