"""Claw-free spanning trees with few leaves and branch vertices"""

__version__ = "1.0.0"
