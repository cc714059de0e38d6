"""
isoset - independent isolating sets of graphs
"""

__version__ = "0.3.0"
