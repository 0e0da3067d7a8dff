"""Greedy maximization of monotone submodular set functions"""

__version__ = "1.0.0"
