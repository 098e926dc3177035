"""Quantum symmetric-key encryption laboratory."""
