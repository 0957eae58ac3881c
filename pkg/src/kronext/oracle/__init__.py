"""Brute-force ground truth over small prime fields."""
