"""Weak Groebner bases over effective coefficient rings."""
