"""Scope-safe co-de-Bruijn syntax with hereditary substitution."""
