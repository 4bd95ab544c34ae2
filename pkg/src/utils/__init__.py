"""Shared plumbing: configuration, errors, exact linear algebra, the sympy bridge."""
