"""Unit tests for hopf-smooth. Run with: python -m unittest discover tests"""
