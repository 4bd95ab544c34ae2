"""
Tests for resource limits read from the environment.
"""

import os
import sys
import unittest
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.utils.config import DEFAULT_DEGREE_LIMIT, ResourceLimits, default_limits, log_level


class TestResourceLimits(unittest.TestCase):
    """Tests for ResourceLimits.from_env."""

    def test_defaults(self):
        """Test defaults when nothing is set."""
        with patch.dict(os.environ, {}, clear=True):
            limits = default_limits()
        self.assertEqual(limits.max_degree, DEFAULT_DEGREE_LIMIT)
        self.assertEqual(limits, ResourceLimits())

    def test_overrides(self):
        """Test that environment values are used."""
        env = {"HOPFSMOOTH_DEGREE_LIMIT": "12", "HOPFSMOOTH_MAX_PAIRS": "50", "HOPFSMOOTH_FORMULA_SIZE": " "}
        with patch.dict(os.environ, env, clear=True):
            limits = ResourceLimits.from_env()
        self.assertEqual((limits.max_degree, limits.max_pairs), (12, 50))
        self.assertEqual(limits.formula_size_ceiling, ResourceLimits().formula_size_ceiling)

    def test_bad_values(self):
        """Test that non-integer and non-positive values are rejected."""
        for raw in ("ten", "0", "-3"):
            with self.subTest(raw=raw):
                with patch.dict(os.environ, {"HOPFSMOOTH_MAX_BASIS_SIZE": raw}, clear=True):
                    with self.assertRaises(ValueError):
                        ResourceLimits.from_env()

    def test_degree_override(self):
        """Test the command-line degree override."""
        limits = ResourceLimits()
        self.assertIs(limits.with_degree_limit(None), limits)
        self.assertEqual(limits.with_degree_limit(5).max_degree, 5)
        self.assertEqual(limits.max_degree, DEFAULT_DEGREE_LIMIT)

    def test_log_level(self):
        """Test the log level variable."""
        with patch.dict(os.environ, {}, clear=True):
            self.assertEqual(log_level(), "INFO")
        with patch.dict(os.environ, {"HOPFSMOOTH_LOG_LEVEL": "debug"}, clear=True):
            self.assertEqual(log_level(), "DEBUG")


if __name__ == '__main__':
    unittest.main()
