"""
Unit tests for StateValidator.
"""

import unittest

from concurrence.config.validator import StateValidator, validate_report, validate_state
from concurrence.measures import full_report
from concurrence.states import maximally_entangled_state


class TestStateValidator(unittest.TestCase):
    """Test the JSON Schema validation of state documents and reports."""

    def setUp(self):
        self.validator = StateValidator()
        self.document = {
            "name": "bell",
            "d": 2,
            "alpha": [[[0.0, 0.0], [0.7071, 0.0]], [[-0.7071, 0.0], [0.0, 0.0]]],
        }

    def test_valid_state(self):
        """A well-formed document passes."""
        is_valid, errors = self.validator.validate_state(self.document)
        self.assertTrue(is_valid)
        self.assertEqual(errors, [])

    def test_missing_dimension(self):
        """A missing 'd' is reported at the document root."""
        del self.document["d"]
        is_valid, errors = validate_state(self.document)
        self.assertFalse(is_valid)
        self.assertTrue(any(e.startswith("[root]") and "'d'" in e for e in errors))

    def test_amplitude_must_be_pair(self):
        """Each amplitude is exactly [re, im]."""
        self.document["alpha"][0][0] = [0.0, 0.0, 0.0]
        is_valid, errors = self.validator.validate_state(self.document)
        self.assertFalse(is_valid)
        self.assertTrue(any(e.startswith("[alpha -> 0 -> 0]") for e in errors))

    def test_unknown_property(self):
        """Unknown keys are rejected."""
        self.document["beta"] = 1
        is_valid, _ = self.validator.validate_state(self.document)
        self.assertFalse(is_valid)

    def test_dimension_bounds(self):
        self.document["d"] = 1
        is_valid, _ = self.validator.validate_state(self.document)
        self.assertFalse(is_valid)

    def test_report_schema(self):
        """Reports produced by full_report conform to the report schema."""
        record = full_report(maximally_entangled_state(3)).model_dump(mode="json")
        self.assertEqual(validate_report(record), (True, []))

        record["det_alpha_sq"] = -1.0
        is_valid, errors = self.validator.validate_report(record)
        self.assertFalse(is_valid)
        self.assertTrue(any("det_alpha_sq" in e for e in errors))

    def test_schema_is_cached(self):
        self.validator.validate_state(self.document)
        cached = self.validator._state_schema_cache
        self.validator.validate_state(self.document)
        self.assertIs(cached, self.validator._state_schema_cache)


if __name__ == "__main__":
    unittest.main()
