"""
validation.py - Validation of the text inputs accepted by the command line
"""

import re
from typing import Any, Dict, Optional
import logging

# Configure logging
logger = logging.getLogger(__name__)

MAX_BOUND = 64
MAX_TRUNC = 4096
MAX_M = 64


class InputValidator:
    """
    Rule-based validation of expressions, words, grammars and numeric flags
    """

    def __init__(self):
        """Initialize the input validator"""
        self.validation_rules: Dict[str, Dict[str, Any]] = {}

        # Predefined validation patterns
        self.patterns = {
            'word': r"^\s*(?:(?:_0_|[pq]\d+|[a-or-z1]|'.')(?:\s+|$))*$",
            'alias_word': r"^\s*(?:(?:_0_|[pq]\d+|[a-z1]|'.')(?:\s+|$))*$",
            'grammar_line': r"^\s*(?:#.*)?$|^\s*[^\s|;#]+\s*->[^#]*(?:#.*)?$",
            'slot': r"^[a-or-z]$"
        }

    def add_validation_rule(self, field_name: str, rule_type: str, pattern: Optional[str] = None,
                            min_value: Optional[int] = None, max_value: Optional[int] = None,
                            required: bool = False) -> bool:
        """
        Add a validation rule

        Args:
            field_name (str): Name of the field to validate
            rule_type (str): 'string', 'number' or 'grammar'
            pattern (str): Pattern name or regex for strings and grammar lines
            min_value (int): Smallest accepted number
            max_value (int): Largest accepted number
            required (bool): Whether the field is required

        Returns:
            bool: True if successful
        """
        self.validation_rules[field_name] = {
            'type': rule_type,
            'pattern': pattern,
            'min_value': min_value,
            'max_value': max_value,
            'required': required
        }
        return True

    def validate_input(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate input data against the rules

        Fields that are None count as absent.

        Args:
            data (Dict): Input data to validate

        Returns:
            dict: valid flag, errors and the validated data
        """
        validation_results: Dict[str, Any] = {
            'valid': True,
            'errors': [],
            'validated_data': {}
        }

        for field_name, rules in self.validation_rules.items():
            value = data.get(field_name)
            if value is None:
                if rules['required']:
                    validation_results['valid'] = False
                    validation_results['errors'].append({
                        'field': field_name,
                        'error': f"Required field '{field_name}' is missing",
                        'type': 'missing'
                    })
                continue

            errors = self._validate_field(field_name, value, rules)
            if errors:
                validation_results['valid'] = False
                validation_results['errors'].extend(errors)
            else:
                validation_results['validated_data'][field_name] = value

        for field_name, value in data.items():
            if field_name not in self.validation_rules:
                validation_results['validated_data'][field_name] = value

        if not validation_results['valid']:
            logger.warning(f"Input validation failed: {validation_results['errors']}")
        return validation_results

    def _validate_field(self, field_name: str, value: Any, rules: Dict[str, Any]) -> list:
        """
        Validate a single field against its rules

        Returns:
            list: error records, empty when the value is valid
        """
        errors = []
        if rules['type'] == 'number':
            if not isinstance(value, int) or isinstance(value, bool):
                return [{'field': field_name, 'error': f"Field '{field_name}' must be an integer", 'type': 'type'}]
            if rules['min_value'] is not None and value < rules['min_value']:
                errors.append({'field': field_name, 'type': 'range',
                               'error': f"Field '{field_name}' must be at least {rules['min_value']}"})
            if rules['max_value'] is not None and value > rules['max_value']:
                errors.append({'field': field_name, 'type': 'range',
                               'error': f"Field '{field_name}' must not exceed {rules['max_value']}"})
            return errors

        if not isinstance(value, str):
            return [{'field': field_name, 'error': f"Field '{field_name}' must be a string", 'type': 'type'}]

        pattern = self.patterns.get(rules['pattern'], rules['pattern'])
        if pattern is None:
            return errors
        lines = value.splitlines() if rules['type'] == 'grammar' else [value]
        for number, line in enumerate(lines, start=1):
            if not re.match(pattern, line):
                where = f" (line {number})" if rules['type'] == 'grammar' else ""
                errors.append({'field': field_name, 'type': 'format',
                               'error': f"Field '{field_name}' does not match the expected format{where}"})
        return errors


def command_validator() -> InputValidator:
    """Validator with the rules shared by every subcommand"""
    validator = InputValidator()
    validator.add_validation_rule('bound', 'number', min_value=0, max_value=MAX_BOUND)
    validator.add_validation_rule('trunc', 'number', min_value=1, max_value=MAX_TRUNC)
    validator.add_validation_rule('m', 'number', min_value=2, max_value=MAX_M)
    validator.add_validation_rule('seed', 'number', min_value=0)
    validator.add_validation_rule('slot', 'string', pattern='slot')
    validator.add_validation_rule('word', 'string', pattern='word')
    validator.add_validation_rule('alias_word', 'string', pattern='alias_word')
    validator.add_validation_rule('grammar', 'grammar', pattern='grammar_line')
    return validator


# Main instance for system use
input_validator = command_validator()
