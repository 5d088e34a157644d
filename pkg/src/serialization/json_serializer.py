"""
json_serializer.py - Deterministic JSON documents for toolkit results
"""

import json
import time
from typing import Any, Dict, Optional
import logging

from src.kleene.matrix import SquareMatrix
from src.kleene.parser import regex_print

# Configure logging
logger = logging.getLogger(__name__)

FORMAT_VERSION = "1.0"


class DataSerializer:
    """
    Base class for data serialization operations

    Output uses sorted keys and a fixed indent, so equal data always gives
    byte-identical text.
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def serialize(self, data: Dict[str, Any]) -> str:
        """
        Serialize data to JSON text

        Args:
            data (Dict): Data to serialize

        Returns:
            str: Serialized data
        """
        try:
            return json.dumps(data, indent=self.indent, sort_keys=True, ensure_ascii=False)
        except Exception as e:
            logger.error(f"Failed to serialize data: {str(e)}")
            raise

    def deserialize(self, data_string: str) -> Dict[str, Any]:
        try:
            return json.loads(data_string)
        except Exception as e:
            logger.error(f"Failed to deserialize data: {str(e)}")
            raise


class JSONSerializer(DataSerializer):
    """
    JSON documents for automata, normal forms and matrices
    """

    def matrix_document(self, matrix: SquareMatrix, render=regex_print) -> Dict[str, Any]:
        """Nested-array form {n, rows} of a matrix"""
        return {'n': matrix.n, 'rows': matrix.to_nested(render)}

    def normal_form_document(self, automaton=None, normal_form=None,
                             with_expressions: bool = True) -> Dict[str, Any]:
        """
        The document {n, S, F, U, X, V, W, N_expr, grammar}

        Args:
            automaton: SplitAutomaton, source of X when given
            normal_form: NormalForm, source of N and the grammar when given
            with_expressions (bool): include X and N_expr

        Returns:
            dict: merged document
        """
        document: Dict[str, Any] = {}
        if normal_form is not None:
            document.update(normal_form.to_dict(with_expressions))
        if automaton is not None:
            document.update(automaton.to_dict())
        return document

    def save_to_file(self, data: Dict[str, Any], filename: str) -> bool:
        """
        Save data wrapped with a timestamp and the format version

        Returns:
            bool: True if successful
        """
        try:
            full_data = {
                'data': data,
                'timestamp': time.time(),
                'format_version': FORMAT_VERSION
            }
            with open(filename, 'w', encoding='utf-8') as f:
                f.write(self.serialize(full_data))
            logger.info(f"Data saved successfully to {filename}")
            return True

        except Exception as e:
            logger.error(f"Failed to save data to file '{filename}': {str(e)}")
            return False

    def load_from_file(self, filename: str) -> Optional[Dict[str, Any]]:
        try:
            with open(filename, 'r', encoding='utf-8') as f:
                full_data = self.deserialize(f.read())
            logger.info(f"Data loaded successfully from {filename}")
            return full_data['data']

        except Exception as e:
            logger.error(f"Failed to load data from file '{filename}': {str(e)}")
            raise


# Main instance for system use
json_serializer = JSONSerializer()
