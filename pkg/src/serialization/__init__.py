"""
Serialization package initialization: deterministic JSON documents
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .json_serializer import JSONSerializer, DataSerializer, json_serializer

__all__ = [
    'JSONSerializer',
    'DataSerializer',
    'json_serializer'
]
