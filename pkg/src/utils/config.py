"""
config.py - Runtime configuration for the tensor Kleene algebra toolkit
"""

import os
import logging
from dataclasses import dataclass, asdict, replace
from typing import Dict, Any, Optional

# Configure logging
logger = logging.getLogger(__name__)

ENV_PREFIX = "TKA_"


@dataclass(frozen=True)
class ToolkitConfig:
    """
    Tunables shared by enumeration, recognition and the CLI

    Attributes:
        m: default bracket count
        bound: default source-length bound L_src
        trunc: default truncation T of the bra-ket model
        word_cap: maximum number of normal forms held per enumeration node
        stack_factor: the constant c of the recognizer's stack bound
        node_cap: recognizer search budget
        member_depth: bracket depth for witness confirmation (None derives it)
        seed: seed of randomized suites
        grammar_style: "closure" or "dyck" grammar for centralizer matrices
    """
    m: int = 2
    bound: int = 10
    trunc: int = 24
    word_cap: int = 200000
    stack_factor: int = 4
    node_cap: int = 1000000
    member_depth: Optional[int] = None
    seed: int = 20240607
    grammar_style: str = "closure"

    def with_overrides(self, **kwargs) -> 'ToolkitConfig':
        """Copy with the non-None keyword values replaced"""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def confirmation_depth(self, witness_length: int) -> int:
        """Bracket depth used when confirming a candidate witness of the given length"""
        if self.member_depth is not None:
            return self.member_depth
        return self.stack_factor * (witness_length + 1) + 2

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> 'ToolkitConfig':
        """
        Build a configuration from a dictionary, ignoring unknown keys

        Args:
            data (Dict): configuration values

        Returns:
            ToolkitConfig: validated configuration
        """
        from src.utils.helpers import UtilityHelper

        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        config = cls(**known)
        UtilityHelper.validate_config(config.to_dict())
        return config

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> 'ToolkitConfig':
        """
        Build a configuration from TKA_* environment variables

        Args:
            environ (Optional[Dict]): environment mapping, os.environ by default

        Returns:
            ToolkitConfig: configuration with environment overrides applied
        """
        environ = os.environ if environ is None else environ
        values: Dict[str, Any] = {}
        for name, field in cls.__dataclass_fields__.items():
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            if name == 'grammar_style':
                values[name] = raw
            else:
                values[name] = int(raw)
        if values:
            logger.info(f"Configuration overrides from environment: {values}")
        return cls.from_mapping(values)


# Main configuration instance for system use
default_config = ToolkitConfig()
