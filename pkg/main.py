#!/usr/bin/env python3
"""
Tensor Kleene algebra toolkit - demonstration entry point

Runs the headline examples: bracket normal forms, the bounded image of
a^n b^n, bounded equality, stack recognition, the grammar bridge and the
bra-ket stack model.
"""

import sys
import os
import logging
from datetime import datetime
from typing import Dict, Any, Callable

# Add the src directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.FileHandler('toolkit.log'),
        logging.StreamHandler()
    ]
)

logger = logging.getLogger(__name__)

ANBN = "p0 (a p1)* (q1 b)* q0"


class TensorKleeneToolkit:
    """
    Coordinates the toolkit components for the demonstration
    """

    def __init__(self):
        """Initialize the toolkit components"""
        self.status = "INITIALIZING"
        self.start_time = datetime.now()

        logger.info("Initializing tensor Kleene algebra toolkit")

        try:
            from src.monitoring.logger import PerformanceLogger
            from src.serialization.json_serializer import JSONSerializer
            from src.utils.config import ToolkitConfig

            self.config = ToolkitConfig.from_env()
            self.performance_logger = PerformanceLogger()
            self.serializer = JSONSerializer()
            self.status = "RUNNING"
            logger.info("Toolkit initialized successfully")

        except Exception as e:
            logger.error(f"Failed to initialize toolkit: {str(e)}")
            self.status = "FAILED"

    def run_operation(self, name: str, operation: Callable[[], Any]) -> Dict[str, Any]:
        """
        Run one operation and record its timing

        Args:
            name (str): operation name for the timing history
            operation (Callable): zero-argument callable

        Returns:
            dict: Result with success status and data
        """
        started = datetime.now()
        try:
            result = operation()
            duration = (datetime.now() - started).total_seconds()
            self.performance_logger.log_operation(name, duration, "success")
            return {'success': True, 'result': result, 'duration': duration}

        except Exception as e:
            duration = (datetime.now() - started).total_seconds()
            logger.error(f"Operation {name} failed: {str(e)}")
            self.performance_logger.log_operation(name, duration, "error", error=str(e))
            return {'success': False, 'error': str(e)}

    def get_metrics(self) -> Dict[str, Any]:
        """Timing summary of the operations run so far"""
        return {
            'status': self.status,
            'uptime_seconds': (datetime.now() - self.start_time).total_seconds(),
            'metrics': self.performance_logger.get_metrics()
        }


def main():
    """Main entry point of the demonstration"""
    from src.braket.omega_model import omega_model_eval
    from src.grammar.bridge import cfg_to_expr
    from src.grammar.cfg import parse_grammar
    from src.kleene.parser import regex_parse, regex_print
    from src.rewriting.normal_form import nf_reduce
    from src.rewriting.tokens import parse_word
    from src.tensor.enumeration import enumerate_nf_image
    from src.tensor.equality import equal_bounded
    from src.tensor.recognizer import stack_recognize

    print("=" * 60)
    print("Tensor Kleene Algebra Toolkit")
    print("=" * 60)

    toolkit = TensorKleeneToolkit()
    if toolkit.status == "FAILED":
        print("Failed to initialize the toolkit!")
        return

    anbn = regex_parse(ANBN)
    examples = [
        ("nf p1 a q1", lambda: str(nf_reduce(parse_word("p1 a q1")))),
        ("nf p0 q1", lambda: str(nf_reduce(parse_word("p0 q1")))),
        (f"enum {ANBN} (bound 14)", lambda: enumerate_nf_image(anbn, 14).lines()),
        ("eq (p1 q1)* = 1", lambda: equal_bounded(regex_parse("(p1 q1)*"), regex_parse("1"), 8)['verdict']),
        ("eq p1 = q1", lambda: equal_bounded(regex_parse("p1"), regex_parse("q1"), 2)['witness']),
        ("member aabb", lambda: stack_recognize(anbn, "aabb")),
        ("member abab", lambda: stack_recognize(anbn, "abab")),
        ("cfg2expr S -> a S b | ;", lambda: regex_print(cfg_to_expr(parse_grammar("S -> a S b | ;")))),
        ("braket p0 (T=7)", lambda: str(omega_model_eval(regex_parse("p0"), 2, 7))),
    ]

    try:
        print("\nHeadline examples:")
        print("-" * 40)
        for name, operation in examples:
            outcome = toolkit.run_operation(name.split()[0], operation)
            if outcome['success']:
                print(f"{name}: {outcome['result']}")
            else:
                print(f"{name}: ERROR - {outcome['error']}")

        print("\nTimings:")
        print("-" * 40)
        metrics = toolkit.get_metrics()
        print(f"Operations: {metrics['metrics']['system_stats']['total_operations']}")
        print(f"Average duration: {metrics['metrics']['average_operation_duration']:.4f} seconds")

    except KeyboardInterrupt:
        print("\nInterrupted")


if __name__ == "__main__":
    main()
