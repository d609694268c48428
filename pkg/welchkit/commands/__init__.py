from .bounds import bounds_command
from .analyze import analyze_command
from .optimize import optimize_command, gradient_check_command
from .circle_example import circle_example_command

__all__ = ['bounds_command', 'analyze_command', 'optimize_command', 'gradient_check_command',
           'circle_example_command']
