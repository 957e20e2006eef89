"""Stallings Lab - subgroups of free groups and the Hanna Neumann family of inequalities.

This package contains Stallings graph folding, pullbacks, random subgroup
samplers and the experiment harness for hunting counterexamples.

Version: 0.1.0
"""

__version__ = "0.1.0"
