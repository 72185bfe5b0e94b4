"""
Smoke tests package.

Fast-executing tests that validate critical system components can initialize
and execute minimal workflows without crashing.
"""

