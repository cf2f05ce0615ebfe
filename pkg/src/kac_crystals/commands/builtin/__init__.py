"""Встроенные подкоманды CLI."""
