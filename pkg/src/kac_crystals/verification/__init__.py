"""Набор проверок инвариантов."""
