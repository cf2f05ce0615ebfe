"""Данные Картана и веса."""
