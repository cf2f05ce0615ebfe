"""Внешние интерфейсы: командная строка и форматтеры вывода."""
