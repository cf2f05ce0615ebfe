"""Конфигурация, базовые типы и доменные ошибки."""
