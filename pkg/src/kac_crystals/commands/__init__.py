"""Подкоманды CLI и их реестр."""
