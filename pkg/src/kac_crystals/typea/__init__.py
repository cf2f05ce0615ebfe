"""Комбинаторика типа A: разбиения, вычеты, параболические метки."""
