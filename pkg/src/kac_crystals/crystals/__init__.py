"""Кристаллы: модель путей, тензорные произведения, характеры, аксиомы."""
