"""Colored-graph topology: bubbles, jackets, Heegaard splittings and trisection diagrams."""
