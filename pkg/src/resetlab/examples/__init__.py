"""Lauffähige Beispielszenarien."""
