"""protoreel: interaction scenario capture, replay and video export
for digitalized mockups."""

__version__ = "0.1.0"
