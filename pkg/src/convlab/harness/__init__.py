"""Fixtures, file formats, random generation, the duality checker and the property suite."""
