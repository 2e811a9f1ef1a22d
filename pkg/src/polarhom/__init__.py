"""polarhom: exact polar chain complexes on curves, surfaces and three-folds."""
__version__ = "0.1.0"
