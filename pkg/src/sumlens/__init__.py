"""sumlens: feature-metric workbench for summarization prompt refinement."""

__version__ = "0.1.0"
