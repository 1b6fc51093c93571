"""CLI command modules."""
from . import dataset, experiment, summary

__all__ = ['dataset', 'experiment', 'summary']
