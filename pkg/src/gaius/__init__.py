"""GAIUS: hyperlocal edge web ecosystem built around the flat MAML page format."""

__version__ = "0.1.0"
