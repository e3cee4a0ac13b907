"""Allow `python -m hooklie` to behave exactly like the console script."""

from .cli import entrypoint

entrypoint()
