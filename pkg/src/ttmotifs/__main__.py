"""Allow `python -m ttmotifs`."""

from .cli import run

if __name__ == "__main__":
    run()
