import sys

from artinhelly.cli.main import run


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
