"""
Test runner script.
Run with: uv run scripts/test.py [--slow | --all] [--no-cov] [--skip-install] [pytest args]

The fast suite runs by default. Dataset-scale acceptance checks carry the
`slow` marker and need scikit-learn from the dev extra.
"""
import argparse
import subprocess
import sys


def build_command(args: argparse.Namespace, pytest_args: list[str]) -> list[str]:
    cmd = ["pytest"]
    if args.all:
        # an empty marker expression overrides the addopts deselection
        cmd.extend(["-m", ""])
    elif args.slow:
        cmd.extend(["-m", "slow"])
    if not args.no_cov:
        cmd.extend(["--cov=src/djinn", "--cov-report=term-missing"])
    cmd.extend(pytest_args)
    return cmd


def main():
    """Run tests with UV"""
    parser = argparse.ArgumentParser(description="Run the djinn test suite")
    markers = parser.add_mutually_exclusive_group()
    markers.add_argument("--slow", action="store_true", help="only the acceptance runs")
    markers.add_argument("--all", action="store_true", help="fast and slow tests")
    parser.add_argument("--no-cov", action="store_true", help="skip coverage")
    parser.add_argument("--skip-install", action="store_true", help="do not reinstall the dev extra")
    args, pytest_args = parser.parse_known_args()

    if not args.skip_install:
        subprocess.run(["uv", "pip", "install", "-e", ".[dev]"], check=True)

    sys.exit(subprocess.run(build_command(args, pytest_args)).returncode)


if __name__ == "__main__":
    main()
