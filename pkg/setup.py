"""
Setup script for djinn-networks.
This provides compatibility with older tooling while still using
pyproject.toml as the primary build configuration.
"""
from setuptools import find_packages, setup

# This setup.py is kept minimal and exists primarily for compatibility
setup(
    name="djinn-networks",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src", include=["djinn", "djinn.*"]),
    entry_points={"console_scripts": ["djinn = djinn.cli.main:main"]},
)
