"""Setup module for wafix."""

import pathlib

from setuptools import find_packages, setup

setup(
    name="wafix",
    version="2023.06.01",
    description="Classify the errors fixed between WA and AC submissions",
    long_description=(pathlib.Path(__file__).parent / "README.md").read_text(),
    long_description_content_type="text/markdown",
    license="GPL-3.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.11",
    install_requires=[
        "attrs",
        "colorlog",
        "Levenshtein",
        "pydantic>=2",
        "regex",
    ],
    package_data={"wafix.rules": ["*.rules"]},
    entry_points={"console_scripts": ["wafix = wafix.__main__:main"]},
)
