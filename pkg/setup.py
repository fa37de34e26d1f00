from setuptools import setup, find_packages
import os, re

with open("README.md", "r") as fh:
    long_description = fh.read()


def get_version() -> str:
    """Get __version__ from version.py file."""
    version_file = os.path.join(os.path.dirname(__file__), "epscs", "version.py")
    version_file_data = open(version_file, "rt", encoding="utf-8").read()
    version_regex = r"(?<=^__version__ = ['\"])[^'\"]+(?=['\"]$)"
    try:
        version = re.findall(version_regex, version_file_data, re.M)[0]
        return version
    except IndexError:
        raise ValueError(f"Unable to find version string in {version_file}.")


setup(
    name="epscs",
    version=get_version(),
    packages=find_packages(exclude=["tests", "demo"]),
    description="Epsilon coherent states with polyanalytic coefficients, with a verification CLI",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="coherent-states polyanalytic laguerre hermite mehler bargmann quadrature",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pandas>=1.5.0",
        "click>=8.0.0",
        "typing-extensions>=4.0.0",
    ],
    extras_require={
        "dev": ["pytest>=7.0.0", "black>=23.0.0"],
    },
    entry_points={
        "console_scripts": ["epscs=epscs.cli:main"],
    },
    python_requires=">=3.8",
)
