"""
Setup file for Stallings Lab.
"""

from setuptools import setup, find_packages

setup(
    name="stallings_lab",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    install_requires=[
        "numpy>=1.26",
        "networkx>=3.2",
        "PyYAML>=6.0.1",
        "rich>=13.7.0",
    ],
    extras_require={
        "test": [
            "pytest>=8.3.4",
            "pytest-timeout>=2.3.1",
            "pytest-benchmark>=5.1.0",
            "pytest-cov>=6.0.0",
            "pytest-xdist>=3.6.1",
            "scipy>=1.11",
        ],
    },
    entry_points={
        "console_scripts": [
            "stallings-lab=stallings_lab.cli:main",
        ],
    },
    python_requires=">=3.10",
    description="Stallings graphs, subgroup intersections and Hanna Neumann type inequalities in free groups",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
