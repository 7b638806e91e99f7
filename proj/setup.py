"""Builds the pybind11 extension; everything else lives in pyproject.toml."""

import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = sorted(glob.glob("src/ngonstar/*.cpp")) + ["bindings/py_module.cpp"]

ext = Pybind11Extension(
    "ngonstar._core",
    sources,
    include_dirs=["src", "vendor"],
    libraries=["quadmath"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
