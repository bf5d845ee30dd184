from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "twoarm._core",
    sources=[
        "bindings/module.cpp",
        "src/specfun.cpp",
        "src/distributions.cpp",
        "src/descriptives.cpp",
        "src/hypothesis.cpp",
        "src/effect_sizes.cpp",
        "src/dataset.cpp",
        "src/simulation.cpp",
        "src/analysis.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
