#include <pybind11/pybind11.h>

PYBIND11_MODULE(_homquot, m) { m.doc() = "exact Hom-Lie quotient toolkit"; }
