#include <pybind11/pybind11.h>
PYBIND11_MODULE(_hopfg, m) { m.doc() = "placeholder"; }
