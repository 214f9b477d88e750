#include <pybind11/pybind11.h>
PYBIND11_MODULE(pomkit, m) { m.doc() = "stub"; }
