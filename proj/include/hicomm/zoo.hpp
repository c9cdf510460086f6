// Built-in algebras used throughout the tests and the CLI.
#pragma once

#include <string>
#include <vector>

#include "hicomm/algebra.hpp"

namespace hicomm {

// Names: cyclic(n) n<=8, klein4, dihedral4 (order 8), quaternion8, sym3,
// ring_z(n) n<=6, affine_z(n) n<=8, semilattice3 (non-Mal'cev control).
FiniteAlgebra zoo(const std::string& name);

std::vector<std::string> zoo_names();

// The Mal'cev zoo used by the property suites.
std::vector<std::string> zoo_malcev_names();

}  // namespace hicomm
