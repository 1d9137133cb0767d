/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_FIXTURES_HPP_
#define CSCC_FIXTURES_HPP_

#include "cscc/complex.hpp"

namespace cscc {

/// The 15-qubit tetrahedral code as a colored complex: four real sites and
/// four boundary facets, one per color; qubits are the 15 properly colored
/// tetrahedra on them. Four weight-8 cells and eighteen weight-4 faces.
ColoredComplex tetrahedral15_complex();

}  // namespace cscc

#endif  // CSCC_FIXTURES_HPP_
