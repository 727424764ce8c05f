#pragma once

// The presentation of Out(A*B*C) for three copies of one finite group,
// checked relation by relation as automorphism identities modulo Inn(G).
//
// Generators: (A,b), (B,c), (C,a); factor automorphisms; s123 sending
// A -> B -> C -> A; s12 swapping A and B. Here a, b, c name the same
// element of the common group read in A, B and C.

#include <cstddef>
#include <string>

#include "fpa/automorphism.hpp"
#include "fpa/report.hpp"

namespace fpa {

class UndecidedInner : public AutomorphismError {
 public:
  using AutomorphismError::AutomorphismError;
};

struct OutSuiteResult {
  SuiteReport report;
  std::size_t exact = 0;           // relation instances equal on the nose
  std::size_t modulo_inner = 0;    // equal only up to an inner automorphism
  std::size_t undecided = 0;       // witness longer than the bound
  std::size_t max_witness = 0;     // longest witness among appendix instances
};

/// Checks the nine relation families, the two families of relations
/// eliminated in the passage from Aut to Out, and the s12 rewrites
/// elementwise. `bound` caps inner-witness length.
OutSuiteResult out_presentation_suite(GroupPtr const& a, std::size_t bound = 6);

}  // namespace fpa
