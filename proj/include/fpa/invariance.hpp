#pragma once

// Every atomic generator of Aut(H*K) and Aut(H*Z) preserves translation
// length on the Bass-Serre tree of the standard splitting.

#include <cstddef>
#include <cstdint>

#include "fpa/group.hpp"
#include "fpa/report.hpp"
#include "fpa/word.hpp"

namespace fpa {

struct InvarianceOptions {
  std::size_t trials = 100;       // random words per generator
  std::size_t max_length = 10;    // syllable length of the random words
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// H*K on a single edge: ||a(w)|| = ||w|| for every generator a.
SuiteReport invariance_suite_two_factors(GroupPtr const& h, GroupPtr const& k,
                                         InvarianceOptions const& opt = {});

/// Sum of |n_i| over the Z syllables of the cyclic reduction of w.
BigInt cyclic_exponent_sum(Signature const& sig, Word const& w);

/// H*Z on a loop: the exponent sum is preserved and agrees with ||w||.
SuiteReport invariance_suite_h_z(GroupPtr const& h, InvarianceOptions const& opt = {});

}  // namespace fpa
