#pragma once

// Seeded generators for words and automorphisms used by the suites.

#include <cstddef>
#include <random>
#include <vector>

#include "fpa/word.hpp"

namespace fpa {

using Rng = std::mt19937_64;

/// A non-identity letter of `factor`; infinite cyclic exponents are drawn
/// from [-max_exponent, max_exponent] \ {0}.
Syllable random_letter(Signature const& sig, std::size_t factor, Rng& rng,
                       int max_exponent = 3);

/// A reduced word with exactly `length` syllables.
Word random_word(Signature const& sig, std::size_t length, Rng& rng, int max_exponent = 3);

/// A reduced word whose length is uniform in [0, max_length].
Word random_word_up_to(Signature const& sig, std::size_t max_length, Rng& rng,
                       int max_exponent = 3);

/// Unreduced syllables: repeated factors and identity letters allowed.
std::vector<Syllable> random_raw(Signature const& sig, std::size_t length, Rng& rng,
                                 int max_exponent = 3);

std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace fpa
