#include "fpa/random_words.hpp"

namespace fpa {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Syllable random_letter(Signature const& sig, std::size_t factor, Rng& rng, int max_exponent) {
  if (sig.is_finite(factor)) {
    auto const order = sig.group(factor)->order();
    return Syllable::finite(factor, Element(1 + uniform_index(rng, order - 1)));
  }
  int n = std::uniform_int_distribution<int>(1, max_exponent)(rng);
  if (rng() & 1) n = -n;
  return Syllable::power(factor, n);
}

Word random_word(Signature const& sig, std::size_t length, Rng& rng, int max_exponent) {
  Word w;
  std::size_t previous = sig.size();
  while (w.size() < length) {
    std::size_t f = uniform_index(rng, sig.size());
    if (f == previous) continue;
    if (sig.is_finite(f) && sig.group(f)->order() < 2) continue;
    w.syllables.push_back(random_letter(sig, f, rng, max_exponent));
    previous = f;
  }
  return w;
}

Word random_word_up_to(Signature const& sig, std::size_t max_length, Rng& rng,
                       int max_exponent) {
  return random_word(sig, uniform_index(rng, max_length + 1), rng, max_exponent);
}

std::vector<Syllable> random_raw(Signature const& sig, std::size_t length, Rng& rng,
                                 int max_exponent) {
  std::vector<Syllable> raw;
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t f = uniform_index(rng, sig.size());
    if (sig.is_finite(f)) {
      raw.push_back(Syllable::finite(f, Element(uniform_index(rng, sig.group(f)->order()))));
    } else {
      int n = std::uniform_int_distribution<int>(-max_exponent, max_exponent)(rng);
      raw.push_back(Syllable::power(f, n));
    }
  }
  return raw;
}

}  // namespace fpa
