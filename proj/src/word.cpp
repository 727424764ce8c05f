#include "fpa/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace fpa {

BadLetter::BadLetter(std::size_t factor, std::string const& letter)
    : WordError("bad letter " + letter + " for factor " + std::to_string(factor)),
      factor_(factor) {}

Signature::Signature(std::vector<FactorSpec> factors, bool degenerate)
    : factors_(std::move(factors)), degenerate_(degenerate) {
  if (factors_.size() < 2 && !degenerate_)
    throw WordError("a free product needs at least two factors");
  compute_classes();
}

Signature::Signature(std::vector<FactorSpec> factors, std::vector<std::size_t> class_of,
                     std::vector<GroupMap> reference_isos, bool degenerate)
    : factors_(std::move(factors)),
      class_of_(std::move(class_of)),
      reference_isos_(std::move(reference_isos)),
      degenerate_(degenerate) {
  if (factors_.size() < 2 && !degenerate_)
    throw WordError("a free product needs at least two factors");
  if (class_of_.size() != factors_.size() || reference_isos_.size() != factors_.size())
    throw WordError("signature: class data does not match factor count");
  // Renumber classes densely in order of first appearance.
  std::vector<std::size_t> seen;
  for (auto& c : class_of_) {
    auto it = std::find(seen.begin(), seen.end(), c);
    if (it == seen.end()) {
      seen.push_back(c);
      c = seen.size() - 1;
    } else {
      c = std::size_t(it - seen.begin());
    }
  }
  class_count_ = seen.size();
  has_iso_.assign(factors_.size(), false);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].is_infinite_cyclic()) continue;
    auto const& iso = reference_isos_[i];
    if (iso.target() != factors_[i].group || !iso.is_bijective() || !iso.is_homomorphism())
      throw WordError("signature: invalid reference isomorphism for factor " +
                      std::to_string(i));
    has_iso_[i] = true;
  }
}

void Signature::compute_classes() {
  std::size_t const n = factors_.size();
  class_of_.assign(n, 0);
  has_iso_.assign(n, false);
  reference_isos_.clear();
  std::vector<std::size_t> reps;  // factor index of each class representative
  std::optional<std::size_t> z_class;
  auto const trivial = groups::cyclic(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (factors_[i].is_infinite_cyclic()) {
      if (!z_class) {
        z_class = reps.size();
        reps.push_back(i);
      }
      class_of_[i] = *z_class;
      reference_isos_.push_back(GroupMap::identity(trivial));
      continue;
    }
    auto const& g = factors_[i].group;
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      if (factors_[reps[c]].is_infinite_cyclic()) continue;
      auto const& rep = factors_[reps[c]].group;
      if (rep == g || rep->table() == g->table()) {
        std::vector<Element> same(g->order());
        for (Element x = 0; x < g->order(); ++x) same[x] = x;
        class_of_[i] = c;
        reference_isos_.emplace_back(rep, g, std::move(same));
        placed = true;
      } else if (auto iso = find_isomorphism(rep, g)) {
        class_of_[i] = c;
        reference_isos_.push_back(*iso);
        placed = true;
      }
    }
    if (!placed) {
      class_of_[i] = reps.size();
      reps.push_back(i);
      reference_isos_.push_back(GroupMap::identity(g));
    }
    has_iso_[i] = true;
  }
  class_count_ = reps.size();
}

GroupPtr const& Signature::group(std::size_t i) const {
  auto const& f = factor(i);
  if (f.is_infinite_cyclic())
    throw WordError("factor " + std::to_string(i) + " is infinite cyclic");
  return f.group;
}

bool Signature::all_finite() const noexcept { return free_rank() == 0; }

std::size_t Signature::free_rank() const noexcept {
  return std::size_t(std::count_if(factors_.begin(), factors_.end(),
                                   [](FactorSpec const& f) { return f.is_infinite_cyclic(); }));
}

std::string Signature::describe() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "*";
    out += factors_[i].name();
  }
  return out;
}

std::vector<std::size_t> Signature::class_members(std::size_t cls) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (class_of_[i] == cls) out.push_back(i);
  return out;
}

GroupMap const& Signature::reference_iso(std::size_t i) const {
  if (i >= size() || !has_iso_[i])
    throw WordError("factor " + std::to_string(i) + " has no reference isomorphism");
  return reference_isos_[i];
}

Element Signature::transport(std::size_t i, std::size_t j, Element x) const {
  if (i == j) return x;
  if (!same_class(i, j))
    throw WordError("transport between non-isomorphic factors " + std::to_string(i) +
                    " and " + std::to_string(j));
  auto const& from = reference_iso(i);
  auto const& to = reference_iso(j);
  // Find the representative preimage of x, then push it to G_j.
  auto const& imgs = from.images();
  auto it = std::find(imgs.begin(), imgs.end(), x);
  return to(Element(it - imgs.begin()));
}

void Signature::check_syllable(Syllable const& s) const {
  if (s.factor >= size()) throw BadLetter(s.factor, format(s));
  if (is_finite(s.factor)) {
    if (s.exponent != 0 || !group(s.factor)->contains(s.element))
      throw BadLetter(s.factor, format(s));
  } else if (s.element != 0) {
    throw BadLetter(s.factor, format(s));
  }
}

void Signature::check(Word const& w) const {
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto const& s = w.syllables[k];
    check_syllable(s);
    if (is_finite(s.factor) ? s.element == 0 : s.exponent == 0)
      throw WordError("word contains an identity letter at position " + std::to_string(k));
    if (k > 0 && w.syllables[k - 1].factor == s.factor)
      throw WordError("adjacent syllables share factor at position " + std::to_string(k));
  }
}

bool Signature::is_valid(Word const& w) const noexcept {
  try {
    check(w);
    return true;
  } catch (WordError const&) {
    return false;
  }
}

Word Signature::normalize(std::vector<Syllable> raw) const {
  Word out;
  auto& stack = out.syllables;
  stack.reserve(raw.size());
  for (auto& s : raw) {
    check_syllable(s);
    bool const finite = is_finite(s.factor);
    if (finite ? s.element == 0 : s.exponent == 0) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      auto& top = stack.back();
      bool vanished;
      if (finite) {
        top.element = group(s.factor)->mul(top.element, s.element);
        vanished = top.element == 0;
      } else {
        top.exponent += s.exponent;
        vanished = top.exponent == 0;
      }
      if (vanished) stack.pop_back();
    } else {
      stack.push_back(std::move(s));
    }
  }
  return out;
}

Word Signature::letter(std::size_t factor, Element e) const {
  return normalize({Syllable::finite(factor, e)});
}

Word Signature::generator_power(std::size_t factor, BigInt const& n) const {
  return normalize({Syllable::power(factor, n)});
}

Word Signature::multiply(Word const& u, Word const& v) const {
  std::vector<Syllable> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.syllables.begin(), u.syllables.end());
  raw.insert(raw.end(), v.syllables.begin(), v.syllables.end());
  return normalize(std::move(raw));
}

Syllable Signature::invert(Syllable const& s) const {
  if (is_finite(s.factor)) return Syllable::finite(s.factor, group(s.factor)->inverse(s.element));
  return Syllable::power(s.factor, -s.exponent);
}

Word Signature::invert(Word const& u) const {
  Word out;
  out.syllables.reserve(u.size());
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it)
    out.syllables.push_back(invert(*it));
  return out;
}

Word Signature::conjugate(Word const& u, Word const& g) const {
  return multiply(multiply(invert(g), u), g);
}

Word Signature::power(Word const& u, BigInt n) const {
  Word base = u;
  if (n < 0) {
    base = invert(u);
    n = -n;
  }
  Word result;
  while (n > 0) {
    if ((n & 1) != 0) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

CyclicReduction Signature::cyclically_reduce(Word const& u) const {
  // Repeatedly conjugate by the last syllable, which merges it into the
  // first. Invariant: u = conjugator^-1 * core * conjugator.
  Word core = u;
  Word conjugator;
  while (core.size() >= 2 && core.syllables.front().factor == core.syllables.back().factor) {
    Word last{{core.syllables.back()}};
    std::vector<Syllable> raw;
    raw.reserve(core.size());
    raw.push_back(core.syllables.back());
    raw.insert(raw.end(), core.syllables.begin(), core.syllables.end() - 1);
    core = normalize(std::move(raw));
    conjugator = multiply(last, conjugator);
  }
  return {CyclicWord{std::move(core)}, std::move(conjugator)};
}

bool Signature::is_cyclically_reduced(Word const& u) const {
  return u.size() <= 1 || u.syllables.front().factor != u.syllables.back().factor;
}

bool Signature::cyclically_conjugate(CyclicWord const& a, CyclicWord const& b) const {
  auto const& x = a.word.syllables;
  auto const& y = b.word.syllables;
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  if (x.size() == 1) {
    if (x[0].factor != y[0].factor) return false;
    if (!is_finite(x[0].factor)) return x[0].exponent == y[0].exponent;
    auto const& g = *group(x[0].factor);
    for (Element z = 0; z < g.order(); ++z)
      if (g.conjugate(x[0].element, z) == y[0].element) return true;
    return false;
  }
  for (std::size_t shift = 0; shift < x.size(); ++shift)
    if (std::equal(x.begin(), x.end() - std::ptrdiff_t(shift), y.begin() + std::ptrdiff_t(shift)) &&
        std::equal(x.end() - std::ptrdiff_t(shift), x.end(), y.begin()))
      return true;
  return false;
}

namespace {

template <typename T>
bool parse_unsigned(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_signed_big(std::string_view s, BigInt& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) return false;
  BigInt v = 0;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') return false;
    v = v * 10 + (s[pos] - '0');
  }
  out = negative ? BigInt(-v) : v;
  return true;
}

}  // namespace

Word Signature::parse(std::string_view text) const {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    if (t.size() >= 2 && t[0] == 'f') {
      auto dot = t.find('.');
      std::size_t factor = 0;
      Element e = 0;
      if (dot == std::string_view::npos || !parse_unsigned(t.substr(1, dot - 1), factor) ||
          !parse_unsigned(t.substr(dot + 1), e))
        throw ParseError("malformed finite syllable: " + tok);
      if (factor >= size() || !is_finite(factor) || !group(factor)->contains(e))
        throw BadLetter(factor, tok);
      raw.push_back(Syllable::finite(factor, e));
    } else if (t.size() >= 2 && t[0] == 'x') {
      auto caret = t.find('^');
      std::size_t factor = 0;
      BigInt n;
      if (caret == std::string_view::npos || !parse_unsigned(t.substr(1, caret - 1), factor) ||
          !parse_signed_big(t.substr(caret + 1), n))
        throw ParseError("malformed cyclic syllable: " + tok);
      if (n == 0) throw ParseError("zero exponent in syllable: " + tok);
      if (factor >= size() || is_finite(factor)) throw BadLetter(factor, tok);
      raw.push_back(Syllable::power(factor, n));
    } else {
      throw ParseError("unrecognised token: " + tok);
    }
  }
  return normalize(std::move(raw));
}

std::string Signature::format(Syllable const& s) const {
  if (s.factor < size() && !is_finite(s.factor))
    return "x" + std::to_string(s.factor) + "^" + s.exponent.str();
  return "f" + std::to_string(s.factor) + "." + std::to_string(s.element);
}

std::string Signature::format(Word const& w) const {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += format(w.syllables[k]);
  }
  return out;
}

SignaturePtr make_signature(std::vector<FactorSpec> factors, bool degenerate) {
  return std::make_shared<const Signature>(std::move(factors), degenerate);
}

SignaturePtr parse_signature(std::string_view text) {
  std::vector<FactorSpec> factors;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    if (current == "Z")
      factors.push_back(FactorSpec::infinite_cyclic());
    else
      factors.push_back(FactorSpec::finite(groups::resolve(current)));
    current.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '*' || c == ' ')
      flush();
    else
      current += c;
  }
  flush();
  return make_signature(std::move(factors));
}

}  // namespace fpa
