#include "fpa/automorphism.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace fpa {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_trivial_letter(Signature const& sig, Syllable const& s) {
  return sig.is_finite(s.factor) ? s.element == 0 : s.exponent == 0;
}

}  // namespace

void check_atom(Signature const& sig, AtomicAut const& a) {
  std::visit(
      overloaded{
          [&](FactorAut const& f) {
            if (f.factor >= sig.size()) throw AutomorphismError("factor aut: bad factor index");
            if (sig.is_finite(f.factor)) {
              if (!f.map || f.map->source() != sig.group(f.factor) ||
                  f.map->target() != sig.group(f.factor) || !f.map->is_bijective() ||
                  !f.map->is_homomorphism())
                throw AutomorphismError("factor aut: not an automorphism of factor " +
                                        std::to_string(f.factor));
            } else if (f.sign != 1 && f.sign != -1) {
              throw AutomorphismError("factor aut on Z must be +-1");
            }
          },
          [&](PermAut const& p) {
            if (p.perm.size() != sig.size()) throw AutomorphismError("perm aut: wrong length");
            std::vector<bool> hit(sig.size(), false);
            for (std::size_t i = 0; i < p.perm.size(); ++i) {
              std::size_t j = p.perm[i];
              if (j >= sig.size() || hit[j]) throw AutomorphismError("perm aut: not a permutation");
              hit[j] = true;
              if (!sig.same_class(i, j))
                throw AutomorphismError("perm aut: factors " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are not isomorphic");
            }
          },
          [&](PartialConj const& c) {
            if (c.target >= sig.size()) throw AutomorphismError("partial conjugation: bad target");
            sig.check_syllable(c.conjugator);
            if (c.conjugator.factor == c.target)
              throw AutomorphismError("partial conjugation: conjugator lies in the target factor");
            if (is_trivial_letter(sig, c.conjugator))
              throw AutomorphismError("partial conjugation: trivial conjugator");
          },
          [&](Transvection const& t) {
            if (t.factor >= sig.size() || sig.is_finite(t.factor))
              throw AutomorphismError("transvection: factor must be infinite cyclic");
            sig.check_syllable(t.multiplier);
            if (t.multiplier.factor == t.factor)
              throw AutomorphismError("transvection: multiplier lies in the same factor");
            if (is_trivial_letter(sig, t.multiplier))
              throw AutomorphismError("transvection: trivial multiplier");
          },
          [&](InnerFactor const& g) {
            if (g.factor >= sig.size() || !sig.is_finite(g.factor) ||
                !sig.group(g.factor)->contains(g.element))
              throw AutomorphismError("inner factor aut: bad factor or element");
          },
      },
      a);
}

AtomicAut invert_atom(Signature const& sig, AtomicAut const& a) {
  return std::visit(
      overloaded{
          [&](FactorAut const& f) -> AtomicAut {
            if (f.map) return FactorAut{f.factor, f.map->inverse(), 1};
            return f;
          },
          [&](PermAut const& p) -> AtomicAut {
            PermAut inv{std::vector<std::size_t>(p.perm.size())};
            for (std::size_t i = 0; i < p.perm.size(); ++i) inv.perm[p.perm[i]] = i;
            return inv;
          },
          [&](PartialConj const& c) -> AtomicAut {
            return PartialConj{c.target, sig.invert(c.conjugator)};
          },
          [&](Transvection const& t) -> AtomicAut {
            return Transvection{t.factor, sig.invert(t.multiplier)};
          },
          [&](InnerFactor const& g) -> AtomicAut {
            return InnerFactor{g.factor, sig.group(g.factor)->inverse(g.element)};
          },
      },
      a);
}

Automorphism::Automorphism(SignaturePtr sig) : sig_(std::move(sig)) {
  finite_images_.resize(sig_->size());
  generator_images_.resize(sig_->size());
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (sig_->is_finite(i)) {
      auto const order = sig_->group(i)->order();
      finite_images_[i].resize(order);
      for (Element e = 0; e < order; ++e) finite_images_[i][e] = sig_->letter(i, e);
    } else {
      generator_images_[i] = sig_->generator_power(i, 1);
    }
  }
}

Automorphism Automorphism::identity(SignaturePtr sig) { return Automorphism(std::move(sig)); }

Automorphism Automorphism::atom(SignaturePtr sig, AtomicAut a) {
  check_atom(*sig, a);
  Automorphism out(sig);
  auto const& s = *out.sig_;
  std::visit(
      overloaded{
          [&](FactorAut const& f) {
            if (s.is_finite(f.factor)) {
              for (Element e = 0; e < s.group(f.factor)->order(); ++e)
                out.finite_images_[f.factor][e] = s.letter(f.factor, (*f.map)(e));
            } else {
              out.generator_images_[f.factor] = s.generator_power(f.factor, f.sign);
            }
          },
          [&](PermAut const& p) {
            for (std::size_t i = 0; i < s.size(); ++i) {
              std::size_t j = p.perm[i];
              if (s.is_finite(i)) {
                for (Element e = 0; e < s.group(i)->order(); ++e)
                  out.finite_images_[i][e] = s.letter(j, s.transport(i, j, e));
              } else {
                out.generator_images_[i] = s.generator_power(j, 1);
              }
            }
          },
          [&](PartialConj const& c) {
            Word b{{c.conjugator}};
            if (s.is_finite(c.target)) {
              for (Element e = 1; e < s.group(c.target)->order(); ++e)
                out.finite_images_[c.target][e] = s.conjugate(s.letter(c.target, e), b);
            } else {
              out.generator_images_[c.target] = s.conjugate(s.generator_power(c.target, 1), b);
            }
          },
          [&](Transvection const& t) {
            out.generator_images_[t.factor] =
                s.multiply(Word{{t.multiplier}}, s.generator_power(t.factor, 1));
          },
          [&](InnerFactor const& g) {
            auto const& grp = *s.group(g.factor);
            for (Element e = 0; e < grp.order(); ++e)
              out.finite_images_[g.factor][e] = s.letter(g.factor, grp.conjugate(e, g.element));
          },
      },
      a);
  out.atoms_.push_back(std::move(a));
  return out;
}

Automorphism Automorphism::from_atoms(SignaturePtr sig, std::vector<AtomicAut> const& atoms) {
  Automorphism out = identity(sig);
  for (auto const& a : atoms) out = out.then(atom(sig, a));
  return out;
}

Automorphism Automorphism::from_images(SignaturePtr sig,
                                       std::vector<std::vector<Word>> finite_images,
                                       std::vector<Word> generator_images) {
  Automorphism out(sig);
  if (finite_images.size() != sig->size() || generator_images.size() != sig->size())
    throw AutomorphismError("from_images: image tables do not match the signature");
  for (std::size_t i = 0; i < sig->size(); ++i) {
    if (sig->is_finite(i)) {
      if (finite_images[i].size() != sig->group(i)->order())
        throw AutomorphismError("from_images: wrong number of images for factor " +
                                std::to_string(i));
      for (auto const& w : finite_images[i]) sig->check(w);
      out.finite_images_[i] = std::move(finite_images[i]);
    } else {
      sig->check(generator_images[i]);
      out.generator_images_[i] = std::move(generator_images[i]);
    }
  }
  if (!out.is_multiplicative())
    throw AutomorphismError("from_images: images are not multiplicative");
  out.atoms_.clear();
  out.has_atoms_ = false;
  return out;
}

Automorphism Automorphism::inner(SignaturePtr sig, Word const& g) {
  Automorphism out(sig);
  auto const& s = *out.sig_;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.is_finite(i)) {
      for (Element e = 1; e < s.group(i)->order(); ++e)
        out.finite_images_[i][e] = s.conjugate(s.letter(i, e), g);
    } else {
      out.generator_images_[i] = s.conjugate(s.generator_power(i, 1), g);
    }
  }
  for (auto const& letter : g.syllables) {
    if (s.is_finite(letter.factor)) out.atoms_.push_back(InnerFactor{letter.factor, letter.element});
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != letter.factor) out.atoms_.push_back(PartialConj{i, letter});
  }
  return out;
}

Word const& Automorphism::image(std::size_t factor, Element e) const {
  return finite_images_.at(factor).at(e);
}

Word const& Automorphism::generator_image(std::size_t factor) const {
  if (sig_->is_finite(factor)) throw AutomorphismError("generator_image: factor is finite");
  return generator_images_.at(factor);
}

Word Automorphism::image(Syllable const& s) const {
  if (sig_->is_finite(s.factor)) return image(s.factor, s.element);
  return sig_->power(generator_images_[s.factor], s.exponent);
}

Word Automorphism::apply(Word const& w) const {
  sig_->check(w);
  std::vector<Syllable> raw;
  for (auto const& s : w.syllables) {
    if (sig_->is_finite(s.factor)) {
      auto const& img = image(s.factor, s.element);
      raw.insert(raw.end(), img.syllables.begin(), img.syllables.end());
    } else {
      auto img = image(s);
      raw.insert(raw.end(), img.syllables.begin(), img.syllables.end());
    }
  }
  return sig_->normalize(std::move(raw));
}

Automorphism Automorphism::then(Automorphism const& next) const {
  if (sig_ != next.sig_) throw SignatureMismatch("compose: automorphisms of different groups");
  Automorphism out(sig_);
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (sig_->is_finite(i)) {
      for (Element e = 0; e < finite_images_[i].size(); ++e)
        out.finite_images_[i][e] = next.apply(finite_images_[i][e]);
    } else {
      out.generator_images_[i] = next.apply(generator_images_[i]);
    }
  }
  out.has_atoms_ = has_atoms_ && next.has_atoms_;
  if (out.has_atoms_) {
    out.atoms_ = atoms_;
    out.atoms_.insert(out.atoms_.end(), next.atoms_.begin(), next.atoms_.end());
  }
  return out;
}

Automorphism Automorphism::inverse() const {
  if (!has_atoms_) throw AutomorphismError("inverse: automorphism has no recorded atom word");
  Automorphism out = identity(sig_);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it)
    out = out.then(atom(sig_, invert_atom(*sig_, *it)));
  return out;
}

bool Automorphism::equals(Automorphism const& other) const {
  if (sig_ != other.sig_) throw SignatureMismatch("equal: automorphisms of different groups");
  return finite_images_ == other.finite_images_ && generator_images_ == other.generator_images_;
}

bool Automorphism::is_identity() const { return equals(identity(sig_)); }

bool Automorphism::is_multiplicative() const {
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (!sig_->is_finite(i)) continue;
    auto const& g = *sig_->group(i);
    if (!finite_images_[i][0].empty()) return false;
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        if (finite_images_[i][g.mul(x, y)] !=
            sig_->multiply(finite_images_[i][x], finite_images_[i][y]))
          return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, Word>> Automorphism::factor_image(std::size_t i) const {
  if (!sig_->is_finite(i) || sig_->group(i)->order() < 2) return std::nullopt;
  auto r = sig_->cyclically_reduce(image(i, 1));
  if (r.core.size() != 1) return std::nullopt;
  std::size_t const j = r.core.word.syllables[0].factor;
  if (!sig_->is_finite(j)) return std::nullopt;
  Word const hinv = sig_->invert(r.conjugator);
  for (Element e = 1; e < sig_->group(i)->order(); ++e) {
    Word c = sig_->conjugate(image(i, e), hinv);
    if (c.size() != 1 || c.syllables[0].factor != j) return std::nullopt;
  }
  return std::make_pair(j, r.conjugator);
}

std::string Automorphism::format() const {
  if (has_atoms_) {
    if (atoms_.empty()) return "id";
    std::string out;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (k) out += "; ";
      out += format_atom(*sig_, atoms_[k]);
    }
    return out;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (i) out += ", ";
    if (sig_->is_finite(i)) {
      out += "f" + std::to_string(i) + ":[";
      for (std::size_t e = 0; e < finite_images_[i].size(); ++e) {
        if (e) out += " | ";
        out += sig_->format(finite_images_[i][e]);
      }
      out += "]";
    } else {
      out += "x" + std::to_string(i) + " -> " + sig_->format(generator_images_[i]);
    }
  }
  return out + "}";
}

Automorphism commutator(Automorphism const& a, Automorphism const& b) {
  return a.inverse().then(b.inverse()).then(a).then(b);
}

Automorphism conjugate(Automorphism const& b, Automorphism const& a) {
  return a.inverse().then(b).then(a);
}

namespace {

std::string letter_arg(Signature const& sig, Syllable const& s) {
  if (sig.is_finite(s.factor)) return std::to_string(s.factor) + "." + std::to_string(s.element);
  return std::to_string(s.factor) + "^" + s.exponent.str();
}

}  // namespace

std::string format_atom(Signature const& sig, AtomicAut const& a) {
  return std::visit(
      overloaded{
          [&](FactorAut const& f) {
            std::string out = "fa(" + std::to_string(f.factor) + ",";
            if (f.map) {
              for (std::size_t e = 0; e < f.map->images().size(); ++e) {
                if (e) out += ",";
                out += std::to_string(f.map->images()[e]);
              }
            } else {
              out += std::to_string(f.sign);
            }
            return out + ")";
          },
          [&](PermAut const& p) {
            std::string out = "perm(";
            std::vector<bool> seen(p.perm.size(), false);
            for (std::size_t i = 0; i < p.perm.size(); ++i) {
              if (seen[i] || p.perm[i] == i) continue;
              out += "(";
              std::size_t j = i;
              bool first = true;
              while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j);
                first = false;
                j = p.perm[j];
              }
              out += ")";
            }
            return out + ")";
          },
          [&](PartialConj const& c) {
            return "pc(" + std::to_string(c.target) + "," + letter_arg(sig, c.conjugator) + ")";
          },
          [&](Transvection const& t) {
            return "tv(" + std::to_string(t.factor) + "," + letter_arg(sig, t.multiplier) + ")";
          },
          [&](InnerFactor const& g) {
            return "inn(" + std::to_string(g.factor) + "," + std::to_string(g.element) + ")";
          },
      },
      a);
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

long long to_int(std::string const& s, std::string const& context) {
  long long v = 0;
  auto t = trim(s);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ParseError("bad integer '" + s + "' in " + context);
  return v;
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Syllable parse_letter(Signature const& sig, std::string const& text, std::string const& ctx) {
  auto t = trim(text);
  auto dot = t.find('.');
  auto caret = t.find('^');
  Syllable s;
  if (dot != std::string::npos) {
    s = Syllable::finite(std::size_t(to_int(t.substr(0, dot), ctx)),
                         Element(to_int(t.substr(dot + 1), ctx)));
  } else if (caret != std::string::npos) {
    s = Syllable::power(std::size_t(to_int(t.substr(0, caret), ctx)),
                        BigInt(to_int(t.substr(caret + 1), ctx)));
  } else {
    throw ParseError("expected j.e or j^n in " + ctx);
  }
  sig.check_syllable(s);
  return s;
}

AtomicAut parse_atom(Signature const& sig, SignaturePtr const& ptr, std::string const& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("malformed atom: " + text);
  auto name = trim(text.substr(0, open));
  auto body = text.substr(open + 1, close - open - 1);
  if (name == "perm") {
    PermAut p{std::vector<std::size_t>(sig.size())};
    for (std::size_t i = 0; i < sig.size(); ++i) p.perm[i] = i;
    std::size_t pos = 0;
    while ((pos = body.find('(', pos)) != std::string::npos) {
      auto end = body.find(')', pos);
      if (end == std::string::npos) throw ParseError("unterminated cycle in " + text);
      std::istringstream cyc(body.substr(pos + 1, end - pos - 1));
      std::vector<std::size_t> cycle;
      std::string tok;
      while (cyc >> tok) cycle.push_back(std::size_t(to_int(tok, text)));
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (cycle[k] >= sig.size()) throw ParseError("cycle index out of range in " + text);
        p.perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      pos = end + 1;
    }
    (void)ptr;
    return p;
  }
  auto args = split(body, ',');
  if (name == "pc" || name == "tv") {
    if (args.size() != 2) throw ParseError(name + " takes two arguments: " + text);
    auto idx = std::size_t(to_int(args[0], text));
    auto letter = parse_letter(sig, args[1], text);
    if (name == "pc") return PartialConj{idx, letter};
    return Transvection{idx, letter};
  }
  if (name == "inn") {
    if (args.size() != 2) throw ParseError("inn takes two arguments: " + text);
    return InnerFactor{std::size_t(to_int(args[0], text)), Element(to_int(args[1], text))};
  }
  if (name == "fa") {
    if (args.size() < 2) throw ParseError("fa needs a factor and images: " + text);
    auto idx = std::size_t(to_int(args[0], text));
    if (idx >= sig.size()) throw ParseError("fa factor out of range: " + text);
    if (!sig.is_finite(idx)) {
      if (args.size() != 2) throw ParseError("fa on Z takes one sign: " + text);
      return FactorAut{idx, std::nullopt, int(to_int(args[1], text))};
    }
    std::vector<Element> images;
    for (std::size_t k = 1; k < args.size(); ++k) images.push_back(Element(to_int(args[k], text)));
    auto const& g = sig.group(idx);
    if (images.size() != g->order()) throw ParseError("fa image count mismatch: " + text);
    return FactorAut{idx, GroupMap(g, g, images), 1};
  }
  throw ParseError("unknown atom '" + name + "'");
}

}  // namespace

Automorphism parse_automorphism(SignaturePtr sig, std::string_view text) {
  std::vector<AtomicAut> atoms;
  for (auto const& part : split(std::string(text), ';')) {
    auto t = trim(part);
    if (t.empty() || t == "id") continue;
    atoms.push_back(parse_atom(*sig, sig, t));
  }
  return Automorphism::from_atoms(sig, atoms);
}

InnerResult is_inner(Automorphism const& a, std::size_t bound) {
  auto const& sig = *a.signature();
  if (!sig.all_finite()) throw AutomorphismError("is_inner: requires finite factors");
  if (a.is_identity()) return {InnerStatus::inner, Word{}};

  std::size_t i = 0;
  while (i < sig.size() && sig.group(i)->order() < 2) ++i;
  if (i == sig.size()) return {InnerStatus::inner, Word{}};
  Element const x = 1;
  auto r = sig.cyclically_reduce(a.image(i, x));
  if (r.core.size() != 1 || r.core.word.syllables[0].factor != i)
    return {InnerStatus::not_inner, {}};
  Element const c = r.core.word.syllables[0].element;
  auto const& g = *sig.group(i);
  for (Element z = 0; z < g.order(); ++z) {
    if (g.conjugate(x, z) != c) continue;
    Word candidate = sig.multiply(sig.letter(i, z), r.conjugator);
    if (Automorphism::inner(a.signature(), candidate).equals(a)) {
      if (candidate.size() > bound) return {InnerStatus::undecided, candidate};
      return {InnerStatus::inner, candidate};
    }
  }
  return {InnerStatus::not_inner, {}};
}

}  // namespace fpa
