#include "fpa/quotient.hpp"

#include <algorithm>
#include <variant>

#include "fpa/relations.hpp"

namespace fpa {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

CharacteristicQuotient::CharacteristicQuotient(SignaturePtr source, std::vector<std::size_t> killed)
    : source_(std::move(source)), killed_(std::move(killed)) {
  auto const& s = *source_;
  std::sort(killed_.begin(), killed_.end());
  killed_.erase(std::unique(killed_.begin(), killed_.end()), killed_.end());
  if (!killed_.empty() && killed_.back() >= s.size()) throw QuotientError("killed factor out of range");
  index_.assign(s.size(), npos);
  std::vector<FactorSpec> factors;
  std::vector<std::size_t> classes;
  std::vector<GroupMap> isos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::binary_search(killed_.begin(), killed_.end(), i)) continue;
    index_[i] = kept_.size();
    kept_.push_back(i);
    factors.push_back(s.factor(i));
    classes.push_back(s.class_of(i));
    isos.push_back(s.reference_isos()[i]);
  }
  if (kept_.empty()) throw QuotientError("the quotient must keep at least one factor");
  target_ = std::make_shared<const Signature>(std::move(factors), std::move(classes), std::move(isos),
                                              kept_.size() < 2);
  characteristic_ = true;
  for (auto k : killed_)
    for (auto j : s.class_members(s.class_of(k)))
      if (index_[j] != npos) characteristic_ = false;
}

CharacteristicQuotient CharacteristicQuotient::kill_class(SignaturePtr source, std::size_t representative) {
  auto members = source->class_members(source->class_of(representative));
  return CharacteristicQuotient(std::move(source), std::move(members));
}

Word CharacteristicQuotient::quotient_word(Word const& w) const {
  source_->check(w);
  std::vector<Syllable> raw;
  for (auto s : w.syllables) {
    if (index_[s.factor] == npos) continue;
    s.factor = index_[s.factor];
    raw.push_back(std::move(s));
  }
  return target_->normalize(std::move(raw));
}

std::optional<AtomicAut> CharacteristicQuotient::quotient_atom(AtomicAut const& a) const {
  auto dead = [&](std::size_t i) { return index_.at(i) == npos; };
  auto move = [&](Syllable s) {
    s.factor = index_[s.factor];
    return s;
  };
  return std::visit(
      overloaded{
          [&](FactorAut const& f) -> std::optional<AtomicAut> {
            if (dead(f.factor)) return std::nullopt;
            return FactorAut{index_[f.factor], f.map, f.sign};
          },
          [&](PermAut const& p) -> std::optional<AtomicAut> {
            for (std::size_t i = 0; i < p.perm.size(); ++i)
              if (dead(i) != dead(p.perm[i]))
                throw NotProjectable("permutation moves a killed factor onto a kept one");
            PermAut out;
            bool moved = false;
            for (auto i : kept_) {
              out.perm.push_back(index_[p.perm[i]]);
              moved = moved || out.perm.back() != out.perm.size() - 1;
            }
            if (!moved) return std::nullopt;
            return out;
          },
          [&](PartialConj const& c) -> std::optional<AtomicAut> {
            if (dead(c.target) || dead(c.conjugator.factor)) return std::nullopt;
            return PartialConj{index_[c.target], move(c.conjugator)};
          },
          [&](Transvection const& t) -> std::optional<AtomicAut> {
            if (dead(t.factor)) {
              if (dead(t.multiplier.factor)) return std::nullopt;
              throw NotProjectable("transvection moves a killed generator out of N");
            }
            if (dead(t.multiplier.factor)) return std::nullopt;
            return Transvection{index_[t.factor], move(t.multiplier)};
          },
          [&](InnerFactor const& g) -> std::optional<AtomicAut> {
            if (dead(g.factor)) return std::nullopt;
            return InnerFactor{index_[g.factor], g.element};
          },
      },
      a);
}

Automorphism CharacteristicQuotient::quotient_aut(Automorphism const& a) const {
  if (a.signature() != source_)
    throw SignatureMismatch("automorphism is not on the quotient's source");
  if (!a.has_atoms()) return induced_aut(a);
  std::vector<AtomicAut> atoms;
  for (auto const& x : a.atoms())
    if (auto q = quotient_atom(x)) atoms.push_back(std::move(*q));
  return Automorphism::from_atoms(target_, atoms);
}

Automorphism CharacteristicQuotient::induced_aut(Automorphism const& a) const {
  auto const& s = *source_;
  for (auto k : killed_) {
    bool ok = true;
    if (s.is_finite(k)) {
      for (Element e = 1; e < s.group(k)->order() && ok; ++e) ok = quotient_word(a.image(k, e)).empty();
    } else {
      ok = quotient_word(a.generator_image(k)).empty();
    }
    if (!ok) throw NotProjectable("automorphism does not preserve N (factor " + std::to_string(k) + ")");
  }
  std::vector<std::vector<Word>> finite(kept_.size());
  std::vector<Word> gens(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    auto i = kept_[t];
    if (s.is_finite(i)) {
      for (Element e = 0; e < s.group(i)->order(); ++e) finite[t].push_back(quotient_word(a.image(i, e)));
    } else {
      gens[t] = quotient_word(a.generator_image(i));
    }
  }
  return Automorphism::from_images(target_, std::move(finite), std::move(gens));
}

CharacteristicQuotient no_prop_t_quotient(SignaturePtr const& sig) {
  if (sig->size() < 3) throw TooFewFactors("need at least three factors to kill all but two");
  if (sig->free_rank() > 0) throw QuotientError("infinite cyclic factors are not supported here");
  std::vector<std::size_t> killed;
  for (std::size_t i = 2; i < sig->size(); ++i) killed.push_back(i);
  return CharacteristicQuotient(sig, killed);
}

SuiteReport verify_quotient(CharacteristicQuotient const& q, std::size_t pairs, std::uint64_t seed) {
  auto const& s = *q.source();
  auto const& tsig = q.target();
  SuiteReport rep;
  rep.suite = "quotient " + s.describe() + " -> " + tsig->describe();
  auto remap = [&](Syllable b) {
    b.factor = std::size_t(std::find(q.kept().begin(), q.kept().end(), b.factor) - q.kept().begin());
    return b;
  };
  auto tidx = [&](std::size_t i) {
    return std::size_t(std::find(q.kept().begin(), q.kept().end(), i) - q.kept().begin());
  };

  std::vector<Automorphism> projectable;
  for (auto const& atom : generating_atoms(s)) {
    auto a = Automorphism::atom(q.source(), atom);
    auto key = format_atom(s, atom);
    std::optional<Automorphism> g, h;
    bool gen_threw = false, img_threw = false;
    try {
      g = q.quotient_aut(a);
    } catch (NotProjectable const&) {
      gen_threw = true;
    }
    try {
      h = q.induced_aut(a);
    } catch (NotProjectable const&) {
      img_threw = true;
    }
    rep.record("projectable", key, gen_threw == img_threw,
               gen_threw ? "only the generator-wise map refused" : "only the image map refused");
    if (!g || !h) continue;
    rep.record("generator_vs_images", key, g->equals(*h), g->format() + " vs " + h->format());
    projectable.push_back(a);

    // The stated images: generators touching killed data die, the rest survive renamed.
    std::optional<Automorphism> expected;
    if (auto const* c = std::get_if<PartialConj>(&atom)) {
      if (q.is_killed(c->target) || q.is_killed(c->conjugator.factor)) expected = Automorphism::identity(tsig);
      else expected = Automorphism::atom(tsig, PartialConj{tidx(c->target), remap(c->conjugator)});
    } else if (auto const* f = std::get_if<FactorAut>(&atom)) {
      if (q.is_killed(f->factor)) expected = Automorphism::identity(tsig);
      else expected = Automorphism::atom(tsig, FactorAut{tidx(f->factor), f->map, f->sign});
    }
    if (expected) rep.record("stated_image", key, g->equals(*expected), g->format());
  }

  rep.record("identity", "id", q.quotient_aut(Automorphism::identity(q.source())).is_identity());
  Rng rng(seed);
  for (std::size_t k = 0; k < pairs && !projectable.empty(); ++k) {
    auto const& a = projectable[uniform_index(rng, projectable.size())];
    auto const& b = projectable[uniform_index(rng, projectable.size())];
    auto lhs = q.quotient_aut(a.then(b));
    auto rhs = q.quotient_aut(a).then(q.quotient_aut(b));
    rep.record("functorial", a.format() + " | " + b.format(), lhs.equals(rhs));
  }
  rep.finalize();
  return rep;
}

SuiteReport verify_quotient_word(CharacteristicQuotient const& q, std::size_t pairs, std::uint64_t seed) {
  auto const& s = *q.source();
  SuiteReport rep;
  rep.suite = "quotient_word " + s.describe();
  Rng rng(seed);
  for (std::size_t k = 0; k < pairs; ++k) {
    auto u = random_word_up_to(s, 8, rng);
    auto v = random_word_up_to(s, 8, rng);
    auto lhs = q.quotient_word(s.multiply(u, v));
    auto rhs = q.target()->multiply(q.quotient_word(u), q.quotient_word(v));
    rep.record("homomorphism", std::to_string(k), lhs == rhs, s.format(u) + " , " + s.format(v));
  }
  rep.finalize();
  return rep;
}

}  // namespace fpa
