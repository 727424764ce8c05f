#include "fpa/invariance.hpp"

#include <functional>
#include <string>

#include "fpa/automorphism.hpp"
#include "fpa/gog.hpp"
#include "fpa/random_words.hpp"
#include "fpa/relations.hpp"

namespace fpa {

namespace {

// Runs every generator against the same word sample; results keyed by
// generator so the report is independent of the job count.
SuiteReport run_generators(std::string suite, SignaturePtr const& sig, InvarianceOptions const& opt,
                           std::function<void(SuiteReport&, Automorphism const&, std::string const&,
                                              Word const&, std::size_t)> const& check) {
  Rng rng(opt.seed);
  std::vector<Word> words;
  for (std::size_t i = 0; i < opt.trials; ++i) words.push_back(random_word_up_to(*sig, opt.max_length, rng));
  auto atoms = generating_atoms(*sig);
  auto parts = parallel_map<SuiteReport>(atoms.size(), opt.jobs, [&](std::size_t g) {
    SuiteReport r;
    auto a = Automorphism::atom(sig, atoms[g]);
    auto key = format_atom(*sig, atoms[g]);
    for (std::size_t i = 0; i < words.size(); ++i) check(r, a, key, words[i], i);
    return r;
  });
  SuiteReport rep;
  rep.suite = std::move(suite);
  for (auto const& p : parts) rep.merge(p);
  rep.finalize();
  return rep;
}

}  // namespace

SuiteReport invariance_suite_two_factors(GroupPtr const& h, GroupPtr const& k,
                                         InvarianceOptions const& opt) {
  auto sig = make_signature({FactorSpec::finite(h), FactorSpec::finite(k)});
  FreeProductGraph fp(sig, Shape::single_edge);
  return run_generators(
      "two-factors " + sig->describe(), sig, opt,
      [&](SuiteReport& r, Automorphism const& a, std::string const& key, Word const& w, std::size_t i) {
        auto before = translation_length(fp, w);
        auto image = a.apply(w);
        auto after = translation_length(fp, image);
        auto inst = key + " #" + std::to_string(i);
        r.record("length", inst, before == after,
                 sig->format(w) + " -> " + sig->format(image) + ": " + std::to_string(before) +
                     " vs " + std::to_string(after));
        if (before == 0) r.record("elliptic", inst, after == 0, sig->format(image));
      });
}

BigInt cyclic_exponent_sum(Signature const& sig, Word const& w) {
  BigInt sum = 0;
  for (auto const& s : sig.cyclically_reduce(w).core.word.syllables)
    if (!sig.is_finite(s.factor)) sum += abs(s.exponent);
  return sum;
}

SuiteReport invariance_suite_h_z(GroupPtr const& h, InvarianceOptions const& opt) {
  auto sig = make_signature({FactorSpec::finite(h), FactorSpec::infinite_cyclic()});
  FreeProductGraph fp(sig, Shape::loop_for_z);
  return run_generators(
      "hz " + sig->describe(), sig, opt,
      [&](SuiteReport& r, Automorphism const& a, std::string const& key, Word const& w, std::size_t i) {
        auto image = a.apply(w);
        auto before = cyclic_exponent_sum(*sig, w);
        auto after = cyclic_exponent_sum(*sig, image);
        auto inst = key + " #" + std::to_string(i);
        r.record("exponent_sum", inst, before == after,
                 sig->format(w) + " -> " + sig->format(image));
        r.record("matches_tree", inst, BigInt(translation_length(fp, image)) == after,
                 sig->format(image));
      });
}

}  // namespace fpa
