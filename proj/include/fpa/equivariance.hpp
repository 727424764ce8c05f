#pragma once

// The isometry f_a of a free product's Bass-Serre tree induced by a
// length-preserving automorphism a, built by matching stabilisers:
// a vertex v_i y with stabiliser y^-1 G_i y goes to v_j h a(y), where
// a(G_i) = h^-1 G_j h. Then f(u g) = f(u) a(g) for all g.

#include <cstddef>
#include <cstdint>

#include "fpa/automorphism.hpp"
#include "fpa/bstree.hpp"
#include "fpa/report.hpp"

namespace fpa {

/// Raised when a vertex image cannot be read off from stabilisers.
class StabilizerAmbiguity : public GogError {
 public:
  using GogError::GogError;
};

class InducedIsometry {
 public:
  /// `tree` must be the Bass-Serre tree of `fp` based at fp.base().
  InducedIsometry(FreeProductGraph const& fp, BassSerreTree const& tree, Automorphism alpha);

  Automorphism const& automorphism() const noexcept { return alpha_; }
  /// y with u = v_type y, where v_type is the standard vertex of u's type.
  Word coset_word(TreeVertex const& u) const;
  /// Vertices with trivial stabiliser (star centres) go to the midpoint of
  /// the images of two of their neighbours. Throws StabilizerAmbiguity.
  TreeVertex operator()(TreeVertex const& u) const;

 private:
  FreeProductGraph const& fp_;
  BassSerreTree const& tree_;
  Automorphism alpha_;
  std::vector<std::pair<std::size_t, Word>> factor_images_;
};

struct EquivarianceOptions {
  std::size_t samples = 50;  // group elements and vertex pairs drawn
  std::size_t word_length = 6;
  std::uint64_t seed = 0;
};

/// On the ball: alpha preserves translation length on sampled words; f maps
/// edges to edges and preserves sampled distances; f(u g) = f(u) alpha(g)
/// for sampled g; and, unless the ball is subdivided, f inverts no edge.
SuiteReport equivariance_check(FreeProductGraph const& fp, BassSerreTree const& tree,
                               Automorphism const& alpha, Ball const& ball,
                               EquivarianceOptions const& opt = {});

/// Inner automorphism by g induces the tree action of g.
SuiteReport check_inner_action(FreeProductGraph const& fp, BassSerreTree const& tree, Word const& g,
                               Ball const& ball);

/// f for "alpha then beta" is f_beta after f_alpha on the ball.
SuiteReport check_composition(FreeProductGraph const& fp, BassSerreTree const& tree,
                              Automorphism const& alpha, Automorphism const& beta, Ball const& ball);

/// The standard battery: inner automorphisms on C2*C3 and C2*C3*S3, the
/// C2*C2 swap without and with subdivision, and compositions of random
/// generator products on radius-5 balls.
SuiteReport equivariance_suite(std::size_t pairs = 20, std::uint64_t seed = 0);

}  // namespace fpa
