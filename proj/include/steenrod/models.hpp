#pragma once

// Presented cohomology rings used by the verification suite.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/ring.hpp"

namespace steenrod {

/// F_2[alpha, beta] / (alpha^4, beta^2), top degree 4.
///
/// alpha^3 beta is the fundamental class and beta^2 = 0. alpha^4 vanishes
/// because alpha comes from a 3-manifold factor.
inline RingPresentation bielliptic_base_model() {
  RingPresentation ring("bielliptic_base");
  const auto alpha = ring.add_generator("alpha", 1);
  const auto beta = ring.add_generator("beta", 1);
  ring.add_power_rule(alpha, 4, {});
  ring.add_power_rule(beta, 2, {});
  ring.set_top_degree(4);
  return ring;
}

/// The base model followed by the rings obtained after each of the four
/// cover adjunctions gamma by beta, delta by alpha, gamma' by beta and
/// delta' by alpha.
inline std::vector<RingPresentation> bielliptic_cover_chain() {
  std::vector<RingPresentation> chain{bielliptic_base_model()};
  const std::pair<const char*, const char*> covers[] = {
      {"gamma", "beta"}, {"delta", "alpha"}, {"gamma'", "beta"}, {"delta'", "alpha"}};
  for (const auto& [name, by] : covers) {
    const auto& prev = chain.back();
    chain.push_back(adjoin_cover(prev, name, prev.generator_element(by)));
  }
  chain.back().rename("bielliptic");
  return chain;
}

/// H*(Z; F_2) model: the base with its four covers, top degree 8.
inline RingPresentation build_bielliptic_model() { return bielliptic_cover_chain().back(); }

/// Same shape with delta adjoined by 0 (a split cover). Used as a negative
/// control: here sigma^2 vanishes.
inline RingPresentation split_bielliptic_model() {
  auto ring = bielliptic_base_model();
  ring = adjoin_cover(ring, "gamma", ring.generator_element("beta"));
  ring = adjoin_cover(ring, "delta", ring.zero());
  ring = adjoin_cover(ring, "gamma'", ring.generator_element("beta"));
  ring = adjoin_cover(ring, "delta'", ring.generator_element("alpha"));
  ring.rename("bielliptic_split");
  return ring;
}

/// Exterior algebra on t1, t2 of degree 1, top degree 2 (a torus).
inline RingPresentation elliptic_curve_model() {
  RingPresentation ring("elliptic");
  for (const char* name : {"t1", "t2"}) {
    const auto g = ring.add_generator(name, 1);
    ring.add_power_rule(g, 2, {});
  }
  ring.set_top_degree(2);
  return ring;
}

/// F_2[lambda] / (lambda^2) with lambda of degree d >= 2 killed by every
/// positive Steenrod square; top degree d. Models the class of a point on
/// a manifold of dimension d.
inline RingPresentation point_class_model(std::uint32_t degree) {
  if (degree < 2) throw std::invalid_argument("point class model needs degree >= 2");
  RingPresentation ring("point_class_" + std::to_string(degree));
  const auto lambda = ring.add_generator("lambda", degree);
  ring.add_power_rule(lambda, 2, {});
  ring.declare_sq_table(lambda);
  ring.set_top_degree(degree);
  return ring;
}

/// F_2[x, c] with deg x = 1, deg c = 2, Sq^1 c = 0 and Sq^2 c = c^2.
inline RingPresentation rp_cp_model() {
  RingPresentation ring("rp_cp");
  ring.add_generator("x", 1);
  const auto c = ring.add_generator("c", 2);
  ring.declare_sq_table(c);
  return ring;
}

struct BundledRing {
  std::string file;  // name of the shipped presentation file
  RingPresentation ring;
};

/// Every ring shipped under data/, in a fixed order.
inline std::vector<BundledRing> bundled_rings() {
  auto poly = RingPresentation::polynomial(4, "x", "poly4");
  auto model = build_bielliptic_model();
  auto product = tensor(model, elliptic_curve_model());
  product.rename("bielliptic_x_elliptic");
  return {
      {"poly4.ring", poly},
      {"bielliptic_base.ring", bielliptic_base_model()},
      {"bielliptic.ring", model},
      {"elliptic.ring", elliptic_curve_model()},
      {"point_class.ring", point_class_model(2)},
      {"rp_cp.ring", rp_cp_model()},
      {"bielliptic_x_elliptic.ring", product},
  };
}

}  // namespace steenrod
