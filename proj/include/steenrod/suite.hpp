#pragma once

// Scripted checks of the computational claims behind the coniveau
// obstructions, plus the algebraic property suites of each module. Every
// function returns report entries; nothing here throws on a failed check.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/action.hpp"
#include "steenrod/adem.hpp"
#include "steenrod/ideal.hpp"
#include "steenrod/models.hpp"
#include "steenrod/presentation.hpp"
#include "steenrod/random.hpp"
#include "steenrod/report.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

namespace detail {

inline ReportEntry& steenrod_witness(ReportEntry& entry, const AdemElement& e) {
  entry.witness = e.to_string();
  entry.witness_kind = WitnessKind::steenrod;
  return entry;
}

inline ReportEntry& ring_witness(ReportEntry& entry, const std::shared_ptr<const RingPresentation>& ring,
                                 const RingElement& e) {
  entry.witness = ring->format(e);
  entry.witness_kind = WitnessKind::ring;
  entry.witness_ring = ring;
  return entry;
}

inline std::string pair_params(const char* a, long long x, const char* b, long long y) {
  return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

/// x_1 ... x_s in F_2[x_1, ..., x_s].
inline Monomial product_of_generators(std::size_t s, std::size_t offset = 0) {
  return Monomial(std::vector<std::uint32_t>(s, 1)).shifted(offset);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sq^{2i-1} S_j lies in A Sq^1

/// Number of membership checks verify_lemma_3_1 performs.
inline std::size_t lemma_3_1_check_count(int j_max) {
  std::size_t n = 0;
  for (int j = 2; j <= j_max; ++j) n += (std::size_t{1} << j) - 1;
  return n;
}

/// For j = 2..j_max and i = 1..2^j-1 checks Sq^{2i-1} S_j in A Sq^1. The
/// witness is the admissible form of the product.
inline VerificationReport verify_lemma_3_1(int j_max) {
  if (j_max < 2) throw std::invalid_argument("lemma-3-1 needs j_max >= 2");
  VerificationReport report;
  for (int j = 2; j <= j_max; ++j) {
    const AdemElement s = s_element(j);
    for (long long i = 1; i <= (1ll << j) - 1; ++i) {
      report.add(timed_entry("lemma-3-1", detail::pair_params("j", j, "i", i), [&](ReportEntry& entry) {
        const AdemElement product = multiply(sq(static_cast<Exponent>(2 * i - 1)), s);
        detail::steenrod_witness(entry, product);
        return in_left_ideal_sq1(product);
      }));
    }
  }
  // Informational: with exponent 2^i - 1 the first exponent beyond the
  // odd range, 2^{j+1} - 1, already gives an admissible word ending in Sq3.
  ReportEntry literal;
  literal.check = "lemma-3-1/exponent-2^i-1";
  literal.params = "j=2 i=3 exponent=7";
  literal.status = CheckStatus::skipped;
  detail::steenrod_witness(literal, multiply(sq(7), s_element(2)));
  report.add(std::move(literal));
  return report;
}

/// A false variant: even exponents Sq^{2i} S_j are claimed to lie in A Sq^1.
inline VerificationReport falsified_lemma_3_1(int j_max) {
  VerificationReport report;
  for (int j = 2; j <= j_max; ++j) {
    const AdemElement s = s_element(j);
    for (long long i = 1; i <= (1ll << j) - 1; ++i) {
      report.add(timed_entry("lemma-3-1/even", detail::pair_params("j", j, "i", i), [&](ReportEntry& entry) {
        const AdemElement product = multiply(sq(static_cast<Exponent>(2 * i)), s);
        detail::steenrod_witness(entry, product);
        return in_left_ideal_sq1(product);
      }));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// S_j Sq^1 (x_1 ... x_s) != 0

/// x_1^{2^j} x_2^{2^{j-1}} ... x_j^2 x_{j+1} ... x_s.
inline Monomial lemma_4_1_witness(int s, int j) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(s), 1);
  for (int m = 0; m < j; ++m) e[static_cast<std::size_t>(m)] = 1u << (j - m);
  return Monomial(std::move(e));
}

/// The wrong monomial x_1^{2^j} x_2^{2^j} ... x_j^{2^j} x_{j+1} ... x_s.
inline Monomial lemma_4_1_false_witness(int s, int j) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(s), 1);
  for (int m = 0; m < j; ++m) e[static_cast<std::size_t>(m)] = 1u << j;
  return Monomial(std::move(e));
}

namespace detail {
inline ReportEntry lemma_4_1_entry(const char* check, int s, int j, const Monomial& witness) {
  return timed_entry(check, pair_params("s", s, "j", j), [&](ReportEntry& entry) {
    auto ring = std::make_shared<const RingPresentation>(RingPresentation::polynomial(static_cast<std::size_t>(s)));
    const RingElement zeta = ring->monomial(product_of_generators(static_cast<std::size_t>(s)));
    const RingElement result = act(*ring, multiply(s_element(j), sq(1)), zeta);
    ring_witness(entry, ring, ring->monomial(witness));
    return !result.is_zero() && ring->monomial_coefficient(result, witness) == 1;
  });
}
}  // namespace detail

inline VerificationReport verify_lemma_4_1(int s, int j) {
  if (j < 1 || j > s) throw std::invalid_argument("lemma-4-1 needs 1 <= j <= s");
  if (s > 12) throw std::invalid_argument("lemma-4-1: s too large");
  VerificationReport report;
  report.add(detail::lemma_4_1_entry("lemma-4-1", s, j, lemma_4_1_witness(s, j)));
  return report;
}

inline VerificationReport falsified_lemma_4_1(int s, int j) {
  VerificationReport report;
  report.add(detail::lemma_4_1_entry("lemma-4-1/wrong-monomial", s, j, lemma_4_1_false_witness(s, j)));
  return report;
}

// ---------------------------------------------------------------------------
// sigma^2 != 0 mod 2 on the bielliptic fourfold model

/// Cover dimension formula dim_n(A[d]) = dim_n(A) + dim_{n-1}(A) after each
/// adjunction of the model, for all n up to the new top degree.
inline VerificationReport verify_cover_dimensions() {
  VerificationReport report;
  const auto chain = bielliptic_cover_chain();
  for (std::size_t step = 1; step < chain.size(); ++step) {
    const auto& prev = chain[step - 1];
    const auto& next = chain[step];
    const auto& added = next.generator(next.generator_count() - 1).name;
    report.add(timed_entry("cover-dimension", "cover=" + added, [&](ReportEntry& entry) {
      bool ok = true;
      std::string dims;
      for (std::uint64_t n = 0; n <= *next.top_degree(); ++n) {
        const auto want = ring_dimension(prev, n) + (n ? ring_dimension(prev, n - 1) : 0);
        const auto got = ring_dimension(next, n);
        ok = ok && want == got;
        dims += (dims.empty() ? "" : ",") + std::to_string(got);
      }
      entry.params += " dims=" + dims;
      return ok;
    }));
  }
  return report;
}

namespace detail {
inline VerificationReport prop_5_3_on(const RingPresentation& model, const char* prefix) {
  VerificationReport report;
  auto ring = std::make_shared<const RingPresentation>(model);
  SteenrodAction action(*ring);
  const RingElement gamma_delta = parse_ring_element(*ring, "gamma*delta");
  const RingElement sigma = action.sq(1, gamma_delta);

  report.add(timed_entry(std::string(prefix) + "/sigma", "ring=" + ring->name(), [&](ReportEntry& entry) {
    ring_witness(entry, ring, sigma);
    // gamma^2 delta + gamma delta^2, and its normal form beta gamma delta + alpha gamma delta
    const bool cartan = sigma == parse_ring_element(*ring, "gamma^2*delta + gamma*delta^2");
    const bool reduced = sigma == parse_ring_element(*ring, "beta*gamma*delta + alpha*gamma*delta");
    return cartan && reduced;
  }));
  report.add(timed_entry(std::string(prefix) + "/sigma-squared", "ring=" + ring->name(), [&](ReportEntry& entry) {
    const RingElement square = ring->mul(sigma, sigma);
    ring_witness(entry, ring, square);
    return !square.is_zero() && square == parse_ring_element(*ring, "alpha^3*beta*gamma*delta");
  }));
  return report;
}
}  // namespace detail

/// dim_n of the model equals sum over k of C(4, k) dim_{n-k} of the base,
/// the basis being base classes times squarefree products of the covers.
inline ReportEntry verify_free_module_dimensions() {
  return timed_entry("prop-5-3/free-module", "ring=bielliptic", [](ReportEntry& entry) {
    const RingPresentation base = bielliptic_base_model();
    const RingPresentation model = build_bielliptic_model();
    constexpr std::size_t choose4[] = {1, 4, 6, 4, 1};
    bool ok = true;
    std::string dims;
    for (std::uint64_t n = 0; n <= *model.top_degree(); ++n) {
      std::size_t want = 0;
      for (std::uint64_t k = 0; k <= 4 && k <= n; ++k) want += choose4[k] * ring_dimension(base, n - k);
      const auto got = ring_dimension(model, n);
      ok = ok && want == got;
      dims += (dims.empty() ? "" : ",") + std::to_string(got);
    }
    entry.params += " dims=" + dims;
    return ok;
  });
}

inline VerificationReport verify_prop_5_3() {
  VerificationReport report = detail::prop_5_3_on(build_bielliptic_model(), "prop-5-3");
  report.add(verify_free_module_dimensions());
  report.append(check_action_consistency(build_bielliptic_model()));
  return report;
}

/// The same computation with delta adjoined by 0; must fail.
inline VerificationReport falsified_prop_5_3() {
  return detail::prop_5_3_on(split_bielliptic_model(), "prop-5-3/split-cover");
}

// ---------------------------------------------------------------------------
// S_j(alpha-bar) = S_j Sq^1 xi . lambda != 0

struct Theorem43Model {
  std::shared_ptr<const RingPresentation> ring;
  int s = 0;
  std::optional<std::size_t> lambda;  // generator index when c >= 2
};

/// F_2[x_1..x_s] tensor F_2[lambda]/(lambda^2) with deg lambda = 2c - 2 and
/// j = s = l - 2c + 1. For c = 1 the lambda factor is a point.
inline Theorem43Model theorem_4_3_model(int c, int l) {
  if (c < 1 || l < 2 * c + 1) throw std::invalid_argument("thm-4-3 needs c >= 1 and l >= 2c+1");
  const int s = l - 2 * c + 1;
  if (s > 10) throw std::invalid_argument("thm-4-3: l - 2c + 1 too large");
  Theorem43Model model;
  model.s = s;
  RingPresentation ring = RingPresentation::polynomial(static_cast<std::size_t>(s));
  if (c >= 2) {
    ring = tensor(ring, point_class_model(static_cast<std::uint32_t>(2 * c - 2)));
    model.lambda = static_cast<std::size_t>(s);
  }
  ring.rename("V" + std::to_string(s) + "_x_T" + std::to_string(2 * c - 2));
  model.ring = std::make_shared<const RingPresentation>(std::move(ring));
  return model;
}

namespace detail {
inline ReportEntry theorem_4_3_entry(const char* check, int c, int l, bool with_bockstein) {
  return timed_entry(check, pair_params("c", c, "l", l), [&](ReportEntry& entry) {
    const auto model = theorem_4_3_model(c, l);
    const auto& ring = *model.ring;
    SteenrodAction action(ring);
    const int j = model.s;
    const RingElement zeta = ring.monomial(product_of_generators(static_cast<std::size_t>(model.s)));
    const RingElement lambda = model.lambda ? ring.monomial(Monomial::single(*model.lambda)) : ring.one();
    const RingElement xi = with_bockstein ? action.sq(1, zeta) : zeta;
    const RingElement alpha_bar = ring.mul(xi, lambda);
    const RingElement lhs = action.act(s_element(j), alpha_bar);
    const AdemElement op = with_bockstein ? multiply(s_element(j), sq(1)) : s_element(j);
    const RingElement rhs = ring.mul(action.act(op, zeta), lambda);
    ring_witness(entry, model.ring, lhs);
    return !lhs.is_zero() && lhs == rhs;
  });
}
}  // namespace detail

inline VerificationReport verify_theorem_4_3(int c, int l) {
  VerificationReport report;
  report.add(detail::theorem_4_3_entry("thm-4-3", c, l, true));
  return report;
}

/// The class x_1 ... x_s . lambda without the Bockstein; S_j kills it.
inline VerificationReport falsified_theorem_4_3(int c, int l) {
  VerificationReport report;
  report.add(detail::theorem_4_3_entry("thm-4-3/no-bockstein", c, l, false));
  return report;
}

// ---------------------------------------------------------------------------
// Sq^3(alpha-bar) != 0 for l = 3, 4

namespace detail {
inline VerificationReport theorem_5_4_on(int l, const char* check, const char* base_class) {
  if (l != 3 && l != 4) throw std::invalid_argument("thm-5-4 needs l in {3, 4}");
  VerificationReport report;
  const std::string params = "l=" + std::to_string(l);
  if (l == 3) {
    auto ring = std::make_shared<const RingPresentation>(build_bielliptic_model());
    report.add(timed_entry(check, params, [&](ReportEntry& entry) {
      SteenrodAction action(*ring);
      const RingElement sigma = action.sq(1, parse_ring_element(*ring, base_class));
      const RingElement sq3 = action.sq(3, sigma);
      ring_witness(entry, ring, sq3);
      return !sq3.is_zero() && sq3 == ring->mul(sigma, sigma) && sq3 == parse_ring_element(*ring, "alpha^3*beta*gamma*delta");
    }));
    return report;
  }
  const RingPresentation model = build_bielliptic_model();
  RingPresentation product = tensor(model, elliptic_curve_model());
  product.rename("bielliptic_x_elliptic");
  auto ring = std::make_shared<const RingPresentation>(std::move(product));
  SteenrodAction action(*ring);
  const RingElement sigma = embed(*ring, model, SteenrodAction(model).sq(1, parse_ring_element(model, base_class)));
  const RingElement t1 = parse_ring_element(*ring, "t1");
  report.add(timed_entry(check, params, [&](ReportEntry& entry) {
    const RingElement alpha_bar = ring->mul(sigma, t1);
    const RingElement sq3 = action.sq(3, alpha_bar);
    ring_witness(entry, ring, sq3);
    return !sq3.is_zero() && sq3 == ring->mul(ring->mul(sigma, sigma), t1);
  }));
  report.add(timed_entry(std::string(check) + "/sq1-sigma", params, [&](ReportEntry& entry) {
    const RingElement v = action.sq(1, sigma);
    ring_witness(entry, ring, v);
    return v.is_zero();
  }));
  return report;
}
}  // namespace detail

inline VerificationReport verify_theorem_5_4(int l) { return detail::theorem_5_4_on(l, "thm-5-4", "gamma*delta"); }

/// Uses gamma in place of gamma*delta: then sigma = gamma^2 has degree 2
/// and Sq^3 of it vanishes.
inline VerificationReport falsified_theorem_5_4(int l) {
  return detail::theorem_5_4_on(l, "thm-5-4/wrong-class", "gamma");
}

// ---------------------------------------------------------------------------
// The witness class is a product of degree-1 generators

namespace detail {
inline ReportEntry remark_4_4_entry(const char* check, int s, const Monomial& candidate) {
  return timed_entry(check, "s=" + std::to_string(s), [&](ReportEntry& entry) {
    auto ring = std::make_shared<const RingPresentation>(RingPresentation::polynomial(static_cast<std::size_t>(s)));
    const RingElement zeta = ring->monomial(candidate);
    ring_witness(entry, ring, zeta);
    if (zeta.size() != 1) return false;
    const Monomial& m = *zeta.terms().begin();
    std::size_t factors = 0;
    for (std::size_t g = 0; g < m.exponents().size(); ++g) {
      if (m.exponent(g) > 1) return false;
      if (m.exponent(g) == 1) {
        if (ring->generator(g).degree != 1) return false;
        ++factors;
      }
    }
    return factors == static_cast<std::size_t>(s) && ring->degree(m) == static_cast<std::uint64_t>(s);
  });
}
}  // namespace detail

inline VerificationReport verify_remark_4_4(int s) {
  if (s < 1) throw std::invalid_argument("remark-4-4 needs s >= 1");
  VerificationReport report;
  report.add(detail::remark_4_4_entry("remark-4-4", s, detail::product_of_generators(static_cast<std::size_t>(s))));
  return report;
}

/// x_1^2 x_2 ... x_{s-1}: right degree, not a product of distinct classes.
inline VerificationReport falsified_remark_4_4(int s) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(std::max(s - 1, 1)), 1);
  e[0] = 2;
  VerificationReport report;
  report.add(detail::remark_4_4_entry("remark-4-4/repeated-factor", s, Monomial(std::move(e))));
  return report;
}

// ---------------------------------------------------------------------------
// Two-sided ideal A Sq^1 A

inline VerificationReport verify_two_sided_ideal(std::uint64_t degree_cap = default_ideal_degree_cap) {
  VerificationReport report;
  const std::pair<Exponent, bool> cases[] = {{1, true}, {2, false}, {3, true}};
  for (const auto& [i, expected] : cases) {
    report.add(timed_entry("ideal/two-sided", "element=Sq" + std::to_string(i) + " expect=" +
                                                  (expected ? "member" : "non-member"),
                           [&](ReportEntry& entry) {
                             detail::steenrod_witness(entry, sq(i));
                             return in_two_sided_ideal_sq1(sq(i), degree_cap) == expected;
                           }));
  }
  report.add(timed_entry("ideal/two-sided-cap", "degree=" + std::to_string(degree_cap + 1),
                         [&](ReportEntry& entry) {
                           const AdemElement e = sq(static_cast<Exponent>(degree_cap + 1));
                           detail::steenrod_witness(entry, e);
                           try {
                             (void)in_two_sided_ideal_sq1(e, degree_cap);
                           } catch (const std::domain_error&) {
                             return true;
                           }
                           return false;
                         }));
  return report;
}

// ---------------------------------------------------------------------------
// Property suites

struct PropertyConfig {
  std::uint64_t seed = default_seed;
  std::size_t cases = 1000;
  std::uint64_t idempotence_degree = 60;
  std::uint64_t rewrite_degree = 40;
  std::uint64_t left_ideal_crosscheck_degree = 20;
  std::uint64_t exhaustive_word_degree = 10;
  std::uint64_t exhaustive_monomial_degree = 4;
  std::uint64_t random_word_degree = 20;
  std::uint64_t random_class_degree = 6;
  std::uint64_t ring_degree = 6;
  int prop_3_4_max_j = 4;
};

namespace detail {

/// Runs `cases` trials; the first failing trial stops the loop and its
/// witness is kept.
template <typename Trial>
ReportEntry property_entry(const std::string& check, const std::string& params, std::size_t cases, Trial&& trial) {
  return timed_entry(check, params + " cases=" + std::to_string(cases), [&](ReportEntry& entry) {
    for (std::size_t c = 0; c < cases; ++c)
      if (!trial(entry)) return false;
    entry.witness.clear();
    entry.witness_kind = WitnessKind::none;
    entry.witness_ring.reset();
    return true;
  });
}

inline std::string seed_param(std::uint64_t seed) { return "seed=" + std::to_string(seed); }

/// All words (compositions) of degree n.
inline void all_words(std::uint64_t remaining, std::vector<Exponent>& prefix, std::vector<SquareWord>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t e = 1; e <= remaining; ++e) {
    prefix.push_back(static_cast<Exponent>(e));
    all_words(remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

inline std::vector<SquareWord> all_words_of_degree(std::uint64_t n) {
  std::vector<SquareWord> out;
  std::vector<Exponent> prefix;
  detail::all_words(n, prefix, out);
  return out;
}

/// to_admissible is idempotent and returns admissible words only.
inline ReportEntry property_adem_idempotence(const PropertyConfig& cfg) {
  Rng rng(cfg.seed);
  return detail::property_entry(
      "property/adem-idempotent", detail::seed_param(cfg.seed) + " degree<=" + std::to_string(cfg.idempotence_degree),
      cfg.cases, [&](ReportEntry& entry) {
        const AdemElement e = random_adem_element(rng, uniform(rng, 0, cfg.idempotence_degree));
        const AdemElement once = to_admissible(e);
        detail::steenrod_witness(entry, once);
        return once.is_canonical() && to_admissible(once) == once;
      });
}

/// Leftmost-first and rightmost-first rewriting agree.
inline ReportEntry property_rewrite_strategy(const PropertyConfig& cfg) {
  Rng rng(cfg.seed + 1);
  AdemNormalizer left(RewriteStrategy::leftmost);
  AdemNormalizer right(RewriteStrategy::rightmost);
  return detail::property_entry(
      "property/rewrite-strategy", detail::seed_param(cfg.seed + 1) + " degree<=" + std::to_string(cfg.rewrite_degree),
      cfg.cases, [&](ReportEntry& entry) {
        const AdemElement e = random_adem_element(rng, uniform(rng, 0, cfg.rewrite_degree));
        const AdemElement a = left.normalize(e);
        detail::steenrod_witness(entry, a);
        return a == right.normalize(e);
      });
}

/// (ab)c = a(bc) and deg(ab) = deg a + deg b.
inline ReportEntry property_multiply_associative(const PropertyConfig& cfg) {
  Rng rng(cfg.seed + 2);
  return detail::property_entry(
      "property/multiply-associative",
      detail::seed_param(cfg.seed + 2) + " degree<=" + std::to_string(cfg.rewrite_degree), cfg.cases,
      [&](ReportEntry& entry) {
        const auto total = uniform(rng, 0, cfg.rewrite_degree);
        const auto da = uniform(rng, 0, total);
        const auto db = uniform(rng, 0, total - da);
        const auto dc = total - da - db;
        const AdemElement a = random_adem_element(rng, da), b = random_adem_element(rng, db),
                          c = random_adem_element(rng, dc);
        const AdemElement ab = multiply(a, b);
        const AdemElement lhs = multiply(ab, c);
        detail::steenrod_witness(entry, lhs);
        const bool degree_ok = ab.is_zero() || ab.degree() == std::optional<std::uint64_t>(da + db);
        return degree_ok && lhs == multiply(a, multiply(b, c));
      });
}

/// a . e stays in A Sq^1 whenever e does.
inline ReportEntry property_left_ideal_closure(const PropertyConfig& cfg) {
  Rng rng(cfg.seed + 3);
  return detail::property_entry(
      "property/left-ideal-closure", detail::seed_param(cfg.seed + 3) + " degree<=" + std::to_string(cfg.rewrite_degree),
      cfg.cases, [&](ReportEntry& entry) {
        // a random member: a random element times Sq^1
        const auto d = uniform(rng, 0, cfg.rewrite_degree / 2);
        const AdemElement e = multiply(random_adem_element(rng, d), sq(1));
        const AdemElement a = random_adem_element(rng, uniform(rng, 0, cfg.rewrite_degree / 2));
        const AdemElement ae = multiply(a, e);
        detail::steenrod_witness(entry, ae);
        return in_left_ideal_sq1(e) && in_left_ideal_sq1(ae);
      });
}

/// The left ideal decision rule against the span of {a Sq^1} degree by
/// degree, and the admissible basis against brute-force enumeration.
inline ReportEntry property_left_ideal_span(const PropertyConfig& cfg) {
  return timed_entry("property/left-ideal-span", "degree<=" + std::to_string(cfg.left_ideal_crosscheck_degree),
                     [&](ReportEntry& entry) {
                       for (std::uint64_t n = 1; n <= cfg.left_ideal_crosscheck_degree; ++n) {
                         const AdmissibleCoordinates coords(n);
                         Gf2RowSpace span(coords.dimension());
                         for (const auto& a : basis_in_degree(n - 1))
                           span.insert(coords.vector_of(to_admissible(AdemElement(a * SquareWord{1}))));
                         Gf2RowSpace ending(coords.dimension());
                         for (const auto& w : coords.basis()) {
                           const bool member = in_left_ideal_sq1(AdemElement(w));
                           if (member != (w.back() == 1)) return false;
                           if (member) ending.insert(coords.vector_of(AdemElement(w)));
                         }
                         if (span.rank() != ending.rank()) {
                           entry.witness = "degree " + std::to_string(n);
                           return false;
                         }
                         for (const auto& a : basis_in_degree(n - 1))
                           if (!ending.contains(coords.vector_of(to_admissible(AdemElement(a * SquareWord{1})))))
                             return false;
                       }
                       return true;
                     });
}

/// act(e, u) = act(to_admissible(e), u): exhaustive over small words and
/// monomials in F_2[x_1..x_4], then random larger cases.
inline ReportEntry property_action_normalization(const PropertyConfig& cfg) {
  const std::string params = "exhaustive word<=" + std::to_string(cfg.exhaustive_word_degree) +
                             " monomial<=" + std::to_string(cfg.exhaustive_monomial_degree) + " random " +
                             detail::seed_param(cfg.seed + 4) + " word<=" + std::to_string(cfg.random_word_degree) +
                             " class<=" + std::to_string(cfg.random_class_degree) +
                             " cases=" + std::to_string(cfg.cases);
  return timed_entry("property/action-factors-through-normal-form", params, [&](ReportEntry& entry) {
    auto ring = std::make_shared<const RingPresentation>(RingPresentation::polynomial(4, "x", "poly4"));
    SteenrodAction action(*ring);
    std::vector<RingElement> monomials;
    for (std::uint64_t d = 0; d <= cfg.exhaustive_monomial_degree; ++d) {
      std::vector<std::uint32_t> e(4, 0);
      // all exponent vectors of degree d
      std::vector<Monomial> ms;
      for (e[0] = 0; e[0] <= d; ++e[0])
        for (e[1] = 0; e[0] + e[1] <= d; ++e[1])
          for (e[2] = 0; e[0] + e[1] + e[2] <= d; ++e[2]) {
            e[3] = static_cast<std::uint32_t>(d) - e[0] - e[1] - e[2];
            monomials.push_back(ring->monomial(Monomial(e)));
            e[3] = 0;
          }
    }
    std::size_t checked = 0;
    for (std::uint64_t n = 0; n <= cfg.exhaustive_word_degree; ++n) {
      for (const auto& w : all_words_of_degree(n)) {
        const AdemElement e(w);
        const AdemElement canonical = to_admissible(e);
        for (const auto& u : monomials) {
          ++checked;
          if (action.act(e, u) != action.act(canonical, u)) {
            detail::steenrod_witness(entry, e);
            return false;
          }
        }
      }
    }
    Rng rng(cfg.seed + 4);
    for (std::size_t c = 0; c < cfg.cases; ++c) {
      const AdemElement e = random_adem_element(rng, uniform(rng, 0, cfg.random_word_degree));
      const RingElement u = random_ring_element(rng, *ring, uniform(rng, 0, cfg.random_class_degree));
      if (action.act(e, u) != action.act(to_admissible(e), u)) {
        detail::steenrod_witness(entry, e);
        return false;
      }
    }
    entry.params += " exhaustive_pairs=" + std::to_string(checked);
    return true;
  });
}

/// S_j kills every class of degree k <= j (j >= 2) in F_2[x_1..x_4] and
/// in the bundled rings.
inline ReportEntry property_prop_3_4(const PropertyConfig& cfg) {
  Rng rng(cfg.seed + 5);
  const auto rings = bundled_rings();
  std::vector<std::unique_ptr<SteenrodAction>> actions;
  for (const auto& b : rings) actions.push_back(std::make_unique<SteenrodAction>(b.ring));
  return detail::property_entry(
      "property/s-j-kills-low-degree",
      detail::seed_param(cfg.seed + 5) + " j<=" + std::to_string(cfg.prop_3_4_max_j), cfg.cases,
      [&](ReportEntry& entry) {
        const auto r = uniform(rng, 0, rings.size() - 1);
        const auto& ring = rings[r].ring;
        const int j = static_cast<int>(uniform(rng, 2, static_cast<std::uint64_t>(cfg.prop_3_4_max_j)));
        const RingElement beta = random_ring_element(rng, ring, uniform(rng, 0, static_cast<std::uint64_t>(j)));
        const RingElement v = actions[r]->act(s_element(j), beta);
        entry.witness = ring.format(beta);
        return v.is_zero();
      });
}

/// Cartan multiplicativity, Sq^1 as a derivation, Sq^1 Sq^1 = 0 and
/// instability on one ring.
inline VerificationReport property_action_laws(const RingPresentation& ring, const PropertyConfig& cfg) {
  VerificationReport report;
  auto shared = std::make_shared<const RingPresentation>(ring);
  SteenrodAction action(*shared);
  const std::uint64_t max_deg = std::min<std::uint64_t>(cfg.ring_degree, ring.top_degree().value_or(cfg.ring_degree));
  const std::string base = "ring=" + ring.name() + " degree<=" + std::to_string(max_deg);
  auto draw = [&](Rng& rng) { return random_ring_element(rng, *shared, uniform(rng, 0, max_deg)); };

  Rng r1(cfg.seed + 10);
  report.add(detail::property_entry("property/cartan", base + " " + detail::seed_param(cfg.seed + 10), cfg.cases,
                                    [&](ReportEntry& entry) {
                                      const auto u = draw(r1), v = draw(r1);
                                      const auto lhs = action.total_sq(shared->mul(u, v));
                                      detail::ring_witness(entry, shared, lhs);
                                      return lhs == shared->mul(action.total_sq(u), action.total_sq(v));
                                    }));
  Rng r2(cfg.seed + 11);
  report.add(detail::property_entry("property/sq1-derivation", base + " " + detail::seed_param(cfg.seed + 11),
                                    cfg.cases, [&](ReportEntry& entry) {
                                      const auto u = draw(r2), v = draw(r2);
                                      const auto lhs = action.sq(1, shared->mul(u, v));
                                      detail::ring_witness(entry, shared, lhs);
                                      return lhs == shared->add(shared->mul(action.sq(1, u), v),
                                                                shared->mul(u, action.sq(1, v)));
                                    }));
  Rng r3(cfg.seed + 12);
  report.add(detail::property_entry("property/sq1-sq1", base + " " + detail::seed_param(cfg.seed + 12), cfg.cases,
                                    [&](ReportEntry& entry) {
                                      const auto u = draw(r3);
                                      const auto v = action.sq(1, action.sq(1, u));
                                      detail::ring_witness(entry, shared, u);
                                      return v.is_zero();
                                    }));
  Rng r4(cfg.seed + 13);
  report.add(detail::property_entry("property/instability", base + " " + detail::seed_param(cfg.seed + 13),
                                    cfg.cases, [&](ReportEntry& entry) {
                                      const auto n = uniform(r4, 0, max_deg);
                                      const auto u = random_ring_element(r4, *shared, n);
                                      detail::ring_witness(entry, shared, u);
                                      if (action.sq(n, u) != shared->mul(u, u)) return false;
                                      for (std::uint64_t i = n + 1; i <= n + 3; ++i)
                                        if (!action.sq(i, u).is_zero()) return false;
                                      return true;
                                    }));
  return report;
}

/// Normal forms agree under both reduction orders; multiplication is
/// associative and commutative with unit 1.
inline VerificationReport property_ring_laws(const RingPresentation& ring, const PropertyConfig& cfg) {
  VerificationReport report;
  auto shared = std::make_shared<const RingPresentation>(ring);
  const std::uint64_t max_deg = std::min<std::uint64_t>(20, ring.top_degree().value_or(cfg.ring_degree) + 2);
  const std::string base = "ring=" + ring.name();

  Rng r1(cfg.seed + 20);
  report.add(detail::property_entry(
      "property/normal-form-confluence", base + " degree<=" + std::to_string(max_deg) + " " + detail::seed_param(cfg.seed + 20),
      cfg.cases, [&](ReportEntry& entry) {
        const Terms raw = random_raw_terms(r1, *shared, uniform(r1, 0, max_deg));
        const auto a = shared->normalize(raw, ReductionOrder::lowest_generator_first);
        detail::ring_witness(entry, shared, a);
        return a == shared->normalize(raw, ReductionOrder::highest_generator_first);
      }));
  Rng r2(cfg.seed + 21);
  const std::uint64_t d = std::min<std::uint64_t>(cfg.ring_degree, ring.top_degree().value_or(cfg.ring_degree));
  report.add(detail::property_entry("property/ring-mul", base + " degree<=" + std::to_string(d) + " " +
                                                             detail::seed_param(cfg.seed + 21),
                                    cfg.cases, [&](ReportEntry& entry) {
                                      const auto a = random_ring_element(r2, *shared, uniform(r2, 0, d));
                                      const auto b = random_ring_element(r2, *shared, uniform(r2, 0, d));
                                      const auto c = random_ring_element(r2, *shared, uniform(r2, 0, d));
                                      const auto abc = shared->mul(shared->mul(a, b), c);
                                      detail::ring_witness(entry, shared, abc);
                                      return abc == shared->mul(a, shared->mul(b, c)) &&
                                             shared->mul(a, b) == shared->mul(b, a) &&
                                             shared->mul(a, shared->one()) == a;
                                    }));
  return report;
}

/// Every bundled ring: action well-definedness, ring laws and action laws.
inline VerificationReport property_bundled_rings(const PropertyConfig& cfg) {
  VerificationReport report;
  for (const auto& b : bundled_rings()) {
    report.append(check_action_consistency(b.ring));
    report.append(property_ring_laws(b.ring, cfg));
    report.append(property_action_laws(b.ring, cfg));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Negative controls and the full suite

/// Every falsified variant, each of which must fail.
inline std::vector<std::pair<std::string, VerificationReport>> falsified_variants() {
  std::vector<std::pair<std::string, VerificationReport>> out;
  out.emplace_back("lemma-3-1", falsified_lemma_3_1(2));
  out.emplace_back("lemma-4-1", falsified_lemma_4_1(3, 3));
  out.emplace_back("prop-5-3", falsified_prop_5_3());
  out.emplace_back("thm-4-3", falsified_theorem_4_3(1, 3));
  out.emplace_back("thm-5-4", falsified_theorem_5_4(3));
  out.emplace_back("remark-4-4", falsified_remark_4_4(3));
  {
    RingPresentation broken("broken");
    const auto a = broken.add_generator("alpha", 1);
    const auto b = broken.add_generator("beta", 2);
    broken.set_sq(b, 1, Terms{Monomial::single(a, 3)});
    broken.add_power_rule(b, 2, Terms{Monomial::single(a, 4)});
    out.emplace_back("action-consistency", check_action_consistency(broken));
  }
  return out;
}

/// One entry per falsified variant, passing when the variant failed.
inline VerificationReport negative_controls() {
  VerificationReport report;
  for (const auto& [name, variant] : falsified_variants()) {
    ReportEntry entry;
    entry.check = "control/" + name;
    entry.params = "falsified entries=" + std::to_string(variant.size());
    entry.status = variant.passed() ? CheckStatus::fail : CheckStatus::pass;
    for (const auto& e : variant.entries()) entry.elapsed_ms += e.elapsed_ms;
    report.add(std::move(entry));
  }
  return report;
}

struct SuiteConfig {
  int j_max = 5;
  int lemma_4_1_max = 5;
  std::uint64_t ideal_degree_cap = default_ideal_degree_cap;
  PropertyConfig properties;
  bool include_properties = true;
};

/// All claim checks, property suites and negative controls in a fixed order.
inline VerificationReport run_full_suite(const SuiteConfig& cfg = {}) {
  VerificationReport report;
  report.append(verify_lemma_3_1(cfg.j_max));
  report.append(verify_lemma_4_1(1, 1));
  for (int s = 2; s <= cfg.lemma_4_1_max; ++s) report.append(verify_lemma_4_1(s, s));
  report.append(verify_remark_4_4(1));
  report.append(verify_remark_4_4(3));
  report.append(verify_cover_dimensions());
  report.append(verify_prop_5_3());
  for (const auto& [c, l] : {std::pair{1, 3}, {1, 4}, {2, 5}, {2, 6}}) report.append(verify_theorem_4_3(c, l));
  report.append(verify_theorem_5_4(3));
  report.append(verify_theorem_5_4(4));
  report.append(verify_two_sided_ideal(cfg.ideal_degree_cap));
  if (cfg.include_properties) {
    const auto& p = cfg.properties;
    report.add(property_adem_idempotence(p));
    report.add(property_rewrite_strategy(p));
    report.add(property_multiply_associative(p));
    report.add(property_left_ideal_closure(p));
    report.add(property_left_ideal_span(p));
    report.add(property_action_normalization(p));
    report.add(property_prop_3_4(p));
    report.append(property_bundled_rings(p));
  }
  report.append(negative_controls());
  return report;
}

}  // namespace steenrod
