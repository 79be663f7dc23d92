#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "steenrod/adem.hpp"
#include "steenrod/binomial.hpp"
#include "steenrod/report.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

/// A Steenrod square was applied to a generator of degree >= 2 that has no
/// declared Sq table.
class MissingSqTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The action of the Steenrod algebra on a presented ring.
///
/// Sq^i of a monomial is expanded with the Cartan formula over its generator
/// factors and reduced to normal form. A power x^a of a degree-1 generator
/// without an explicit table uses Sq(x^a) = x^a (1 + x)^a, so
/// Sq^t(x^a) = C(a, t) x^{a+t}. Other generators are peeled off one factor
/// at a time using their Sq tables.
///
/// Results per (i, monomial) are memoized in the instance; the ring must
/// outlive it and an instance must not be shared between threads.
class SteenrodAction {
 public:
  explicit SteenrodAction(const RingPresentation& ring) : ring_(ring), ring_id_(ring.id()) {}

  const RingPresentation& ring() const noexcept { return ring_; }

  RingElement sq(std::uint64_t i, const RingElement& u) {
    check(u);
    Terms out;
    for (const auto& m : u.terms()) add_into(out, sq_monomial(i, m));
    return ring_.normalize(out);
  }

  /// Sq^i applied to raw (not necessarily normal) terms, then normalized.
  RingElement sq_terms(std::uint64_t i, const Terms& raw) {
    Terms out;
    for (const auto& m : raw) add_into(out, sq_monomial(i, m));
    return ring_.normalize(out);
  }

  /// Total square Sq = Sq^0 + Sq^1 + ...
  RingElement total_sq(const RingElement& u) {
    check(u);
    return total_sq_terms(u.terms());
  }

  RingElement total_sq_terms(const Terms& raw) {
    Terms out;
    for (const auto& m : raw) {
      const auto n = ring_.degree(m);
      for (std::uint64_t i = 0; i <= n; ++i) add_into(out, sq_monomial(i, m));
    }
    return ring_.normalize(out);
  }

  /// Each word acts right to left: Sq^a Sq^b u = Sq^a (Sq^b u).
  RingElement act(const AdemElement& e, const RingElement& u) {
    check(u);
    Terms out;
    for (const auto& word : e.words()) {
      RingElement v = u;
      const auto& exps = word.exponents();
      for (auto it = exps.rbegin(); it != exps.rend() && !v.is_zero(); ++it) v = sq(*it, v);
      add_into(out, v.terms());
    }
    return ring_.normalize(out);
  }

  /// Sq^t of a single generator, from its table or the degree-1 rule.
  Terms sq_generator(std::size_t g, std::uint64_t t) const {
    const auto& gen = ring_.generator(g);
    if (t == 0) return Terms{Monomial::single(g)};
    if (t > gen.degree) return {};
    if (!gen.sq_table) {
      if (gen.degree == 1) return Terms{Monomial::single(g, 2)};
      throw MissingSqTable("generator '" + gen.name + "' of degree " + std::to_string(gen.degree) +
                           " has no Sq table");
    }
    if (auto it = gen.sq_table->find(static_cast<std::uint32_t>(t)); it != gen.sq_table->end()) return it->second;
    if (t == gen.degree) return Terms{Monomial::single(g, 2)};
    return {};
  }

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  void check(const RingElement& u) const {
    if (ring_.id() != ring_id_) throw std::logic_error("ring changed under a SteenrodAction");
    ring_.check_mine(u);
  }

  const Terms& sq_monomial(std::uint64_t i, const Monomial& m) {
    auto key = std::make_pair(i, m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Terms out;
    const auto n = ring_.degree(m);
    if (i == 0) {
      out = ring_.normalize(Terms{m}).terms();
    } else if (i <= n) {
      const auto& e = m.exponents();
      std::size_t g = 0;
      while (e[g] == 0) ++g;
      const auto& gen = ring_.generator(g);
      if (gen.degree == 1 && !gen.sq_table) {
        // x^a (1 + x)^a, split off the whole power
        const std::uint32_t a = e[g];
        const Monomial rest = m.with_exponent(g, 0);
        for (std::uint64_t t = 0; t <= std::min<std::uint64_t>(i, a); ++t) {
          if (!binom_mod2(a, static_cast<std::int64_t>(t))) continue;
          const Terms& tail = sq_monomial(i - t, rest);
          if (tail.empty()) continue;
          add_into(out, multiply_terms(Terms{Monomial::single(g, a + static_cast<std::uint32_t>(t))}, tail));
        }
      } else {
        const Monomial rest = m.with_exponent(g, e[g] - 1);
        for (std::uint64_t t = 0; t <= std::min<std::uint64_t>(i, gen.degree); ++t) {
          const Terms head = sq_generator(g, t);
          if (head.empty()) continue;
          const Terms& tail = sq_monomial(i - t, rest);
          if (tail.empty()) continue;
          add_into(out, multiply_terms(head, tail));
        }
      }
      out = ring_.normalize(out).terms();
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  const RingPresentation& ring_;
  std::uint64_t ring_id_;
  std::map<std::pair<std::uint64_t, Monomial>, Terms> cache_;
};

inline RingElement sq_i(const RingPresentation& ring, std::uint64_t i, const RingElement& u) {
  return SteenrodAction(ring).sq(i, u);
}

inline RingElement total_sq(const RingPresentation& ring, const RingElement& u) {
  return SteenrodAction(ring).total_sq(u);
}

inline RingElement act(const RingPresentation& ring, const AdemElement& e, const RingElement& u) {
  return SteenrodAction(ring).act(e, u);
}

/// Checks that the action is well defined on the quotient: every power rule
/// g^k = r satisfies Sq(g)^k = Sq(r), and every explicit table has
/// Sq^{deg g} g = g^2 and Sq^{deg g + 1} g = 0.
inline VerificationReport check_action_consistency(const RingPresentation& ring) {
  VerificationReport report;
  SteenrodAction action(ring);
  auto shared = std::make_shared<const RingPresentation>(ring);
  for (std::size_t g = 0; g < ring.generator_count(); ++g) {
    const auto& gen = ring.generator(g);
    if (const auto& rule = ring.rule(g)) {
      report.add(timed_entry(
          "action-consistency", "ring=" + ring.name() + " rule=" + gen.name + "^" + std::to_string(rule->exponent),
          [&](ReportEntry& entry) {
            const RingElement sq_g = ring.normalize(action.total_sq_terms(Terms{Monomial::single(g)}).terms());
            const RingElement lhs = ring.power(sq_g, rule->exponent);
            const RingElement rhs = action.total_sq_terms(rule->rhs);
            const RingElement diff = ring.add(lhs, rhs);
            entry.witness = ring.format(diff.is_zero() ? lhs : diff);
            entry.witness_kind = WitnessKind::ring;
            entry.witness_ring = shared;
            return diff.is_zero();
          }));
    }
    if (gen.sq_table) {
      report.add(timed_entry("action-consistency", "ring=" + ring.name() + " table=" + gen.name,
                             [&](ReportEntry& entry) {
                               const auto x = ring.monomial(Monomial::single(g));
                               const auto top = action.sq(gen.degree, x);
                               const auto above = action.sq(gen.degree + 1, x);
                               entry.witness = ring.format(top);
                               entry.witness_kind = WitnessKind::ring;
                               entry.witness_ring = shared;
                               return top == ring.mul(x, x) && above.is_zero();
                             }));
    }
  }
  return report;
}

}  // namespace steenrod
