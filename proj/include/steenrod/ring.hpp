#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/errors.hpp"

namespace steenrod {

/// Exponent vector indexed by generator position. Trailing zeros are
/// trimmed so that a monomial keeps its meaning when generators are appended
/// to the presentation.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

  static Monomial single(std::size_t generator, std::uint32_t exponent = 1) {
    std::vector<std::uint32_t> e(generator + 1, 0);
    e[generator] = exponent;
    return Monomial(std::move(e));
  }

  const std::vector<std::uint32_t>& exponents() const& noexcept { return exps_; }
  std::vector<std::uint32_t> exponents() && { return std::move(exps_); }
  bool is_unit() const noexcept { return exps_.empty(); }

  std::uint32_t exponent(std::size_t generator) const noexcept {
    return generator < exps_.size() ? exps_[generator] : 0;
  }

  Monomial with_exponent(std::size_t generator, std::uint32_t exponent) const {
    Monomial out = *this;
    if (out.exps_.size() <= generator) out.exps_.resize(generator + 1, 0);
    out.exps_[generator] = exponent;
    out.trim();
    return out;
  }

  /// Same monomial with every generator index moved up by offset.
  Monomial shifted(std::size_t offset) const {
    if (exps_.empty()) return {};
    std::vector<std::uint32_t> e(offset, 0);
    e.insert(e.end(), exps_.begin(), exps_.end());
    return Monomial(std::move(e));
  }

  Monomial operator*(const Monomial& rhs) const {
    Monomial out = exps_.size() >= rhs.exps_.size() ? *this : rhs;
    const auto& other = exps_.size() >= rhs.exps_.size() ? rhs.exps_ : exps_;
    for (std::size_t g = 0; g < other.size(); ++g) out.exps_[g] += other[g];
    return out;
  }

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  void trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }

  std::vector<std::uint32_t> exps_;
};

/// Raw F_2 combination of monomials, not necessarily in normal form.
using Terms = std::set<Monomial>;

inline void toggle(Terms& terms, const Monomial& m) {
  if (auto it = terms.find(m); it != terms.end()) {
    terms.erase(it);
  } else {
    terms.insert(m);
  }
}

inline void add_into(Terms& acc, const Terms& rhs) {
  for (const auto& m : rhs) toggle(acc, m);
}

inline Terms multiply_terms(const Terms& lhs, const Terms& rhs) {
  Terms out;
  for (const auto& a : lhs)
    for (const auto& b : rhs) toggle(out, a * b);
  return out;
}

/// An element of a presented ring, in normal form. Carries the identity of
/// the presentation it belongs to.
class RingElement {
 public:
  RingElement() = default;

  std::uint64_t ring_id() const noexcept { return ring_id_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  bool operator==(const RingElement&) const = default;

 private:
  friend class RingPresentation;
  RingElement(std::uint64_t id, Terms terms) : ring_id_(id), terms_(std::move(terms)) {}

  std::uint64_t ring_id_ = 0;
  Terms terms_;
};

inline bool is_zero(const RingElement& a) { return a.is_zero(); }

struct GradedGenerator {
  std::string name;
  std::uint32_t degree = 1;
  /// Explicit Sq^i for 1 <= i <= degree. Missing entries below the degree
  /// are zero; a missing top entry means Sq^degree g = g^2.
  std::optional<std::map<std::uint32_t, Terms>> sq_table;

  bool operator==(const GradedGenerator&) const = default;
};

/// Power rule g^exponent = rhs.
struct PowerRule {
  std::uint32_t exponent = 2;
  Terms rhs;

  bool operator==(const PowerRule&) const = default;
};

/// Order in which reducible generators are rewritten during normalization.
enum class ReductionOrder { lowest_generator_first, highest_generator_first };

/// A finitely presented graded-commutative F_2-algebra
///
///   F_2[g_1, ..., g_n] / (g^k = r per generator, everything above top_degree).
///
/// A rule for g may only mention g (to a smaller power) and generators
/// declared before g, which makes the rules a Groebner basis with pairwise
/// coprime leading terms and the normal form unique.
class RingPresentation {
 public:
  explicit RingPresentation(std::string name = "ring") : name_(std::move(name)), id_(next_id()) {}

  /// The cohomology of a point: no generators, top degree 0.
  static RingPresentation point() {
    RingPresentation p("point");
    p.set_top_degree(0);
    return p;
  }

  /// F_2[x_1, ..., x_count] with degree-1 generators.
  static RingPresentation polynomial(std::size_t count, const std::string& prefix = "x",
                                     const std::string& name = "P") {
    RingPresentation p(name);
    for (std::size_t g = 1; g <= count; ++g) p.add_generator(prefix + std::to_string(g), 1);
    return p;
  }

  const std::string& name() const noexcept { return name_; }
  std::uint64_t id() const noexcept { return id_; }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  const GradedGenerator& generator(std::size_t g) const { return gens_.at(g); }
  const std::vector<GradedGenerator>& generators() const noexcept { return gens_; }
  const std::optional<PowerRule>& rule(std::size_t g) const { return rules_.at(g); }
  std::optional<std::uint64_t> top_degree() const noexcept { return top_degree_; }

  std::optional<std::size_t> find_generator(const std::string& name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
      if (gens_[g].name == name) return g;
    return std::nullopt;
  }

  std::size_t generator_index(const std::string& name) const {
    if (auto g = find_generator(name)) return *g;
    throw SemanticError("unknown generator '" + name + "' in ring " + name_);
  }

  // ---- construction ------------------------------------------------------

  void rename(std::string name) { name_ = std::move(name); }

  std::size_t add_generator(const std::string& name, std::uint32_t degree) {
    if (degree == 0) throw SemanticError("generator '" + name + "' must have positive degree");
    if (find_generator(name)) throw SemanticError("duplicate generator name '" + name + "'");
    gens_.push_back({name, degree, std::nullopt});
    rules_.emplace_back();
    touch();
    return gens_.size() - 1;
  }

  void set_top_degree(std::optional<std::uint64_t> top) {
    top_degree_ = top;
    touch();
  }

  /// Declares Sq^i g = value for 1 <= i <= deg g.
  void set_sq(std::size_t g, std::uint32_t i, Terms value) {
    auto& gen = gens_.at(g);
    if (i < 1 || i > gen.degree)
      throw SemanticError("Sq" + std::to_string(i) + " on '" + gen.name + "' must have 1 <= i <= " +
                          std::to_string(gen.degree));
    check_known(value);
    for (const auto& m : value)
      if (degree(m) != gen.degree + i)
        throw SemanticError("Sq" + std::to_string(i) + " " + gen.name + " must have degree " +
                            std::to_string(gen.degree + i));
    if (!gen.sq_table) gen.sq_table.emplace();
    if (value.empty() && i < gen.degree) {
      gen.sq_table->erase(i);
    } else {
      (*gen.sq_table)[i] = std::move(value);
    }
    touch();
  }

  /// Marks g as carrying an explicit (possibly all-zero) Sq table. For a
  /// degree-1 generator an empty table means the same as none.
  void declare_sq_table(std::size_t g) {
    auto& gen = gens_.at(g);
    if (gen.degree > 1 && !gen.sq_table) gen.sq_table.emplace();
    touch();
  }

  void add_power_rule(std::size_t g, std::uint32_t exponent, Terms rhs) {
    const auto& gen = gens_.at(g);
    if (exponent < 2) throw SemanticError("power rule on '" + gen.name + "' needs exponent >= 2");
    if (rules_[g]) throw SemanticError("generator '" + gen.name + "' already has a power rule");
    check_known(rhs);
    const std::uint64_t want = std::uint64_t{exponent} * gen.degree;
    for (const auto& m : rhs) {
      if (degree(m) != want)
        throw SemanticError("right-hand side of " + gen.name + "^" + std::to_string(exponent) +
                            " must be homogeneous of degree " + std::to_string(want));
      if (m.exponent(g) >= exponent)
        throw SemanticError("right-hand side of " + gen.name + "^" + std::to_string(exponent) + " must have " +
                            gen.name + "-exponent below " + std::to_string(exponent));
      if (m.exponents().size() > g + 1)
        throw SemanticError("right-hand side of " + gen.name + "^" + std::to_string(exponent) +
                            " refers to '" + gens_[m.exponents().size() - 1].name +
                            "', which is declared after '" + gen.name + "'");
    }
    rules_[g] = PowerRule{exponent, std::move(rhs)};
    touch();
  }

  // ---- arithmetic --------------------------------------------------------

  std::uint64_t degree(const Monomial& m) const {
    const auto& e = m.exponents();
    if (e.size() > gens_.size()) throw std::invalid_argument("monomial refers to an unknown generator");
    std::uint64_t d = 0;
    for (std::size_t g = 0; g < e.size(); ++g) d += std::uint64_t{e[g]} * gens_[g].degree;
    return d;
  }

  /// True when no power rule applies and the degree is within range.
  bool is_normal(const Monomial& m) const {
    if (m.exponents().size() > gens_.size()) return false;
    if (top_degree_ && degree(m) > *top_degree_) return false;
    for (std::size_t g = 0; g < m.exponents().size(); ++g)
      if (rules_[g] && m.exponent(g) >= rules_[g]->exponent) return false;
    return true;
  }

  RingElement normalize(const Terms& raw,
                        ReductionOrder order = ReductionOrder::lowest_generator_first) const {
    check_known(raw);
    if (!has_rules_ && !top_degree_) return RingElement(id_, raw);
    std::map<Monomial, Terms> memo;
    Terms out;
    for (const auto& m : raw) add_into(out, reduce(m, order, memo));
    return RingElement(id_, std::move(out));
  }

  RingElement zero() const { return RingElement(id_, {}); }
  RingElement one() const { return normalize(Terms{Monomial{}}); }
  RingElement monomial(const Monomial& m) const { return normalize(Terms{m}); }
  RingElement generator_element(const std::string& name) const {
    return monomial(Monomial::single(generator_index(name)));
  }

  RingElement add(const RingElement& a, const RingElement& b) const {
    check_mine(a);
    check_mine(b);
    Terms out = a.terms();
    add_into(out, b.terms());
    return RingElement(id_, std::move(out));
  }

  RingElement mul(const RingElement& a, const RingElement& b) const {
    check_mine(a);
    check_mine(b);
    return normalize(multiply_terms(a.terms(), b.terms()));
  }

  RingElement power(const RingElement& a, std::uint32_t k) const {
    RingElement out = one();
    for (std::uint32_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  /// Coefficient (0 or 1) of a normal-form monomial.
  int monomial_coefficient(const RingElement& a, const Monomial& m) const {
    check_mine(a);
    if (!is_normal(m)) throw std::invalid_argument("query monomial " + format(m) + " is not in normal form");
    return a.contains(m) ? 1 : 0;
  }

  /// Common degree of the terms; nullopt for zero or mixed degrees.
  std::optional<std::uint64_t> degree(const RingElement& a) const {
    if (a.is_zero()) return std::nullopt;
    const auto d = degree(*a.terms().begin());
    for (const auto& m : a.terms())
      if (degree(m) != d) return std::nullopt;
    return d;
  }

  bool is_homogeneous(const RingElement& a) const { return a.is_zero() || degree(a).has_value(); }

  void check_mine(const RingElement& a) const {
    if (a.ring_id() != id_) throw std::invalid_argument("ring element belongs to a different ring than " + name_);
  }

  // ---- printing ----------------------------------------------------------

  std::string format(const Monomial& m) const {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t g = 0; g < m.exponents().size(); ++g) {
      const auto e = m.exponent(g);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += g < gens_.size() ? gens_[g].name : "?" + std::to_string(g);
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  /// Monomials in printing order: ascending degree, then lexicographically
  /// descending exponent vectors (x1^4*x2^2 before x1^2*x2^4).
  std::vector<Monomial> ordered(const Terms& terms) const {
    std::vector<Monomial> out(terms.begin(), terms.end());
    std::stable_sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
      const auto da = degree(a), db = degree(b);
      if (da != db) return da < db;
      return b < a;
    });
    return out;
  }

  std::string format(const Terms& terms) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& m : ordered(terms)) {
      if (!out.empty()) out += " + ";
      out += format(m);
    }
    return out;
  }

  std::string format(const RingElement& a) const { return format(a.terms()); }

  /// Structural equality: same generators, rules, tables and truncation.
  bool same_structure(const RingPresentation& other) const {
    return gens_ == other.gens_ && rules_ == other.rules_ && top_degree_ == other.top_degree_;
  }

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  void touch() {
    id_ = next_id();
    has_rules_ = std::any_of(rules_.begin(), rules_.end(), [](const auto& r) { return r.has_value(); });
  }

  void check_known(const Terms& terms) const {
    for (const auto& m : terms)
      if (m.exponents().size() > gens_.size())
        throw std::invalid_argument("monomial refers to an unknown generator of ring " + name_);
  }

  const Terms& reduce(const Monomial& m, ReductionOrder order, std::map<Monomial, Terms>& memo) const {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Terms out;
    if (!top_degree_ || degree(m) <= *top_degree_) {
      std::optional<std::size_t> hit;
      const auto& e = m.exponents();
      for (std::size_t step = 0; step < e.size(); ++step) {
        const std::size_t g = order == ReductionOrder::lowest_generator_first ? step : e.size() - 1 - step;
        if (rules_[g] && e[g] >= rules_[g]->exponent) {
          hit = g;
          break;
        }
      }
      if (!hit) {
        out.insert(m);
      } else {
        const auto& rule = *rules_[*hit];
        const Monomial rest = m.with_exponent(*hit, e[*hit] - rule.exponent);
        for (const auto& t : rule.rhs) add_into(out, reduce(rest * t, order, memo));
      }
    }
    return memo.emplace(m, std::move(out)).first->second;
  }

  std::string name_;
  std::vector<GradedGenerator> gens_;
  std::vector<std::optional<PowerRule>> rules_;
  std::optional<std::uint64_t> top_degree_;
  std::uint64_t id_;
  bool has_rules_ = false;
};

/// Free functions mirroring the member operations.
inline RingElement normalize(const RingPresentation& ring, const Terms& raw) { return ring.normalize(raw); }
inline RingElement add(const RingPresentation& ring, const RingElement& a, const RingElement& b) {
  return ring.add(a, b);
}
inline RingElement mul(const RingPresentation& ring, const RingElement& a, const RingElement& b) {
  return ring.mul(a, b);
}
inline int monomial_coefficient(const RingPresentation& ring, const RingElement& a, const Monomial& m) {
  return ring.monomial_coefficient(a, m);
}

namespace detail {
inline void enumerate_monomials(const RingPresentation& ring, std::size_t g, std::uint64_t remaining,
                                std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  if (g == ring.generator_count()) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  const auto deg = ring.generator(g).degree;
  std::uint64_t max_e = remaining / deg;
  if (const auto& rule = ring.rule(g)) max_e = std::min<std::uint64_t>(max_e, rule->exponent - 1);
  for (std::uint64_t e = max_e + 1; e-- > 0;) {
    exps[g] = static_cast<std::uint32_t>(e);
    enumerate_monomials(ring, g + 1, remaining - e * deg, exps, out);
  }
  exps[g] = 0;
}
}  // namespace detail

/// Normal-form monomials of degree n in printing order.
///
/// Throws for n > 0 when the ring has neither a top degree nor a power rule
/// on every generator. Degree 0 is always {1}.
inline std::vector<Monomial> ring_basis_in_degree(const RingPresentation& ring, std::uint64_t n) {
  if (n == 0) return {Monomial{}};
  if (!ring.top_degree()) {
    for (std::size_t g = 0; g < ring.generator_count(); ++g)
      if (!ring.rule(g))
        throw std::domain_error("ring " + ring.name() + " may have an infinite basis: generator '" +
                                ring.generator(g).name + "' has no power rule and no top degree is set");
  }
  if (ring.top_degree() && n > *ring.top_degree()) return {};
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(ring.generator_count(), 0);
  detail::enumerate_monomials(ring, 0, n, exps, out);
  return out;
}

inline std::size_t ring_dimension(const RingPresentation& ring, std::uint64_t n) {
  return ring_basis_in_degree(ring, n).size();
}

/// Extends ring by a degree-1 generator d with d^2 = epsilon * d. The top
/// degree, when set, grows by one.
inline RingPresentation adjoin_cover(const RingPresentation& ring, const std::string& name,
                                     const RingElement& epsilon) {
  ring.check_mine(epsilon);
  if (!epsilon.is_zero() && ring.degree(epsilon) != std::optional<std::uint64_t>{1})
    throw SemanticError("cover class for '" + name + "' must be homogeneous of degree 1");
  RingPresentation out = ring;
  const std::size_t d = out.add_generator(name, 1);
  out.add_power_rule(d, 2, multiply_terms(epsilon.terms(), Terms{Monomial::single(d)}));
  if (ring.top_degree()) out.set_top_degree(*ring.top_degree() + 1);
  return out;
}

/// Tensor product over F_2. Generators of b follow those of a; a name of b
/// that collides is suffixed with "_2" until unique. The top degree is the
/// sum when both are set.
inline RingPresentation tensor(const RingPresentation& a, const RingPresentation& b) {
  RingPresentation out = a;
  out.rename(a.name() + "_x_" + b.name());
  const std::size_t offset = a.generator_count();
  for (const auto& gen : b.generators()) {
    std::string name = gen.name;
    while (out.find_generator(name)) name += "_2";
    out.add_generator(name, gen.degree);
  }
  for (std::size_t g = 0; g < b.generator_count(); ++g) {
    const auto& gen = b.generator(g);
    if (gen.sq_table) {
      out.declare_sq_table(offset + g);
      for (const auto& [i, value] : *gen.sq_table) {
        Terms shifted;
        for (const auto& m : value) shifted.insert(m.shifted(offset));
        out.set_sq(offset + g, i, std::move(shifted));
      }
    }
    if (const auto& rule = b.rule(g)) {
      Terms shifted;
      for (const auto& m : rule->rhs) shifted.insert(m.shifted(offset));
      out.add_power_rule(offset + g, rule->exponent, std::move(shifted));
    }
  }
  if (a.top_degree() && b.top_degree()) {
    out.set_top_degree(*a.top_degree() + *b.top_degree());
  } else {
    out.set_top_degree(std::nullopt);
  }
  return out;
}

/// Image of an element of source in target, where target's generators
/// starting at offset extend those of source (adjoin_cover uses offset 0,
/// the right factor of tensor uses a.generator_count()).
inline RingElement embed(const RingPresentation& target, const RingPresentation& source,
                         const RingElement& element, std::size_t offset = 0) {
  source.check_mine(element);
  if (offset + source.generator_count() > target.generator_count())
    throw std::invalid_argument("embedding does not fit into ring " + target.name());
  for (std::size_t g = 0; g < source.generator_count(); ++g)
    if (target.generator(offset + g).degree != source.generator(g).degree)
      throw std::invalid_argument("embedding changes generator degrees");
  Terms shifted;
  for (const auto& m : element.terms()) shifted.insert(m.shifted(offset));
  return target.normalize(shifted);
}

}  // namespace steenrod
