#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "steenrod/adem.hpp"
#include "steenrod/binomial.hpp"
#include "steenrod/expression.hpp"
#include "steenrod/gf2.hpp"
#include "steenrod/ideal.hpp"
#include "steenrod/random.hpp"

using namespace steenrod;

namespace {

AdemElement el(std::initializer_list<SquareWord> words) {
  AdemElement e;
  for (const auto& w : words) e.toggle(w);
  return e;
}

std::string nf(const char* text) { return to_admissible(parse_steenrod(text)).to_string(); }

}  // namespace

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binom_mod2(0, 0), 1);
  EXPECT_EQ(binom_mod2(2, 1), 0);
  EXPECT_EQ(binom_mod2(3, 1), 1);
  EXPECT_EQ(binom_mod2(5, 2), 0);
  EXPECT_EQ(binom_mod2(7, 5), 1);
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binom_mod2(3, -1), 0);
  EXPECT_EQ(binom_mod2(3, 4), 0);
  EXPECT_EQ(binom_mod2(-1, 0), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  std::vector<int> row{1};
  for (int n = 0; n < 200; ++n) {
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binom_mod2(n, k), row[static_cast<std::size_t>(k)]) << n << " " << k;
    std::vector<int> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < next.size(); ++k)
      next[k] = ((k < row.size() ? row[k] : 0) + (k ? row[k - 1] : 0)) % 2;
    row = next;
  }
}

TEST(Binomial, EvenTopOddBottomVanishes) {
  for (int n = 0; n <= 512; n += 2)
    for (int k = 1; k <= n; k += 2) ASSERT_EQ(binom_mod2(n, k), 0);
}

TEST(SquareWord, ElidesZerosAndTracksDegree) {
  const SquareWord w{0, 3, 0, 1};
  EXPECT_EQ(w.length(), 2u);
  EXPECT_EQ(w.degree(), 4u);
  EXPECT_EQ(w.to_string(), "Sq3 Sq1");
  EXPECT_EQ(SquareWord{}.to_string(), "1");
  EXPECT_EQ(SquareWord{0}.length(), 0u);
  EXPECT_THROW((SquareWord{2, -1}), std::invalid_argument);
}

TEST(SquareWord, Admissibility) {
  EXPECT_TRUE((SquareWord{31, 15, 7, 3}).admissible());
  EXPECT_TRUE((SquareWord{2, 1}).admissible());
  EXPECT_FALSE((SquareWord{2, 2}).admissible());
  EXPECT_EQ((SquareWord{4, 2, 2, 1, 1}).first_inadmissible(), 1u);
  EXPECT_EQ((SquareWord{4, 2, 2, 1, 1}).last_inadmissible(), 3u);
  EXPECT_EQ(SquareWord{}.first_inadmissible(), SquareWord::npos);
}

TEST(AdemElement, AdditionCancels) {
  AdemElement a = sq(3);
  a += sq(3);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.to_string(), "0");
  EXPECT_EQ(AdemElement::unit().to_string(), "1");
  EXPECT_EQ((sq(3) + AdemElement(SquareWord{2, 1})).to_string(), "Sq3 + Sq2 Sq1");
}

TEST(AdemElement, DegreeAndHomogeneity) {
  EXPECT_EQ((sq(4) + AdemElement(SquareWord{3, 1})).degree(), std::optional<std::uint64_t>(4));
  const AdemElement mixed = sq(4) + sq(3);
  EXPECT_FALSE(mixed.is_homogeneous());
  EXPECT_FALSE(mixed.degree().has_value());
}

TEST(AdemPair, Examples) {
  EXPECT_TRUE(adem_pair(1, 1).is_zero());
  EXPECT_EQ(adem_pair(1, 2), sq(3));
  EXPECT_EQ(adem_pair(2, 2), el({SquareWord{3, 1}}));
  EXPECT_EQ(adem_pair(3, 3), el({SquareWord{5, 1}}));
  EXPECT_EQ(adem_pair(2, 3), el({SquareWord{5}, SquareWord{4, 1}}));
}

TEST(AdemPair, RejectsAdmissiblePairs) {
  EXPECT_THROW(adem_pair(2, 1), std::invalid_argument);
  EXPECT_THROW(adem_pair(6, 3), std::invalid_argument);
  EXPECT_THROW(adem_pair(0, 3), std::invalid_argument);
}

TEST(AdemPair, OutputIsShortAndAdmissible) {
  for (Exponent j = 1; j < 40; ++j)
    for (Exponent i = 1; i < 2 * j; ++i)
      for (const auto& w : adem_pair(i, j).words()) {
        ASSERT_LE(w.length(), 2u);
        ASSERT_TRUE(w.admissible());
        ASSERT_EQ(w.degree(), i + j);
      }
}

TEST(ToAdmissible, Examples) {
  EXPECT_EQ(nf("Sq2 Sq2"), "Sq3 Sq1");
  EXPECT_EQ(nf("Sq1 Sq1"), "0");
  EXPECT_EQ(nf("Sq31 Sq15 Sq7 Sq3"), "Sq31 Sq15 Sq7 Sq3");
  EXPECT_EQ(nf("S3"), "Sq7 Sq3");
  EXPECT_EQ(nf("1"), "1");
  EXPECT_EQ(nf("0"), "0");
  EXPECT_EQ(nf("Sq2 Sq2 + Sq3 Sq1"), "0");
}

TEST(ToAdmissible, StrategiesAgreeOnLongWord) {
  AdemNormalizer left(RewriteStrategy::leftmost);
  AdemNormalizer right(RewriteStrategy::rightmost);
  const SquareWord w{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(left.normalize(w), right.normalize(w));
  EXPECT_TRUE(left.normalize(w).is_canonical());
  EXPECT_GT(left.cache_size(), 0u);
}

TEST(ToAdmissible, TopIntermediateDegreeOfOddRange) {
  // Sq61 S_5 has degree 117, the largest product in the default range.
  const AdemElement product = multiply(sq(61), s_element(5));
  EXPECT_TRUE(product.is_zero());
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(AdemElement::unit(), sq(5)), sq(5));
  EXPECT_EQ(multiply(sq(5), AdemElement::unit()), sq(5));
  EXPECT_EQ(multiply(sq(1), sq(2)), sq(3));
  EXPECT_EQ(multiply(sq(3), sq(3)).to_string(), "Sq5 Sq1");
  EXPECT_TRUE(multiply(sq(1), AdemElement::zero()).is_zero());
}

TEST(SElement, Examples) {
  EXPECT_EQ(s_element(1), AdemElement::unit());
  EXPECT_EQ(s_element(2), sq(3));
  EXPECT_EQ(s_element(3).to_string(), "Sq7 Sq3");
  for (int j = 1; j <= 8; ++j) {
    EXPECT_EQ(s_element(j).degree(), std::optional<std::uint64_t>(s_element_degree(j)));
    EXPECT_TRUE(s_word(j).admissible());
  }
  EXPECT_EQ(s_element_degree(3), 10u);
  EXPECT_THROW(s_element(0), std::invalid_argument);
}

TEST(LeftIdeal, Examples) {
  EXPECT_TRUE(in_left_ideal_sq1(AdemElement(SquareWord{3, 1})));
  EXPECT_FALSE(in_left_ideal_sq1(sq(2)));
  EXPECT_TRUE(in_left_ideal_sq1(multiply(sq(3), s_element(2))));
  EXPECT_TRUE(in_left_ideal_sq1(AdemElement::zero()));
  EXPECT_FALSE(in_left_ideal_sq1(AdemElement::unit()));
  EXPECT_TRUE(in_left_ideal_sq1(parse_steenrod("Sq3 Sq3")));
}

TEST(TwoSidedIdeal, Examples) {
  EXPECT_TRUE(in_two_sided_ideal_sq1(sq(1)));
  EXPECT_FALSE(in_two_sided_ideal_sq1(sq(2)));
  EXPECT_TRUE(in_two_sided_ideal_sq1(sq(3)));
  EXPECT_TRUE(in_two_sided_ideal_sq1(AdemElement::zero()));
  EXPECT_FALSE(in_two_sided_ideal_sq1(AdemElement::unit()));
  // Sq2 Sq2 = Sq3 Sq1 is a member although Sq2 is not
  EXPECT_TRUE(in_two_sided_ideal_sq1(parse_steenrod("Sq2 Sq2")));
}

TEST(TwoSidedIdeal, EvenSquaresOfPowerOfTwoDegreeAreOutside) {
  // Sq^{2^k} is indecomposable, so it is not in the ideal
  EXPECT_FALSE(in_two_sided_ideal_sq1(sq(4)));
  EXPECT_FALSE(in_two_sided_ideal_sq1(sq(8)));
}

TEST(TwoSidedIdeal, Errors) {
  EXPECT_THROW(in_two_sided_ideal_sq1(sq(2) + sq(3)), std::invalid_argument);
  EXPECT_THROW(in_two_sided_ideal_sq1(sq(31)), std::domain_error);
  EXPECT_THROW(in_two_sided_ideal_sq1(sq(12), 10), std::domain_error);
  EXPECT_NO_THROW(in_two_sided_ideal_sq1(sq(30)));
}

TEST(Basis, Examples) {
  EXPECT_EQ(basis_in_degree(0), std::vector<SquareWord>{SquareWord{}});
  EXPECT_EQ(basis_in_degree(1), std::vector<SquareWord>{SquareWord{1}});
  EXPECT_EQ(basis_in_degree(3), (std::vector<SquareWord>{SquareWord{3}, SquareWord{2, 1}}));
}

TEST(Basis, FixpointsDistinctAndCountedCorrectly) {
  // dimensions of the Steenrod algebra in degrees 0..12
  const std::size_t dims[] = {1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6, 6, 7};
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const auto basis = basis_in_degree(n);
    EXPECT_EQ(basis.size(), dims[n]) << n;
    std::set<SquareWord> seen(basis.begin(), basis.end());
    EXPECT_EQ(seen.size(), basis.size());
    for (const auto& w : basis) {
      EXPECT_EQ(w.degree(), n);
      EXPECT_EQ(to_admissible(AdemElement(w)), AdemElement(w));
    }
  }
}

TEST(Gf2, RowSpace) {
  Gf2RowSpace space(130);
  Gf2Vector a(130), b(130), c(130);
  a.flip(0);
  a.flip(129);
  b.flip(129);
  c.flip(0);
  EXPECT_TRUE(space.insert(a));
  EXPECT_TRUE(space.insert(b));
  EXPECT_FALSE(space.insert(c));
  EXPECT_EQ(space.rank(), 2u);
  EXPECT_TRUE(space.contains(c));
  Gf2Vector d(130);
  d.flip(64);
  EXPECT_FALSE(space.contains(d));
  EXPECT_TRUE(space.contains(Gf2Vector(130)));
}

TEST(Expression, Syntax) {
  EXPECT_EQ(parse_steenrod("Sq7Sq3"), AdemElement(SquareWord{7, 3}));
  EXPECT_EQ(parse_steenrod("  Sq7  Sq3+Sq10 "), AdemElement(SquareWord{7, 3}) + sq(10));
  EXPECT_EQ(parse_steenrod("S3 Sq1"), AdemElement(SquareWord{7, 3, 1}));
  EXPECT_EQ(parse_steenrod("S1"), AdemElement::unit());
  EXPECT_EQ(parse_steenrod("1 + 1"), AdemElement::zero());
  EXPECT_EQ(parse_steenrod("Sq2 Sq2"), AdemElement(SquareWord{2, 2}));  // not normalized
}

TEST(Expression, ErrorsCarryColumn) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"Sq0", 1}, {"Sq3 Sq0", 5}, {"S0", 1}, {"Sq", 3}, {"Sq3 +", 6}, {"Sq3 x", 5}, {"", 1}, {"Sq2 + + Sq1", 7},
  };
  for (const auto& [text, column] : cases) {
    try {
      (void)parse_steenrod(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.column(), column) << text << ": " << e.what();
    }
  }
  EXPECT_THROW(parse_steenrod("Sq99999999999"), ParseError);
}

TEST(Expression, RoundTripOfCanonicalElements) {
  Rng rng(default_seed);
  for (int c = 0; c < 300; ++c) {
    const AdemElement e = to_admissible(random_adem_element(rng, uniform(rng, 0, 30)));
    ASSERT_EQ(parse_steenrod(e.to_string()), e) << e.to_string();
  }
}
