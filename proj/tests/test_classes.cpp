#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "ggp/classes.hpp"
#include "ggp/error.hpp"
#include "ggp/finite_field.hpp"

using namespace ggp;

namespace {

ClassType type_of(std::initializer_list<std::pair<const unsigned, Partition>> entries) {
  ClassType t;
  t.assignment = std::map<unsigned, Partition>(entries);
  return t;
}

ExactInt total_classes(const std::vector<ClassFamily>& families) {
  ExactInt n = 0;
  for (const ClassFamily& f : families) n += f.count;
  return n;
}

}  // namespace

TEST(FiniteField, SmallFieldsAreFields) {
  for (auto [p, n] : {std::pair{2U, 1U}, {2U, 2U}, {2U, 6U}, {3U, 1U}, {3U, 2U}, {3U, 4U}, {5U, 2U}}) {
    const FiniteField f(p, n);
    std::set<std::uint32_t> seen;
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
      seen.insert(x);
      x = f.mul(x, f.generator());
    }
    EXPECT_EQ(x, 1U);
    EXPECT_EQ(seen.size(), f.size() - 1) << p << "^" << n;
    EXPECT_EQ(seen.count(0), 0U);
  }
}

TEST(FiniteField, ModulusIsDeterministic) {
  // x^2 + x + 2 is the first primitive quadratic over F_3 in the scan order.
  EXPECT_EQ(FiniteField(3, 2).modulus(), (std::vector<std::uint32_t>{2, 1}));
  // x^2 + x + 1 over F_2.
  EXPECT_EQ(FiniteField(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_THROW(FiniteField(4, 1), DomainError);
}

TEST(Orbits, Counts) {
  EXPECT_EQ(orbit_count(1, 3), 4);
  EXPECT_EQ(orbit_count(2, 3), 2);
  EXPECT_EQ(orbit_count(3, 3), 8);
  EXPECT_EQ(orbit_count(1, 2), 3);
  EXPECT_EQ(orbit_count(2, 2), 0);
  EXPECT_EQ(orbit_count(4, 9), 1620);
  EXPECT_THROW(orbit_count(0, 3), DomainError);
}

TEST(Orbits, FixedPointIdentity) {
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 9ULL}) {
    for (unsigned d = 1; d <= 12; ++d) {
      ExactInt sum = 0;
      for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0) sum += e * orbit_count(e, q);
      ASSERT_EQ(sum, ipow(q, d) - sign_power(d)) << q << " " << d;
    }
  }
}

TEST(Orbits, CensusMatchesFormula) {
  const auto c23 = brute_force_orbit_census(2, 3);
  EXPECT_EQ(c23.at(1), 4);
  EXPECT_EQ(c23.at(2), 2);
  const auto c12 = brute_force_orbit_census(1, 2);
  EXPECT_EQ(c12.at(1), 3);
  const auto c33 = brute_force_orbit_census(3, 3);
  EXPECT_EQ(c33.at(3), 8);
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 5ULL}) {
    const unsigned d_max = q <= 3 ? 3 : 2;
    for (const auto& [d, n] : brute_force_orbit_census(d_max, q)) ASSERT_EQ(n, orbit_count(d, q)) << q << " " << d;
  }
}

TEST(Orbits, CensusRange) {
  try {
    brute_force_orbit_census(4, 7, 1000);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "oracle range");
  }
  ::setenv("GGP_ORACLE_LIMIT", "100", 1);
  EXPECT_EQ(oracle_limit(), 100U);
  EXPECT_THROW(brute_force_orbit_census(3, 3), DomainError);
  ::unsetenv("GGP_ORACLE_LIMIT");
  EXPECT_EQ(oracle_limit(), kDefaultOracleLimit);
}

TEST(ClassTypes, Enumeration) {
  const auto k1 = enumerate_class_types(1, 3, true);
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1[0].class_type, type_of({{1, Partition{1}}}));
  EXPECT_EQ(k1[0].count, 3);

  const auto k2 = enumerate_class_types(2, 3, true);
  ASSERT_EQ(k2.size(), 3U);
  EXPECT_EQ(k2[0].class_type, type_of({{1, Partition{2}}}));
  EXPECT_EQ(k2[0].count, 3);
  EXPECT_EQ(k2[1].class_type, type_of({{1, Partition{1, 1}}}));
  EXPECT_EQ(k2[1].count, 3);
  EXPECT_EQ(k2[2].class_type, type_of({{2, Partition{1}}}));
  EXPECT_EQ(k2[2].count, 2);
  EXPECT_EQ(total_classes(k2), 8);

  for (bool exclude : {true, false}) {
    const auto k0 = enumerate_class_types(0, 5, exclude);
    ASSERT_EQ(k0.size(), 1U);
    EXPECT_TRUE(k0[0].class_type.empty());
    EXPECT_EQ(k0[0].count, 1);
  }
  EXPECT_EQ(total_classes(enumerate_class_types(2, 3, false)), 12);
}

TEST(ClassTypes, ExhaustedPoolsAreOmitted) {
  // q = 2 has no orbits of size 2, and only two size-1 orbits besides {1}.
  for (const ClassFamily& f : enumerate_class_types(4, 2, true)) {
    EXPECT_EQ(f.class_type.assignment.count(2), 0U);
    if (auto it = f.class_type.assignment.find(1); it != f.class_type.assignment.end())
      EXPECT_LE(it->second.length(), 2U);
    EXPECT_GE(f.count, 1);
  }
}

TEST(ClassTypes, CountsMatchDirectEnumerationOfOrbitMultisets) {
  // Oracle: enumerate multisets of (orbit id, multiplicity) pairs directly.
  const std::uint64_t q = 3;
  for (unsigned k = 0; k <= 5; ++k) {
    std::vector<unsigned> orbit_sizes;
    for (unsigned d = 1; d <= k; ++d)
      for (ExactInt i = 0; i < orbit_count(d, q); ++i) orbit_sizes.push_back(d);
    // Count functions orbit -> multiplicity with sum size*mult == k.
    std::vector<ExactInt> ways(k + 1, 0);
    ways[0] = 1;
    for (unsigned size : orbit_sizes) {
      std::vector<ExactInt> next(k + 1, 0);
      for (unsigned t = 0; t <= k; ++t)
        for (unsigned mult = 0; t + size * mult <= k; ++mult) next[t + size * mult] += ways[t];
      ways = next;
    }
    ASSERT_EQ(total_classes(enumerate_class_types(k, q, false)), ways[k]) << k;
  }
}

TEST(ClassTypes, CentralizerOrders) {
  EXPECT_EQ(centralizer_order(type_of({{1, Partition{1, 1}}}), 3).total(), 16);
  EXPECT_EQ(centralizer_order(type_of({{2, Partition{1}}}), 3).total(), 8);
  EXPECT_EQ(centralizer_order(type_of({{1, Partition{2}}}), 3).total(), 96);
  EXPECT_EQ(centralizer_order(ClassType{}, 3).total(), 1);
  EXPECT_EQ(type_of({{1, Partition{2, 1}}, {2, Partition{1}}}).to_string(), "d=1:2,1;d=2:1");
  EXPECT_EQ(ClassType{}.to_string(), "-");
}

TEST(ClassTypes, CentralizersDivideGroupOrder) {
  for (unsigned k = 0; k <= 5; ++k) {
    const ExactInt order = unitary_group_order(k, 3).total();
    for (bool exclude : {true, false})
      for (const ClassFamily& f : enumerate_class_types(k, 3, exclude)) {
        ASSERT_EQ(f.class_type.total(), k);
        ASSERT_EQ(order % centralizer_order(f.class_type, 3).total(), 0) << f.class_type.to_string();
      }
  }
}

// Explicit model of U_2(3) = { g in GL_2(F_9) : conj(g)^T g = 1 }.
class UnitaryTwoByThree : public ::testing::Test {
 protected:
  using Mat = std::array<std::uint32_t, 4>;  // a b / c d

  FiniteField f{3, 2};

  std::uint32_t conj(std::uint32_t x) const { return f.pow(x, 3); }
  std::uint32_t neg(std::uint32_t x) const { return f.mul(x, 2); }

  Mat mul(const Mat& x, const Mat& y) const {
    return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
  }
  Mat adjoint(const Mat& x) const { return {conj(x[0]), conj(x[2]), conj(x[1]), conj(x[3])}; }

  std::vector<Mat> elements() const {
    const Mat one{1, 0, 0, 1};
    std::vector<Mat> out;
    for (std::uint32_t a = 0; a < 9; ++a)
      for (std::uint32_t b = 0; b < 9; ++b)
        for (std::uint32_t c = 0; c < 9; ++c)
          for (std::uint32_t d = 0; d < 9; ++d) {
            const Mat g{a, b, c, d};
            if (mul(adjoint(g), g) == one) out.push_back(g);
          }
    return out;
  }

  unsigned order(const Mat& g) const {
    const Mat one{1, 0, 0, 1};
    Mat x = g;
    unsigned n = 1;
    while (x != one) {
      x = mul(x, g);
      ++n;
    }
    return n;
  }

  bool has_eigenvalue_one(const Mat& g) const {
    const std::uint32_t a1 = f.add(g[0], neg(1));
    const std::uint32_t d1 = f.add(g[3], neg(1));
    return f.add(f.mul(a1, d1), neg(f.mul(g[1], g[2]))) == 0;
  }
};

TEST_F(UnitaryTwoByThree, MatchesClassCensus) {
  const auto group = elements();
  ASSERT_EQ(ExactInt(group.size()), unitary_group_order(2, 3).total());

  std::set<Mat> seen;
  std::vector<ExactInt> centralizers_all;
  std::vector<ExactInt> centralizers_no_one;
  for (const Mat& g : group) {
    if (order(g) % 3 == 0 || seen.count(g)) continue;  // semisimple = 3'-element
    std::set<Mat> cls;
    for (const Mat& h : group) cls.insert(mul(mul(h, g), adjoint(h)));
    seen.insert(cls.begin(), cls.end());
    const ExactInt centralizer = ExactInt(group.size()) / cls.size();
    centralizers_all.push_back(centralizer);
    if (!has_eigenvalue_one(g)) centralizers_no_one.push_back(centralizer);
  }

  auto expected = [](bool exclude) {
    std::vector<ExactInt> out;
    for (const ClassFamily& f : enumerate_class_types(2, 3, exclude))
      for (ExactInt i = 0; i < f.count; ++i) out.push_back(centralizer_order(f.class_type, 3).total());
    std::sort(out.begin(), out.end());
    return out;
  };
  std::sort(centralizers_all.begin(), centralizers_all.end());
  std::sort(centralizers_no_one.begin(), centralizers_no_one.end());
  EXPECT_EQ(centralizers_all.size(), 12U);
  EXPECT_EQ(centralizers_all, expected(false));
  EXPECT_EQ(centralizers_no_one, expected(true));
}
