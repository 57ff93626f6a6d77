#include <set>

#include <gtest/gtest.h>

#include "ggp/decomposition.hpp"
#include "ggp/error.hpp"
#include "ggp/multiplicity.hpp"
#include "ggp/qseries.hpp"

using namespace ggp;

TEST(Restriction, SteinbergOfU2) {
  const Decomposition d = restriction_decomposition(Partition{1, 1}, 3);
  ASSERT_EQ(d.terms.size(), 1U);
  const DecompositionTerm& t = d.terms[0];
  EXPECT_EQ(t.target_partition, Partition{});
  EXPECT_EQ(t.rank_of_s, 1U);
  EXPECT_EQ(t.family.count, 3);
  EXPECT_EQ(t.per_class_degree, 1);
  EXPECT_EQ(d.total_degree, 3);
  EXPECT_EQ(d.expected_degree(), 3);
}

TEST(Restriction, TrivialOfU2) {
  const Decomposition d = restriction_decomposition(Partition{2}, 3);
  ASSERT_EQ(d.terms.size(), 1U);
  EXPECT_EQ(d.terms[0].target_partition, (Partition{1}));
  EXPECT_EQ(d.terms[0].rank_of_s, 0U);
  EXPECT_TRUE(d.terms[0].family.class_type.empty());
  EXPECT_EQ(d.terms[0].per_class_degree, 1);
  EXPECT_EQ(d.total_degree, 1);
}

TEST(Restriction, CuspidalOfU3) {
  const Decomposition d = restriction_decomposition(Partition{2, 1}, 3);
  ASSERT_EQ(d.terms.size(), 1U);
  EXPECT_EQ(d.terms[0].target_partition, (Partition{1}));
  EXPECT_EQ(d.terms[0].family.count, 3);
  EXPECT_EQ(d.terms[0].per_class_degree, 2);
  EXPECT_EQ(d.total_degree, 6);
  EXPECT_TRUE(verify_dimension_identity(d).holds);
}

TEST(Restriction, Errors) {
  EXPECT_THROW(restriction_decomposition(Partition{}, 3), DomainError);
  try {
    restriction_decomposition(Partition{2}, 4);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "characteristic must be odd");
  }
  EXPECT_THROW(weil_decomposition(Partition{2}, 2), DomainError);
  EXPECT_THROW(weil_decomposition(Partition{2}, 6), DomainError);
}

TEST(Weil, SmallCases) {
  const Decomposition w1 = weil_decomposition(Partition{1}, 3);
  ASSERT_EQ(w1.terms.size(), 1U);
  EXPECT_EQ(w1.terms[0].target_partition, Partition{});
  EXPECT_EQ(w1.terms[0].family.count, 3);
  EXPECT_EQ(w1.terms[0].per_class_degree, 1);
  EXPECT_EQ(w1.total_degree, 3);

  const Decomposition w2 = weil_decomposition(Partition{2}, 3);
  ASSERT_EQ(w2.terms.size(), 2U);
  EXPECT_EQ(w2.terms[0].target_partition, (Partition{1}));
  EXPECT_EQ(w2.terms[0].family.count, 3);
  EXPECT_EQ(w2.terms[0].per_class_degree, 2);
  EXPECT_EQ(w2.terms[1].target_partition, (Partition{1, 1}));
  EXPECT_TRUE(w2.terms[1].family.class_type.empty());
  EXPECT_EQ(w2.terms[1].per_class_degree, 3);
  EXPECT_EQ(w2.total_degree, 9);

  const Decomposition w0 = weil_decomposition(Partition{}, 7);
  ASSERT_EQ(w0.terms.size(), 1U);
  EXPECT_EQ(w0.total_degree, 1);
  EXPECT_TRUE(verify_dimension_identity(w0).holds);
}

TEST(Dimension, ReportLines) {
  const DimensionReport r = verify_dimension_identity(weil_decomposition(Partition{2}, 3));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.total, 9);
  EXPECT_EQ(r.expected, 9);
  ASSERT_EQ(r.lines.size(), 3U);
  EXPECT_EQ(r.lines.back(), "total=9 expected=9 OK");

  Decomposition tampered = restriction_decomposition(Partition{3}, 3);
  EXPECT_TRUE(verify_dimension_identity(tampered).holds);
  tampered.terms.front().per_class_degree += 1;
  EXPECT_FALSE(verify_dimension_identity(tampered).holds);
}

TEST(Dimension, IdentitySweep) {
  for (auto [q, n_max] : {std::pair{3ULL, 5U}, {5ULL, 4U}, {7ULL, 3U}, {9ULL, 3U}}) {
    for (unsigned n = 0; n <= n_max; ++n) {
      for (const Partition& lambda : partitions_of(n)) {
        std::vector<Decomposition> ds{weil_decomposition(lambda, q)};
        if (n > 0) ds.push_back(restriction_decomposition(lambda, q));
        for (const Decomposition& d : ds) {
          ASSERT_TRUE(verify_dimension_identity(d).holds) << to_string(d.kind) << " " << lambda << " q=" << q;

          std::set<std::pair<Partition, std::string>> labels;
          std::set<Partition> targets;
          const unsigned smaller = d.kind == DecompositionKind::Restriction ? n - 1 : n;
          const ExactInt order = unitary_group_order(smaller, q).total();
          for (const DecompositionTerm& t : d.terms) {
            labels.insert({t.target_partition, t.family.class_type.to_string()});
            targets.insert(t.target_partition);
            ASSERT_TRUE(two_transverse(lambda, t.target_partition));
            ASSERT_GE(t.per_class_degree, 1);
            ASSERT_EQ(order % t.per_class_degree, 0);
          }
          ASSERT_EQ(labels.size(), d.terms.size());

          std::set<Partition> partners;
          for (unsigned m = 0; m <= smaller; ++m)
            for (const Partition& mu : ggp_partners(lambda, m)) partners.insert(mu);
          ASSERT_EQ(partners, targets);
        }
      }
    }
  }
}

TEST(Dimension, TermsAreCanonicallyOrdered) {
  const Decomposition d = weil_decomposition(Partition{3, 1}, 5);
  for (std::size_t i = 1; i < d.terms.size(); ++i) {
    const auto& a = d.terms[i - 1];
    const auto& b = d.terms[i];
    const unsigned ma = a.target_partition.size();
    const unsigned mb = b.target_partition.size();
    ASSERT_TRUE(ma < mb || (ma == mb && (a.target_partition < b.target_partition ||
                                         (a.target_partition == b.target_partition &&
                                          a.family.class_type < b.family.class_type))));
  }
}
