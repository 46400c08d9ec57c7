#include <gtest/gtest.h>

#include <vector>

#include "kqg/hall.hpp"
#include "kqg/oracle/abelian_groups.hpp"
#include "kqg/oracle/kronecker_rep.hpp"

using kqg::HallTriple;
using kqg::Integer;
using kqg::KroneckerDescriptor;
using kqg::LaurentPoly;
using kqg::Partition;
using kqg::hall_polynomial;

namespace {

LaurentPoly X(const char* s) { return LaurentPoly::parse(s, 'x'); }
LaurentPoly Q(const char* s) { return LaurentPoly::parse(s); }

std::vector<Partition> all_partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& p : kqg::partitions_of(w)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Partition, Basics) {
  const Partition l{3, 1, 1};
  EXPECT_EQ(l.weight(), 5);
  EXPECT_EQ(l.n(), 0 * 3 + 1 * 1 + 2 * 1);
  EXPECT_EQ(l.conjugate(), (Partition{3, 1, 1}));
  EXPECT_EQ((Partition{4, 2}).conjugate(), (Partition{2, 2, 1, 1}));
  EXPECT_TRUE(l.contains(Partition{2, 1}));
  EXPECT_FALSE(l.contains(Partition{2, 2}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(kqg::partitions_of(5).size(), 7u);
  EXPECT_EQ(kqg::sub_partitions(Partition{2, 1}).size(), 5u);  // {}, 1, 2, 11, 21
}

TEST(Hall, Examples) {
  EXPECT_EQ(hall_polynomial(Partition{1, 1}, Partition{1}, Partition{1}), X("x + 1"));
  EXPECT_EQ(hall_polynomial(Partition{2}, Partition{1}, Partition{1}), X("1"));
  for (const auto& lambda : all_partitions_up_to(5)) EXPECT_EQ(hall_polynomial(lambda, Partition{}, lambda), X("1"));
  EXPECT_TRUE(hall_polynomial(Partition{2}, Partition{2}, Partition{1}).is_zero());
}

// g^{(2,1)}_{(1),(1,1)}: computed once from subgroup counts at p = 2, 3, 5, 7
// and frozen here.
TEST(Hall, FrozenRegressionValue) {
  const HallTriple t{Partition{2, 1}, Partition{1}, Partition{1, 1}};
  kqg::oracle::CensusCache cache;
  const std::vector<int> primes{2, 3, 5, 7};
  EXPECT_EQ(kqg::oracle::interpolate_hall_polynomial(t, primes, cache), X("1"));
  EXPECT_EQ(hall_polynomial(t), X("1"));
}

// Hall polynomials need not have nonnegative coefficients.
TEST(Hall, NegativeCoefficientExample) {
  const HallTriple t{Partition{3, 1}, Partition{2}, Partition{2}};
  EXPECT_EQ(hall_polynomial(t), X("x - 1"));
  for (int p : {2, 3, 5}) EXPECT_EQ(kqg::oracle::count_subgroups(t, p), p - 1);
}

TEST(Hall, SymmetricInSubAndQuotient) {
  for (const auto& lambda : all_partitions_up_to(6))
    for (const auto& mu : kqg::sub_partitions(lambda))
      for (const auto& nu : kqg::sub_partitions(lambda))
        EXPECT_EQ(hall_polynomial(lambda, nu, mu), hall_polynomial(lambda, mu, nu))
            << lambda.to_string() << " " << nu.to_string() << " " << mu.to_string();
}

TEST(Hall, VanishingRule) {
  const auto parts = all_partitions_up_to(4);
  for (const auto& lambda : parts)
    for (const auto& mu : parts)
      for (const auto& nu : parts)
        if (!HallTriple{lambda, nu, mu}.may_be_nonzero()) {
          EXPECT_TRUE(hall_polynomial(lambda, nu, mu).is_zero());
        }
}

TEST(Hall, DegreeBound) {
  for (const auto& lambda : all_partitions_up_to(6))
    for (const auto& mu : kqg::sub_partitions(lambda))
      for (const auto& nu : kqg::sub_partitions(lambda)) {
        const HallTriple t{lambda, nu, mu};
        const LaurentPoly g = hall_polynomial(t);
        if (g.is_zero()) continue;
        EXPECT_TRUE(g.is_polynomial());
        EXPECT_EQ(g.high_degree(), t.degree_bound()) << lambda.to_string() << " " << nu.to_string() << " " << mu.to_string();
      }
}

TEST(Hall, MatchesSubgroupCensus) {
  for (int p : {2, 3}) {
    for (const auto& lambda : all_partitions_up_to(5)) {
      const auto census = kqg::oracle::subgroup_census(lambda, p);
      Integer total_census = 0, total_hall = 0;
      for (const auto& [types, count] : census) total_census += count;
      for (const auto& mu : kqg::sub_partitions(lambda))
        for (const auto& nu : kqg::sub_partitions(lambda)) {
          auto it = census.find({mu, nu});
          const Integer expected = it == census.end() ? Integer(0) : it->second;
          const Integer got = hall_polynomial(lambda, nu, mu).eval_integer(p);
          EXPECT_EQ(got, expected) << lambda.to_string() << " mu=" << mu.to_string() << " nu=" << nu.to_string() << " p=" << p;
          total_hall += got;
        }
      EXPECT_EQ(total_hall, total_census) << lambda.to_string();
    }
  }
}

TEST(Hall, CensusCountsEverySubgroupOnce) {
  // number of subgroups of (Z/p)^r is the sum of Gaussian coefficients
  for (int p : {2, 3})
    for (int r = 1; r <= 4; ++r) {
      Integer total = 0;
      for (const auto& [types, count] : kqg::oracle::subgroup_census(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), p))
        total += count;
      Integer expected = 0;
      for (int k = 0; k <= r; ++k) expected += kqg::oracle::count_subspaces(r, k, p);
      EXPECT_EQ(total, expected);
    }
  // (sub type, quotient type) pairs occurring in Z/p^2 x Z/p
  EXPECT_EQ(kqg::oracle::subgroup_census(Partition{2, 1}, 2).size(), 6u);
}

TEST(Hall, InterpolationAgreesWithHallAlgebra) {
  kqg::oracle::CensusCache cache;
  const std::vector<int> primes{2, 3, 5, 11};
  for (const auto& lambda : all_partitions_up_to(3))
    for (const auto& mu : kqg::sub_partitions(lambda))
      for (const auto& nu : kqg::sub_partitions(lambda)) {
        const HallTriple t{lambda, nu, mu};
        if (!t.may_be_nonzero()) continue;
        EXPECT_EQ(kqg::oracle::interpolate_hall_polynomial(t, primes, cache), hall_polynomial(t));
      }
}

TEST(RegularDiagonal, Examples) {
  for (int t = 1; t <= 4; ++t) {
    KroneckerDescriptor r;
    r.add_regular("p", 1, Partition{t});
    for (int a = 0; a <= t; ++a) EXPECT_EQ(kqg::regular_diagonal_count(r, a), Q("1"));
  }
  EXPECT_EQ(kqg::regular_diagonal_count(KroneckerDescriptor::parse("R(p,[1]) + R(r,[1])"), 1), Q("2"));
  EXPECT_TRUE(kqg::regular_diagonal_count(KroneckerDescriptor::parse("R(p@2,[1])"), 1).is_zero());
  EXPECT_EQ(kqg::regular_diagonal_count(KroneckerDescriptor::parse("R(p,[1,1])"), 1), Q("q + 1"));
  EXPECT_THROW((void)kqg::regular_diagonal_count(KroneckerDescriptor::parse("P1"), 0), std::invalid_argument);
}

TEST(RegularDiagonal, EndpointsAndPositivity) {
  for (const char* s : {"R(p,[2,1])", "R(p,[2]) + R(r@2,[1,1])", "R(p,[1,1,1]) + R(r,[2])", "R(c@3,[2])"}) {
    const auto r = KroneckerDescriptor::parse(s);
    const long n = r.dim_vector().a;
    EXPECT_EQ(kqg::regular_diagonal_count(r, 0), Q("1")) << s;
    EXPECT_EQ(kqg::regular_diagonal_count(r, n), Q("1")) << s;
    for (long a = 0; a <= n; ++a) {
      const LaurentPoly f = kqg::regular_diagonal_count(r, a);
      EXPECT_TRUE(f.is_polynomial() && f.has_nonnegative_coefficients()) << s << " a=" << a;
    }
  }
}

TEST(RegularDiagonal, MatchesOracle) {
  for (int p : {2, 3})
    for (const char* s : {"R(p,[2,1])", "R(p,[1]) + R(r,[1])", "R(c@2,[1,1])", "R(c@2,[1]) + R(p,[1])", "R(p,[1,1,1])"}) {
      const auto r = KroneckerDescriptor::parse(s);
      const auto rep = kqg::oracle::build_rep(r, p);
      for (long a = 0; a <= r.dim_vector().a; ++a)
        EXPECT_EQ(kqg::regular_diagonal_count(r, a).eval_integer(p), kqg::oracle::count_submodules(rep, a, a)) << s << " a=" << a;
    }
}
