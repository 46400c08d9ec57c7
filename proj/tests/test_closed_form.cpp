#include <gtest/gtest.h>

#include <iostream>

#include "kqg/closed_form.hpp"
#include "kqg/oracle/kronecker_rep.hpp"

using kqg::ClosedFormKind;
using kqg::Indecomposable;
using kqg::Integer;
using kqg::KroneckerDescriptor;
using kqg::LaurentPoly;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

}  // namespace

TEST(ClosedForm, PreprojectiveExamples) {
  EXPECT_EQ(kqg::count_preprojective(0, 1, 0), P("1"));
  EXPECT_TRUE(kqg::count_preprojective(2, 1, 2).is_zero());
  EXPECT_EQ(kqg::count_preprojective(1, 1, 0), P("q + 1"));
  EXPECT_EQ(kqg::count_preprojective(2, 3, 2), P("1"));
  EXPECT_EQ(kqg::count_preprojective(3, 2, 1), P("q^2 + q + 1"));
}

TEST(ClosedForm, PreinjectiveExamples) {
  EXPECT_EQ(kqg::count_preinjective(1, 1, 2), P("1"));
  EXPECT_TRUE(kqg::count_preinjective(1, 2, 0).is_zero());
  EXPECT_EQ(kqg::count_preinjective(1, 1, 1), P("q + 1"));
  EXPECT_EQ(kqg::count_preinjective(0, 0, 1), P("1"));
}

TEST(ClosedForm, RegularExamples) {
  EXPECT_EQ(kqg::count_regular_deg1(2, 1, 1), P("1"));
  EXPECT_TRUE(kqg::count_regular_deg1(1, 0, 1).is_zero());
  EXPECT_EQ(kqg::count_regular_deg1(2, 2, 1), P("q + 1"));
  EXPECT_EQ(kqg::count_regular_deg1(3, 2, 0), P("q^2 + q + 1"));
  for (long t = 1; t <= 5; ++t)
    for (long a = 0; a <= t; ++a) EXPECT_EQ(kqg::count_regular_deg1(t, a, a), P("1"));
  EXPECT_THROW((void)kqg::count_indecomposable(Indecomposable::R("p", 1, 2), 1, 1), std::invalid_argument);
}

TEST(ClosedForm, PolynomialsWithNonnegativeCoefficients) {
  for (long n = 0; n <= 5; ++n)
    for (long a = -2; a <= 8; ++a)
      for (long b = -2; b <= 8; ++b)
        for (const LaurentPoly& f : {kqg::count_preprojective(n, a, b), kqg::count_preinjective(n, a, b),
                                     kqg::count_regular_deg1(n + 1, a, b)}) {
          EXPECT_TRUE(f.is_polynomial()) << n << " " << a << " " << b;
          EXPECT_TRUE(f.has_nonnegative_coefficients()) << n << " " << a << " " << b;
        }
}

TEST(ClosedForm, EulerCharacteristicExamples) {
  // C(3,3) * C(0,-1): P_3 has no submodule of dimension (1,1)
  EXPECT_EQ(kqg::euler_char(ClosedFormKind::preprojective, 3, 1, 1), 0);
  EXPECT_EQ(kqg::euler_char(ClosedFormKind::preprojective, 3, 2, 1), 3);
  EXPECT_EQ(kqg::euler_char(ClosedFormKind::preinjective, 1, 1, 1), 2);
  EXPECT_EQ(kqg::euler_char(ClosedFormKind::regular_deg1, 2, 1, 0), 2);
}

TEST(ClosedForm, EulerCharacteristicIsValueAtOne) {
  for (long n = 0; n <= 4; ++n)
    for (long a = -1; a <= 6; ++a)
      for (long b = -1; b <= 6; ++b) {
        EXPECT_EQ(kqg::euler_char(ClosedFormKind::preprojective, n, a, b), kqg::count_preprojective(n, a, b).eval_integer(1));
        EXPECT_EQ(kqg::euler_char(ClosedFormKind::preinjective, n, a, b), kqg::count_preinjective(n, a, b).eval_integer(1));
        EXPECT_EQ(kqg::euler_char(ClosedFormKind::regular_deg1, n + 1, a, b), kqg::count_regular_deg1(n + 1, a, b).eval_integer(1));
      }
}

TEST(ClosedForm, MatchesOracleOnSmallModules) {
  for (int p : {2, 3})
    for (int n = 0; n <= 2; ++n)
      for (const Indecomposable& x : {Indecomposable::P(n), Indecomposable::I(n), Indecomposable::R("p", n + 1)}) {
        KroneckerDescriptor d;
        d.add(x);
        const auto rep = kqg::oracle::build_rep(d, p);
        for (long a = -1; a <= 4; ++a)
          for (long b = -1; b <= 4; ++b)
            EXPECT_EQ(kqg::count_indecomposable(x, a, b).eval_integer(p), kqg::oracle::count_submodules(rep, a, b))
                << d.to_string() << " (" << a << "," << b << ") p=" << p;
      }
}

// Total submodule classes counted at q = 1 for P_n and for its dual I_n.
// Informational only: printed, not asserted.
TEST(ClosedForm, DualitySumReport) {
  for (long n = 0; n <= 4; ++n) {
    Integer sp = 0, si = 0;
    for (long a = 0; a <= n + 1; ++a)
      for (long b = 0; b <= n + 1; ++b) {
        sp += kqg::euler_char(ClosedFormKind::preprojective, n, a, b);
        si += kqg::euler_char(ClosedFormKind::preinjective, n, a, b);
      }
    std::cout << "[ report ] n=" << n << " sum chi(P_n)=" << sp << " sum chi(I_n)=" << si << (sp == si ? " equal" : " differ")
              << "\n";
  }
}
