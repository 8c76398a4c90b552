#include <doctest.h>

#include "oracles.hpp"
#include "vertexkz/determinant_rep.hpp"
#include "vertexkz/errors.hpp"
#include "vertexkz/kz.hpp"
#include "vertexkz/univariate.hpp"

using namespace vertexkz;
using testing_oracles::laplace_det;
using testing_oracles::rows_of;

namespace {

Rat slice_derivative(const ModelParams& p, const SpectralPoint& pt, int i) {
  const auto nodes = generic_slice_nodes(pt, p, i, p.L());
  std::vector<Rat> values;
  for (const Rat& x : nodes) values.push_back(enumerate_Z(p, pt.with(i, x)));
  return interpolate_dense(nodes, values).derivative().evaluate(pt.lambda[static_cast<std::size_t>(i - 1)]);
}

}  // namespace

TEST_CASE("Cramer system layout") {
  const ModelParams p = ModelParams::defaults(4);
  const SpectralPoint pt = sample_generic_point(p, 3);
  const CramerSystem s = build_cramer(2, pt, p);
  CHECK(s.rows_n == std::vector<int>{1, 3, 4});
  CHECK(s.cols_j == std::vector<int>{1, 3, 4});
  CHECK(s.W.order() == 3);
  CHECK(s.H.size() == 3);
  CHECK(s.Hbar.size() == 3);
  CHECK(s.column_of(3) == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(s.W.at(r, c) == omega_coeff(2, s.cols_j[c], s.rows_n[r], pt, p));
    }
    CHECK(s.H.at(4).at(r, 2) == weight_c(p));
    CHECK(s.Hbar.at(4).at(r, 2) == h_coeff(2, s.rows_n[r], pt, p));
    CHECK(s.H.at(4).at(r, 0) == s.W.at(r, 0));
  }
  CHECK(s.det_W == laplace_det(rows_of(s.W)));
}

TEST_CASE("Cramer solution reproduces the evaluation maps") {
  for (int L = 2; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const MultiPoly zpoly = oracle_polynomial(p);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const SpectralPoint pt = sample_generic_point(p, seed);
      const Rat z = enumerate_Z(p, pt);
      for (int i = 1; i <= L; ++i) {
        const CramerSystem s = build_cramer(i, pt, p);
        REQUIRE_FALSE(s.degenerate());
        const Rat dz = slice_derivative(p, pt, i);
        for (int j : s.cols_j) {
          const Rat lhs = laplace_det(rows_of(s.W)) * enumerate_Z(p, collapse(pt, i, j));
          const Rat rhs = laplace_det(rows_of(s.H.at(j))) * dz - laplace_det(rows_of(s.Hbar.at(j))) * z;
          CHECK(lhs == rhs);
          CHECK(cramer_identity_residual(i, j, pt, p, zpoly) == Rat(0));
        }
      }
    }
  }
}

TEST_CASE("shifted candidate violates the Cramer identity") {
  const ModelParams p = ModelParams::defaults(3);
  const MultiPoly z = oracle_polynomial(p);
  const MultiPoly wrong = z + MultiPoly::constant(z.variables(), z.degree_bounds(), Rat(1));
  const SpectralPoint pt = sample_generic_point(p, 5);
  CHECK(cramer_identity_residual(1, 2, pt, p, wrong) != Rat(0));
}

TEST_CASE("family matrices and the prefactor identity") {
  for (int L = 1; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const SpectralPoint pt = sample_generic_point(p, 9);
    for (int i = 1; i <= L; ++i) {
      const FamilyMatrices f = build_family(i, pt, p);
      CHECK(f.K.order() == static_cast<std::size_t>(L));
      CHECK(prefactor_identity_holds(f, L));
      for (std::size_t r = 0; r < static_cast<std::size_t>(L); ++r) {
        const int n = static_cast<int>(r) + 1;
        CHECK(f.K.at(r, static_cast<std::size_t>(i - 1)) == weight_c(p));
        CHECK(f.Kbar.at(r, static_cast<std::size_t>(i - 1)) == h_coeff(i, n, pt, p));
      }
      const Rat scale = f.prefactor.pow(L - 1);
      CHECK(laplace_det(rows_of(f.K)) == scale * laplace_det(rows_of(f.Y)));
      CHECK(laplace_det(rows_of(f.Kbar)) == scale * laplace_det(rows_of(f.Ybar)));
    }
  }
}

TEST_CASE("B_i is the logarithmic derivative") {
  for (int L = 2; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const SpectralPoint pt = sample_generic_point(p, 21);
    const Rat z = enumerate_Z(p, pt);
    for (int i = 1; i <= L; ++i) {
      const BRatio b = b_ratio(i, pt, p);
      REQUIRE_FALSE(b.denominator.is_zero());
      CHECK(b.numerator * z == b.denominator * slice_derivative(p, pt, i));
      const FamilyMatrices f = build_family(i, pt, p);
      CHECK(b.numerator * determinant(f.K) == b.denominator * determinant(f.Kbar));
    }
  }
}

TEST_CASE("first-order system") {
  for (int L = 1; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const MultiPoly z = oracle_polynomial(p);
    const SpectralPoint pt = sample_generic_point(p, 13);
    for (int i = 1; i <= L; ++i) CHECK(fuchs_residual(i, pt, p, z) == Rat(0));
    if (L >= 2) {
      MultiPoly wrong = z;
      wrong.add_term(MultiPoly::Exponents(static_cast<std::size_t>(L), 0), Rat(1));
      CHECK(fuchs_residual(1, pt, p, wrong) != Rat(0));
    }
  }
}

TEST_CASE("every determinant representation equals the partition function") {
  for (int L = 1; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const SpectralPoint pt = sample_generic_point(p, 50 + seed);
      const Rat z = enumerate_Z(p, pt);
      for (int i = 1; i <= L; ++i) CHECK(z_det(i, pt, p) == z);
    }
    const Calibration cal = calibrate(p, 7);
    CHECK(cal.r == Rat(1));
    CHECK(cal.is_one);
    CHECK(cal.samples.size() == static_cast<std::size_t>(6 * L));
  }
  const ModelParams p(3, Rat(-2, 5), {Rat(1, 7), Rat(-3, 2), Rat(4)});
  const SpectralPoint pt = sample_generic_point(p, 1);
  CHECK(z_det(2, pt, p) == enumerate_Z(p, pt));
}

TEST_CASE("determinant polynomial matches the oracle polynomial") {
  for (int L = 1; L <= 3; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const MultiPoly oracle = oracle_polynomial(p);
    for (int i = 1; i <= L; ++i) CHECK(det_polynomial(i, p) == oracle);
  }
}

TEST_CASE("degrees of the determinants") {
  for (int L = 2; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    for (int i = 1; i <= L; ++i) {
      const DegreeReport rep = degree_report(i, p, 31);
      CHECK(rep.passes(L));
      CHECK(rep.slices.size() == static_cast<std::size_t>(L));
      for (const auto& s : rep.slices) {
        CHECK(s.det_Y == L - 1);
        CHECK(s.det_Ybar == (s.var == i ? L - 2 : L - 1));
        CHECK(s.gcd_degree == 0);
      }
    }
  }
}

TEST_CASE("leading coefficient of the partition function") {
  for (int L = 1; L <= 3; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const LeadingCoefficient lc = leading_coefficient(p);
    CHECK(lc.routes_agree());
    Rat factorial(1);
    for (int k = 2; k <= L; ++k) factorial *= Rat(k);
    CHECK(lc.oracle == weight_c(p).pow(L) * factorial);
    CHECK(lc.ratio == Rat(2).pow(L * (L - 1)));
    CHECK(lc.matches_asymptotic() == (L == 1));
  }
}
