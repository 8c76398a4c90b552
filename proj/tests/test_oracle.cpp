#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "vertexkz/oracle.hpp"

using namespace vertexkz;

TEST_CASE("vertex classification follows the ice rule") {
  int admissible = 0;
  for (int bits = 0; bits < 16; ++bits) {
    const VertexState s{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0};
    if (!s.satisfies_ice_rule()) continue;
    ++admissible;
  }
  CHECK(admissible == 6);
  CHECK(VertexState{true, true, true, true}.classify() == VertexClass::A);
  CHECK(VertexState{false, false, false, false}.classify() == VertexClass::A);
  CHECK(VertexState{true, true, false, false}.classify() == VertexClass::B);
  CHECK(VertexState{false, false, true, true}.classify() == VertexClass::B);
  CHECK(VertexState{true, false, false, true}.classify() == VertexClass::C);
  CHECK(VertexState{false, true, true, false}.classify() == VertexClass::C);
}

TEST_CASE("configuration counts are the ASM numbers") {
  const std::uint64_t expected[] = {1, 2, 7, 42, 429, 7436, 218348, 10850216};
  for (int L = 1; L <= 8; ++L) {
    CHECK(count_configurations(L) == expected[L - 1]);
    CHECK(count_configurations(L, BoundaryOrientation::DwReversed) == expected[L - 1]);
  }
  for (int L = 1; L <= 5; ++L) CHECK(testing_oracles::count_asm(L) == expected[L - 1]);
  for (int L = 1; L <= 3; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    CHECK(testing_oracles::brute_force_Z(p, std::vector<Rat>(L), true) == Rat(static_cast<long>(expected[L - 1])));
  }
}

TEST_CASE("single site gives eta") {
  const ModelParams p(1, Rat(2, 7), {Rat(5)});
  for (int k = -3; k <= 3; ++k) CHECK(enumerate_Z(p, {{Rat(k, 2)}, std::nullopt}) == Rat(2, 7));
}

TEST_CASE("transfer sweep agrees with brute force enumeration") {
  for (int L = 1; L <= 3; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SpectralPoint pt = sample_generic_point(p, seed);
      CHECK(enumerate_Z(p, pt) == testing_oracles::brute_force_Z(p, pt.lambda));
    }
  }
}

TEST_CASE("transfer sweep agrees with the Izergin-Korepin determinant") {
  for (int L = 1; L <= 5; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const SpectralPoint pt = sample_generic_point(p, 100 + seed);
      CHECK(enumerate_Z(p, pt) == testing_oracles::izergin_korepin_Z(p, pt.lambda));
    }
  }
}

TEST_CASE("two-site closed form") {
  // The two configurations weigh c^2 b(l1 - mu2) b(l2 - mu1) and c^2 a(l1 - mu1) a(l2 - mu2).
  const Rat eta(1, 3), mu1(0), mu2(1), l1(1, 2), l2(5, 4);
  const ModelParams p(2, eta, {mu1, mu2});
  const Rat expected = eta * eta * ((l1 - mu2) * (l2 - mu1) + (l1 - mu1 + eta) * (l2 - mu2 + eta));
  CHECK(enumerate_Z(p, {{l1, l2}, std::nullopt}) == expected);
  CHECK(enumerate_Z(p, {{l2, l1}, std::nullopt}) == expected);
}

TEST_CASE("partition function is symmetric in the rapidities") {
  for (int L = 2; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const SpectralPoint pt = sample_generic_point(p, 17);
    const Rat z = enumerate_Z(p, pt);
    std::vector<Rat> perm = pt.lambda;
    std::sort(perm.begin(), perm.end());
    do {
      CHECK(enumerate_Z(p, {perm, std::nullopt}) == z);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("oracle polynomial reproduces the sweep at fresh points") {
  for (int L = 1; L <= 4; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const MultiPoly z = oracle_polynomial(p);
    for (int v = 0; v < L; ++v) CHECK(z.degree_in(static_cast<std::size_t>(v)) == L - 1);
    for (std::uint64_t seed = 40; seed < 43; ++seed) {
      const SpectralPoint pt = sample_generic_point(p, seed);
      CHECK(z.evaluate(pt.lambda) == enumerate_Z(p, pt));
    }
  }
  CHECK(oracle_polynomial(ModelParams::defaults(1)) ==
        MultiPoly::constant(lambda_variables(1), {0}, Rat(1, 3)));
}

TEST_CASE("interpolation budget") {
  try {
    (void)oracle_polynomial(ModelParams::defaults(7));
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("max L = 6") != std::string::npos);
  }
}

TEST_CASE("orientation selection keeps the standard variant") {
  const OrientationSelection sel = select_orientation(ModelParams::defaults(2));
  CHECK(sel.chosen == BoundaryOrientation::DwStandard);
  CHECK(select_orientation(ModelParams::defaults(3)).chosen == BoundaryOrientation::DwStandard);
  bool reversed_fails = false;
  for (const auto& t : sel.trials) {
    if (t.orientation == BoundaryOrientation::DwStandard) CHECK(t.residual.is_zero());
    if (t.orientation == BoundaryOrientation::DwReversed && !t.residual.is_zero()) reversed_fails = true;
  }
  CHECK(reversed_fails);
  CHECK(parse_orientation("dw-reversed") == BoundaryOrientation::DwReversed);
  CHECK(to_string(BoundaryOrientation::DwStandard) == "dw-standard");
  CHECK_THROWS(parse_orientation("sideways"));
}

TEST_CASE("corrupted weights leave no admissible orientation") {
  const ModelParams bad = ModelParams::defaults(2).with_corrupted_weight_a(Rat(1, 2));
  CHECK_THROWS_AS(select_orientation(bad), NoOrientation);
}
