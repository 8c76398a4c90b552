#include <doctest.h>

#include <stdexcept>

#include "vertexkz/model.hpp"

using namespace vertexkz;

TEST_CASE("model parameters are validated") {
  CHECK_THROWS_AS(ModelParams(0, Rat(1, 3), {}), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(2, Rat(0), {Rat(1), Rat(2)}), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(2, Rat(1, 3), {Rat(1)}), std::invalid_argument);
  const ModelParams d = ModelParams::defaults(3);
  CHECK(d.eta() == Rat(1, 3));
  CHECK(d.mu(1) == Rat(6, 5));
  CHECK(d.mu(3) == Rat(16, 5));
  CHECK(d.restricted(2).mu() == std::vector<Rat>{Rat(6, 5), Rat(11, 5)});
  CHECK_NOTHROW((void)ModelParams::unchecked(1, Rat(0), {Rat(0)}));
}

TEST_CASE("rational weights") {
  const ModelParams p = ModelParams::defaults(1);
  CHECK(weight_a(Rat(2), p) == Rat(7, 3));
  CHECK(weight_b(Rat(2), p) == Rat(2));
  CHECK(weight_c(p) == Rat(1, 3));
  for (int k = -5; k <= 5; ++k) {
    const Rat x(k, 7);
    const Rat a = weight_a(x, p), b = weight_b(x, p), c = weight_c(p);
    CHECK(a * a + b * b - c * c == Rat(kAnisotropy) * a * b);
  }
  const ModelParams bad = p.with_corrupted_weight_a(Rat(1, 2));
  CHECK(weight_a(Rat(2), bad) == Rat(17, 6));
  CHECK(weight_b(Rat(2), bad) == Rat(2));
}

TEST_CASE("genericity conditions") {
  const ModelParams p(2, Rat(1, 3), {Rat(0), Rat(5)});
  CHECK(is_generic({{Rat(1, 2), Rat(7, 4)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(1), Rat(1)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(1), Rat(4, 3)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(1), Rat(2, 3)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(5), Rat(1, 2)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(-1, 3), Rat(1, 2)}, std::nullopt}, p, false));
  CHECK(is_generic({{Rat(1, 3), Rat(1, 2)}, std::nullopt}, p, false));
  CHECK_FALSE(is_generic({{Rat(1, 2), Rat(7, 4)}, Rat(1, 2)}, p, true));
}

TEST_CASE("seeded points are generic and reproducible") {
  for (int L = 1; L <= 6; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const SpectralPoint a = sample_generic_point(p, seed, true);
      const SpectralPoint b = sample_generic_point(p, seed, true);
      CHECK(a.lambda == b.lambda);
      CHECK(a.lambda0 == b.lambda0);
      CHECK(is_generic(a, p, true));
    }
  }
}

TEST_CASE("interpolation grids and slices stay generic") {
  for (int L = 1; L <= 5; ++L) {
    const ModelParams p = ModelParams::defaults(L);
    const auto grid = generic_grid(p, L);
    REQUIRE(grid.size() == static_cast<std::size_t>(L));
    std::vector<std::size_t> idx(static_cast<std::size_t>(L), 0);
    while (true) {
      SpectralPoint pt;
      for (int v = 0; v < L; ++v) pt.lambda.push_back(grid[v][idx[v]]);
      CHECK(is_generic(pt, p, false));
      std::size_t v = 0;
      while (v < idx.size() && ++idx[v] == static_cast<std::size_t>(L)) idx[v++] = 0;
      if (v == idx.size()) break;
    }
    const SpectralPoint base = sample_generic_point(p, 3);
    for (int var = 1; var <= L; ++var) {
      const auto nodes = generic_slice_nodes(base, p, var, L + 1);
      CHECK(nodes.size() == static_cast<std::size_t>(L + 1));
      for (const Rat& x : nodes) CHECK(is_generic(base.with(var, x), p, false));
    }
  }
}

TEST_CASE("spectral point helpers") {
  const SpectralPoint p{{Rat(1), Rat(2), Rat(3)}, Rat(9)};
  CHECK(p.at(0) == Rat(9));
  CHECK(p.at(2) == Rat(2));
  const SpectralPoint s = p.swapped_with_lambda0(2);
  CHECK(s.at(0) == Rat(2));
  CHECK(s.at(2) == Rat(9));
  CHECK(p.with(3, Rat(7)).lambda[2] == Rat(7));
}
