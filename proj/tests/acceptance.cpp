// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "vertexkz/determinant_rep.hpp"
#include "vertexkz/functional.hpp"
#include "vertexkz/kz.hpp"
#include "vertexkz/oracle.hpp"
#include "vertexkz/suites.hpp"

using namespace vertexkz;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.note << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  if (!in_time) out.note << "over time limit; ";
  const bool ok = out.pass && in_time;
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " " << title << " [" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s / " << limit_s << " s] " << out.note.str() << std::endl;
}

SpectralPoint seeded(const ModelParams& p, int k, bool with_lambda0 = false) {
  return sample_generic_point(p, kSeed + static_cast<std::uint64_t>(k), with_lambda0);
}

MultiPoly plus_power_sum(const MultiPoly& z, int L) {
  MultiPoly out(z.variables(), std::vector<int>(static_cast<std::size_t>(L), L));
  out = out + z;
  for (int j = 0; j < L; ++j) {
    MultiPoly::Exponents e(static_cast<std::size_t>(L), 0);
    e[static_cast<std::size_t>(j)] = L;
    out.add_term(e, Rat(1));
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "oracle sanity", 5, [](Outcome& o) {
    const ModelParams p = ModelParams::defaults(1);
    for (int k = 0; k < 10; ++k) o.require(enumerate_Z(p, seeded(p, k)) == p.eta(), "Z(L=1) = eta");
    const std::uint64_t asm_numbers[] = {1, 2, 7, 42};
    for (int L = 1; L <= 4; ++L) {
      o.require(count_configurations(L) == asm_numbers[L - 1], "ASM count L=" + std::to_string(L));
    }
    o.note << "counts 1 2 7 42; ";
  });

  criterion(2, "symmetry", 30, [](Outcome& o) {
    int evaluations = 0;
    for (int L = 2; L <= 5; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      for (int k = 0; k < 5; ++k) {
        const SpectralPoint pt = seeded(p, k);
        const Rat z = enumerate_Z(p, pt);
        std::vector<int> perm(static_cast<std::size_t>(L));
        std::iota(perm.begin(), perm.end(), 0);
        auto permuted = [&]() {
          SpectralPoint q;
          for (int idx : perm) q.lambda.push_back(pt.lambda[static_cast<std::size_t>(idx)]);
          ++evaluations;
          return enumerate_Z(p, q);
        };
        if (L <= 3) {
          while (std::next_permutation(perm.begin(), perm.end())) o.require(permuted() == z, "permutation");
        } else {
          for (int a = 0; a < L; ++a) {
            for (int b = a + 1; b < L; ++b) {
              std::iota(perm.begin(), perm.end(), 0);
              std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
              o.require(permuted() == z, "transposition");
            }
          }
        }
      }
    }
    o.note << evaluations << " permuted evaluations; ";
  });

  criterion(3, "functional equations", 60, [](Outcome& o) {
    int residuals = 0;
    for (int L = 2; L <= 4; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      const ZFunction z = [&](const SpectralPoint& q) { return enumerate_Z(p, q); };
      for (int k = 0; k < 20; ++k) {
        const SpectralPoint pt = seeded(p, k, true);
        for (int n = 0; n <= L; ++n) {
          o.require(functional_residual(n, *pt.lambda0, pt, p, z).is_zero(), "residual");
          ++residuals;
        }
      }
      const ZFunction wrong = [&](const SpectralPoint& q) { return z(q) + Rat(1); };
      const SpectralPoint pt = seeded(p, 0, true);
      o.require(!functional_residual(0, *pt.lambda0, pt, p, wrong).is_zero(), "negative control");
    }
    o.note << residuals << " zero residuals, Z+1 rejected; ";
  });

  criterion(4, "KZ systems", 120, [](Outcome& o) {
    int residuals = 0;
    for (int L = 2; L <= 4; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      const MultiPoly z = oracle_polynomial(p);
      for (int k = 0; k < 10; ++k) {
        const SpectralPoint pt = seeded(p, k);
        for (int i = 1; i <= L; ++i) {
          for (int n = 1; n <= L; ++n) {
            o.require(kz_residual(i, n, pt, p, z).is_zero(), "residual");
            ++residuals;
          }
          for (int j = 1; j <= L; ++j) {
            if (j != i) o.require(omega_coeff(i, j, i, pt, p) == omega_base(i, j, pt, p), "coincidence");
          }
          o.require(kz_residual(i, i, pt, p, z) == kz_residual_base(i, pt, p, z), "coincidence");
        }
      }
      const SpectralPoint pt = seeded(p, 0);
      const MultiPoly control = plus_power_sum(z, L);
      for (int i = 1; i <= L; ++i) {
        o.require(alpha_limit_check(i, pt, p, z).passes(), "alpha limit (oracle)");
        const AlphaLimitCheck c = alpha_limit_check(i, pt, p, control);
        o.require(!c.expected.is_zero() && c.passes(), "alpha limit (control)");
      }
    }
    o.note << residuals << " zero residuals, coincidence exact, alpha limit consistent; ";
  });

  criterion(5, "Cramer identity", 60, [](Outcome& o) {
    int residuals = 0, excluded = 0;
    for (int L = 2; L <= 4; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      const MultiPoly z = oracle_polynomial(p);
      for (int k = 0; k < 5; ++k) {
        const SpectralPoint pt = seeded(p, k);
        for (int i = 1; i <= L; ++i) {
          if (build_cramer(i, pt, p).degenerate()) {
            ++excluded;
            continue;
          }
          for (int j = 1; j <= L; ++j) {
            if (j == i) continue;
            o.require(cramer_identity_residual(i, j, pt, p, z).is_zero(), "residual");
            ++residuals;
          }
        }
      }
    }
    o.note << residuals << " zero residuals, " << excluded << " degenerate systems excluded; ";
  });

  criterion(6, "first-order system", 60, [](Outcome& o) {
    int residuals = 0;
    for (int L = 2; L <= 4; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      const MultiPoly z = oracle_polynomial(p);
      for (int k = 0; k < 5; ++k) {
        const SpectralPoint pt = seeded(p, k);
        for (int i = 1; i <= L; ++i) {
          o.require(fuchs_residual(i, pt, p, z).is_zero(), "residual");
          ++residuals;
        }
      }
    }
    o.note << residuals << " zero residuals; ";
  });

  criterion(7, "determinant representations", 300, [](Outcome& o) {
    for (int L = 1; L <= 5; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      const Calibration cal = calibrate(p, kSeed, 6);
      o.require(cal.samples.size() == static_cast<std::size_t>(6 * L), "sample count");
      for (int k = 0; k < 6; ++k) {
        const SpectralPoint pt = seeded(p, k);
        for (int i = 2; i <= L; ++i) o.require(z_det(i, pt, p) == z_det(1, pt, p), "z_det(i) = z_det(1)");
      }
      o.note << "r_" << L << " = " << cal.r << (cal.is_one ? " (is 1)" : " (not 1)") << "; ";
    }
  });

  criterion(8, "degree claims", 120, [](Outcome& o) {
    for (int L = 2; L <= 5; ++L) {
      const ModelParams p = ModelParams::defaults(L);
      for (int i = 1; i <= L; ++i) {
        const DegreeReport rep = degree_report(i, p, kSeed);
        o.require(rep.passes(L), "degrees L=" + std::to_string(L) + " i=" + std::to_string(i));
      }
    }
    o.note << "det Y: L-1 in every variable; det Ybar: L-2 in lambda_i, L-1 in the rest; slice gcds constant; ";
  });

  criterion(9, "leading coefficient", 120, [](Outcome& o) {
    for (int L = 1; L <= 4; ++L) {
      const LeadingCoefficient lc = leading_coefficient(ModelParams::defaults(L));
      o.require(lc.routes_agree(), "oracle and determinant routes agree");
      o.require(lc.ratio * lc.asymptotic == lc.oracle, "exact ratio");
      o.note << "L=" << L << ": " << lc.oracle << " vs " << lc.asymptotic << " ratio " << lc.ratio
             << (lc.matches_asymptotic() ? " (match)" : " (discrepancy)") << "; ";
    }
  });

  criterion(10, "determinism", 120, [](Outcome& o) {
    const RunConfig config;
    const Report a = run_suites(config);
    const Report b = run_suites(config);
    o.require(a.all_pass(), "default run passes");
    o.require(a.to_json(false).dump() == b.to_json(false).dump(), "identical reports");
  });

  return failures == 0 ? 0 : 1;
}
