#include "vertexkz/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vertexkz/errors.hpp"
#include "vertexkz/functional.hpp"
#include "vertexkz/kz.hpp"

namespace vertexkz {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"oracle", "functional", "kz",     "cramer",
                                                 "fuchs",  "zy",         "degree", "asymptotics"};
  return names;
}

void RunConfig::validate() const {
  if (L_min < 1 || L_min > L_max || L_max > 8) {
    throw std::invalid_argument("L range must satisfy 1 <= L_min <= L_max <= 8");
  }
  if (points_per_test < 1) throw std::invalid_argument("points_per_test must be >= 1");
  if (!mu.empty() && static_cast<int>(mu.size()) < L_max) {
    throw std::invalid_argument("mu needs at least L_max = " + std::to_string(L_max) + " entries");
  }
  if (eta.is_zero()) throw std::invalid_argument("eta must be nonzero");
  for (const auto& s : suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw std::invalid_argument("unknown suite: " + s);
    }
  }
}

ModelParams RunConfig::params_for(int L) const {
  std::vector<Rat> m;
  for (int j = 1; j <= L; ++j) {
    m.push_back(static_cast<int>(mu.size()) >= j ? mu[static_cast<std::size_t>(j - 1)]
                                                 : Rat(j) + Rat(1, 5));
  }
  ModelParams params(L, eta, std::move(m));
  return corrupt_weight_a ? params.with_corrupted_weight_a(*corrupt_weight_a) : params;
}

namespace {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "eq";
    case Relation::NotEqual: return "ne";
    case Relation::LessThan: return "lt";
    case Relation::AtMost: return "le";
    case Relation::Record: return "record";
  }
  return "record";
}

bool holds(const Rat& value, Relation relation, const Rat& expected) {
  switch (relation) {
    case Relation::Equal: return value == expected;
    case Relation::NotEqual: return value != expected;
    case Relation::LessThan: return value < expected;
    case Relation::AtMost: return value <= expected;
    case Relation::Record: return true;
  }
  return false;
}

}  // namespace

CheckEntry make_check(std::string id, Json inputs, const Rat& value, Relation relation,
                      const Rat& expected) {
  return {std::move(id), std::move(inputs), value.str(), relation, expected.str(),
          holds(value, relation, expected)};
}

bool audit(const CheckEntry& entry) {
  return entry.pass == holds(Rat::parse(entry.value), entry.relation, Rat::parse(entry.expected));
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

bool Report::all_pass() const {
  return errors.empty() &&
         std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

Json config_json(const RunConfig& config) {
  const ModelParams params = config.params_for(config.L_max);
  Json mu = Json::array();
  for (const Rat& m : params.mu()) mu.push_back(to_json(m));
  Json out = {{"eta", to_json(config.eta)},
              {"mu", mu},
              {"L_min", config.L_min},
              {"L_max", config.L_max},
              {"seed", config.seed},
              {"points_per_test", config.points_per_test},
              {"suites", config.suites}};
  if (config.corrupt_weight_a) out["corrupt_weight_a"] = to_json(*config.corrupt_weight_a);
  return out;
}

Json Report::to_json(bool include_timings) const {
  Json out;
  out["schema"] = kReportSchema;
  out["config"] = config_json(config);
  out["orientation"] = orientation ? Json(std::string(vertexkz::to_string(*orientation))) : Json();
  Json cal = Json::object();
  for (const auto& [L, r] : calibration) cal[std::to_string(L)] = vertexkz::to_json(r);
  out["calibration"] = cal;
  Json lead = Json::array();
  for (const auto& lc : leading) {
    Json via = Json::array();
    for (const Rat& v : lc.via_det) via.push_back(vertexkz::to_json(v));
    lead.push_back({{"L", lc.L},
                    {"oracle", vertexkz::to_json(lc.oracle)},
                    {"via_det", via},
                    {"asymptotic", vertexkz::to_json(lc.asymptotic)},
                    {"ratio", vertexkz::to_json(lc.ratio)},
                    {"matches_asymptotic", lc.matches_asymptotic()},
                    {"routes_agree", lc.routes_agree()}});
  }
  out["leading_coefficients"] = lead;
  Json suites_json = Json::object();
  Json timings = Json::object();
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"id", c.id},
                        {"inputs", c.inputs},
                        {"value", c.value},
                        {"relation", relation_name(c.relation)},
                        {"expected", c.expected},
                        {"pass", c.pass}});
    }
    suites_json[s.name] = {{"pass", s.pass()}, {"checks", checks}, {"excluded", s.excluded}};
    timings[s.name] = s.millis;
  }
  out["suites"] = suites_json;
  out["errors"] = errors;
  out["all_pass"] = all_pass();
  if (include_timings) out["timings_ms"] = timings;
  return out;
}

namespace {

constexpr std::uint64_t kAsm[] = {1, 2, 7, 42, 429, 7436, 218348, 10850216};

Rat eval(const MultiPoly& p, const SpectralPoint& point) { return p.evaluate(point.lambda); }

std::string lid(int L) { return "L" + std::to_string(L); }

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {
    for (const auto& name : all_suites()) {
      if (config.suites.count(name)) report_.suites.push_back({name, {}, {}, 0});
    }
    report_.config = config;
  }

  Report run() {
    try {
      choose_orientation();
      for (int L = config_.L_min; L <= config_.L_max; ++L) {
        const ModelParams params = config_.params_for(L);
        timed("oracle", [&](SuiteResult& s) { oracle_suite(s, params); });
        timed("functional", [&](SuiteResult& s) { functional_suite(s, params); });
        timed("kz", [&](SuiteResult& s) { kz_suite(s, params); });
        timed("cramer", [&](SuiteResult& s) { cramer_suite(s, params); });
        timed("fuchs", [&](SuiteResult& s) { fuchs_suite(s, params); });
        timed("zy", [&](SuiteResult& s) { zy_suite(s, params); });
        timed("degree", [&](SuiteResult& s) { degree_suite(s, params); });
        timed("asymptotics", [&](SuiteResult& s) { asymptotics_suite(s, params); });
      }
    } catch (const std::exception& e) {
      report_.errors.emplace_back(e.what());
    }
    return std::move(report_);
  }

 private:
  SuiteResult* suite(const std::string& name) {
    for (auto& s : report_.suites) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }

  void timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
    SuiteResult* s = suite(name);
    if (!s) return;
    const auto start = std::chrono::steady_clock::now();
    body(*s);
    s->millis += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  std::uint64_t seed_for(int L, int s) const {
    return config_.seed * 1000003ULL + static_cast<std::uint64_t>(L) * 1009ULL +
           static_cast<std::uint64_t>(s);
  }

  SpectralPoint point(const ModelParams& params, int s, bool with_lambda0 = false) const {
    return sample_generic_point(params, seed_for(params.L(), s), with_lambda0);
  }

  BoundaryOrientation orientation() const {
    return report_.orientation.value_or(BoundaryOrientation::DwStandard);
  }

  const MultiPoly* oracle_poly(const ModelParams& params) {
    if (params.L() > kMaxInterpolationL) return nullptr;
    auto it = polys_.find(params.L());
    if (it == polys_.end()) it = polys_.emplace(params.L(), oracle_polynomial(params, orientation())).first;
    return &it->second;
  }

  static void budget_note(SuiteResult& s, int L) {
    s.excluded.push_back({{"L", L}, {"reason", "interpolation budget exceeded"}});
  }

  // Selected at L = 2; re-selected at L = 3 when in range.
  void choose_orientation() {
    if (config_.L_max < 2 && !config_.suites.count("functional")) return;
    RunConfig two = config_;
    two.L_max = std::max(2, config_.L_max);
    const ModelParams p2 = two.params_for(2);
    SuiteResult* s = suite("functional");
    auto record = [&](const OrientationSelection& sel, bool failed) {
      if (!s) return;
      for (const auto& t : sel.trials) {
        const bool chosen = !failed && t.orientation == sel.chosen;
        Json in = {{"orientation", std::string(to_string(t.orientation))},
                   {"n", t.n},
                   {"point", to_json(t.point)}};
        s->checks.push_back(make_check("functional/orientation/" + std::string(to_string(t.orientation)) +
                                           "/n" + std::to_string(t.n),
                                       std::move(in), t.residual,
                                       failed || chosen ? Relation::Equal : Relation::Record, Rat(0)));
      }
    };
    try {
      const OrientationSelection sel = select_orientation(p2, config_.seed);
      record(sel, false);
      report_.orientation = sel.chosen;
    } catch (const OrientationSelectionError& e) {
      record(e.partial(), true);
      throw;
    }
    if (config_.L_max >= 3) {
      const OrientationSelection sel3 = select_orientation(config_.params_for(3), config_.seed);
      if (s) {
        s->checks.push_back(make_check("functional/orientation/L3-consistent",
                                       {{"L", 3}, {"chosen", std::string(to_string(sel3.chosen))}},
                                       Rat(sel3.chosen == *report_.orientation ? 1 : 0),
                                       Relation::Equal, Rat(1)));
      }
    }
  }

  void oracle_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    s.checks.push_back(make_check("oracle/" + lid(L) + "/asm-count", {{"L", L}},
                                  Rat(static_cast<long>(count_configurations(L, orientation()))),
                                  Relation::Equal, Rat(static_cast<long>(kAsm[L - 1]))));
    for (int k = 0; k < config_.points_per_test; ++k) {
      const SpectralPoint pt = point(params, k);
      const Rat z = enumerate_Z(params, pt, orientation());
      if (L == 1) {
        s.checks.push_back(make_check("oracle/L1/eta/p" + std::to_string(k), {{"point", to_json(pt)}},
                                      z, Relation::Equal, params.eta()));
      }
      std::vector<int> perm(static_cast<std::size_t>(L));
      std::iota(perm.begin(), perm.end(), 0);
      auto check_perm = [&](const std::string& tag) {
        SpectralPoint q;
        for (int idx : perm) q.lambda.push_back(pt.lambda[static_cast<std::size_t>(idx)]);
        s.checks.push_back(make_check("oracle/" + lid(L) + "/symmetry/p" + std::to_string(k) + "/" + tag,
                                      {{"point", to_json(q)}}, enumerate_Z(params, q, orientation()),
                                      Relation::Equal, z));
      };
      if (L <= 3) {
        while (std::next_permutation(perm.begin(), perm.end())) {
          std::string tag;
          for (int idx : perm) tag += std::to_string(idx + 1);
          check_perm(tag);
        }
      } else {
        for (int a = 0; a < L; ++a) {
          for (int b = a + 1; b < L; ++b) {
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            check_perm("swap" + std::to_string(a + 1) + std::to_string(b + 1));
          }
        }
      }
    }
    if (const MultiPoly* poly = oracle_poly(params)) {
      const SpectralPoint fresh = point(params, 1000);
      s.checks.push_back(make_check("oracle/" + lid(L) + "/held-out", {{"point", to_json(fresh)}},
                                    eval(*poly, fresh), Relation::Equal,
                                    enumerate_Z(params, fresh, orientation())));
    } else {
      budget_note(s, L);
    }
  }

  void functional_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    const ZFunction z = [&](const SpectralPoint& p) { return enumerate_Z(params, p, orientation()); };
    for (int k = 0; k < config_.points_per_test; ++k) {
      const SpectralPoint pt = point(params, k, true);
      for (int n = 0; n <= L; ++n) {
        s.checks.push_back(make_check("functional/" + lid(L) + "/n" + std::to_string(n) + "/p" + std::to_string(k),
                                      {{"n", n}, {"point", to_json(pt)}},
                                      functional_residual(n, *pt.lambda0, pt, params, z),
                                      Relation::Equal, Rat(0)));
      }
    }
    if (L >= 2) {
      const SpectralPoint pt = point(params, 0, true);
      const ZFunction wrong = [&](const SpectralPoint& p) { return z(p) + Rat(1); };
      s.checks.push_back(make_check("functional/" + lid(L) + "/negative-control",
                                    {{"n", 0}, {"point", to_json(pt)}, {"zfun", "oracle + 1"}},
                                    functional_residual(0, *pt.lambda0, pt, params, wrong),
                                    Relation::NotEqual, Rat(0)));
    }
  }

  void kz_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    const MultiPoly* poly = oracle_poly(params);
    if (!poly) return budget_note(s, L);
    const std::string base = "kz/" + lid(L);
    for (int k = 0; k < config_.points_per_test; ++k) {
      const SpectralPoint pt = point(params, k);
      for (int i = 1; i <= L; ++i) {
        for (int n = 1; n <= L; ++n) {
          s.checks.push_back(make_check(base + "/i" + std::to_string(i) + "/n" + std::to_string(n) + "/p" + std::to_string(k),
                                        {{"i", i}, {"n", n}, {"point", to_json(pt)}},
                                        kz_residual(i, n, pt, params, *poly), Relation::Equal, Rat(0)));
        }
        for (int j = 1; j <= L; ++j) {
          if (j == i) continue;
          s.checks.push_back(make_check(base + "/coincide/omega/i" + std::to_string(i) + "/j" + std::to_string(j) + "/p" + std::to_string(k),
                                        {{"i", i}, {"j", j}, {"point", to_json(pt)}},
                                        omega_coeff(i, j, i, pt, params) - omega_base(i, j, pt, params),
                                        Relation::Equal, Rat(0)));
        }
        s.checks.push_back(make_check(base + "/coincide/residual/i" + std::to_string(i) + "/p" + std::to_string(k),
                                      {{"i", i}, {"point", to_json(pt)}},
                                      kz_residual(i, i, pt, params, *poly) - kz_residual_base(i, pt, params, *poly),
                                      Relation::Equal, Rat(0)));
      }
    }
    // lambda_0 -> lambda_i limit of the base functional equation.
    const SpectralPoint pt = point(params, 0);
    for (int i = 1; i <= L; ++i) {
      const AlphaLimitCheck exact = alpha_limit_check(i, pt, params, *poly);
      const std::string id = base + "/alpha-limit/i" + std::to_string(i);
      for (std::size_t a = 0; a < exact.alphas.size(); ++a) {
        s.checks.push_back(make_check(id + "/alpha" + std::to_string(a),
                                      {{"alpha", to_json(exact.alphas[a])}, {"point", to_json(pt)}},
                                      exact.residuals[a], Relation::Equal, Rat(0)));
      }
      s.checks.push_back(make_check(id + "/limit", {{"point", to_json(pt)}}, exact.extrapolated,
                                    Relation::Equal, exact.expected));
      if (L < 2) continue;
      // Below degree L every symmetric polynomial solves the L = 2 base equation.
      MultiPoly shifted(poly->variables(), std::vector<int>(static_cast<std::size_t>(L), L));
      shifted = shifted + *poly;
      for (int j = 0; j < L; ++j) {
        MultiPoly::Exponents e(static_cast<std::size_t>(L), 0);
        e[static_cast<std::size_t>(j)] = L;
        shifted.add_term(e, Rat(1));
      }
      const AlphaLimitCheck ctrl = alpha_limit_check(i, pt, params, shifted);
      s.checks.push_back(make_check(id + "/control-limit", {{"zpoly", "oracle + p_L"}, {"point", to_json(pt)}},
                                    ctrl.expected, Relation::NotEqual, Rat(0)));
      Rat previous = (ctrl.residuals.front() - ctrl.expected).abs();
      for (std::size_t a = 1; a < ctrl.alphas.size(); ++a) {
        const Rat gap = (ctrl.residuals[a] - ctrl.expected).abs();
        s.checks.push_back(make_check(id + "/control-converges/alpha" + std::to_string(a),
                                      {{"alpha", to_json(ctrl.alphas[a])}, {"zpoly", "oracle + p_L"},
                                       {"limit", to_json(ctrl.expected)}},
                                      gap, Relation::LessThan, previous));
        previous = gap;
      }
      s.checks.push_back(make_check(id + "/control-extrapolated", {{"zpoly", "oracle + p_L"}},
                                    (ctrl.extrapolated - ctrl.expected).abs(), Relation::LessThan, previous));
      const std::vector<Rat> slopes = ctrl.slopes();
      Rat step = (slopes[1] - slopes[0]).abs();
      for (std::size_t a = 2; a < slopes.size(); ++a) {
        const Rat next = (slopes[a] - slopes[a - 1]).abs();
        s.checks.push_back(make_check(id + "/control-slope-settles/alpha" + std::to_string(a),
                                      {{"alpha", to_json(ctrl.alphas[a])}, {"zpoly", "oracle + p_L"}},
                                      next, Relation::AtMost, step));
        step = next;
      }
    }
    if (L >= 2) {
      const MultiPoly wrong = *poly + MultiPoly::constant(poly->variables(), poly->degree_bounds(), Rat(1));
      s.checks.push_back(make_check(base + "/negative-control", {{"i", 1}, {"n", 1}, {"zpoly", "oracle + 1"}},
                                    kz_residual(1, 1, pt, params, wrong), Relation::NotEqual, Rat(0)));
    }
  }

  void cramer_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    if (L < 2) return;
    const MultiPoly* poly = oracle_poly(params);
    if (!poly) return budget_note(s, L);
    const std::string base = "cramer/" + lid(L);
    for (int k = 0; k < config_.points_per_test; ++k) {
      const SpectralPoint pt = point(params, k);
      for (int i = 1; i <= L; ++i) {
        if (build_cramer(i, pt, params).degenerate()) {
          s.excluded.push_back({{"L", L}, {"i", i}, {"point", to_json(pt)}, {"reason", "det(W_i) = 0"}});
          continue;
        }
        for (int j = 1; j <= L; ++j) {
          if (j == i) continue;
          s.checks.push_back(make_check(base + "/i" + std::to_string(i) + "/j" + std::to_string(j) + "/p" + std::to_string(k),
                                        {{"i", i}, {"j", j}, {"point", to_json(pt)}},
                                        cramer_identity_residual(i, j, pt, params, *poly), Relation::Equal, Rat(0)));
        }
      }
    }
    const SpectralPoint pt = point(params, 0);
    if (!build_cramer(1, pt, params).degenerate()) {
      const MultiPoly wrong = *poly + MultiPoly::constant(poly->variables(), poly->degree_bounds(), Rat(1));
      s.checks.push_back(make_check(base + "/negative-control", {{"i", 1}, {"j", 2}, {"zpoly", "oracle + 1"}},
                                    cramer_identity_residual(1, 2, pt, params, wrong), Relation::NotEqual, Rat(0)));
    }
  }

  void fuchs_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    const MultiPoly* poly = oracle_poly(params);
    if (!poly) return budget_note(s, L);
    const std::string base = "fuchs/" + lid(L);
    for (int k = 0; k < config_.points_per_test; ++k) {
      const SpectralPoint pt = point(params, k);
      for (int i = 1; i <= L; ++i) {
        const std::string id = "/i" + std::to_string(i) + "/p" + std::to_string(k);
        const FamilyMatrices fam = build_family(i, pt, params, false);
        const Rat scale = fam.prefactor.pow(L - 1);
        s.checks.push_back(make_check(base + "/prefactor/K" + id, {{"i", i}, {"point", to_json(pt)}},
                                      determinant(fam.K) - scale * determinant(fam.Y), Relation::Equal, Rat(0)));
        s.checks.push_back(make_check(base + "/prefactor/Kbar" + id, {{"i", i}, {"point", to_json(pt)}},
                                      determinant(fam.Kbar) - scale * determinant(fam.Ybar), Relation::Equal, Rat(0)));
        if (determinant(fam.Y).is_zero()) {
          s.excluded.push_back({{"L", L}, {"i", i}, {"point", to_json(pt)}, {"reason", "det(Y_i) = 0"}});
          continue;
        }
        s.checks.push_back(make_check(base + id, {{"i", i}, {"point", to_json(pt)}},
                                      fuchs_residual(i, pt, params, *poly), Relation::Equal, Rat(0)));
        if (L >= 2 && !build_cramer(i, pt, params).degenerate()) {
          // B_i = det(Kbar_i) / det(K_i), cross-multiplied.
          const BRatio b = b_ratio(i, pt, params);
          s.checks.push_back(make_check(base + "/b-ratio" + id, {{"i", i}, {"point", to_json(pt)}},
                                        b.numerator * determinant(fam.K) - b.denominator * determinant(fam.Kbar),
                                        Relation::Equal, Rat(0)));
        }
      }
    }
    if (L >= 2) {
      MultiPoly wrong = *poly;
      wrong.add_term(MultiPoly::Exponents(static_cast<std::size_t>(L), 0), Rat(1));
      const SpectralPoint pt = point(params, 0);
      s.checks.push_back(make_check(base + "/negative-control", {{"i", 1}, {"zpoly", "oracle, constant term + 1"}},
                                    fuchs_residual(1, pt, params, wrong), Relation::NotEqual, Rat(0)));
    }
  }

  void zy_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    const std::string base = "zy/" + lid(L);
    const int points = std::max(6, config_.points_per_test);
    const Calibration cal = calibrate(params, seed_for(L, 0), points, orientation());
    report_.calibration[L] = cal.r;
    s.checks.push_back(make_check(base + "/r", {{"L", L}}, cal.r, Relation::Record, Rat(1)));
    for (const auto& sample : cal.samples) {
      s.checks.push_back(make_check(base + "/ratio/i" + std::to_string(sample.i),
                                    {{"i", sample.i}, {"point", to_json(sample.point)},
                                     {"oracle", to_json(sample.oracle)}, {"z_det", to_json(sample.z_det)}},
                                    sample.ratio, Relation::Equal, cal.r));
    }
    for (int k = 0; k < points; ++k) {
      const SpectralPoint pt = sample_generic_point(params, seed_for(L, 0) + static_cast<std::uint64_t>(k));
      for (int i = 1; i <= L; ++i) {
        for (int j = i + 1; j <= L; ++j) {
          s.checks.push_back(make_check(base + "/pair/i" + std::to_string(i) + "/j" + std::to_string(j) + "/p" + std::to_string(k),
                                        {{"i", i}, {"j", j}, {"point", to_json(pt)}},
                                        z_det(i, pt, params) - z_det(j, pt, params), Relation::Equal, Rat(0)));
        }
      }
    }
  }

  void degree_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    if (L < 2) return;
    const std::string base = "degree/" + lid(L);
    for (int i = 1; i <= L; ++i) {
      const DegreeReport rep = degree_report(i, params, seed_for(L, 77));
      for (const auto& slice : rep.slices) {
        const std::string id = "/i" + std::to_string(i) + "/var" + std::to_string(slice.var);
        const Json in = {{"i", i}, {"var", slice.var}, {"frozen", to_json(rep.frozen)}};
        s.checks.push_back(make_check(base + "/detY" + id, in, Rat(slice.det_Y), Relation::Equal, Rat(L - 1)));
        s.checks.push_back(make_check(base + "/detYbar" + id, in, Rat(slice.det_Ybar), Relation::Equal,
                                      Rat(slice.var == i ? L - 2 : L - 1)));
        s.checks.push_back(make_check(base + "/gcd" + id, in, Rat(slice.gcd_degree), Relation::Equal, Rat(0)));
      }
    }
  }

  void asymptotics_suite(SuiteResult& s, const ModelParams& params) {
    const int L = params.L();
    if (L > kMaxInterpolationL) return budget_note(s, L);
    const LeadingCoefficient lc = leading_coefficient(params, orientation());
    const std::string base = "asymptotics/" + lid(L);
    for (std::size_t i = 0; i < lc.via_det.size(); ++i) {
      s.checks.push_back(make_check(base + "/routes/i" + std::to_string(i + 1), {{"i", i + 1}},
                                    lc.via_det[i], Relation::Equal, lc.oracle));
    }
    s.checks.push_back(make_check(base + "/oracle-vs-asymptotic", {{"L", L}}, lc.oracle, Relation::Record,
                                  lc.asymptotic));
    s.checks.push_back(make_check(base + "/ratio", {{"L", L}}, lc.ratio, Relation::Record, Rat(1)));
    report_.leading.push_back(lc);
  }

  const RunConfig& config_;
  Report report_;
  std::map<int, MultiPoly> polys_;
};

}  // namespace

Report run_suites(const RunConfig& config) {
  config.validate();
  return Runner(config).run();
}

Json functional_batch(const ModelParams& params, const std::vector<int>& ns, int points,
                      std::uint64_t seed, BoundaryOrientation orientation) {
  const ZFunction z = [&](const SpectralPoint& p) { return enumerate_Z(params, p, orientation); };
  Json out = Json::array();
  for (int k = 0; k < points; ++k) {
    const SpectralPoint pt = sample_generic_point(params, seed + static_cast<std::uint64_t>(k), true);
    for (int n : ns) {
      out.push_back({{"n", n},
                     {"point", to_json(pt)},
                     {"residual", to_json(functional_residual(n, *pt.lambda0, pt, params, z))}});
    }
  }
  return out;
}

Json kz_batch(const ModelParams& params, int points, std::uint64_t seed,
              BoundaryOrientation orientation) {
  const MultiPoly poly = oracle_polynomial(params, orientation);
  Json out = Json::array();
  for (int k = 0; k < points; ++k) {
    const SpectralPoint pt = sample_generic_point(params, seed + static_cast<std::uint64_t>(k));
    for (int i = 1; i <= params.L(); ++i) {
      for (int n = 1; n <= params.L(); ++n) {
        out.push_back({{"i", i},
                       {"n", n},
                       {"point", to_json(pt)},
                       {"residual", to_json(kz_residual(i, n, pt, params, poly))}});
      }
    }
  }
  return out;
}

MultiPoly reconstruct_polynomial(const ModelParams& params, const std::string& via,
                                 BoundaryOrientation orientation) {
  if (via == "oracle") return oracle_polynomial(params, orientation);
  if (via == "det") return det_polynomial(1, params);
  throw std::invalid_argument("--via must be oracle or det");
}

void emit_polynomial(const ModelParams& params, const std::string& via,
                     BoundaryOrientation orientation, const std::string& path) {
  const MultiPoly p = reconstruct_polynomial(params, via, orientation);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(p).dump(2) << '\n';
}

}  // namespace vertexkz
