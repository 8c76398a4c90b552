#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vertexkz/determinant_rep.hpp"
#include "vertexkz/errors.hpp"
#include "vertexkz/oracle.hpp"
#include "vertexkz/serialize.hpp"
#include "vertexkz/suites.hpp"

using namespace vertexkz;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kBadInput = 2, kHardFailure = 3 };

struct Options {
  std::optional<int> L;
  std::optional<int> L_max;
  std::optional<std::string> eta;
  std::optional<std::string> mu;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::string config_path;
  std::string out_path;
  bool json = false;
  std::optional<std::string> corrupt_weight_a;
};

struct Resolved {
  int L = 3;
  Rat eta = Rat(1, 3);
  std::vector<Rat> mu;
  std::uint64_t seed = 7;
};

Resolved resolve(const Options& o) {
  Resolved r;
  if (!o.config_path.empty()) {
    const ConfigFile file = load_config(o.config_path);
    if (file.L) r.L = *file.L;
    if (file.eta) r.eta = *file.eta;
    if (file.mu) r.mu = *file.mu;
    if (file.seed) r.seed = *file.seed;
  }
  if (o.L) r.L = *o.L;
  if (o.eta) r.eta = Rat::parse(*o.eta);
  if (o.mu) r.mu = parse_rat_list(*o.mu);
  if (o.seed) r.seed = *o.seed;
  return r;
}

ModelParams params_of(const Resolved& r) {
  if (r.mu.empty()) return ModelParams(r.L, r.eta, ModelParams::defaults(r.L).mu());
  if (static_cast<int>(r.mu.size()) < r.L) {
    throw std::invalid_argument("--mu needs " + std::to_string(r.L) + " entries");
  }
  return ModelParams(r.L, r.eta, std::vector<Rat>(r.mu.begin(), r.mu.begin() + r.L));
}

SpectralPoint point_of(const std::string& text, const ModelParams& params, std::uint64_t seed) {
  if (text.empty()) return sample_generic_point(params, seed);
  SpectralPoint p{parse_rat_list(text), std::nullopt};
  if (static_cast<int>(p.lambda.size()) != params.L()) {
    throw std::invalid_argument("--point needs " + std::to_string(params.L()) + " values");
  }
  return p;
}

void write_json(const Json& j, const std::string& path, bool to_stdout) {
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
  }
  if (to_stdout || path.empty()) std::cout << j.dump(2) << '\n';
}

bool residuals_vanish(const Json& list) {
  for (const auto& e : list) {
    if (e.at("residual").get<std::string>() != "0") return false;
  }
  return true;
}

RunConfig run_config(const Options& o, const Resolved& r, int default_min, int default_max) {
  RunConfig c;
  c.eta = r.eta;
  c.mu = r.mu;
  c.seed = r.seed;
  c.L_min = o.L ? *o.L : default_min;
  c.L_max = o.L_max ? *o.L_max : std::max(c.L_min, o.L ? *o.L : default_max);
  if (o.points) c.points_per_test = *o.points;
  if (o.corrupt_weight_a) c.corrupt_weight_a = Rat::parse(*o.corrupt_weight_a);
  c.output_path = o.out_path;
  return c;
}

int emit_report(const RunConfig& config, const Options& o) {
  const Report report = run_suites(config);
  const Json j = report.to_json();
  if (!o.out_path.empty()) {
    std::ofstream out(o.out_path);
    if (!out) throw std::runtime_error("cannot write " + o.out_path);
    out << j.dump(2) << '\n';
  }
  if (o.json || o.out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& s : report.suites) {
      std::cout << (s.pass() ? "PASS " : "FAIL ") << s.name << " (" << s.checks.size() << " checks)\n";
    }
  }
  for (const auto& e : report.errors) std::cerr << "error: " << e << '\n';
  if (!report.errors.empty()) return kHardFailure;
  return report.all_pass() ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition function and identity checks for the rational six-vertex model"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--L", o.L, "lattice size")->check(CLI::Range(1, 8));
    sub->add_option("--eta", o.eta, "eta as p/q");
    sub->add_option("--mu", o.mu, "comma-separated inhomogeneities");
    sub->add_option("--seed", o.seed, "point-sampling seed");
    sub->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_path, "output file");
    sub->add_flag("--json", o.json, "print JSON");
  };

  std::string point_text;
  bool count_only = false;
  std::string orientation_text = "dw-standard";
  auto* oracle = app.add_subcommand("oracle", "evaluate Z by enumeration");
  common(oracle);
  oracle->add_option("--point", point_text, "comma-separated rapidities");
  oracle->add_flag("--count-only", count_only, "count configurations instead");
  oracle->add_option("--orientation", orientation_text, "dw-standard or dw-reversed");

  std::string via = "det";
  auto* compute = app.add_subcommand("compute", "evaluate Z at a point");
  common(compute);
  compute->add_option("--point", point_text, "comma-separated rapidities");
  compute->add_option("--via", via, "det or oracle")->check(CLI::IsMember({"det", "oracle"}));

  std::string target;
  std::string n_text = "all";
  auto* verify = app.add_subcommand("verify", "check identities");
  common(verify);
  verify->add_option("target", target, "functional, kz, det or all")
      ->required()
      ->check(CLI::IsMember({"functional", "kz", "det", "all"}));
  verify->add_option("--n", n_text, "equation index or all");
  verify->add_option("--points", o.points, "points per test")->check(CLI::PositiveNumber);
  verify->add_option("--L-max", o.L_max, "largest lattice size")->check(CLI::Range(1, 8));

  auto* reconstruct = app.add_subcommand("reconstruct", "write Z as a polynomial");
  common(reconstruct);
  reconstruct->add_option("--via", via, "det or oracle")->check(CLI::IsMember({"det", "oracle"}));

  auto* report = app.add_subcommand("report", "run every suite");
  common(report);
  report->add_option("--L-max", o.L_max, "largest lattice size")->check(CLI::Range(1, 8));
  report->add_option("--points", o.points, "points per test")->check(CLI::PositiveNumber);
  report->add_option("--corrupt-weight-a", o.corrupt_weight_a, "negative control: shift a(x) by this")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    const Resolved r = resolve(o);
    if (*oracle) {
      const BoundaryOrientation orient = parse_orientation(orientation_text);
      if (count_only) {
        const auto count = count_configurations(r.L, orient);
        if (o.json) {
          write_json({{"L", r.L}, {"orientation", std::string(to_string(orient))}, {"count", count}},
                     o.out_path, true);
        } else {
          std::cout << count << '\n';
        }
        return kOk;
      }
      const ModelParams params = params_of(r);
      const SpectralPoint p = point_of(point_text, params, r.seed);
      const Rat z = enumerate_Z(params, p, orient);
      if (o.json) {
        Json mu = Json::array();
        for (const Rat& m : params.mu()) mu.push_back(to_json(m));
        write_json({{"orientation", std::string(to_string(orient))},
                    {"params", {{"L", params.L()}, {"eta", to_json(params.eta())}, {"mu", mu}}},
                    {"point", to_json(p)},
                    {"value", to_json(z)}},
                   o.out_path, true);
      } else {
        std::cout << z.str() << '\n';
      }
      return kOk;
    }
    if (*compute) {
      const ModelParams params = params_of(r);
      const SpectralPoint p = point_of(point_text, params, r.seed);
      const Rat z = via == "det" ? z_det(1, p, params) : enumerate_Z(params, p);
      std::cout << z.str() << '\n';
      return kOk;
    }
    if (*reconstruct) {
      const ModelParams params = params_of(r);
      const MultiPoly poly = reconstruct_polynomial(params, via, BoundaryOrientation::DwStandard);
      write_json(to_json(poly), o.out_path, o.json);
      return kOk;
    }
    if (*verify) {
      if (target == "functional" || target == "kz") {
        const ModelParams params = params_of(r);
        const int points = o.points.value_or(target == "functional" ? 20 : 10);
        Json list;
        if (target == "functional") {
          std::vector<int> ns;
          if (n_text == "all") {
            for (int n = 0; n <= params.L(); ++n) ns.push_back(n);
          } else {
            ns.push_back(std::stoi(n_text));
            if (ns.back() < 0 || ns.back() > params.L()) throw std::invalid_argument("--n out of range");
          }
          list = functional_batch(params, ns, points, r.seed, BoundaryOrientation::DwStandard);
        } else {
          list = kz_batch(params, points, r.seed, BoundaryOrientation::DwStandard);
        }
        write_json(list, o.out_path, true);
        return residuals_vanish(list) ? kOk : kChecksFailed;
      }
      RunConfig config = run_config(o, r, r.L, r.L);
      if (target == "det") config.suites = {"cramer", "fuchs", "zy", "degree", "asymptotics"};
      return emit_report(config, o);
    }
    if (*report) {
      RunConfig config = run_config(o, r, 1, 3);
      if (!o.L && !o.L_max && !o.config_path.empty()) config.L_max = std::max(1, r.L);
      return emit_report(config, o);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kHardFailure;
  }
  return kOk;
}
