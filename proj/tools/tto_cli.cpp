#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tto/identities.hpp"
#include "tto/operators.hpp"

using json = nlohmann::json;

namespace {

// Inner-function syntax: "zpow:N" or "blaschke:[re,im;re,im;...]".
tto::BlaschkeProduct parse_inner(const std::string& text) {
  if (text.rfind("zpow:", 0) == 0) {
    return tto::BlaschkeProduct::zpow(std::stoi(text.substr(5)));
  }
  if (text.rfind("blaschke:[", 0) == 0 && text.back() == ']') {
    std::vector<tto::Complex> zeros;
    std::string body = text.substr(10, text.size() - 11);
    std::istringstream items(body);
    std::string item;
    while (std::getline(items, item, ';')) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) {
        throw tto::ConfigError("bad zero '" + item + "', want re,im");
      }
      zeros.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
    }
    return tto::BlaschkeProduct(std::move(zeros));
  }
  throw tto::ConfigError("cannot parse inner function '" + text +
                         "' (want zpow:N or blaschke:[re,im;...])");
}

void write_output(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw tto::ConfigError("cannot open output path " + out_path);
    out << text << "\n";
  }
}

json build_operator(const std::string& kind, const tto::BlaschkeProduct& theta,
                    const tto::BlaschkeProduct& alpha, const tto::LaurentSymbol& symbol,
                    int grid) {
  json matrix;
  std::string basis_kind =
      theta.is_monomial() && alpha.is_monomial() ? "monomial" : "takenaka-malmquist";
  if (kind == "atto") {
    matrix = tto::to_json(tto::atto_matrix(symbol, theta, alpha, grid));
  } else if (kind == "c-theta") {
    matrix = tto::to_json(tto::c_theta_matrix(tto::tm_basis(theta, grid)));
  } else if (kind == "c-split") {
    matrix = tto::to_json(tto::c_split_matrix(alpha, theta, grid));
  } else if (kind == "hankel") {
    const auto domain = tto::tm_basis(theta, grid);
    const auto window =
        tto::FourierWindow::band(symbol.band_min() - theta.degree(), -1);
    matrix = tto::to_json(tto::hankel_matrix(symbol, domain, window));
  } else if (kind == "tilde-hankel") {
    const auto codomain = tto::tm_basis(theta, grid);
    const auto window =
        tto::FourierWindow::band(symbol.band_min() - theta.degree(), -1);
    matrix = tto::to_json(tto::tilde_hankel_matrix(theta, window, codomain));
  } else {
    throw tto::ConfigError("unknown operator kind '" + kind +
                           "' (want atto|c-theta|c-split|hankel|tilde-hankel)");
  }
  matrix["meta"] = {{"theta", theta.label()},
                    {"alpha", alpha.label()},
                    {"symbol", symbol.encode()},
                    {"basis", basis_kind},
                    {"grid", grid}};
  return matrix;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model-space operator toolkit"};
  app.require_subcommand(1);

  std::string theta_text = "zpow:5";
  std::string alpha_text = "zpow:3";
  std::string gamma_text;
  std::string symbol_text;
  std::string id;
  std::string out_path;
  double tol_override = -1.0;
  tto::RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--theta", theta_text, "inner function, zpow:N or blaschke:[re,im;...]");
    cmd->add_option("--alpha", alpha_text, "divisor inner function");
    cmd->add_option("--symbol", symbol_text, "symbol coefficients, \"n:re,im;...\"");
    cmd->add_option("--grid", config.grid_size, "sample grid size (power of two)");
    cmd->add_option("--tol", tol_override, "tolerance override for every check");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--trials", config.trials, "random trials per property");
    cmd->add_option("--out", out_path, "also write the JSON result to this path");
  };

  CLI::App* build = app.add_subcommand("build", "emit one operator matrix as JSON");
  build->add_option("--id", id, "operator kind: atto|c-theta|c-split|hankel|tilde-hankel")
      ->required();
  add_common(build);

  CLI::App* verify = app.add_subcommand("verify", "verify one identity and print its report");
  verify->add_option("--id", id, "identity id from the registry")->required();
  add_common(verify);

  CLI::App* suite = app.add_subcommand("suite", "run every registered check");
  add_common(suite);

  CLI::App* classify = app.add_subcommand("classify", "enumerate admissible conjugations");
  classify->add_option("--gamma", gamma_text,
                       "multiplier inner function; selects the shift-target enumeration");
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (tol_override > 0.0) {
      config.tol_monomial = tol_override;
      config.tol_blaschke = tol_override;
    }
    const tto::BlaschkeProduct theta = parse_inner(theta_text);
    const tto::BlaschkeProduct alpha = parse_inner(alpha_text);
    const tto::LaurentSymbol symbol =
        symbol_text.empty() ? tto::LaurentSymbol() : tto::LaurentSymbol::parse(symbol_text);

    if (build->parsed()) {
      write_output(build_operator(id, theta, alpha, symbol, config.grid_size), out_path);
      return 0;
    }

    if (verify->parsed()) {
      tto::VerifyRequest request;
      request.theta = theta;
      request.alpha = alpha;
      if (!symbol_text.empty()) request.symbol = symbol;
      request.config = config;
      const auto report = tto::verify_identity(id, request);
      write_output(report.to_json(), out_path);
      return tto::report_matches_expectation(report) ? 0 : 1;
    }

    if (suite->parsed()) {
      const auto result = tto::run_suite(config);
      json all = json::array();
      std::printf("%-18s %-24s %12s %10s  %s\n", "id", "theta/alpha", "residual", "tol",
                  "status");
      for (const auto& rep : result.reports) {
        all.push_back(rep.to_json());
        const bool ok = tto::report_matches_expectation(rep);
        std::string status = ok ? (rep.pass ? "ok" : "ok (expected failure)") : "FAIL";
        const std::string params = rep.params.value("theta", std::string("-")) + "/" +
                                   rep.params.value("alpha", std::string("-"));
        std::printf("%-18s %-24s %12.3e %10.1e  %s\n", rep.id.c_str(), params.c_str(),
                    rep.residual, rep.tolerance, status.c_str());
      }
      std::printf("%zu checks, %s\n", result.reports.size(),
                  result.all_ok ? "all ok" : "FAILURES present");
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << all.dump(2) << "\n";
      }
      return result.all_ok ? 0 : 1;
    }

    if (classify->parsed()) {
      if (!gamma_text.empty()) {
        const tto::BlaschkeProduct gamma = parse_inner(gamma_text);
        const auto result = tto::mz_conjugation_enumerate(
            alpha.degree(), theta.degree(), gamma.degree(),
            2 * (theta.degree() + gamma.degree()) + 2);
        json betas = json::array();
        for (const int b : result.beta_degrees) betas.push_back("z^" + std::to_string(b));
        write_output(betas, out_path);
      } else {
        const auto survivors = tto::dichotomy_check(alpha.degree(), theta.degree());
        json names = json::array();
        for (const auto& s : survivors) names.push_back(s.name);
        write_output(names, out_path);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
