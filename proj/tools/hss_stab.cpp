// hss-stab: cohomology oracle, stability certifier and exhaustive verifier
// for cotangent bundles of compact irreducible Hermitian symmetric spaces
// restricted to complete intersections.
//
// Exit status: 0 success, 1 verification violations, 2 usage errors.

#include <chrono>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hss/cohomology.hpp"
#include "hss/parallel.hpp"
#include "hss/report.hpp"
#include "hss/resolutions.hpp"
#include "hss/spaces.hpp"
#include "hss/stability.hpp"
#include "hss/verifier.hpp"
#include "hss/version.hpp"

namespace {

std::string now_iso8601() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<hss::HssSpace> family_spaces(const std::string& family, int a_max, int b_max,
                                         int n_max) {
  std::vector<hss::HssSpace> spaces;
  if (family == "A") {
    for (int a = 2; a <= a_max; ++a)
      for (int b = 2; b <= b_max; ++b) spaces.push_back(hss::describe_grassmannian(a, b));
  } else if (family == "B") {
    for (int n = 2; n <= n_max; ++n) spaces.push_back(hss::describe_quadric(n));
  } else if (family == "C") {
    for (int n = 3; n <= n_max; ++n) spaces.push_back(hss::describe_lagrangian(n));
  } else if (family == "D") {
    for (int n = 5; n <= n_max; ++n) spaces.push_back(hss::describe_spinor(n));
  } else {
    throw CLI::ValidationError("--family", "must be one of A, B, C, D");
  }
  if (spaces.empty()) throw CLI::ValidationError("--family", "empty parameter range");
  return spaces;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology oracle and slope-stability certifier for Hermitian symmetric spaces"};
  app.set_version_flag("--version", hss::kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // allow the global --format/--log/--workers after a subcommand

  std::string format_name = "json";
  std::string log_path;
  int workers = hss::default_workers();
  bool timings = false;
  app.add_option("--format", format_name, "output format: json|csv|md")
      ->capture_default_str();
  app.add_option("--log", log_path, "append a run record to this NDJSON file");
  app.add_option("--workers", workers,
                 "worker threads for sweeps (default: HSS_STAB_WORKERS or 1)");
  app.add_flag("--timings", timings, "include elapsed_ms in verification reports");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "non-vanishing of H^q(Y, Omega^p(l))");
  std::string oracle_space;
  int oracle_p = 0, oracle_q = 0, oracle_l = 0, witness_cap = 16;
  oracle->add_option("--space", oracle_space, "space key, e.g. A:2,3 or B:3")->required();
  oracle->add_option("--p", oracle_p, "form degree p")->required();
  oracle->add_option("--q", oracle_q, "cohomological degree q")->required();
  oracle->add_option("--l", oracle_l, "twist l")->required();
  oracle->add_option("--witness-cap", witness_cap, "max witnesses listed")
      ->capture_default_str();

  // stability
  auto* stability = app.add_subcommand("stability", "certify stability of a restriction");
  std::string stab_space, stab_ci, stab_resolution;
  int divisor_degree = 0;
  bool accept_exceptional = false;
  stability->add_option("--space", stab_space, "space key")->required();
  stability->add_option("--ci", stab_ci, "complete-intersection degrees, e.g. 2,3");
  stability->add_option("--resolution", stab_resolution,
                        "resolution text: ci:2,3 or raw:[{2,3},{5}]");
  stability->add_option("--divisor-degree", divisor_degree,
                        "use the small-dimension divisor table instead of a resolution");
  stability->add_flag("--accept-asserted-exceptional", accept_exceptional,
                      "allow EIII/EVII with the asserted-tables caveat");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive proposition sweeps");
  std::string prop;
  int a_max = 6, b_max = 6, l_margin = 2, n_max = 0, l_max = 0, size_max = 4;
  int xcheck_l_max = 10;
  long long sample_budget = 200000;
  std::string family = "B";
  verify->add_option("--prop", prop, "3.2|3.3|3.5|3.6|3.8|3.9|2.2|xcheck|4.10|all")->required();
  verify->add_option("--a-max", a_max, "box sweep: max a")->capture_default_str();
  verify->add_option("--b-max", b_max, "box sweep: max b")->capture_default_str();
  verify->add_option("--l-margin", l_margin, "twist margin beyond the natural bound")
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "sequence sweep: max n (default 8 for C, 10 for D)");
  verify->add_option("--l-max", l_max, "sequence sweep: max twist (default n_max+3 / 2*n_max)");
  verify->add_option("--family", family, "2.2 sweep: space family A|B|C|D")
      ->capture_default_str();
  verify->add_option("--xcheck-l-max", xcheck_l_max, "cross-check twist bound")
      ->capture_default_str();
  verify->add_option("--size-max", size_max, "4.10: max matrix order")->capture_default_str();
  verify->add_option("--sample-budget", sample_budget, "4.10: samples per order above 4")
      ->capture_default_str();

  // surface-invariants
  auto* surface = app.add_subcommand("surface-invariants", "invariants of degree-d surfaces in Q^3");
  long long surf_d = 0, surf_d_max = 0;
  surface->add_option("--d", surf_d, "divisor degree");
  surface->add_option("--d-max", surf_d_max, "emit a table for d = 1..d_max");

  // langer
  auto* langer_cmd = app.add_subcommand("langer", "Langer restriction threshold");
  std::string langer_space;
  langer_cmd->add_option("--space", langer_space, "P:2, P:3 or B:3")->required();

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "space catalog");
  std::string catalog_space;
  catalog_cmd->add_option("--space", catalog_space, "describe a single space key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const hss::Format format = [&] {
    try {
      return hss::parse_format(format_name);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      std::exit(2);
    }
  }();

  std::string payload;
  int status = 0;
  const std::string started = now_iso8601();

  try {
    if (oracle->parsed()) {
      const hss::HssSpace space = hss::parse_space_key(oracle_space);
      const hss::CohomologyQuery query = hss::make_query(space, oracle_p, oracle_q, oracle_l);
      payload = hss::emit::oracle_answer(query, hss::nonvanishing(query, witness_cap), format);
    } else if (stability->parsed()) {
      const hss::HssSpace space = hss::parse_space_key(stab_space);
      if ((divisor_degree > 0) + (!stab_ci.empty()) + (!stab_resolution.empty()) != 1)
        throw std::invalid_argument(
            "stability: give exactly one of --ci, --resolution, --divisor-degree");
      if (divisor_degree > 0) {
        payload = hss::emit::verdict(space.key(), "divisor:" + std::to_string(divisor_degree),
                                     hss::small_dimension_verdict(space, divisor_degree),
                                     format);
      } else {
        const hss::Resolution r = !stab_ci.empty()
                                      ? hss::parse_resolution("ci:" + stab_ci)
                                      : hss::parse_resolution(stab_resolution);
        hss::CertifyOptions opts;
        opts.accept_asserted_exceptional = accept_exceptional;
        opts.workers = workers;
        payload = hss::emit::verdict(space.key(), r.str(),
                                     hss::certify_restriction(space, r, opts), format);
      }
    } else if (verify->parsed()) {
      std::vector<hss::VerificationReport> reports;
      auto want = [&](const std::string& p) { return prop == p || prop == "all"; };
      if (want("3.2"))
        reports.push_back(hss::verify_grassmannian_lower(a_max, b_max, l_margin, workers));
      if (want("3.3"))
        reports.push_back(hss::verify_grassmannian_upper(a_max, b_max, l_margin, workers));
      if (want("3.5") || want("3.6")) {
        const int n = n_max > 0 ? n_max : 8;
        auto rs = hss::verify_cn(n, l_max > 0 ? l_max : n + 3, workers);
        if (want("3.5")) reports.push_back(rs[0]);
        if (want("3.6")) reports.push_back(rs[1]);
      }
      if (want("3.8") || want("3.9")) {
        const int n = n_max > 0 ? n_max : 10;
        auto rs = hss::verify_dn(n, l_max > 0 ? l_max : 2 * n, workers);
        if (want("3.8")) reports.push_back(rs[0]);
        if (want("3.9")) reports.push_back(rs[1]);
      }
      if (want("2.2")) {
        const int n = n_max > 0 ? n_max : 6;
        reports.push_back(
            hss::verify_prop22(family_spaces(family, a_max, b_max, n), l_margin, workers));
      }
      if (want("xcheck")) reports.push_back(hss::cross_check_isomorphisms(xcheck_l_max, workers));
      if (want("4.10"))
        reports.push_back(hss::verify_rank1_matrix_fact(size_max, sample_budget, workers));
      if (reports.empty()) throw std::invalid_argument("verify: unknown --prop " + prop);

      std::vector<std::string> chunks;
      bool all_ok = true;
      for (const auto& r : reports) {
        chunks.push_back(hss::emit::verification(r, format, timings));
        if (!r.success) all_ok = false;
      }
      payload = reports.size() == 1 && format == hss::Format::Json
                    ? chunks.front()
                    : hss::emit::join(chunks, format == hss::Format::Json ? "\n" : "");
      if (!all_ok) status = 1;
    } else if (surface->parsed()) {
      if ((surf_d > 0) == (surf_d_max > 0))
        throw std::invalid_argument("surface-invariants: give exactly one of --d, --d-max");
      std::vector<hss::SurfaceInvariants> rows;
      if (surf_d > 0)
        rows.push_back(hss::q3_surface_invariants(surf_d));
      else
        for (long long d = 1; d <= surf_d_max; ++d) rows.push_back(hss::q3_surface_invariants(d));
      payload = hss::emit::surface_invariants(rows, format);
    } else if (langer_cmd->parsed()) {
      const hss::HssSpace space = hss::parse_space_key(langer_space);
      payload = hss::emit::langer(space.key(), hss::langer_bound(space), format);
    } else if (catalog_cmd->parsed()) {
      payload = catalog_space.empty()
                    ? hss::emit::catalog(format)
                    : hss::emit::space_descriptor(hss::parse_space_key(catalog_space), format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << payload;
  if (!payload.empty() && payload.back() != '\n') std::cout << "\n";

  if (!log_path.empty()) {
    std::vector<std::string> args(argv, argv + argc);
    try {
      hss::append_run_record(log_path, args, started, payload, status);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  return status;
}
