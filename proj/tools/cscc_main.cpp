/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cscc/complex_builder.hpp"
#include "cscc/crosscheck.hpp"
#include "cscc/css.hpp"
#include "cscc/errors.hpp"
#include "cscc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string output;
  int threads = 0;  // 0 = resolve from env, then default 1
};

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char *env = std::getenv("CSCC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void emit(const Options &opt, const nlohmann::json &j, const std::string &text) {
  std::string payload = opt.format == "json" ? j.dump(2) + "\n" : text;
  if (opt.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.output);
    if (!f) throw cscc::Error("cannot open output file " + opt.output);
    f << payload;
  }
}

cscc::Extent parse_extent(const std::string &s) {
  cscc::Extent e{0, 0, 0};
  std::istringstream is(s);
  std::string part;
  int i = 0;
  while (std::getline(is, part, ',')) {
    if (i >= 3) throw cscc::PreconditionError("extent must be X,Y,Z");
    long v = std::strtol(part.c_str(), nullptr, 10);
    if (v < 1) throw cscc::PreconditionError("extent components must be positive");
    e[i++] = static_cast<uint32_t>(v);
  }
  if (i != 3) throw cscc::PreconditionError("extent must be X,Y,Z");
  return e;
}

nlohmann::json read_json_input(const std::string &path) {
  try {
    if (path.empty() || path == "-") {
      return nlohmann::json::parse(std::cin);
    }
    std::ifstream f(path);
    if (!f) throw cscc::ParseError("cannot open input file " + path);
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception &ex) {
    throw cscc::ParseError(std::string("invalid JSON input: ") + ex.what());
  }
}

std::string summarize_complex(const cscc::ColoredComplex &cx) {
  std::ostringstream os;
  os << "qubits=" << cx.qubits.size() << " edges=" << cx.edges.size()
     << " faces=" << cx.faces.size() << " cells=" << cx.cells.size()
     << " boundaries=" << cx.boundaries.size()
     << " truncation=" << cx.truncation_region.size() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"color-code control-S verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global options after a subcommand name
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "write the artifact to a file instead of stdout");
  app.add_option("--threads", opt.threads, "worker threads (default 1; env CSCC_THREADS)");

  // build
  std::string variant = "cube", extent_str = "2,2,2";
  CLI::App *build = app.add_subcommand("build", "generate a complex");
  build->add_option("--variant", variant, "cube | truncated")
      ->check(CLI::IsMember({"cube", "truncated"}));
  build->add_option("--extent", extent_str, "extent as X,Y,Z")->capture_default_str();

  // validate
  std::string input;
  CLI::App *validate_cmd = app.add_subcommand("validate", "run structural validators");
  validate_cmd->add_option("--input", input, "complex JSON (default: stdin)");

  // logicals
  CLI::App *logicals = app.add_subcommand("logicals", "extract a symplectic logical basis");
  logicals->add_option("--input", input, "complex or code JSON (default: stdin)");

  // verify
  std::string fixture;
  CLI::App *verify_cmd = app.add_subcommand("verify", "run an end-to-end verification");
  verify_cmd->add_option("--fixture", fixture,
                         "tetrahedral15 | cube | truncated_cube_min | unencoded_cs");
  verify_cmd->add_option("--input", input, "complex JSON to verify");
  std::string verify_extent;
  verify_cmd->add_option("--extent", verify_extent,
                         "run the control-S protocol on a truncated cube of this extent");

  // commutators
  CLI::App *comm_cmd = app.add_subcommand("commutators", "report theta/phi/eta phases");
  comm_cmd->add_option("--fixture", fixture, "fixture name (default truncated_cube_min)");
  comm_cmd->add_option("--input", input, "complex JSON");

  // oracle-crosscheck
  uint64_t seed = 1;
  size_t trials = 0;
  size_t max_n = 14;
  CLI::App *cross = app.add_subcommand("oracle-crosscheck",
                                       "engine vs statevector oracle on random codes");
  cross->add_option("--seed", seed, "rng seed")->capture_default_str();
  cross->add_option("--trials", trials, "number of random codes")->required();
  cross->add_option("--max-n", max_n, "largest code size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  int threads = resolve_threads(opt.threads);

  try {
    if (build->parsed()) {
      cscc::Extent extent = parse_extent(extent_str);
      cscc::ColoredComplex cx =
          variant == "cube" ? cscc::build_cube(extent) : cscc::build_truncated_cube(extent);
      // the artifact is always the JSON document; text mode adds a summary
      emit(opt, cx.to_json(),
           opt.format == "json" ? "" : cx.to_json().dump(2) + "\n");
      if (opt.format == "text") std::cerr << summarize_complex(cx);
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      cscc::ColoredComplex cx = cscc::ColoredComplex::from_json(read_json_input(input));
      cscc::ValidationReport rep = cscc::validate(cx);
      emit(opt, rep.to_json(), rep.to_text());
      return rep.all_pass() ? kExitOk : kExitFail;
    }
    if (logicals->parsed()) {
      nlohmann::json j = read_json_input(input);
      cscc::CssCode code;
      cscc::LogicalBasis basis;
      if (j.contains("qubits")) {
        cscc::ColoredComplex cx = cscc::ColoredComplex::from_json(j);
        code = cscc::assemble(cx);
        if (!cx.truncation_region.empty()) code = cscc::project_z(code, cx.truncation_region);
        basis = cscc::match_geometric_basis(cx, code, cscc::logical_basis(code));
      } else {
        code = cscc::CssCode::from_json(j);
        basis = cscc::logical_basis(code);
      }
      nlohmann::json out;
      out["n"] = code.n;
      out["rank_hx"] = code.rank_hx();
      out["rank_hz"] = code.rank_hz();
      out["k"] = code.k();
      out["basis"] = basis.to_json();
      std::ostringstream os;
      os << "n=" << code.n << " k=" << code.k() << "\n";
      for (const auto &p : basis.pairs) {
        os << "  " << p.label << ": |Xbar|=" << p.xbar.weight() << " |Zbar|=" << p.zbar.weight();
        if (!p.dominant_color.empty()) os << " dominant=" << p.dominant_color;
        os << "\n";
      }
      if (!basis.annotation.empty()) os << basis.annotation << "\n";
      emit(opt, out, os.str());
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      cscc::VerificationReport rep;
      if (!verify_extent.empty()) {
        rep = cscc::verify_cs_protocol(parse_extent(verify_extent), threads);
      } else if (!fixture.empty()) {
        rep = cscc::run_fixture(fixture, threads);
      } else if (!input.empty() || fixture.empty()) {
        cscc::ColoredComplex cx = cscc::ColoredComplex::from_json(read_json_input(input));
        bool assert_cs = !cx.truncation_region.empty();
        rep = cscc::verify_complex(cx, "complex input", assert_cs, threads);
      }
      emit(opt, rep.to_json(), rep.to_text());
      return rep.pass ? kExitOk : kExitFail;
    }
    if (comm_cmd->parsed()) {
      cscc::VerificationReport rep;
      if (!input.empty()) {
        cscc::ColoredComplex cx = cscc::ColoredComplex::from_json(read_json_input(input));
        rep = cscc::verify_complex(cx, "complex input", true, threads);
      } else {
        rep = cscc::run_fixture(fixture.empty() ? "truncated_cube_min" : fixture, threads);
      }
      nlohmann::json out;
      out["subject"] = rep.subject;
      out["theta"] = nlohmann::json::array();
      for (const auto &[op, exp] : rep.theta_exps) out["theta"].push_back({{"op", op}, {"exp", exp}});
      std::ostringstream os;
      os << "subject: " << rep.subject << "\n";
      if (rep.commutators) {
        out["phi_exp"] = rep.commutators->phi_exp;
        out["eta_exp"] = rep.commutators->eta_exp;
        out["phi_membership"] = rep.commutators->phi_membership.to_json();
        out["eta_membership"] = rep.commutators->eta_membership.to_json();
        os << "phi_exp=" << rep.commutators->phi_exp
           << " eta_exp=" << rep.commutators->eta_exp << "\n";
      }
      for (const auto &[op, exp] : rep.theta_exps) os << "theta[" << op << "]=" << exp << "\n";
      emit(opt, out, os.str());
      return rep.pass ? kExitOk : kExitFail;
    }
    if (cross->parsed()) {
      if (trials < 1) {
        std::cerr << "error: trials must be >= 1\n";
        return kExitUsage;
      }
      cscc::CrosscheckResult res = cscc::oracle_crosscheck(seed, trials, max_n);
      emit(opt, res.to_json(), res.to_text());
      return res.all_agree() ? kExitOk : kExitFail;
    }
  } catch (const cscc::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cscc::PreconditionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cscc::UnknownFixtureError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cscc::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
