// Batch CLI over the qfid C API. Exit codes: 0 success, 1 input error,
// 2 property-suite violation.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfid/qfid.h"

namespace {

struct Options {
  std::string rho_path, sigma_path, povm_path, channel_spec;
  std::string g1, g2, dims = "4,8,16,32,64";
  std::string suite = "all", out_path, format;
  double eps = 0;
  std::uint64_t seed = 0;
  int trials = 0;
};

int fail(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return 1;
}

int fail_api(qfid_status st) {
  std::cerr << "error (" << st << "): " << qfid_last_error() << "\n";
  return 1;
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) return fail("cannot write '" + out_path + "'");
  out << payload;
  return 0;
}

struct StateHandle {
  qfid_state* s = nullptr;
  ~StateHandle() { qfid_state_free(s); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { qfid_free_string(s); }
};

int load_state(const std::string& path, StateHandle& h) {
  qfid_status st = qfid_state_read(path.c_str(), &h.s);
  return st == QFID_OK ? 0 : fail_api(st);
}

int cap_dim_from_env() {
  const char* v = std::getenv("QFID_CAP_DIM");
  return v ? std::atoi(v) : 0;  // 0 selects the library default
}

std::string scalar_json(const char* key, double value) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "{\"%s\": %.17g}\n", key, value);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum state fidelity toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--rho", opt.rho_path, "density matrix JSON file")->required();
    cmd->add_option("--sigma", opt.sigma_path, "density matrix JSON file")->required();
    cmd->add_option("--out", opt.out_path, "output file (stdout if omitted)");
  };

  CLI::App* c_fid = app.add_subcommand("fidelity", "fidelity of two states");
  add_pair(c_fid);
  CLI::App* c_bounds = app.add_subcommand("bounds", "fidelity / trace-distance report");
  add_pair(c_bounds);
  CLI::App* c_povm = app.add_subcommand("povm", "evaluate a POVM on two states");
  add_pair(c_povm);
  c_povm->add_option("--povm", opt.povm_path, "POVM JSON file")->required();
  CLI::App* c_opt = app.add_subcommand("optimal-povm", "fidelity-attaining measurement");
  add_pair(c_opt);

  CLI::App* c_ent = app.add_subcommand("entfid", "entanglement fidelity of a channel");
  c_ent->add_option("--rho", opt.rho_path, "density matrix JSON file")->required();
  c_ent->add_option("--channel", opt.channel_spec,
                    "channel spec (e.g. dephasing:0.25) or @file.json")->required();
  c_ent->add_option("--out", opt.out_path, "output file");

  CLI::App* c_conv = app.add_subcommand("converge", "truncation convergence sweep");
  c_conv->add_option("--g1", opt.g1, "spectral generator, e.g. geometric:0.5")->required();
  c_conv->add_option("--g2", opt.g2, "spectral generator, e.g. geometric:0.333")->required();
  c_conv->add_option("--dims", opt.dims, "ascending comma-separated truncation dims");
  c_conv->add_option("--eps", opt.eps, "report the smallest dim meeting this gap instead");
  c_conv->add_option("--out", opt.out_path, "output file");

  CLI::App* c_prop = app.add_subcommand("proptest", "run property suites");
  c_prop->add_option("--suite", opt.suite, "suite name or 'all'");
  c_prop->add_option("--seed", opt.seed, "random seed");
  c_prop->add_option("--trials", opt.trials, "trials per suite (0 = suite default)");
  c_prop->add_option("--out", opt.out_path, "JSON report file");

  CLI11_PARSE(app, argc, argv);

  if (c_fid->parsed() || c_bounds->parsed() || c_povm->parsed() || c_opt->parsed()) {
    StateHandle rho, sigma;
    if (load_state(opt.rho_path, rho) || load_state(opt.sigma_path, sigma)) return 1;

    if (c_fid->parsed()) {
      double f = 0;
      qfid_status st = qfid_fidelity(rho.s, sigma.s, &f);
      if (st != QFID_OK) return fail_api(st);
      return emit(scalar_json("fidelity", f), opt.out_path);
    }
    StringHandle payload;
    qfid_status st = QFID_OK;
    if (c_bounds->parsed()) {
      st = qfid_bounds_report(rho.s, sigma.s, &payload.s);
    } else if (c_opt->parsed()) {
      st = qfid_optimal_povm(rho.s, sigma.s, &payload.s);
    } else {
      std::ifstream in(opt.povm_path);
      if (!in.good()) return fail("cannot open '" + opt.povm_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      st = qfid_povm_eval(rho.s, sigma.s, ss.str().c_str(), &payload.s);
    }
    if (st != QFID_OK) return fail_api(st);
    return emit(payload.s, opt.out_path);
  }

  if (c_ent->parsed()) {
    StateHandle rho;
    if (load_state(opt.rho_path, rho)) return 1;
    double f = 0;
    qfid_status st = qfid_entanglement_fidelity(rho.s, opt.channel_spec.c_str(), &f);
    if (st != QFID_OK) return fail_api(st);
    return emit(scalar_json("entanglement_fidelity", f), opt.out_path);
  }

  if (c_conv->parsed()) {
    if (opt.eps > 0) {
      int dim = 0;
      qfid_status st = qfid_epsilon_schedule(opt.g1.c_str(), opt.g2.c_str(), opt.eps,
                                             cap_dim_from_env(), &dim);
      if (st != QFID_OK) return fail_api(st);
      return emit(scalar_json("dim", dim), opt.out_path);
    }
    std::vector<int> dims;
    std::stringstream ss(opt.dims);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) dims.push_back(std::atoi(tok.c_str()));
    if (dims.empty()) return fail("--dims is empty");
    StringHandle csv;
    qfid_status st = qfid_converge(opt.g1.c_str(), opt.g2.c_str(), dims.data(),
                                   static_cast<int>(dims.size()), cap_dim_from_env(), &csv.s);
    if (st != QFID_OK) return fail_api(st);
    return emit(csv.s, opt.out_path);
  }

  // proptest
  StringHandle report;
  int violations = 0;
  qfid_status st =
      qfid_proptest(opt.suite.c_str(), opt.seed, opt.trials, &report.s, &violations);
  if (st != QFID_OK) return fail_api(st);
  if (emit(report.s, opt.out_path)) return 1;
  std::cout << (violations == 0 ? "PASS" : "FAIL") << ": " << violations
            << " violation(s)\n";
  return violations == 0 ? 0 : 2;
}
