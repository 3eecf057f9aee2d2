#include "qfid/qfid.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "qfid/channels.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/json_io.hpp"
#include "qfid/measurement.hpp"
#include "qfid/suites.hpp"
#include "qfid/truncation.hpp"

using nlohmann::json;

struct qfid_state {
  qfid::DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

qfid_status status_of(qfid::ErrorCode code) {
  using qfid::ErrorCode;
  switch (code) {
    case ErrorCode::NotHermitian: return QFID_ERR_NOT_HERMITIAN;
    case ErrorCode::NotPsd: return QFID_ERR_NOT_PSD;
    case ErrorCode::DimMismatch: return QFID_ERR_DIM_MISMATCH;
    case ErrorCode::AncillaTooSmall: return QFID_ERR_ANCILLA;
    case ErrorCode::InvalidPovm: return QFID_ERR_INVALID_POVM;
    case ErrorCode::InvalidChannel: return QFID_ERR_INVALID_CHANNEL;
    case ErrorCode::InvalidTruncation: return QFID_ERR_INVALID_TRUNCATION;
    case ErrorCode::InvalidArgument: return QFID_ERR_INVALID_ARG;
    case ErrorCode::NoConvergence: return QFID_ERR_NO_CONVERGENCE;
    case ErrorCode::ParseError: return QFID_ERR_PARSE;
    case ErrorCode::IoError: return QFID_ERR_IO;
  }
  return QFID_ERR_INTERNAL;
}

template <typename Fn>
qfid_status guarded(Fn&& fn) {
  try {
    fn();
    return QFID_OK;
  } catch (const qfid::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QFID_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qfid::KrausChannel channel_from_spec(const char* spec) {
  std::string s = spec ? spec : "";
  if (!s.empty() && s.front() == '@') return qfid::channel_from_file(s.substr(1));
  return qfid::parse_channel_spec(s);
}

json suite_result_to_json(const qfid::SuiteResult& r) {
  return json{{"suite", r.name},
              {"property", r.property},
              {"trials", r.trials},
              {"failures", r.failures},
              {"messages", r.messages},
              {"passed", r.passed()}};
}

}  // namespace

extern "C" {

const char* qfid_last_error(void) { return g_last_error.c_str(); }

void qfid_free_string(char* s) { delete[] s; }

qfid_status qfid_state_parse(const char* text, qfid_state** out) {
  return guarded([&] {
    qfid::require(text && out, qfid::ErrorCode::InvalidArgument, "null argument");
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw qfid::Error(qfid::ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    *out = new qfid_state{qfid::density_from_json(j)};
  });
}

qfid_status qfid_state_read(const char* path, qfid_state** out) {
  return guarded([&] {
    qfid::require(path && out, qfid::ErrorCode::InvalidArgument, "null argument");
    *out = new qfid_state{qfid::density_from_file(path)};
  });
}

void qfid_state_free(qfid_state* s) { delete s; }

int qfid_state_dim(const qfid_state* s) { return s ? static_cast<int>(s->rho.dim()) : 0; }

qfid_status qfid_fidelity(const qfid_state* rho, const qfid_state* sigma, double* out) {
  return guarded([&] {
    qfid::require(rho && sigma && out, qfid::ErrorCode::InvalidArgument, "null argument");
    *out = qfid::fidelity(rho->rho, sigma->rho);
  });
}

qfid_status qfid_bures_angle(const qfid_state* rho, const qfid_state* sigma, double* out) {
  return guarded([&] {
    qfid::require(rho && sigma && out, qfid::ErrorCode::InvalidArgument, "null argument");
    *out = qfid::bures_angle(rho->rho, sigma->rho);
  });
}

qfid_status qfid_trace_distance(const qfid_state* rho, const qfid_state* sigma, double* out) {
  return guarded([&] {
    qfid::require(rho && sigma && out, qfid::ErrorCode::InvalidArgument, "null argument");
    *out = qfid::trace_distance(rho->rho, sigma->rho);
  });
}

qfid_status qfid_bounds_report(const qfid_state* rho, const qfid_state* sigma, char** json_out) {
  return guarded([&] {
    qfid::require(rho && sigma && json_out, qfid::ErrorCode::InvalidArgument, "null argument");
    *json_out = dup_string(qfid::report_to_json(qfid::check_bounds(rho->rho, sigma->rho)).dump(2));
  });
}

qfid_status qfid_optimal_povm(const qfid_state* rho, const qfid_state* sigma, char** json_out) {
  return guarded([&] {
    qfid::require(rho && sigma && json_out, qfid::ErrorCode::InvalidArgument, "null argument");
    qfid::Povm povm = qfid::fidelity_optimal_povm(rho->rho, sigma->rho);
    double cf = qfid::classical_fidelity(qfid::induced_distribution(rho->rho, povm),
                                         qfid::induced_distribution(sigma->rho, povm));
    json j{{"povm", qfid::povm_to_json(povm)},
           {"classical_fidelity", cf},
           {"quantum_fidelity", qfid::fidelity(rho->rho, sigma->rho)}};
    *json_out = dup_string(j.dump(2));
  });
}

qfid_status qfid_povm_eval(const qfid_state* rho, const qfid_state* sigma, const char* povm_json,
                           char** json_out) {
  return guarded([&] {
    qfid::require(rho && sigma && povm_json && json_out, qfid::ErrorCode::InvalidArgument,
                  "null argument");
    json pj;
    try {
      pj = json::parse(povm_json);
    } catch (const json::exception& e) {
      throw qfid::Error(qfid::ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    qfid::Povm povm = qfid::povm_from_json(pj);
    qfid::ClassicalDistribution p = qfid::induced_distribution(rho->rho, povm);
    qfid::ClassicalDistribution q = qfid::induced_distribution(sigma->rho, povm);
    json j;
    for (qfid::Index m = 0; m < p.size(); ++m) {
      j["p"].push_back(p.probabilities(m));
      j["q"].push_back(q.probabilities(m));
    }
    j["classical_fidelity"] = qfid::classical_fidelity(p, q);
    j["classical_trace_distance"] = qfid::classical_trace_distance(p, q);
    *json_out = dup_string(j.dump(2));
  });
}

qfid_status qfid_entanglement_fidelity(const qfid_state* rho, const char* channel_spec,
                                       double* out) {
  return guarded([&] {
    qfid::require(rho && channel_spec && out, qfid::ErrorCode::InvalidArgument, "null argument");
    *out = qfid::entanglement_fidelity(rho->rho, channel_from_spec(channel_spec));
  });
}

qfid_status qfid_converge(const char* gen1, const char* gen2, const int* dims, int ndims,
                          int cap_dim, char** csv_out) {
  return guarded([&] {
    qfid::require(gen1 && gen2 && dims && csv_out && ndims > 0, qfid::ErrorCode::InvalidArgument,
                  "null argument");
    std::vector<qfid::Index> d(dims, dims + ndims);
    qfid::ConvergenceReport rep = qfid::truncated_fidelity_sweep(
        qfid::parse_generator_spec(gen1), qfid::parse_generator_spec(gen2), d,
        cap_dim > 0 ? cap_dim : qfid::kDefaultCapDim);
    *csv_out = dup_string(rep.to_csv());
  });
}

qfid_status qfid_epsilon_schedule(const char* gen1, const char* gen2, double eps, int cap_dim,
                                  int* dim_out) {
  return guarded([&] {
    qfid::require(gen1 && gen2 && dim_out, qfid::ErrorCode::InvalidArgument, "null argument");
    *dim_out = static_cast<int>(qfid::epsilon_schedule(
        qfid::parse_generator_spec(gen1), qfid::parse_generator_spec(gen2), eps,
        cap_dim > 0 ? cap_dim : qfid::kDefaultCapDim));
  });
}

const char* qfid_suite_list(void) {
  static const std::string list = [] {
    std::string s;
    for (const std::string& name : qfid::suite_names()) {
      if (!s.empty()) s += ",";
      s += name;
    }
    return s;
  }();
  return list.c_str();
}

qfid_status qfid_proptest(const char* suite, uint64_t seed, int trials, char** json_out,
                          int* violations) {
  return guarded([&] {
    qfid::require(suite && json_out && violations, qfid::ErrorCode::InvalidArgument,
                  "null argument");
    std::vector<qfid::SuiteResult> results;
    if (std::string(suite) == "all")
      results = qfid::run_all_suites(seed, trials);
    else
      results.push_back(qfid::run_suite(suite, seed, trials));
    int total = 0;
    json j{{"seed", seed}, {"suites", json::array()}};
    for (const qfid::SuiteResult& r : results) {
      total += r.failures;
      j["suites"].push_back(suite_result_to_json(r));
    }
    j["violations"] = total;
    *violations = total;
    *json_out = dup_string(j.dump(2));
  });
}

}  // extern "C"
