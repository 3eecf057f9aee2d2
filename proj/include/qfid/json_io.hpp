#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qfid/channels.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/measurement.hpp"
#include "qfid/states.hpp"

namespace qfid {

// Repo-wide JSON schema: a complex scalar is a two-element array [re, im], a
// matrix is a row-major array of rows, a density matrix is
// {"dim": n, "entries": [...]}, a channel is {"dim": n, "kraus": [...]},
// a POVM is {"dim": n, "effects": [...]}.

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json povm_to_json(const Povm& povm);
Povm povm_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const FidelityReport& r);

DensityMatrix density_from_file(const std::string& path);
KrausChannel channel_from_file(const std::string& path);
Povm povm_from_file(const std::string& path);

}  // namespace qfid
