#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "commlab/cli/config.hpp"
#include "commlab/cstar/matrix_group.hpp"
#include "commlab/dynamics/decay.hpp"
#include "commlab/pun/rep.hpp"

namespace commlab::cli {

using ojson = nlohmann::ordered_json;

ojson complex_json(std::complex<double> z);
ojson matrix_json(const ComplexMatrix& m);

ojson decay_json(const dynamics::DecayReport& r);
ojson filter_json(const cstar::FilterReport& r);
ojson verdict_json(const pun::CriterionVerdict& v);

/// {"tool", "version", "config", "passed", "result"} pretty-printed with a
/// trailing newline.
std::string render_report(const RunConfig& cfg, bool passed, ojson result);

/// Decay curve as CSV preceded by "# " header lines carrying the version and
/// the config JSON.
std::string render_decay_csv(const RunConfig& cfg, const dynamics::DecayReport& r);

} // namespace commlab::cli
