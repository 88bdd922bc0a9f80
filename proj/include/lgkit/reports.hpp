#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgkit/cohomology.hpp"
#include "lgkit/model.hpp"

namespace lgkit {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand;
  std::string model_path;
  int weight_cutoff = 0;  // 0: 4 * max d
  int samples = 100;
  std::uint64_t seed = 42;
  std::vector<double> homotheties{0.5, 2.0, 4.0};
  double rho = 1.0;
  std::string out;
  bool parallel = true;
  long max_block = 40000;
};

// Fills the model-dependent defaults.
RunConfig resolve_config(RunConfig cfg, const ModelSpec& spec);
Json config_json(const RunConfig& cfg);

// One verdict line of a report.
struct Check {
  std::string name;
  long samples = 0;
  double max_dev = 0;
  double tol = 0;
  bool pass = false;
  std::string status;  // "pass", "fail", "skipped", "info"
  std::string note;
};

Json check_json(const Check& c);
Check make_check(std::string name, long samples, double max_dev, double tol, std::string note = {});
Check make_flag(std::string name, bool ok, std::string note = {});

Json table_json(const CohomologyTable& t);
Json jacobian_json(const JacobianReport& r);
Json complex_json(const ComplexResult& c);

struct Report {
  Json doc;
  std::vector<Check> checks;
  bool pass() const;  // no failing check
  void finalize();    // writes the checks into doc
};

Report cohomology_report(const ModelSpec& spec, const RunConfig& cfg);
Report geometry_report(const ModelSpec& spec, const RunConfig& cfg);
Report toric_report(const ModelSpec& spec, const RunConfig& cfg);
Report selftest_report(const RunConfig& cfg);

// Fan construction and blow-up checks for (w, d); fan documents go into section.
void append_toric_checks(Report& rep, const std::vector<int>& w, const std::vector<int>& d, const std::string& prefix,
                         Json& section);

// Deterministic text of a report document.
std::string dump_report(const Json& doc);

}  // namespace lgkit
