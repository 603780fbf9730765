#include "hermicode/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermicode/errors.hpp"
#include "hermicode/export.hpp"
#include "hermicode/verify.hpp"

namespace hermicode {
namespace {

using nlohmann::json;

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

OrbitSpec pick_orbit(const HermitianCurve& curve, int orbit) {
  const auto bases = curve.orbit_base_points();
  if (orbit < 0 || orbit >= static_cast<int>(bases.size())) {
    throw UsageError("--orbit must lie in [0, " + std::to_string(bases.size()) + ")");
  }
  return bases[orbit];
}

LinearCode make_code(const RunConfig& cfg) {
  const int q = require(cfg.q, "--q");
  const int m = require(cfg.m, "--m");
  FieldPtr field = Field::for_q(q);
  check_multiplicity(q, m);
  const HermitianCurve curve(field);
  return build_code(field, m, pick_orbit(curve, cfg.orbit));
}

void print_summary(const std::vector<ClaimReport>& reports, std::ostream& err) {
  for (const auto& r : reports) {
    err << to_string(r.status) << "  " << r.claim_id << "  q=" << r.q;
    if (r.m != 0) err << " m=" << r.m;
    if (r.status == ClaimStatus::skipped) {
      err << "  (" << r.note << ")";
    } else if (r.status != ClaimStatus::pass) {
      err << "  expected=" << r.expected.dump() << " observed=" << r.observed.dump();
    }
    err << '\n';
  }
}

std::string reports_csv(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  os << "claim_id,q,m,status\n";
  for (const auto& r : reports) os << r.claim_id << ',' << r.q << ',' << r.m << ',' << to_string(r.status) << '\n';
  return os.str();
}

json distribution_row(ClaimChecker& checker, int q, int m) {
  const LinearCode& code = checker.code(q, m);
  const WeightEnumerator& we = checker.enumerator(q, m);
  json counts = json::object();
  for (int w : we.nonzero_weights()) counts[std::to_string(w)] = we.count(w);
  const auto ws = we.nonzero_weights();
  json first_three = json::array();
  for (std::size_t i = 0; i < ws.size() && i < 3; ++i) first_three.push_back({{"weight", ws[i]}, {"count", we.count(ws[i])}});
  return json{{"q", q}, {"m", m}, {"n", code.n()}, {"k", code.k()}, {"d", we.min_distance()},
              {"distinct_nonzero_weights", ws.size()}, {"smallest_weights", first_three}, {"counts", counts}};
}

// Enumerators for every base-point choice; records whether they coincide.
json orbit_choices(int q, int jobs) {
  const FieldPtr field = Field::for_q(q);
  const HermitianCurve curve(field);
  json out = json::array();
  for (int m = 2; m <= q - 1; ++m) {
    json per_orbit = json::array();
    bool all_equal = true;
    WeightEnumerator first;
    bool have_first = false;
    for (const OrbitSpec& spec : curve.orbit_base_points()) {
      const LinearCode code = build_code(field, m, spec);
      const WeightEnumerator we = weight_enumerator(code, Method::automatic, jobs);
      json counts = json::object();
      for (int w : we.nonzero_weights()) counts[std::to_string(w)] = we.count(w);
      per_orbit.push_back({{"base_point", {spec.u.enc, spec.v.enc}}, {"tau", spec.tau.enc}, {"counts", counts}});
      if (have_first && !(we == first)) all_equal = false;
      if (!have_first) {
        first = we;
        have_first = true;
      }
    }
    out.push_back({{"q", q}, {"m", m}, {"orbits", per_orbit}, {"enumerators_equal", all_equal}});
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.out);
  file << text;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  switch (cfg.command) {
    case Command::points: {
      const int q = require(cfg.q, "--q");
      const HermitianCurve curve(Field::for_q(q));
      const OrbitSpec spec = pick_orbit(curve, cfg.orbit);
      emit(cfg, cfg.format == Format::json ? dump(points_to_json(curve, spec)) : points_to_csv(curve, spec), out);
      return kExitOk;
    }
    case Command::build: {
      const LinearCode code = make_code(cfg);
      emit(cfg, cfg.format == Format::json ? dump(code_to_json(code)) : code_to_csv(code), out);
      return kExitOk;
    }
    case Command::weights: {
      const LinearCode code = make_code(cfg);
      const auto t0 = std::chrono::steady_clock::now();
      Method used = cfg.method;
      const WeightEnumerator we = weight_enumerator(code, cfg.method, cfg.jobs, &used);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      emit(cfg, cfg.format == Format::json ? dump(enumerator_to_json(code, we, used, ms)) : enumerator_to_csv(we), out);
      return kExitOk;
    }
    case Command::verify: {
      ClaimChecker checker(cfg.jobs);
      std::vector<ClaimReport> reports;
      if (cfg.suite_all) {
        if (cfg.q) {
          reports = checker.suite(*cfg.q);
        } else {
          for (int q : report_field_sizes()) {
            auto more = checker.suite(q);
            reports.insert(reports.end(), more.begin(), more.end());
          }
        }
      } else {
        reports = checker.for_code(require(cfg.q, "--q"), require(cfg.m, "--m"));
      }
      print_summary(reports, err);
      emit(cfg, cfg.format == Format::json ? dump(reports_to_json(reports)) : reports_csv(reports), out);
      return any_failure(reports) ? kExitClaimFailure : kExitOk;
    }
    case Command::report: {
      ClaimChecker checker(cfg.jobs);
      json table = json::array();
      std::ostringstream csv;
      csv << "q,m,weight,count\n";
      for (int q : report_field_sizes()) {
        for (int m = 2; m <= std::min(3, q - 1); ++m) {
          json row = distribution_row(checker, q, m);
          for (int w : checker.enumerator(q, m).nonzero_weights()) {
            csv << q << ',' << m << ',' << w << ',' << checker.enumerator(q, m).count(w) << '\n';
          }
          table.push_back(std::move(row));
        }
      }
      json doc{{"table", table}};
      std::vector<ClaimReport> reports;
      if (cfg.suite_all) {
        json choices = json::array();
        for (int q : {3, 4}) {
          for (auto& c : orbit_choices(q, cfg.jobs)) choices.push_back(c);
        }
        doc["orbit_choices"] = choices;
        for (int q : report_field_sizes()) {
          auto more = checker.suite(q);
          reports.insert(reports.end(), more.begin(), more.end());
        }
        doc["claims"] = reports_to_json(reports);
        print_summary(reports, err);
      }
      emit(cfg, cfg.format == Format::json ? dump(doc) : csv.str(), out);
      return any_failure(reports) ? kExitClaimFailure : kExitOk;
    }
  }
  return kExitUsage;
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("HERMICODE_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_command(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace hermicode
