#include "covol/survey.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "covol/json_io.hpp"
#include "covol/schubert.hpp"

namespace covol {

std::string family_name(SurveyFamily f) {
  switch (f) {
    case SurveyFamily::schubert: return "schubert";
    case SurveyFamily::double_schubert: return "double_schubert";
    case SurveyFamily::richardson: return "richardson";
    case SurveyFamily::double_richardson: return "double_richardson";
    case SurveyFamily::skew_schubert: return "skew_schubert";
  }
  throw std::logic_error("unknown family");
}

SurveyFamily parse_family(const std::string& name) {
  for (SurveyFamily f : {SurveyFamily::schubert, SurveyFamily::double_schubert,
                         SurveyFamily::richardson, SurveyFamily::double_richardson,
                         SurveyFamily::skew_schubert}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown survey family: " + name);
}

bool family_asserts(SurveyFamily f) { return f != SurveyFamily::skew_schubert; }

namespace {

std::vector<int> s_block(int n) {
  std::vector<int> block;
  for (int i = n; i < 2 * n; ++i) block.push_back(i);
  return block;
}

}  // namespace

MultiPoly survey_polynomial(SurveyFamily f, const Permutation& u, const Permutation& w) {
  const int n = u.size();
  switch (f) {
    case SurveyFamily::schubert:
      return schubert_polynomial(u, false);
    case SurveyFamily::double_schubert:
      return flip_signs(schubert_polynomial(u, true), s_block(n));
    case SurveyFamily::richardson:
      return richardson_polynomial(w, u, false);
    case SurveyFamily::double_richardson:
      return flip_signs(richardson_polynomial(w, u, true), s_block(n));
    case SurveyFamily::skew_schubert:
      return skew_schubert(w, u);
  }
  throw std::logic_error("unknown family");
}

std::vector<std::string> survey_var_names(SurveyFamily f, int n) {
  switch (f) {
    case SurveyFamily::double_schubert:
    case SurveyFamily::double_richardson:
      return ts_names(n);
    default:
      return t_names(n);
  }
}

namespace {

struct Task {
  SurveyFamily family;
  Permutation u;
  Permutation w;
};

std::string task_key(const Task& t) {
  return family_name(t.family) + "|" + t.u.to_string() + "|" + t.w.to_string();
}

std::string record_key(const Json& record) {
  return record.at("family").get<std::string>() + "|" + record.at("u").get<std::string>() + "|" +
         record.at("w").get<std::string>();
}

// a stored record is reusable only if it carries every requested flag
bool record_covers_checks(const Json& record, const CheckSet& checks) {
  const auto& flags = record.at("report").at("flags");
  if (checks.mconvex && !flags.contains("m_convex")) return false;
  if (checks.dlc && !flags.contains("dlc")) return false;
  if (checks.lorentzian && !flags.contains("lorentzian")) return false;
  if (checks.dually_lorentzian && !flags.contains("dually_lorentzian")) return false;
  return true;
}

std::string compute_record(const Task& task, const CheckSet& checks, bool* passed) {
  auto start = std::chrono::steady_clock::now();
  MultiPoly poly = survey_polynomial(task.family, task.u, task.w);
  CertReport report = certify_report(poly, checks);
  auto stop = std::chrono::steady_clock::now();
  const long long wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  *passed = report.all_requested_pass();
  Json record{{"family", family_name(task.family)},
              {"u", task.u.to_string()},
              {"w", task.w.to_string()},
              {"digest", fnv1a_hex(canonical_poly_string(
                             poly, survey_var_names(task.family, task.u.size())))},
              {"report", report_to_json(report)},
              {"wall_ms", wall_ms}};
  return record.dump();
}

}  // namespace

SurveyOutcome run_survey(const SurveyOptions& options) {
  if (options.families.empty()) throw std::invalid_argument("no survey families selected");
  if (options.out_path.empty()) throw std::invalid_argument("survey needs an output path");
  auto pairs = enumerate_bruhat_pairs(options.n, options.max_n);

  std::vector<Task> tasks;
  for (SurveyFamily family : options.families) {
    for (const auto& [u, w] : pairs) tasks.push_back(Task{family, u, w});
  }

  // previously completed records are reused verbatim
  std::map<std::string, std::string> done;
  if (options.resume) {
    std::ifstream in(options.out_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        Json rec = Json::parse(line);
        if (record_covers_checks(rec, options.checks)) done.emplace(record_key(rec), line);
      } catch (const Json::exception&) {
        throw std::invalid_argument("unparseable record in existing survey file");
      }
    }
  }

  const int total = static_cast<int>(tasks.size());
  std::vector<std::string> lines(total);
  std::vector<char> passed(total, 1);
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      int idx = next.fetch_add(1);
      if (idx >= total) return;
      auto it = done.find(task_key(tasks[idx]));
      if (it != done.end()) {
        lines[idx] = it->second;
        bool ok = true;
        if (family_asserts(tasks[idx].family)) {
          Json rec = Json::parse(it->second);
          // trust the stored flags; the digest pins the polynomial
          for (const auto& [name, value] : rec.at("report").at("flags").items()) {
            ok = ok && value.get<bool>();
          }
        }
        passed[idx] = ok ? 1 : 0;
        continue;
      }
      bool ok = true;
      lines[idx] = compute_record(tasks[idx], options.checks, &ok);
      passed[idx] = (ok || !family_asserts(tasks[idx].family)) ? 1 : 0;
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SurveyOutcome outcome;
  int stop_at = total;
  for (int i = 0; i < total; ++i) {
    if (!passed[i]) {
      stop_at = i + 1;  // the failing record is still written
      outcome.exit_code = 1;
      outcome.failed_records = 1;
      outcome.first_failure = family_name(tasks[i].family) + " " + tasks[i].u.to_string() +
                              " <= " + tasks[i].w.to_string();
      break;
    }
  }
  std::ofstream out(options.out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open survey output: " + options.out_path);
  for (int i = 0; i < stop_at; ++i) out << lines[i] << "\n";
  out.close();
  if (!out) throw std::runtime_error("failed writing survey output: " + options.out_path);
  outcome.records = stop_at;
  return outcome;
}

}  // namespace covol
