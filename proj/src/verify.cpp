#include "charkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <thread>

#include "charkit/error.hpp"
#include "charkit/families.hpp"
#include "charkit/io.hpp"

namespace charkit {

CheckOptions parse_theorems(const std::string& list) {
  CheckOptions o{false, false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string item = list.substr(start, comma - start);
    if (item == "chains" || item == "A") o.chains = true;
    else if (item == "coprime" || item == "B") o.coprime = true;
    else if (item == "supersolvable") o.supersolvable = true;
    else if (item == "lemmas") o.lemmas = true;
    else if (item == "linear" || item == "section4") o.linear = true;
    else throw InputError("unknown theorem selector: '" + item + "'");
    start = comma + 1;
  }
  return o;
}

std::vector<LoadedGroup> load_corpus(const std::string& corpus, std::size_t max_order) {
  std::vector<LoadedGroup> out;
  if (corpus == "builtin") {
    for (const auto& e : builtin_corpus()) {
      if (max_order && e.order > max_order) continue;
      GroupPtr g = parse_family(e.name);
      if (g->order() != e.order) throw InternalError("corpus entry " + e.name + " has the wrong order");
      out.push_back({e.name, std::move(g)});
    }
    return out;
  }
  std::error_code ec;
  if (!std::filesystem::is_directory(corpus, ec)) throw InputError("corpus is neither 'builtin' nor a directory: " + corpus);
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    GroupPtr g = load_group_file(f.string());
    if (max_order && g->order() > max_order) continue;
    out.push_back({g->name(), std::move(g)});
  }
  return out;
}

std::vector<VerificationRecord> verify_group(const GroupPtr& g, const CheckOptions& checks, std::size_t* pairs) {
  Lab lab(g);
  const std::size_t k = lab.table().size();
  std::vector<VerificationRecord> out;
  const bool per_constituent = checks.chains || checks.coprime || checks.supersolvable || checks.lemmas;
  for (std::size_t chi = 0; chi < k; ++chi)
    for (std::size_t psi = 0; psi < k; ++psi) {
      if (per_constituent)
        for (auto& r : check_all(lab, chi, psi, checks)) out.push_back(std::move(r));
      if (checks.linear) out.push_back(check_linear_constituent(lab, chi, psi));
    }
  if (pairs) *pairs = k * k;
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const std::vector<LoadedGroup> corpus = load_corpus(options.corpus, options.max_order);
  std::vector<std::vector<VerificationRecord>> per_group(corpus.size());
  std::vector<std::size_t> pair_counts(corpus.size(), 0);
  std::vector<std::exception_ptr> errors(corpus.size());

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, corpus.size()));
  // Largest groups first.
  std::vector<std::size_t> schedule(corpus.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) schedule[i] = i;
  std::stable_sort(schedule.begin(), schedule.end(),
                   [&](std::size_t a, std::size_t b) { return corpus[a].group->order() > corpus[b].group->order(); });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s; (s = next.fetch_add(1)) < schedule.size();) {
      const std::size_t i = schedule[s];
      try {
        per_group[i] = verify_group(corpus[i].group, options.checks, &pair_counts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifyReport report;
  VerifySummary& s = report.summary;
  s.groups = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    s.pairs += pair_counts[i];
    for (auto& r : per_group[i]) report.records.push_back(std::move(r));
  }
  s.records = report.records.size();
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    if (!report.first_failure && !r.holds()) report.first_failure = i;
    s.max_eta = std::max(s.max_eta, r.eta);
    if (!r.dl || r.kind != "constituent") continue;
    s.max_dl = std::max(s.max_dl, *r.dl);
    s.max_dl_over_eta = std::max(s.max_dl_over_eta, r.dl_over_eta());
    s.empirical_c = std::max(s.empirical_c, (static_cast<double>(*r.dl) - s.empirical_d) / static_cast<double>(r.eta));
  }
  return report;
}

bool write_report(const VerifyReport& report, std::ostream& out, ReportFormat format) {
  const std::size_t end = report.first_failure ? *report.first_failure + 1 : report.records.size();
  if (format == ReportFormat::Tsv) out << record_tsv_header() << '\n';
  for (std::size_t i = 0; i < end; ++i) {
    const auto& r = report.records[i];
    if (format == ReportFormat::Tsv)
      out << record_to_tsv(r) << '\n';
    else
      out << record_to_json(r).dump() << '\n';
  }
  if (report.first_failure) return false;
  const auto& s = report.summary;
  const Json summary = {{"summary", true},
                        {"groups", s.groups},
                        {"pairs", s.pairs},
                        {"records", s.records},
                        {"max-dl", s.max_dl},
                        {"max-eta", s.max_eta},
                        {"max-dl-over-eta", s.max_dl_over_eta},
                        {"empirical-C", s.empirical_c},
                        {"empirical-D", s.empirical_d}};
  if (format == ReportFormat::Tsv)
    out << "# " << summary.dump() << '\n';
  else
    out << summary.dump() << '\n';
  return true;
}

}  // namespace charkit
