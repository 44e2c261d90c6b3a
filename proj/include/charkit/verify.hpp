#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "charkit/group.hpp"
#include "charkit/product_lab.hpp"

namespace charkit {

struct VerifyOptions {
  std::string corpus = "builtin";  // "builtin" or a directory of group files
  CheckOptions checks;
  std::size_t max_order = 0;  // 0: no limit beyond the order cap
  std::size_t threads = 0;    // 0: hardware concurrency
};

// Parses a comma list drawn from chains, coprime, supersolvable, lemmas and
// linear; A, B and section4 are accepted for chains, coprime and linear.
// Throws InputError.
CheckOptions parse_theorems(const std::string& list);

struct LoadedGroup {
  std::string name;
  GroupPtr group;
};

// Builtin entries are filtered by expected order before construction;
// directory entries are the *.json files in name order.
std::vector<LoadedGroup> load_corpus(const std::string& corpus, std::size_t max_order);

struct VerifySummary {
  std::size_t groups = 0;
  std::size_t pairs = 0;
  std::size_t records = 0;
  std::size_t max_dl = 0;
  std::size_t max_eta = 0;
  double max_dl_over_eta = 0.0;
  // Smallest C with dl <= C eta + D on every record, for the fixed D below.
  double empirical_c = 0.0;
  double empirical_d = 1.0;
};

struct VerifyReport {
  std::vector<VerificationRecord> records;  // corpus order, then chi, psi, kind, alpha
  VerifySummary summary;
  std::optional<std::size_t> first_failure;
};

std::vector<VerificationRecord> verify_group(const GroupPtr& g, const CheckOptions& checks, std::size_t* pairs = nullptr);
VerifyReport run_verification(const VerifyOptions& options);

enum class ReportFormat { JsonLines, Tsv };

// Records up to and including the first failure; the summary line only when
// every record holds. Returns whether all records hold.
bool write_report(const VerifyReport& report, std::ostream& out, ReportFormat format);

}  // namespace charkit
