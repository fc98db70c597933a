#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcp/report.hpp"
#include "wcp/types.hpp"
#include "wcp/weyl.hpp"

namespace wcp {

struct SuiteOptions {
  std::uint64_t bound = kDefaultEnumBound;
  int jobs = 1;
  int max_rank = 4;
};

// Suites: counts, chains, coxeter, lemma32, section3, all.  With no type the
// suite runs over its default roster filtered by max_rank.  Throws
// invalid_argument for an unknown suite name.
std::vector<Report> run_suite(const std::string& suite, const std::optional<SeriesRank>& type,
                              const SuiteOptions& opts);

// Individual suites for one type.
Report counts_report(const SeriesRank& type, std::uint64_t bound);
Report chains_report(const SeriesRank& type, std::uint64_t bound);
Report coxeter_report(const SeriesRank& type, std::uint64_t bound);
Report coroot_report(const SeriesRank& type, std::uint64_t bound);
std::vector<Report> case_reports(const SeriesRank& type);

// Rosters.
std::vector<SeriesRank> default_roster(int max_rank);  // enumeration-scale types
std::vector<SeriesRank> case_roster(int max_rank); // case-data types

} // namespace wcp
