#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmirror/model.hpp"
#include "qmirror/qseries.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

struct CheckResult {
  std::string name;
  std::string paper_ref;  // stable identity slug carried in the report schema
  bool pass = false;
  std::string detail;
};

struct VerifyConfig {
  Model model;
  int order = 4;
  std::vector<std::vector<Rat>> directions;
  std::uint64_t seed = 0;
};

// (1, 2, ..., n) plus one seeded pseudorandom vector with distinct nonzero
// entries.
std::vector<std::vector<Rat>> default_directions(int n, std::uint64_t seed);

std::vector<CheckResult> suite_hyper(const VerifyConfig& cfg);
std::vector<CheckResult> suite_equivariant(const VerifyConfig& cfg);
std::vector<CheckResult> suite_residue(const VerifyConfig& cfg);
std::vector<CheckResult> suite_mirror(const VerifyConfig& cfg);

// suite may be all|hyper|equivariant|residue|mirror
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg);

// "" when equal; otherwise "first mismatch at q^k: lhs=.. rhs=.."
std::string first_mismatch(const QSeries<Rat>& lhs, const QSeries<Rat>& rhs);

}  // namespace qmirror
