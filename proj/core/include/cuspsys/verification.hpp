#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cuspsys/turn_word.hpp"

namespace cuspsys {

struct VerificationOptions {
  int max_genus = 5;       // genus presets 2..max_genus
  std::uint64_t seed = 20240601;
  int threads = 1;
  bool surfaces = true;    // false: formula and half-plane checks only
};

struct Check {
  int criterion = 0;  // numbered acceptance criterion, 0 for extra checks
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  std::string detail;
  double seconds = 0.0;
};

// Three-case terms of the genus-only systole bound against 2 log g + 8.
struct SysboundRow {
  int genus = 0;
  double case_many_cusps = 0.0;
  double case_close_pair = 0.0;
  double case_self_loop = 0.0;
  double three_case_max = 0.0;
  double packaged = 0.0;
  bool close_pair_exceeds = false;  // the expected discrepancy at g = 1
};

std::vector<SysboundRow> sysbound_audit(int max_genus = 10);

// One random instance of the block-subword inequality: a word assembled as
// u0 w1 u1 w2 ... wk uk, compared with w_s(1) ... w_s(k) for a cyclic
// permutation s.
struct SubwordTrial {
  TurnWord word;
  TurnWord subword;
};
SubwordTrial random_subword_trial(std::mt19937_64& rng);

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<SysboundRow> sysbound_table;
  bool passed() const;
};

VerificationReport run_verification(const VerificationOptions& options = {});

}  // namespace cuspsys
