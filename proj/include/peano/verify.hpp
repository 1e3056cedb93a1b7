#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "peano/counting.hpp"
#include "peano/formulas.hpp"

namespace peano {

// One oracle-vs-formula comparison. Values are decimal strings (vectors as
// "(a,b,...)"); match is exactly string equality of the two.
struct VerificationRecord {
  std::string suite;
  int n = 0;
  std::string pattern;
  std::optional<unsigned> ell;
  std::string oracle;
  std::string formula;
  bool match = false;
  double elapsed_ms = 0.0;
};

enum class VerifyStatus {
  all_match = 0,
  unexpected_mismatch = 1,
  suspect_only = 10,
};

int exit_code(VerifyStatus s);

struct SuiteConfig {
  // Any of "frequencies", "rises", "powers", "tables", "lemma3", or "all".
  std::vector<std::string> suites{"all"};
  int max_n = 6;
  unsigned max_ell = 4;
  int workers = 1;
  std::string report_path;  // used by the CLI; run_suites itself never writes
  int build_cap = kDefaultBuildCap;
};

struct VerifyOutcome {
  std::vector<VerificationRecord> records;  // canonical (suite,n,pattern,l) order
  VerifyStatus status = VerifyStatus::all_match;
  std::size_t mismatches = 0;          // total records with match == false
  std::size_t suspect_mismatches = 0;  // those on known-suspect table entries
};

// Runs the configured suites. Case content is deterministic for a given
// config regardless of the worker count. Mismatches confined to the
// known-suspect table entries downgrade the status to suspect_only.
VerifyOutcome run_suites(const SuiteConfig& cfg);

// The two published table rows whose even-iteration values are known to
// disagree with exact enumeration: row (x=1, y=1) of the tau1/tau2 table
// and row (1,1,1) of the tau3 table.
bool is_known_erratum(TauKind kind, int x, int y, std::optional<int> z, int n);

// JSON lines, one record per line, keys exactly
// suite, n, pattern, l, oracle, formula, match, elapsed_ms.
void write_report(std::ostream& os, const std::vector<VerificationRecord>& records);

}  // namespace peano
