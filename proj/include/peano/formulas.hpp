#pragma once

#include <optional>
#include <string>

#include "peano/counting.hpp"

namespace peano {

// Exact C(a, k); 1 when k == 0, 0 when a < k (including negative a).
BigCount binomial(const BigCount& a, unsigned k);

// Closed form for the letter frequencies of X_n:
// (4^{n-1}, 4^{n-1}+2^{n-1}-1, 4^{n-1}, 4^{n-1}-2^{n-1}).
FrequencyVector frequency_formula(int n);

// The same counts by iterating the 4x4 affine recurrence
//   d_n = M d_{n-1} + (1,1,1,0),  d_1 = (1,1,1,0),
// with M rows (2,1,0,1),(1,2,1,0),(0,1,2,1),(1,0,1,2). Must equal
// frequency_formula(n) for every n.
FrequencyVector frequency_recurrence(int n);

// Occurrences of the pattern 1-1-...-1 (l dashed copies) in X_n:
// C(4^{n-1}-2^{n-1}, l) + 2 C(4^{n-1}, l) + C(4^{n-1}+2^{n-1}-1, l).
BigCount power_pattern_formula(int n, unsigned ell);

struct RiseDescentPair {
  BigCount rises;
  BigCount descents;
  std::string str() const;  // "(r,d)"
  bool operator==(const RiseDescentPair&) const = default;
};

// Closed forms for the rise/descent counts of X_n:
//   r_{2k+1} = (2/5)(4*16^k + 1)   d_{2k+1} = (8/5)(16^k - 1)
//   r_{2k+2} = d_{2k+2} = (2/5)(16^{k+1} - 1)
// The divisions by 5 are checked, not assumed.
RiseDescentPair rises_descents_formula(int n);

// The same counts by iterating the proof-step recurrences
//   r_{2k+2} = d_{2k+2} = 2 r_{2k+1} + 2 d_{2k+1} + 2
//   r_{2k+3} = 2 r_{2k+2} + 2 d_{2k+2} + 2
//   d_{2k+3} = 2 r_{2k+2} + 2 d_{2k+2}
// from (r_1, d_1) = (2, 0). Must equal rises_descents_formula(n).
RiseDescentPair rises_descents_recurrence(int n);

// The published table value for tau1(x,y), tau2(x,y), tau3(x,y,z) on X_n,
// verbatim — including the two entries the verification harness flags as
// suspect; no correction is applied here. x, y, z must be in {1,2,3}
// (std::domain_error otherwise), and z is required for tau3. Combinations
// absent from the tables evaluate to 0 for l >= 1. l = 0 uses the
// stipulated constants: tau1/tau2 give 1, tau3 gives 1 iff x < z with n
// odd or x = z with n even.
//
// k-indexing: odd n = 2k+1 means k = (n-1)/2; even n = 2k+2 means
// k = (n-2)/2.
BigCount tau_table_value(TauKind kind, int x, int y, std::optional<int> z,
                         int n, unsigned ell);

}  // namespace peano
