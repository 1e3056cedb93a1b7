#include "peano/formulas.hpp"

#include <stdexcept>
#include <string>

namespace peano {

namespace {

BigCount pow_big(unsigned base, int exp) {
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

// The 2/5 and 8/5 factors only make sense because the numerators are
// multiples of 5; check rather than assume.
BigCount exact_div5(const BigCount& v) {
  if (v % 5 != 0) {
    throw std::logic_error("expected a multiple of 5, got " + v.str());
  }
  return v / 5;
}

void check_n(int n) {
  if (n < 1) {
    throw std::out_of_range("iteration index must be >= 1, got " +
                            std::to_string(n));
  }
}

}  // namespace

BigCount binomial(const BigCount& a, unsigned k) {
  if (k == 0) return 1;
  if (a < k) return 0;
  BigCount result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= a - k + j;
    result /= j;  // exact: j consecutive integers contain a multiple of j
  }
  return result;
}

FrequencyVector frequency_formula(int n) {
  check_n(n);
  const BigCount p4 = pow_big(4, n - 1);
  const BigCount p2 = pow_big(2, n - 1);
  return FrequencyVector{{p4, p4 + p2 - 1, p4, p4 - p2}};
}

FrequencyVector frequency_recurrence(int n) {
  check_n(n);
  static constexpr int kMatrix[4][4] = {
      {2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}};
  static constexpr int kAffine[4] = {1, 1, 1, 0};
  std::array<BigCount, 4> d = {BigCount(1), BigCount(1), BigCount(1), BigCount(0)};
  for (int step = 2; step <= n; ++step) {
    std::array<BigCount, 4> next;
    for (int i = 0; i < 4; ++i) {
      BigCount acc = kAffine[i];
      for (int j = 0; j < 4; ++j) acc += kMatrix[i][j] * d[j];
      next[i] = std::move(acc);
    }
    d = std::move(next);
  }
  return FrequencyVector{d};
}

BigCount power_pattern_formula(int n, unsigned ell) {
  check_n(n);
  const FrequencyVector f = frequency_formula(n);
  return binomial(f.of(4), ell) + 2 * binomial(f.of(1), ell) +
         binomial(f.of(2), ell);
}

std::string RiseDescentPair::str() const {
  return "(" + rises.str() + "," + descents.str() + ")";
}

RiseDescentPair rises_descents_formula(int n) {
  check_n(n);
  if (n % 2 == 1) {
    const int k = (n - 1) / 2;
    const BigCount p16 = pow_big(16, k);
    return RiseDescentPair{exact_div5(2 * (4 * p16 + 1)),
                           exact_div5(8 * (p16 - 1))};
  }
  const int k = (n - 2) / 2;
  const BigCount p16 = pow_big(16, k + 1);
  const BigCount both = exact_div5(2 * (p16 - 1));
  return RiseDescentPair{both, both};
}

RiseDescentPair rises_descents_recurrence(int n) {
  check_n(n);
  BigCount r = 2, d = 0;  // X_1 = 123: two rises, no descents
  for (int m = 2; m <= n; ++m) {
    const BigCount s = 2 * r + 2 * d;
    if (m % 2 == 0) {
      r = s + 2;
      d = s + 2;
    } else {
      r = s + 2;
      d = s;
    }
  }
  return RiseDescentPair{std::move(r), std::move(d)};
}

BigCount tau_table_value(TauKind kind, int x, int y, std::optional<int> z,
                         int n, unsigned ell) {
  check_n(n);
  auto check_arg = [](int v, const char* name) {
    if (v < 1 || v > 3) {
      throw std::domain_error(std::string(name) + " must be in {1,2,3}, got " +
                              std::to_string(v));
    }
  };
  check_arg(x, "x");
  check_arg(y, "y");
  if (kind == TauKind::tau3) {
    if (!z) throw std::domain_error("tau3 requires z");
    check_arg(*z, "z");
  }

  const bool odd = (n % 2 == 1);
  if (ell == 0) {
    if (kind != TauKind::tau3) return 1;
    return ((odd && x < *z) || (!odd && x == *z)) ? 1 : 0;
  }

  if (odd) {
    const int k = (n - 1) / 2;
    const BigCount A = pow_big(4, 2 * k);
    const BigCount B = pow_big(2, 2 * k);
    const auto S1 = [&] {
      return binomial(A - B, ell) + binomial(A, ell) + binomial(A + B - 1, ell);
    };
    switch (kind) {
      case TauKind::tau1:
        if (x == 1 && y == 1) return binomial(A - 1, ell);
        if (x == 1 && y == 2) return S1();
        if (x == 2 && y == 1) return 0;
        return 0;
      case TauKind::tau2:
        if (x == 1 && y == 1) return binomial(A - 1, ell);
        if (x == 1 && y == 2) return binomial(A, ell) + binomial(A + B - 1, ell);
        if (x == 2 && y == 1) return binomial(A - B, ell);
        return 0;
      case TauKind::tau3:
        if (x == 1 && y == 1 && *z == 1) return 0;
        if (x == 1 && y == 1 && *z == 2) return binomial(A - 1, ell);
        if (x == 1 && y == 2 && *z == 1) return 0;
        if (x == 1 && y == 2 && *z == 2) return binomial(A - 1, ell);
        if (x == 2 && y == 1 && *z == 2) return 0;
        if (x == 1 && y == 2 && *z == 3) return binomial(A + B - 1, ell);
        if (x == 1 && y == 3 && *z == 2) return binomial(A - B, ell);
        return 0;
    }
  } else {
    const int k = (n - 2) / 2;
    const BigCount P = pow_big(4, 2 * k + 1);
    const BigCount Q = pow_big(2, 2 * k + 1);
    const auto S2 = [&] { return binomial(P, ell) + binomial(P - Q, ell); };
    switch (kind) {
      case TauKind::tau1:
        if (x == 1 && y == 1) return binomial(P + Q - 1, ell);  // flagged suspect
        if (x == 1 && y == 2) return S2();
        if (x == 2 && y == 1) return binomial(P, ell);
        return 0;
      case TauKind::tau2:
        if (x == 1 && y == 1) return binomial(P + Q - 1, ell);  // flagged suspect
        if (x == 1 && y == 2) return binomial(P, ell);
        if (x == 2 && y == 1) return S2();
        return 0;
      case TauKind::tau3:
        if (x == 1 && y == 1 && *z == 1) return binomial(P - 2, ell);  // flagged suspect
        if (x == 1 && y == 1 && *z == 2) return 0;
        if (x == 1 && y == 2 && *z == 1) return S2();
        if (x == 1 && y == 2 && *z == 2) return 0;
        if (x == 2 && y == 1 && *z == 2) return binomial(P, ell);
        if (x == 1 && y == 2 && *z == 3) return 0;
        if (x == 1 && y == 3 && *z == 2) return 0;
        return 0;
    }
  }
  throw std::logic_error("unreachable tau kind");
}

}  // namespace peano
