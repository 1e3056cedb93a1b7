#include "peano/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "peano/formulas.hpp"

namespace peano {

namespace {

int rel(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

// Embeddings of a fully concrete block sequence: blocks in order, each at
// consecutive positions, arbitrary gaps between blocks, optional end
// anchors. Prefix sums keep it O(blocks * |w|).
BigCount count_embeddings(std::span<const std::uint8_t> w,
                          const std::vector<std::vector<std::uint8_t>>& blocks,
                          bool left_anchor, bool right_anchor) {
  const std::size_t nw = w.size();
  const std::size_t t = blocks.size();
  auto matches = [&w, nw](const std::vector<std::uint8_t>& blk, std::size_t s) {
    if (s + blk.size() > nw) return false;
    return std::equal(blk.begin(), blk.end(), w.begin() + static_cast<std::ptrdiff_t>(s));
  };

  std::vector<BigCount> ways(nw, BigCount(0));
  for (std::size_t s = 0; s < nw; ++s) {
    if (left_anchor && s > 0) break;
    if (matches(blocks[0], s)) ways[s] = 1;
  }
  for (std::size_t b = 1; b < t; ++b) {
    std::vector<BigCount> next(nw, BigCount(0));
    const std::size_t prev_len = blocks[b - 1].size();
    BigCount cum = 0;
    for (std::size_t s = 0; s < nw; ++s) {
      if (s >= prev_len) cum += ways[s - prev_len];
      if (cum != 0 && matches(blocks[b], s)) next[s] = cum;
    }
    ways = std::move(next);
  }

  BigCount total = 0;
  const std::size_t last_len = blocks[t - 1].size();
  for (std::size_t s = 0; s < nw; ++s) {
    if (right_anchor && s + last_len != nw) continue;
    total += ways[s];
  }
  return total;
}

std::vector<std::uint8_t> sorted_distinct(std::span<const std::uint8_t> xs) {
  std::vector<std::uint8_t> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string FrequencyVector::str() const {
  return "(" + count[0].str() + "," + count[1].str() + "," + count[2].str() +
         "," + count[3].str() + ")";
}

FrequencyVector letter_frequencies(const Word& w) {
  std::uint64_t c[4] = {0, 0, 0, 0};
  for (std::uint8_t v : raw_values(w)) ++c[v - 1];
  return FrequencyVector{{BigCount(c[0]), BigCount(c[1]), BigCount(c[2]), BigCount(c[3])}};
}

FrequencyVector letter_frequencies(LetterStream& s) {
  std::uint64_t c[4] = {0, 0, 0, 0};
  while (s.has_next()) ++c[s.next().value() - 1];
  return FrequencyVector{{BigCount(c[0]), BigCount(c[1]), BigCount(c[2]), BigCount(c[3])}};
}

AdjacencyStats adjacency_stats(const Word& w) {
  std::uint64_t r = 0, d = 0, e = 0;
  const auto v = raw_values(w);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) {
      ++r;
    } else if (v[i] > v[i + 1]) {
      ++d;
    } else {
      ++e;
    }
  }
  return AdjacencyStats{BigCount(r), BigCount(d), BigCount(e)};
}

AdjacencyStats adjacency_stats(LetterStream& s) {
  std::uint64_t r = 0, d = 0, e = 0;
  if (s.has_next()) {
    int prev = s.next().value();
    while (s.has_next()) {
      const int cur = s.next().value();
      if (prev < cur) {
        ++r;
      } else if (prev > cur) {
        ++d;
      } else {
        ++e;
      }
      prev = cur;
    }
  }
  return AdjacencyStats{BigCount(r), BigCount(d), BigCount(e)};
}

BigCount count_occurrences(std::span<const std::uint8_t> w, const Pattern& p) {
  if (p.blocks.empty()) throw std::invalid_argument("pattern has no letters");

  // Distinct pattern letters, ascending.
  std::vector<std::uint8_t> pvals;
  for (const Block& b : p.blocks) {
    for (Letter l : b.letters) pvals.push_back(static_cast<std::uint8_t>(l.value()));
  }
  std::sort(pvals.begin(), pvals.end());
  pvals.erase(std::unique(pvals.begin(), pvals.end()), pvals.end());
  const std::size_t m = pvals.size();

  const std::vector<std::uint8_t> wvals = sorted_distinct(w);
  if (wvals.size() < m) return 0;

  // Every ascending m-subset of the word's values is one assignment; the
  // occurrence sets of different assignments are disjoint.
  BigCount total = 0;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  for (;;) {
    std::uint8_t map[5] = {0, 0, 0, 0, 0};  // pattern value (1..4) -> word value
    for (std::size_t i = 0; i < m; ++i) map[pvals[i]] = wvals[pick[i]];
    std::vector<std::vector<std::uint8_t>> concrete;
    concrete.reserve(p.blocks.size());
    for (const Block& b : p.blocks) {
      std::vector<std::uint8_t> cb;
      cb.reserve(b.letters.size());
      for (Letter l : b.letters) cb.push_back(map[l.value()]);
      concrete.push_back(std::move(cb));
    }
    total += count_embeddings(w, concrete, p.left_anchor, p.right_anchor);

    // next ascending combination; pick[i] tops out at wvals.size() - (m - i)
    bool advanced = false;
    for (std::size_t i = m; i-- > 0;) {
      if (pick[i] + (m - i) < wvals.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return total;
  }
}

BigCount count_occurrences(const Word& w, const Pattern& p) {
  return count_occurrences(raw_values(w), p);
}

BigCount count_occurrences_naive(std::span<const std::uint8_t> w, const Pattern& p) {
  if (w.size() > 14) {
    throw std::length_error("naive counter accepts words of length <= 14");
  }
  if (p.blocks.empty()) throw std::invalid_argument("pattern has no letters");
  const std::size_t r = p.letter_count();
  if (r > 5) {
    throw std::length_error("naive counter accepts patterns with <= 5 letters");
  }

  std::vector<std::uint8_t> pat;
  std::vector<bool> glued;  // glued[j]: position j continues the block of j-1
  for (const Block& b : p.blocks) {
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
      pat.push_back(static_cast<std::uint8_t>(b.letters[i].value()));
      glued.push_back(i > 0);
    }
  }

  const std::size_t nw = w.size();
  std::vector<std::size_t> idx(r);
  std::uint64_t hits = 0;
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t j,
                                                            std::size_t from) {
    if (j == r) {
      ++hits;
      return;
    }
    std::size_t lo = from, hi = nw;  // candidate positions [lo, hi)
    if (j > 0 && glued[j]) {
      lo = idx[j - 1] + 1;
      hi = std::min(hi, lo + 1);
    }
    if (j == 0 && p.left_anchor) hi = std::min(hi, std::size_t{1});
    if (j + 1 == r && p.right_anchor) lo = std::max(lo, nw == 0 ? nw : nw - 1);
    for (std::size_t i = lo; i < hi; ++i) {
      bool ok = true;
      for (std::size_t a = 0; a < j && ok; ++a) {
        ok = rel(pat[a], pat[j]) == rel(w[idx[a]], w[i]);
      }
      if (!ok) continue;
      idx[j] = i;
      place(j + 1, i + 1);
    }
  };
  place(0, 0);
  return BigCount(hits);
}

BigCount count_occurrences_naive(const Word& w, const Pattern& p) {
  return count_occurrences_naive(raw_values(w), p);
}

const char* tau_kind_name(TauKind kind) {
  switch (kind) {
    case TauKind::tau1:
      return "tau1";
    case TauKind::tau2:
      return "tau2";
    case TauKind::tau3:
      return "tau3";
  }
  return "?";
}

BigCount count_anchored_run(const FrequencyVector& freqs, Letter first,
                            Letter last, TauKind kind, int x, int y, int z,
                            unsigned ell) {
  auto check_letter = [](int v, const char* name) {
    if (v < 1 || v > 4) {
      throw std::domain_error(std::string(name) + " must be in 1..4, got " +
                              std::to_string(v));
    }
  };
  check_letter(x, "x");
  check_letter(y, "y");
  if (kind == TauKind::tau3) check_letter(z, "z");

  const int a = first.value();
  const int b = last.value();

  switch (kind) {
    case TauKind::tau1: {
      if (freqs.total() == 0) return 0;
      if (ell == 0) return 1;  // the anchored letter alone
      BigCount sum = 0;
      for (int v = 1; v <= 4; ++v) {
        if (rel(v, a) != rel(y, x)) continue;
        sum += binomial(freqs.of(v) - (v == a ? 1 : 0), ell);
      }
      return sum;
    }
    case TauKind::tau2: {
      if (freqs.total() == 0) return 0;
      if (ell == 0) return 1;
      BigCount sum = 0;
      for (int v = 1; v <= 4; ++v) {
        if (rel(v, b) != rel(x, y)) continue;
        sum += binomial(freqs.of(v) - (v == b ? 1 : 0), ell);
      }
      return sum;
    }
    case TauKind::tau3: {
      if (freqs.total() < 2) return 0;  // anchors need two positions
      if (rel(a, b) != rel(x, z)) return 0;
      if (ell == 0) return 1;
      BigCount sum = 0;
      for (int v = 1; v <= 4; ++v) {
        if (rel(v, a) != rel(y, x) || rel(v, b) != rel(y, z)) continue;
        sum += binomial(freqs.of(v) - (v == a ? 1 : 0) - (v == b ? 1 : 0), ell);
      }
      return sum;
    }
  }
  throw std::logic_error("unreachable tau kind");
}

std::optional<TauShape> classify_tau(const Pattern& p) {
  for (const Block& b : p.blocks) {
    if (b.letters.size() != 1) return std::nullopt;
  }
  const auto at = [&p](std::size_t i) { return p.blocks[i].letters[0].value(); };
  const std::size_t t = p.blocks.size();

  if (p.left_anchor && !p.right_anchor) {
    for (std::size_t i = 2; i < t; ++i) {
      if (at(i) != at(1)) return std::nullopt;
    }
    return TauShape{TauKind::tau1, at(0), t >= 2 ? at(1) : at(0), 0,
                    static_cast<unsigned>(t - 1)};
  }
  if (!p.left_anchor && p.right_anchor) {
    for (std::size_t i = 1; i + 1 < t; ++i) {
      if (at(i) != at(0)) return std::nullopt;
    }
    return TauShape{TauKind::tau2, t >= 2 ? at(0) : at(t - 1), at(t - 1), 0,
                    static_cast<unsigned>(t - 1)};
  }
  if (p.left_anchor && p.right_anchor) {
    if (t < 2) return std::nullopt;
    for (std::size_t i = 2; i + 1 < t; ++i) {
      if (at(i) != at(1)) return std::nullopt;
    }
    return TauShape{TauKind::tau3, at(0), t >= 3 ? at(1) : at(0), at(t - 1),
                    static_cast<unsigned>(t - 2)};
  }
  return std::nullopt;
}

}  // namespace peano
