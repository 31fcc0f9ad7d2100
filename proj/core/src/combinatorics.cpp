#include "flagloop/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagloop {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer count overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer count overflow in multiplication");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i: r holds binomial(n-k+i-1, i-1).
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

std::int64_t multiset_coeff(int n, int k) {
  if (n < 1) throw std::invalid_argument("multiset_coeff: n must be positive");
  if (k < 0) return 0;
  return binomial(n + k - 1, k);
}

std::int64_t mahonian(int n, int k) {
  if (n < 0) throw std::invalid_argument("mahonian: n must be non-negative");
  const int top = n * (n + 1) / 2;
  if (k < 0 || k > top) return 0;
  std::vector<std::int64_t> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::int64_t> next(m * (m + 1) / 2 + 1, 0);
    for (int j = 0; j < static_cast<int>(next.size()); ++j) {
      std::int64_t s = 0;
      for (int i = 0; i <= m; ++i) {
        int p = j - i;
        if (p >= 0 && p < static_cast<int>(row.size()))
          s = checked_add(s, row[p]);
      }
      next[j] = s;
    }
    row = std::move(next);
  }
  return row[k];
}

std::int64_t mahonian_explicit(int n, int k) {
  if (n < 1)
    throw std::invalid_argument("mahonian_explicit: n must be positive");
  if (n > 30)
    throw std::invalid_argument("mahonian_explicit: n too large for subset sum");
  std::int64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int sum = 0;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) sum += b + 2;
    std::int64_t term = multiset_coeff(n, k - sum);
    total = checked_add(total, __builtin_popcount(mask) % 2 ? -term : term);
  }
  return total;
}

namespace {

void multisets_rec(int n, int d, ExponentVector& prefix,
                   std::vector<ExponentVector>& out) {
  if (n == 1) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(e);
    multisets_rec(n - 1, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_multisets(int n, int d) {
  if (n < 1 || d < 0)
    throw std::invalid_argument("enumerate_multisets: need n >= 1, d >= 0");
  std::vector<ExponentVector> out;
  ExponentVector prefix;
  multisets_rec(n, d, prefix, out);
  return out;
}

std::vector<IndexTuple> subsets_lex(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

SubsetEnumeration enumerate_subsets(int n, int y) {
  if (y < 0 || y > n - 1)
    throw std::out_of_range("enumerate_subsets: need 0 <= y <= n-1");
  SubsetEnumeration e;
  e.row_subsets = subsets_lex(n, y + 1);
  e.col_subsets = subsets_lex(n, y);
  e.incidence = IntMatrix(e.row_subsets.size(), e.col_subsets.size());
  e.positions = IntMatrix(e.row_subsets.size(), e.col_subsets.size());
  for (std::size_t r = 0; r < e.row_subsets.size(); ++r)
    for (std::size_t c = 0; c < e.col_subsets.size(); ++c) {
      const IndexTuple& big = e.row_subsets[r];
      const IndexTuple& small = e.col_subsets[c];
      if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
        continue;
      e.incidence(r, c) = 1;
      for (int v : big)
        if (!std::binary_search(small.begin(), small.end(), v)) {
          e.positions(r, c) = v;
          break;
        }
    }
  return e;
}

}  // namespace flagloop
