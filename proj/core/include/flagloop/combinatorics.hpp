#pragma once

#include <cstdint>
#include <vector>

#include "flagloop/matrix.hpp"

namespace flagloop {

// Counts are checked 64-bit integers; overflow throws std::overflow_error
// rather than wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// Number of k-multisets on n symbols, binomial(n+k-1, k); 0 for k < 0.
std::int64_t multiset_coeff(int n, int k);

// Number of k-multisets on {1..n} in which element i occurs at most i times;
// satisfies mahonian(n,k) = sum_{i=0}^{n} mahonian(n-1, k-i).
std::int64_t mahonian(int n, int k);

// Inclusion-exclusion over forbidden index sets {2..n+1}:
// sum over S of (-1)^|S| multiset_coeff(n, k - sum(S)).
std::int64_t mahonian_explicit(int n, int k);

// Exponent vector of a monomial: n non-negative entries.
using ExponentVector = std::vector<int>;

// Strictly increasing indices from {1..n}.
using IndexTuple = std::vector<int>;

// All length-n vectors with entry sum d, lexicographically decreasing
// (first entry largest first); length multiset_coeff(n,d).
std::vector<ExponentVector> enumerate_multisets(int n, int d);

// All k-element subsets of {1..n} in lexicographic order.
std::vector<IndexTuple> subsets_lex(int n, int k);

struct SubsetEnumeration {
  std::vector<IndexTuple> row_subsets;  // (y+1)-subsets, lex
  std::vector<IndexTuple> col_subsets;  // y-subsets, lex
  IntMatrix incidence;                  // 1 when col subset is inside row subset
  IntMatrix positions;                  // the added element, 0 elsewhere
};

// Containment structure between (y+1)- and y-subsets of {1..n};
// throws std::out_of_range unless 0 <= y <= n-1.
SubsetEnumeration enumerate_subsets(int n, int y);

}  // namespace flagloop
