#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "flagloop/polynomial.hpp"

namespace flagloop {

// Coefficients on the quotient basis.
struct QuotientElement {
  std::map<ExponentVector, Int> basis_coefficients;

  bool is_zero() const { return basis_coefficients.empty(); }
  bool operator==(const QuotientElement&) const = default;
};

// A polynomial ring modulo a staircase of complete-homogeneous relations:
// x_v^{caps[v-1]+1} rewrites via h_{caps[v-1]+1} in the first v variables.
// Basis monomials are exactly those with exponent of x_v at most caps[v-1].
class StaircaseRing {
 public:
  StaircaseRing(int num_vars, std::vector<int> caps);

  int num_vars() const { return n_; }
  const std::vector<int>& caps() const { return caps_; }
  int top_degree() const;

  const std::map<ExponentVector, Int>& reduce_monomial(
      const ExponentVector& e) const;
  QuotientElement reduce(const IntPolynomial& p) const;
  IntPolynomial reconstruct(const QuotientElement& q) const;

 private:
  int n_;
  std::vector<int> caps_;
  std::vector<IntPolynomial> rewrite_;  // substitute for x_v^{caps+1}, v = 1..n
  mutable std::mutex mu_;
  mutable std::map<ExponentVector, std::map<ExponentVector, Int>> cache_;
};

// Z[x_1..x_n]/[h_1..h_n]: caps (n-1, n-2, ..., 0), rank n!.
const StaircaseRing& flag_ring(int n);

// The same quotient presented in one variable fewer: n variables with caps
// (n, n-1, ..., 1), rank (n+1)!; hosts the gamma-hat classes.
const StaircaseRing& su_ring(int n);

struct QuotientBasis {
  int n = 0;
  std::vector<std::vector<ExponentVector>> by_degree;
};

// Additive basis of flag_ring(n) grouped by degree 0..n(n-1)/2.
QuotientBasis quotient_basis(int n);

// Normal form in flag_ring(n).
QuotientElement reduce(const IntPolynomial& p, int n);

// Sufficient vanishing test in su_ring(n): some k largest exponents sum past
// the k largest caps n, n-1, ....
bool zero_criterion(const ExponentVector& monomial, int n);

// gamma-hat exponents in su_ring(n): staircase (n, n-1, ..., 1), with the
// i-th entry lowered by one for the one-missing classes.
ExponentVector top_class(int n);
ExponentVector top_class_missing_one(int i, int n);

// Coefficient c with gammahat_i * gamma_j = c * gammahat_empty in su_ring(n).
int top_class_product(int i, int j, int n);

// Degreewise basis sizes of flag_ring(n); equals mahonian(n-1, k).
std::vector<std::int64_t> poincare_counts(int n);

}  // namespace flagloop
