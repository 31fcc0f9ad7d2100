#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagloop/combinatorics.hpp"
#include "flagloop/integer.hpp"
#include "flagloop/matrix.hpp"

namespace flagloop {

// Sparse polynomial over the integers; no zero coefficients are stored and
// every exponent vector has length num_vars.
struct IntPolynomial {
  int num_vars = 0;
  std::map<ExponentVector, Int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const IntPolynomial&) const = default;
};

// Weakly decreasing positive parts, trailing zeros stripped.
using Partition = std::vector<int>;

IntPolynomial make_constant(int n, const Int& c);
IntPolynomial make_monomial(ExponentVector e, const Int& c);
void add_term(IntPolynomial& p, const ExponentVector& e, const Int& c);

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const Int& c, const IntPolynomial& a);

// Widen to n variables (exponents padded with zeros).
IntPolynomial embed(const IntPolynomial& p, int n);

// Common degree of all terms, or nullopt when mixed or zero.
std::optional<int> homogeneous_degree(const IntPolynomial& p);

// sigma_l in n variables; sigma_0 = 1; throws when l > n or l < 0.
IntPolynomial elementary_symmetric(int n, int l);

// Sum of all degree-l monomials in b variables; h_0 = 1.
IntPolynomial complete_homogeneous(int b, int l);

// Sum of all distinct monomials with exponent multiset mu.
IntPolynomial monomial_symmetric(const Partition& mu, int n);

// Number of non-negative integer matrices with row sums lambda and column
// sums mu; throws when the weights differ.
std::int64_t count_row_col_matrices(const Partition& lambda,
                                    const Partition& mu);

// Coefficients c_lambda with p = sum c_lambda sigma_{lambda_1}...sigma_{lambda_k};
// throws std::domain_error when p is not symmetric.
std::map<Partition, Int> decompose_into_elementary(const IntPolynomial& p);

// xi_2..xi_{n+1} in n variables: (1-l) sum of squarefree l-subset monomials
// minus sum over (l-2)-subsets S and k outside S of x_S x_k^2.
std::vector<IntPolynomial> xi_generators(int n);

// Sum of all degree-k monomials in the first n-kprime+1 of n variables;
// requires 1 <= kprime <= k <= n.
IntPolynomial phi(int n, int k, int kprime);

// Rows span the degree-graded piece of the ideal generated by gens inside
// Z[x_1..x_n]; columns follow enumerate_multisets(n, degree).
IntMatrix ideal_degree_span(int n, const std::vector<IntPolynomial>& gens,
                            int degree);

// Degreewise equality of integral spans up to max_degree, decided by
// comparing lattice invariants of each span and of their join.
bool ideals_equal_up_to(int n, const std::vector<IntPolynomial>& gens_a,
                        const std::vector<IntPolynomial>& gens_b,
                        int max_degree);

// Integral membership of a homogeneous p in the span of gens at its degree.
bool in_ideal_span(int n, const std::vector<IntPolynomial>& gens,
                   const IntPolynomial& p);

// Terms in canonical monomial order with +/- separators.
std::string to_text(const IntPolynomial& p);
std::string monomial_text(const ExponentVector& e);

}  // namespace flagloop
