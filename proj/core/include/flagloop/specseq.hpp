#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flagloop/polynomial.hpp"

namespace flagloop {

enum class GroupFamily { SU, Sp };

// Basis symbol (x2)_m * y_{i1}..y_{ij} * gamma^g with ascending exterior part.
struct E2Key {
  int m = 0;                 // divided-power index
  std::uint32_t y_mask = 0;  // bit i-1 set when y_i is present
  ExponentVector gamma;

  auto operator<=>(const E2Key&) const = default;
};

struct E2Element {
  int n = 0;
  std::map<E2Key, Int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const E2Element&) const = default;
};

void e2_add_term(E2Element& e, const E2Key& k, const Int& c);
E2Element operator+(const E2Element& a, const E2Element& b);
E2Element operator-(const E2Element& a, const E2Element& b);

// (x2)_m * y_mask * p summed over the monomials of p.
E2Element e2_scale(int m, std::uint32_t y_mask, const IntPolynomial& p);

// Gamma parts grouped by (m, y_mask).
std::map<std::pair<int, std::uint32_t>, IntPolynomial> e2_components(
    const E2Element& e);

struct PageCoordinate {
  int n = 0;
  int x = 0;  // gamma-degree (half the horizontal degree)
  int y = 0;  // count of missing y generators
};

// E^{i,x}: multiset containment between size-i and size-x multisets on n
// symbols, canonical multiset order on both sides.
IntMatrix submultiset_matrix(int i, int x, int n);

// E_i for i = 1..n: row multiset mu has its single 1 at column mu + e_i.
std::vector<IntMatrix> fixed_submultiset_matrices(int x, int n);

// d2(x2) = sum_k (-1)^{k+1} y_k (gamma_1+..+gamma_n+gamma_k), all with m=0.
E2Element su_d2_image(int n);

// d^{2(l-1)} generator image for 3 <= l <= n+1; restricts to su_d2_image at
// the l=2 shape and satisfies the d4 ideal congruence (see module tests).
E2Element su_higher_diff_image(int n, int l);

// d2(x_{4l-2}) = 2 sum over l-subsets and a distinguished index i of
// y_i gamma_i prod gamma_t^2; 1 <= l <= n.
E2Element sp_d2_image(int n, int l);

// Leibniz extension: (x2)_m steps down once against the family's d2 image
// with Koszul signs; m=0 terms, y and gamma generators map to zero.
E2Element apply_d2(const E2Element& e, GroupFamily family);

// SU: h_2..h_{n+1} in n variables; Sp: sigma_l of the squared variables.
std::vector<IntPolynomial> family_ideal(int n, GroupFamily family);

// Image rows (one per missing-superset and degree x-1 monomial) stacked over
// the degreewise ideal rows, against columns indexed by missing y-sets and
// degree-x monomials. SU uses the incidence block law; Sp extracts the
// coefficients of apply_d2 symbolically.
IntMatrix differential_matrix(const PageCoordinate& coord,
                              GroupFamily family = GroupFamily::SU);

// Symbolic assembly of the image rows only (both families); the block law
// must reproduce this for SU.
IntMatrix differential_matrix_symbolic_image(const PageCoordinate& coord,
                                             GroupFamily family);

}  // namespace flagloop
