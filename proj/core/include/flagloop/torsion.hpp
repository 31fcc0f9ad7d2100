#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagloop/snf.hpp"
#include "flagloop/specseq.hpp"

namespace flagloop {

// Prime used to read off the rational rank; coprime to every torsion order
// that can occur (divisors of n+1).
inline constexpr std::uint64_t kAuxiliaryPrime = 2147483647ull;

struct ModMultiplicity {
  std::int64_t multiplicity = 0;
  bool operator==(const ModMultiplicity&) const = default;
};

struct TorsionCell {
  int degree = 0;  // gamma-degree x
  bool known = true;
  AbelianGroupStructure group;     // integral mode
  std::int64_t multiplicity = 0;   // mod-p mode
};

struct TorsionRow {
  int missing = 0;  // count of missing y generators; 0 marks the bottom row
  bool bottom = false;
  std::vector<TorsionCell> cells;  // degrees 0..n(n+1)/2 in order
};

struct TorsionTable {
  int n = 0;
  GroupFamily family = GroupFamily::SU;
  bool modular = false;
  std::uint64_t p = 0;
  std::vector<TorsionRow> rows;  // missing n-1 down to 1, then bottom
};

// Cokernel of the assembled differential matrix.
AbelianGroupStructure e3_entry(const PageCoordinate& coord);

// Rank drop from the auxiliary prime to p on the same matrix.
ModMultiplicity e3_entry_mod_p(const PageCoordinate& coord, std::uint64_t p);

// Full table; integral cells exceeding the per-cell budget report unknown.
TorsionTable torsion_table(
    int n, std::optional<std::uint64_t> p = std::nullopt,
    std::chrono::milliseconds budget_per_cell = std::chrono::milliseconds(
        300000));

// Z for p_cols = 0, else Z_d with d = gcd of binomial(n+1, 1..min(p_cols,n+1))
// (trivial when d = 1).
AbelianGroupStructure bottom_row_group(int n, int p_cols);

// Top-degree column by present-y count k: Z at k=0, Z_{n+1} at k=1, else 0.
AbelianGroupStructure last_column_group(int n, int k);

// sum_k (-1)^k binomial(n, j-k) multiset_coeff(n, p-k): rank of the slice
// with j present y generators before the ideal is imposed.
std::int64_t prequotient_free_rank(int n, int j, int p);

struct CrossCheckReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Closed forms vs cokernels, the divisor-of-(n+1) property, and mod-p
// multiplicities vs p-divisible invariant factor counts, across the table.
CrossCheckReport cross_check(int n);

std::string render_text(const TorsionTable& t);
std::string render_json(const TorsionTable& t);

}  // namespace flagloop
