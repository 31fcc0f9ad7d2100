#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagloop/matrix.hpp"

namespace flagloop {

// Diagonal of the Smith normal form: non-negative, each nonzero entry divides
// the next, zeros trail, length min(rows, cols).
struct SnfDiagonal {
  std::vector<Int> diagonal;
  bool operator==(const SnfDiagonal&) const = default;
};

struct BezoutCertificate {
  Int gcd;  // non-negative; 0 iff the input is all zeros
  std::vector<Int> coefficients;
};

// Cokernel shape Z^free_rank (+) Z_{d_1} (+) ... with d_1 | d_2 | ..., d_i > 1.
struct AbelianGroupStructure {
  std::int64_t free_rank = 0;
  std::vector<Int> invariant_factors;
  bool operator==(const AbelianGroupStructure&) const = default;
};

std::string to_text(const AbelianGroupStructure& g);  // "Z^2+Z_3", "Z", "0", ...

// Extended non-negative pivot scores; finite(i,j)==false encodes +infinity
// (the row or column gcd vanishes there).
class PivotValueMatrix {
 public:
  PivotValueMatrix() = default;
  PivotValueMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), value_(rows * cols), finite_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool finite(std::size_t i, std::size_t j) const {
    return finite_[i * cols_ + j] != 0;
  }
  const Int& value(std::size_t i, std::size_t j) const {
    return value_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Int v) {
    value_[i * cols_ + j] = std::move(v);
    finite_[i * cols_ + j] = 1;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> value_;
  std::vector<char> finite_;
};

BezoutCertificate vec_gcd(const std::vector<Int>& v);
PivotValueMatrix pivot_value_matrix(const IntMatrix& m);

SnfDiagonal snf_naive(const IntMatrix& m);
SnfDiagonal snf_pivot(const IntMatrix& m);

// Production driver: eliminates unit pivots in checked 64-bit arithmetic
// (overflow stops that phase between elementary operations), then finishes
// the residual core with the pivot-value engine. Same output contract.
SnfDiagonal smith(const IntMatrix& m);

// As smith(), but gives up (nullopt) once the deadline passes.
std::optional<SnfDiagonal> smith_bounded(
    const IntMatrix& m, std::chrono::steady_clock::time_point deadline);

struct ModPRank {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  bool operator==(const ModPRank&) const = default;
};

// Rank/nullity over F_p; rejects p < 2, composite p, or p >= 2^31.
ModPRank snf_mod_p(const IntMatrix& m, std::uint64_t p);

// d_k = gcd of all k x k minors, k = 1..rank. Independent oracle for the SNF
// engines; refuses matrices with min dimension above `bound`.
std::vector<Int> determinant_divisors(const IntMatrix& m, std::size_t bound = 7);

// Z^cols / (row span of rows_span).
AbelianGroupStructure cokernel(const IntMatrix& rows_span);
AbelianGroupStructure cokernel_of_diagonal(const SnfDiagonal& d, std::size_t cols);

}  // namespace flagloop
