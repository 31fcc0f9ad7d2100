#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "flagloop/integer.hpp"

namespace flagloop {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t k);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix transpose(const IntMatrix& m);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Text format: optional '#' comment lines, a "ROWS COLS" line, then ROWS lines
// of COLS whitespace-separated signed decimal integers.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);  // throws std::runtime_error

void write_matrix_file(const std::string& path, const IntMatrix& m);
IntMatrix read_matrix_file(const std::string& path);

}  // namespace flagloop
