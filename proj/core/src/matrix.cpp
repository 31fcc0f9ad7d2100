#include "flagloop/matrix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace flagloop {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap(a_[i * cols_ + j], a_[k * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap(a_[i * cols_ + j], a_[i * cols_ + k]);
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("vstack: column mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      m(top.rows() + i, j) = bottom(i, j);
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
}

namespace {

// Strips '#' comments; returns the next non-empty data line.
bool next_data_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

IntMatrix read_matrix(std::istream& is) {
  std::string line;
  if (!next_data_line(is, line)) throw std::runtime_error("matrix: empty input");
  std::istringstream header(line);
  long long r = -1, c = -1;
  if (!(header >> r >> c) || r < 0 || c < 0)
    throw std::runtime_error("matrix: bad header line");
  std::string tail;
  if (header >> tail) throw std::runtime_error("matrix: trailing header tokens");

  IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (long long i = 0; i < r; ++i) {
    if (!next_data_line(is, line))
      throw std::runtime_error("matrix: missing row " + std::to_string(i + 1));
    std::istringstream row(line);
    std::string tok;
    for (long long j = 0; j < c; ++j) {
      if (!(row >> tok))
        throw std::runtime_error("matrix: short row " + std::to_string(i + 1));
      try {
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Int(tok);
      } catch (const std::exception&) {
        throw std::runtime_error("matrix: bad integer '" + tok + "'");
      }
    }
    if (row >> tok)
      throw std::runtime_error("matrix: long row " + std::to_string(i + 1));
  }
  return m;
}

void write_matrix_file(const std::string& path, const IntMatrix& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_matrix(os, m);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_matrix(is);
}

}  // namespace flagloop
