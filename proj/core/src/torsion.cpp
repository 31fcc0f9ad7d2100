#include "flagloop/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flagloop/combinatorics.hpp"
#include "json.hpp"

namespace flagloop {

AbelianGroupStructure e3_entry(const PageCoordinate& coord) {
  IntMatrix m = differential_matrix(coord);
  return cokernel(m);
}

ModMultiplicity e3_entry_mod_p(const PageCoordinate& coord, std::uint64_t p) {
  IntMatrix m = differential_matrix(coord);
  std::size_t aux = snf_mod_p(m, kAuxiliaryPrime).rank;
  std::size_t modp = snf_mod_p(m, p).rank;
  return ModMultiplicity{static_cast<std::int64_t>(aux) -
                         static_cast<std::int64_t>(modp)};
}

TorsionTable torsion_table(int n, std::optional<std::uint64_t> p,
                           std::chrono::milliseconds budget_per_cell) {
  if (n < 2) throw std::invalid_argument("torsion_table: need n >= 2");
  TorsionTable t;
  t.n = n;
  t.family = GroupFamily::SU;
  t.modular = p.has_value();
  t.p = p.value_or(0);
  const int top = n * (n + 1) / 2;
  std::vector<int> missing_order;
  for (int y = n - 1; y >= 1; --y) missing_order.push_back(y);
  missing_order.push_back(0);
  for (int y : missing_order) {
    TorsionRow row;
    row.missing = y;
    row.bottom = y == 0;
    for (int x = 0; x <= top; ++x) {
      TorsionCell cell;
      cell.degree = x;
      IntMatrix m = differential_matrix(PageCoordinate{n, x, y});
      if (t.modular) {
        std::size_t aux = snf_mod_p(m, kAuxiliaryPrime).rank;
        std::size_t modp = snf_mod_p(m, t.p).rank;
        cell.multiplicity =
            static_cast<std::int64_t>(aux) - static_cast<std::int64_t>(modp);
        cell.group.free_rank =
            static_cast<std::int64_t>(m.cols()) - static_cast<std::int64_t>(aux);
      } else {
        auto deadline = std::chrono::steady_clock::now() + budget_per_cell;
        std::optional<SnfDiagonal> d = smith_bounded(m, deadline);
        if (d) {
          cell.group = cokernel_of_diagonal(*d, m.cols());
        } else {
          cell.known = false;
        }
      }
      row.cells.push_back(std::move(cell));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

AbelianGroupStructure bottom_row_group(int n, int p_cols) {
  if (n < 1 || p_cols < 0)
    throw std::invalid_argument("bottom_row_group: need n >= 1, p_cols >= 0");
  AbelianGroupStructure g;
  if (p_cols == 0) {
    g.free_rank = 1;
    return g;
  }
  std::int64_t d = 0;
  for (int k = 1; k <= std::min(p_cols, n + 1); ++k)
    d = std::gcd(d, binomial(n + 1, k));
  g.free_rank = 0;
  if (d > 1) g.invariant_factors.push_back(Int(d));
  return g;
}

AbelianGroupStructure last_column_group(int n, int k) {
  if (n < 2 || k < 0 || k > n)
    throw std::invalid_argument("last_column_group: need n >= 2, 0 <= k <= n");
  AbelianGroupStructure g;
  if (k == 0) {
    g.free_rank = 1;
  } else if (k == 1) {
    g.invariant_factors.push_back(Int(n + 1));
  }
  return g;
}

std::int64_t prequotient_free_rank(int n, int j, int p) {
  if (j < 1 || j > n - 1 || p < 0)
    throw std::invalid_argument(
        "prequotient_free_rank: need 1 <= j <= n-1, p >= 0");
  std::int64_t total = 0;
  for (int k = 0; k <= j && k <= p; ++k) {
    std::int64_t term = checked_mul(binomial(n, j - k), multiset_coeff(n, p - k));
    total = checked_add(total, k % 2 ? -term : term);
  }
  return total;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= v; ++q)
    if (v % q == 0) {
      out.push_back(q);
      while (v % q == 0) v /= q;
    }
  if (v > 1) out.push_back(v);
  return out;
}

std::size_t nonzero_count(const SnfDiagonal& d) {
  std::size_t k = 0;
  for (const Int& x : d.diagonal)
    if (x != 0) ++k;
  return k;
}

}  // namespace

CrossCheckReport cross_check(int n) {
  if (n < 2) throw std::invalid_argument("cross_check: need n >= 2");
  CrossCheckReport rep;
  const int top = n * (n + 1) / 2;
  const std::vector<std::uint64_t> primes = prime_divisors(n + 1);
  auto fail = [&rep](int x, int y, const std::string& what) {
    std::ostringstream os;
    os << "x=" << x << " y=" << y << ": " << what;
    rep.failures.push_back(os.str());
  };
  for (int y = 0; y <= n - 1; ++y)
    for (int x = 0; x <= top; ++x) {
      IntMatrix m = differential_matrix({n, x, y});
      SnfDiagonal d = smith(m);
      AbelianGroupStructure g = cokernel_of_diagonal(d, m.cols());
      if (y == 0) {
        ++rep.checks;
        AbelianGroupStructure want = bottom_row_group(n, x);
        if (!(g == want))
          fail(x, y, "bottom row: " + to_text(g) + " vs " + to_text(want));
      }
      if (x == top) {
        ++rep.checks;
        AbelianGroupStructure want = last_column_group(n, n - y);
        if (!(g == want))
          fail(x, y, "last column: " + to_text(g) + " vs " + to_text(want));
      }
      for (const Int& f : g.invariant_factors) {
        ++rep.checks;
        if (Int(n + 1) % f != 0)
          fail(x, y, "torsion order does not divide n+1");
      }
      std::size_t aux = snf_mod_p(m, kAuxiliaryPrime).rank;
      ++rep.checks;
      if (aux != nonzero_count(d))
        fail(x, y, "auxiliary-prime rank differs from integral rank");
      for (std::uint64_t q : primes) {
        std::int64_t mult = static_cast<std::int64_t>(aux) -
                            static_cast<std::int64_t>(snf_mod_p(m, q).rank);
        std::int64_t divisible = 0;
        for (const Int& f : g.invariant_factors)
          if (f % q == 0) ++divisible;
        ++rep.checks;
        if (mult != divisible) {
          std::ostringstream os;
          os << "mod-" << q << " multiplicity " << mult << " vs " << divisible
             << " divisible factors";
          fail(x, y, os.str());
        }
      }
    }
  return rep;
}

namespace {

std::string family_label(const TorsionTable& t) {
  std::ostringstream os;
  if (t.family == GroupFamily::SU)
    os << "SU(" << t.n + 1 << ")/T^" << t.n;
  else
    os << "Sp(" << t.n << ")/T^" << t.n;
  return os.str();
}

std::string cell_text(const TorsionTable& t, const TorsionCell& c) {
  if (t.modular) return std::to_string(c.multiplicity);
  if (!c.known) return "?";
  return to_text(c.group);
}

std::string row_label(const TorsionRow& r) {
  if (r.bottom) return "bottom";
  return "missing " + std::to_string(r.missing);
}

}  // namespace

std::string render_text(const TorsionTable& t) {
  std::ostringstream os;
  if (t.modular)
    os << "Multiplicity of " << t.p << "-torsion, E3 page, " << family_label(t)
       << "\n";
  else
    os << "E3 page, " << family_label(t) << ", integral\n";

  const std::size_t ncols = t.rows.empty() ? 0 : t.rows[0].cells.size();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header;
  header.push_back("degree");
  for (std::size_t x = 0; x < ncols; ++x) header.push_back(std::to_string(x));
  grid.push_back(std::move(header));
  for (const TorsionRow& r : t.rows) {
    std::vector<std::string> line;
    line.push_back(row_label(r));
    for (const TorsionCell& c : r.cells) line.push_back(cell_text(t, c));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(ncols + 1, 0);
  for (const auto& line : grid)
    for (std::size_t j = 0; j < line.size(); ++j)
      width[j] = std::max(width[j], line[j].size());
  for (const auto& line : grid) {
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) os << "  ";
      os << line[j];
      if (j + 1 < line.size())
        os << std::string(width[j] - line[j].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string render_json(const TorsionTable& t) {
  nlohmann::ordered_json root;
  root["n"] = t.n;
  root["family"] = t.family == GroupFamily::SU ? "SU" : "Sp";
  root["mode"] = t.modular ? "mod-p" : "integral";
  if (t.modular) root["p"] = t.p;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TorsionRow& r : t.rows) {
    nlohmann::ordered_json row;
    if (r.bottom)
      row["missing"] = "bottom";
    else
      row["missing"] = r.missing;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const TorsionCell& c : r.cells) {
      nlohmann::ordered_json cell;
      cell["degree"] = c.degree;
      if (t.modular) {
        // Multiplicity encoded as that many factors of p; the free part is
        // read off the rational rank.
        cell["free_rank"] = c.group.free_rank;
        auto factors = nlohmann::ordered_json::array();
        for (std::int64_t i = 0; i < c.multiplicity; ++i) factors.push_back(t.p);
        cell["invariant_factors"] = std::move(factors);
        cell["status"] = "ok";
      } else {
        cell["free_rank"] = c.known ? c.group.free_rank : 0;
        auto factors = nlohmann::ordered_json::array();
        if (c.known)
          for (const Int& f : c.group.invariant_factors)
            factors.push_back(static_cast<std::int64_t>(f));
        cell["invariant_factors"] = std::move(factors);
        cell["status"] = c.known ? "ok" : "unknown";
      }
      cells.push_back(std::move(cell));
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

}  // namespace flagloop
