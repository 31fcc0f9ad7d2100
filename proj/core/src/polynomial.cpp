#include "flagloop/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "flagloop/snf.hpp"

namespace flagloop {

namespace {

void require_same_vars(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.num_vars != b.num_vars)
    throw std::invalid_argument("polynomial arity mismatch");
}

}  // namespace

IntPolynomial make_constant(int n, const Int& c) {
  IntPolynomial p;
  p.num_vars = n;
  if (c != 0) p.terms.emplace(ExponentVector(n, 0), c);
  return p;
}

IntPolynomial make_monomial(ExponentVector e, const Int& c) {
  IntPolynomial p;
  p.num_vars = static_cast<int>(e.size());
  if (c != 0) p.terms.emplace(std::move(e), c);
  return p;
}

void add_term(IntPolynomial& p, const ExponentVector& e, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != p.num_vars)
    throw std::invalid_argument("exponent vector length mismatch");
  auto [it, inserted] = p.terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_vars(a, b);
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, c);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_vars(a, b);
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, -c);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r;
  r.num_vars = a.num_vars;
  for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_vars(a, b);
  IntPolynomial r;
  r.num_vars = a.num_vars;
  ExponentVector e(a.num_vars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.num_vars; ++i) e[i] = ea[i] + eb[i];
      add_term(r, e, ca * cb);
    }
  return r;
}

IntPolynomial operator*(const Int& c, const IntPolynomial& a) {
  IntPolynomial r;
  r.num_vars = a.num_vars;
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms) r.terms.emplace(e, c * v);
  return r;
}

IntPolynomial embed(const IntPolynomial& p, int n) {
  if (n < p.num_vars)
    throw std::invalid_argument("embed: cannot shrink variable count");
  IntPolynomial r;
  r.num_vars = n;
  for (const auto& [e, c] : p.terms) {
    ExponentVector w = e;
    w.resize(n, 0);
    r.terms.emplace(std::move(w), c);
  }
  return r;
}

std::optional<int> homogeneous_degree(const IntPolynomial& p) {
  std::optional<int> d;
  for (const auto& [e, c] : p.terms) {
    int s = 0;
    for (int x : e) s += x;
    if (!d)
      d = s;
    else if (*d != s)
      return std::nullopt;
  }
  return d;
}

IntPolynomial elementary_symmetric(int n, int l) {
  if (l < 0 || l > n)
    throw std::invalid_argument("elementary_symmetric: need 0 <= l <= n");
  IntPolynomial p;
  p.num_vars = n;
  for (const IndexTuple& s : subsets_lex(n, l)) {
    ExponentVector e(n, 0);
    for (int v : s) e[v - 1] = 1;
    p.terms.emplace(std::move(e), Int(1));
  }
  return p;
}

IntPolynomial complete_homogeneous(int b, int l) {
  if (b < 1 || l < 0)
    throw std::invalid_argument("complete_homogeneous: need b >= 1, l >= 0");
  IntPolynomial p;
  p.num_vars = b;
  for (ExponentVector& e : enumerate_multisets(b, l))
    p.terms.emplace(std::move(e), Int(1));
  return p;
}

IntPolynomial monomial_symmetric(const Partition& mu, int n) {
  if (static_cast<int>(mu.size()) > n)
    throw std::invalid_argument("monomial_symmetric: too many parts");
  ExponentVector e(n, 0);
  std::copy(mu.begin(), mu.end(), e.begin());
  std::sort(e.begin(), e.end());
  IntPolynomial p;
  p.num_vars = n;
  do {
    p.terms.emplace(e, Int(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

namespace {

std::int64_t count_matrices_rec(const std::vector<int>& rows, std::size_t r,
                                std::vector<int>& cols) {
  if (r == rows.size()) return 1;
  // enumerate compositions of rows[r] under the remaining column sums
  std::int64_t total = 0;
  std::vector<int> pick(cols.size(), 0);
  int remaining = rows[r];
  std::size_t j = 0;
  // depth-first over columns with explicit stack in pick/j
  for (;;) {
    if (j == cols.size()) {
      if (remaining == 0)
        total = checked_add(total, count_matrices_rec(rows, r + 1, cols));
      // backtrack
      for (;;) {
        if (j == 0) return total;
        --j;
        cols[j] += pick[j];
        remaining += pick[j];
        if (pick[j] > 0) {
          --pick[j];
          cols[j] -= pick[j];
          remaining -= pick[j];
          ++j;
          break;
        }
      }
      continue;
    }
    pick[j] = std::min(remaining, cols[j]);
    cols[j] -= pick[j];
    remaining -= pick[j];
    ++j;
  }
}

}  // namespace

std::int64_t count_row_col_matrices(const Partition& lambda,
                                    const Partition& mu) {
  std::int64_t wl = 0, wm = 0;
  for (int x : lambda) wl = checked_add(wl, x);
  for (int x : mu) wm = checked_add(wm, x);
  if (wl != wm)
    throw std::invalid_argument("count_row_col_matrices: unequal weights");
  std::vector<int> rows(lambda.begin(), lambda.end());
  std::vector<int> cols(mu.begin(), mu.end());
  rows.erase(std::remove(rows.begin(), rows.end(), 0), rows.end());
  cols.erase(std::remove(cols.begin(), cols.end(), 0), cols.end());
  return count_matrices_rec(rows, 0, cols);
}

namespace {

bool is_symmetric(const IntPolynomial& p) {
  for (int i = 0; i + 1 < p.num_vars; ++i)
    for (const auto& [e, c] : p.terms) {
      ExponentVector s = e;
      std::swap(s[i], s[i + 1]);
      auto it = p.terms.find(s);
      if (it == p.terms.end() || it->second != c) return false;
    }
  return true;
}

Partition conjugate_partition(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int part : lambda)
      if (part >= j) ++count;
    out.push_back(count);
  }
  return out;
}

}  // namespace

std::map<Partition, Int> decompose_into_elementary(const IntPolynomial& p) {
  if (!is_symmetric(p))
    throw std::domain_error("decompose_into_elementary: input not symmetric");
  std::map<Partition, Int> out;
  IntPolynomial rest = p;
  while (!rest.is_zero()) {
    // The lex-greatest exponent of a symmetric polynomial is a partition
    // lambda, and sigma over its conjugate has leading monomial x^lambda.
    const auto& [lead, coef] = *rest.terms.rbegin();
    // Symmetry forces the lex-greatest exponent to be weakly decreasing.
    if (!std::is_sorted(lead.rbegin(), lead.rend()))
      throw std::domain_error("decompose_into_elementary: input not symmetric");
    Partition lambda;
    for (int x : lead)
      if (x > 0) lambda.push_back(x);
    Partition mu = conjugate_partition(lambda);
    IntPolynomial prod = make_constant(p.num_vars, 1);
    for (int part : mu) prod = prod * elementary_symmetric(p.num_vars, part);
    Int c = coef;
    rest = rest - c * prod;
    out[mu] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<IntPolynomial> xi_generators(int n) {
  if (n < 1) throw std::invalid_argument("xi_generators: need n >= 1");
  std::vector<IntPolynomial> out;
  for (int l = 2; l <= n + 1; ++l) {
    IntPolynomial xi;
    xi.num_vars = n;
    if (l <= n) xi = Int(1 - l) * elementary_symmetric(n, l);
    for (const IndexTuple& s : subsets_lex(n, l - 2)) {
      ExponentVector base(n, 0);
      for (int v : s) base[v - 1] = 1;
      for (int k = 1; k <= n; ++k) {
        if (base[k - 1] != 0) continue;
        ExponentVector e = base;
        e[k - 1] = 2;
        add_term(xi, e, Int(-1));
      }
    }
    out.push_back(std::move(xi));
  }
  return out;
}

IntPolynomial phi(int n, int k, int kprime) {
  if (!(1 <= kprime && kprime <= k && k <= n))
    throw std::invalid_argument("phi: need 1 <= kprime <= k <= n");
  return embed(complete_homogeneous(n - kprime + 1, k), n);
}

IntMatrix ideal_degree_span(int n, const std::vector<IntPolynomial>& gens,
                            int degree) {
  if (degree < 0) throw std::invalid_argument("ideal_degree_span: degree < 0");
  std::vector<ExponentVector> basis = enumerate_multisets(n, degree);
  std::map<ExponentVector, std::size_t> col;
  for (std::size_t j = 0; j < basis.size(); ++j) col.emplace(basis[j], j);

  std::vector<std::vector<Int>> rows;
  ExponentVector e(n);
  for (const IntPolynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.num_vars != n)
      throw std::invalid_argument("ideal_degree_span: generator arity mismatch");
    std::optional<int> d = homogeneous_degree(g);
    if (!d) throw std::domain_error("ideal_degree_span: non-homogeneous generator");
    if (*d > degree) continue;
    for (const ExponentVector& m : enumerate_multisets(n, degree - *d)) {
      std::vector<Int> row(basis.size(), Int(0));
      for (const auto& [eg, c] : g.terms) {
        for (int i = 0; i < n; ++i) e[i] = eg[i] + m[i];
        row[col.at(e)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  IntMatrix out(rows.size(), basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out(i, j) = std::move(rows[i][j]);
  return out;
}

namespace {

// Rank and nonzero invariant factors identify a sublattice of Z^m up to
// equality when compared for A, B, and their join.
std::pair<std::size_t, std::vector<Int>> lattice_key(const IntMatrix& m) {
  SnfDiagonal d = smith(m);
  std::vector<Int> nz;
  for (const Int& x : d.diagonal)
    if (x != 0) nz.push_back(x);
  return {nz.size(), std::move(nz)};
}

}  // namespace

bool ideals_equal_up_to(int n, const std::vector<IntPolynomial>& gens_a,
                        const std::vector<IntPolynomial>& gens_b,
                        int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    IntMatrix a = ideal_degree_span(n, gens_a, d);
    IntMatrix b = ideal_degree_span(n, gens_b, d);
    auto ka = lattice_key(a);
    auto kb = lattice_key(b);
    if (ka != kb) return false;
    if (lattice_key(vstack(a, b)) != ka) return false;
  }
  return true;
}

bool in_ideal_span(int n, const std::vector<IntPolynomial>& gens,
                   const IntPolynomial& p) {
  if (p.is_zero()) return true;
  if (p.num_vars != n)
    throw std::invalid_argument("in_ideal_span: arity mismatch");
  std::optional<int> d = homogeneous_degree(p);
  if (!d) throw std::domain_error("in_ideal_span: p not homogeneous");
  std::vector<ExponentVector> basis = enumerate_multisets(n, *d);
  IntMatrix v(1, basis.size());
  std::map<ExponentVector, std::size_t> col;
  for (std::size_t j = 0; j < basis.size(); ++j) col.emplace(basis[j], j);
  for (const auto& [e, c] : p.terms) v(0, col.at(e)) = c;
  IntMatrix span = ideal_degree_span(n, gens, *d);
  return lattice_key(span) == lattice_key(vstack(span, v));
}

std::string monomial_text(const ExponentVector& e) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << ' ';
    os << 'g' << i + 1;
    if (e[i] > 1) os << '^' << e[i];
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string to_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = abs_val(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = monomial_text(e);
    if (mono == "1")
      os << a;
    else if (a == 1)
      os << mono;
    else
      os << a << " * " << mono;
  }
  return os.str();
}

}  // namespace flagloop
