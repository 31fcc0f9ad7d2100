#include "flagloop/specseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagloop {

void e2_add_term(E2Element& e, const E2Key& k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = e.terms.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e.terms.erase(it);
  }
}

E2Element operator+(const E2Element& a, const E2Element& b) {
  if (a.n != b.n) throw std::invalid_argument("E2Element arity mismatch");
  E2Element r = a;
  for (const auto& [k, c] : b.terms) e2_add_term(r, k, c);
  return r;
}

E2Element operator-(const E2Element& a, const E2Element& b) {
  if (a.n != b.n) throw std::invalid_argument("E2Element arity mismatch");
  E2Element r = a;
  for (const auto& [k, c] : b.terms) e2_add_term(r, k, -c);
  return r;
}

E2Element e2_scale(int m, std::uint32_t y_mask, const IntPolynomial& p) {
  E2Element e;
  e.n = p.num_vars;
  for (const auto& [g, c] : p.terms) e.terms.emplace(E2Key{m, y_mask, g}, c);
  return e;
}

std::map<std::pair<int, std::uint32_t>, IntPolynomial> e2_components(
    const E2Element& e) {
  std::map<std::pair<int, std::uint32_t>, IntPolynomial> out;
  for (const auto& [k, c] : e.terms) {
    auto [it, inserted] = out.try_emplace({k.m, k.y_mask});
    if (inserted) it->second.num_vars = e.n;
    add_term(it->second, k.gamma, c);
  }
  return out;
}

namespace {

bool submultiset(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::map<ExponentVector, std::size_t> index_of(
    const std::vector<ExponentVector>& v) {
  std::map<ExponentVector, std::size_t> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
  return m;
}

}  // namespace

IntMatrix submultiset_matrix(int i, int x, int n) {
  if (i < 0 || i > x)
    throw std::invalid_argument("submultiset_matrix: need 0 <= i <= x");
  std::vector<ExponentVector> rows = enumerate_multisets(n, i);
  std::vector<ExponentVector> cols = enumerate_multisets(n, x);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (submultiset(rows[r], cols[c])) m(r, c) = 1;
  return m;
}

std::vector<IntMatrix> fixed_submultiset_matrices(int x, int n) {
  if (x < 1) throw std::invalid_argument("fixed_submultiset_matrices: x >= 1");
  std::vector<ExponentVector> rows = enumerate_multisets(n, x - 1);
  std::map<ExponentVector, std::size_t> col =
      index_of(enumerate_multisets(n, x));
  std::vector<IntMatrix> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    IntMatrix m(rows.size(), col.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      ExponentVector e = rows[r];
      ++e[i - 1];
      m(r, col.at(e)) = 1;
    }
    out.push_back(std::move(m));
  }
  return out;
}

E2Element su_d2_image(int n) {
  if (n < 1) throw std::invalid_argument("su_d2_image: need n >= 1");
  E2Element e;
  e.n = n;
  for (int k = 1; k <= n; ++k) {
    Int sign = k % 2 ? 1 : -1;
    for (int c = 1; c <= n; ++c) {
      ExponentVector g(n, 0);
      g[c - 1] = 1;
      e2_add_term(e, E2Key{0, 1u << (k - 1), std::move(g)},
                  sign * (c == k ? 2 : 1));
    }
  }
  return e;
}

E2Element su_higher_diff_image(int n, int l) {
  if (l < 3 || l > n + 1)
    throw std::invalid_argument("su_higher_diff_image: need 3 <= l <= n+1");
  E2Element e;
  e.n = n;
  for (int k = 1; k <= n; ++k) {
    Int sign = k % 2 ? 1 : -1;
    std::uint32_t mask = 1u << (k - 1);
    std::vector<int> others;
    for (int v = 1; v <= n; ++v)
      if (v != k) others.push_back(v);
    auto add_subset_terms = [&](int size, const ExponentVector& base,
                                const Int& weight) {
      if (size < 0 || size > static_cast<int>(others.size())) return;
      for (const IndexTuple& s : subsets_lex(static_cast<int>(others.size()),
                                             size)) {
        ExponentVector g = base;
        for (int pos : s) g[others[pos - 1] - 1] += 1;
        e2_add_term(e, E2Key{0, mask, std::move(g)}, sign * weight);
      }
    };
    ExponentVector zero(n, 0), sq(n, 0), lin(n, 0);
    sq[k - 1] = 2;
    lin[k - 1] = 1;
    add_subset_terms(l - 1, zero, Int(l - 1));
    add_subset_terms(l - 3, sq, Int(n - l + 2));
    add_subset_terms(l - 2, lin, Int(2));
  }
  return e;
}

E2Element sp_d2_image(int n, int l) {
  if (l < 1 || l > n)
    throw std::invalid_argument("sp_d2_image: need 1 <= l <= n");
  E2Element e;
  e.n = n;
  for (const IndexTuple& s : subsets_lex(n, l))
    for (int i : s) {
      ExponentVector g(n, 0);
      for (int t : s) g[t - 1] = t == i ? 1 : 2;
      e2_add_term(e, E2Key{0, 1u << (i - 1), std::move(g)}, Int(2));
    }
  return e;
}

E2Element apply_d2(const E2Element& e, GroupFamily family) {
  E2Element image = family == GroupFamily::SU ? su_d2_image(e.n)
                                              : sp_d2_image(e.n, 1);
  E2Element out;
  out.n = e.n;
  ExponentVector g(e.n);
  for (const auto& [key, c] : e.terms) {
    if (key.m == 0) continue;
    for (const auto& [ik, ic] : image.terms) {
      if (ik.y_mask & key.y_mask) continue;  // y_k repeats, exterior square 0
      int k = __builtin_ctz(ik.y_mask) + 1;
      std::uint32_t below = key.y_mask & ((1u << (k - 1)) - 1);
      Int sign = __builtin_popcount(below) % 2 ? -1 : 1;
      for (int i = 0; i < e.n; ++i) g[i] = key.gamma[i] + ik.gamma[i];
      e2_add_term(out, E2Key{key.m - 1, key.y_mask | ik.y_mask, g},
                  sign * c * ic);
    }
  }
  return out;
}

std::vector<IntPolynomial> family_ideal(int n, GroupFamily family) {
  if (n < 1) throw std::invalid_argument("family_ideal: need n >= 1");
  std::vector<IntPolynomial> gens;
  if (family == GroupFamily::SU) {
    for (int i = 2; i <= n + 1; ++i)
      gens.push_back(complete_homogeneous(n, i));
  } else {
    for (int l = 1; l <= n; ++l) {
      IntPolynomial g;
      g.num_vars = n;
      for (const IndexTuple& s : subsets_lex(n, l)) {
        ExponentVector e(n, 0);
        for (int v : s) e[v - 1] = 2;
        g.terms.emplace(std::move(e), Int(1));
      }
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

namespace {

void validate(const PageCoordinate& c) {
  if (c.n < 1 || c.x < 0 || c.x > c.n * (c.n + 1) / 2 || c.y < 0 ||
      c.y > c.n - 1)
    throw std::out_of_range("differential_matrix: coordinate out of range");
}

std::uint32_t complement_mask(const IndexTuple& missing, int n) {
  std::uint32_t mask = (1u << n) - 1;
  for (int v : missing) mask &= ~(1u << (v - 1));
  return mask;
}

}  // namespace

IntMatrix differential_matrix_symbolic_image(const PageCoordinate& coord,
                                             GroupFamily family) {
  validate(coord);
  const int n = coord.n, x = coord.x, y = coord.y;
  std::vector<IndexTuple> col_sets = subsets_lex(n, y);
  std::vector<ExponentVector> col_monos = enumerate_multisets(n, x);
  std::map<ExponentVector, std::size_t> mono_at = index_of(col_monos);
  std::map<std::uint32_t, std::size_t> set_at;
  for (std::size_t s = 0; s < col_sets.size(); ++s)
    set_at.emplace(complement_mask(col_sets[s], n), s);

  std::vector<IndexTuple> row_sets = subsets_lex(n, y + 1);
  std::vector<ExponentVector> row_monos =
      x >= 1 ? enumerate_multisets(n, x - 1) : std::vector<ExponentVector>{};

  IntMatrix m(row_sets.size() * row_monos.size(),
              col_sets.size() * col_monos.size());
  for (std::size_t t = 0; t < row_sets.size(); ++t) {
    std::uint32_t present = complement_mask(row_sets[t], n);
    for (std::size_t r = 0; r < row_monos.size(); ++r) {
      E2Element src;
      src.n = n;
      src.terms.emplace(E2Key{1, present, row_monos[r]}, Int(1));
      E2Element img = apply_d2(src, family);
      std::size_t row = t * row_monos.size() + r;
      for (const auto& [k, c] : img.terms)
        m(row, set_at.at(k.y_mask) * col_monos.size() + mono_at.at(k.gamma)) =
            c;
    }
  }
  return m;
}

IntMatrix differential_matrix(const PageCoordinate& coord, GroupFamily family) {
  validate(coord);
  const int n = coord.n, x = coord.x, y = coord.y;
  std::vector<IndexTuple> col_sets = subsets_lex(n, y);
  const std::size_t ncol_mono = enumerate_multisets(n, x).size();
  const std::size_t cols = col_sets.size() * ncol_mono;

  IntMatrix image;
  if (family == GroupFamily::SU) {
    std::vector<IndexTuple> row_sets = subsets_lex(n, y + 1);
    const std::size_t nrow_mono =
        x >= 1 ? enumerate_multisets(n, x - 1).size() : 0;
    image = IntMatrix(row_sets.size() * nrow_mono, cols);
    if (nrow_mono > 0) {
      IntMatrix einc = submultiset_matrix(x - 1, x, n);
      std::vector<IntMatrix> efix = fixed_submultiset_matrices(x, n);
      std::map<IndexTuple, std::size_t> col_at;
      for (std::size_t s = 0; s < col_sets.size(); ++s)
        col_at.emplace(col_sets[s], s);
      for (std::size_t t = 0; t < row_sets.size(); ++t) {
        const IndexTuple& big = row_sets[t];
        for (std::size_t j = 0; j < big.size(); ++j) {
          IndexTuple small = big;
          small.erase(small.begin() + j);
          std::size_t s = col_at.at(small);
          Int sign = j % 2 ? -1 : 1;  // (-1)^{j+1} with 1-based position
          const IntMatrix& ei = efix[big[j] - 1];
          for (std::size_t r = 0; r < nrow_mono; ++r)
            for (std::size_t c = 0; c < ncol_mono; ++c)
              image(t * nrow_mono + r, s * ncol_mono + c) =
                  sign * (einc(r, c) + ei(r, c));
        }
      }
    }
  } else {
    image = differential_matrix_symbolic_image(coord, family);
  }

  IntMatrix ideal_block = ideal_degree_span(n, family_ideal(n, family), x);
  IntMatrix out(image.rows() + col_sets.size() * ideal_block.rows(), cols);
  for (std::size_t i = 0; i < image.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = image(i, j);
  for (std::size_t s = 0; s < col_sets.size(); ++s)
    for (std::size_t i = 0; i < ideal_block.rows(); ++i)
      for (std::size_t j = 0; j < ncol_mono; ++j)
        out(image.rows() + s * ideal_block.rows() + i, s * ncol_mono + j) =
            ideal_block(i, j);
  return out;
}

}  // namespace flagloop
