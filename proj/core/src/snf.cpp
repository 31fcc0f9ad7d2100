#include "flagloop/snf.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace flagloop {

namespace {

using Clock = std::chrono::steady_clock;

struct Timeout {};

struct Deadline {
  bool enabled = false;
  Clock::time_point at{};
  mutable unsigned tick = 0;

  void check() const {
    if (!enabled) return;
    if ((++tick & 0x3ff) != 0) return;
    if (Clock::now() > at) throw Timeout{};
  }
};

// g = s*a + t*b, g >= 0.
void ext_gcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int ns = s0 - q * s1;
    s0 = s1;
    s1 = ns;
    Int nt = t0 - q * t1;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  g = a;
  s = s0;
  t = t0;
}

// Pairwise gcd/lcm sweeps turn any unimodular diagonalization into the
// divisor chain; products of k smallest entries are exactly the d_k.
SnfDiagonal finalize_diagonal(std::vector<Int> d, std::size_t len) {
  std::vector<Int> nz;
  for (auto& x : d)
    if (x != 0) nz.push_back(abs_val(x));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nz.size(); ++i)
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        if (nz[j] % nz[i] == 0) continue;
        Int g = gcd_val(nz[i], nz[j]);
        Int l = nz[i] / g * nz[j];
        nz[i] = g;
        nz[j] = l;
        changed = true;
      }
  }
  std::sort(nz.begin(), nz.end());
  SnfDiagonal out;
  out.diagonal = std::move(nz);
  out.diagonal.resize(len, Int(0));
  return out;
}

void row_sub(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q,
             std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
}

void col_sub(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q,
             std::size_t from) {
  if (q == 0) return;
  for (std::size_t i = from; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

// Euclidean sweeps until row k and column k are zero beyond (k,k). The pivot
// magnitude strictly drops on every swap, so this terminates.
void clear_position(IntMatrix& a, std::size_t k, const Deadline& dl) {
  const std::size_t R = a.rows(), C = a.cols();
  for (;;) {
    dl.check();
    if (a(k, k) < 0)
      for (std::size_t j = k; j < C; ++j) a(k, j) = -a(k, j);
    bool clean = true;
    for (std::size_t i = k + 1; i < R && clean; ++i) {
      if (a(i, k) == 0) continue;
      row_sub(a, i, k, div_nearest(a(i, k), a(k, k)), k);
      if (a(i, k) != 0) {
        a.swap_rows(i, k);
        clean = false;
      }
    }
    if (!clean) continue;
    for (std::size_t j = k + 1; j < C && clean; ++j) {
      if (a(k, j) == 0) continue;
      col_sub(a, j, k, div_nearest(a(k, j), a(k, k)), k);
      if (a(k, j) != 0) {
        a.swap_cols(j, k);
        clean = false;
      }
    }
    if (clean) return;
  }
}

IntMatrix submatrix_from(const IntMatrix& a, std::size_t k) {
  IntMatrix s(a.rows() - k, a.cols() - k);
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) s(i - k, j - k) = a(i, j);
  return s;
}

bool select_min_entry(const IntMatrix& a, std::size_t k, std::size_t& bi,
                      std::size_t& bj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs_val(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    }
  return found;
}

// Full pivot-value scoring is quadratic in the submatrix size; above this
// entry count the engine falls back to minimal magnitude with the same
// deterministic tie order (output contract unchanged, see module tests).
constexpr std::size_t kExactPivotEntries = 2500;

bool select_pivot_value(const IntMatrix& a, std::size_t k, std::size_t& bi,
                        std::size_t& bj) {
  const std::size_t ar = a.rows() - k, ac = a.cols() - k;
  if (ar * ac > kExactPivotEntries) return select_min_entry(a, k, bi, bj);
  IntMatrix sub = submatrix_from(a, k);
  PivotValueMatrix p = pivot_value_matrix(sub);
  bool found = false;
  Int best;
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) {
      if (sub(i, j) == 0 || !p.finite(i, j)) continue;
      if (!found || p.value(i, j) < best) {
        found = true;
        best = p.value(i, j);
        bi = k + i;
        bj = k + j;
      }
    }
  return found;
}

enum class Strategy { MinEntry, PivotValue };

std::vector<Int> eliminate(IntMatrix a, Strategy strategy, const Deadline& dl) {
  std::vector<Int> diag;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t bi = 0, bj = 0;
    bool found = strategy == Strategy::PivotValue
                     ? select_pivot_value(a, k, bi, bj)
                     : select_min_entry(a, k, bi, bj);
    if (!found) break;
    a.swap_rows(k, bi);
    a.swap_cols(k, bj);
    clear_position(a, k, dl);
    diag.push_back(a(k, k));
  }
  return diag;
}

struct Promote {};

long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw Promote{};
  return r;
}

long long chk_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw Promote{};
  return r;
}

struct UnitPhase {
  std::size_t ones = 0;
  IntMatrix core;
};

// Clears +-1 pivots in fixed width, cheapest Markowitz fill first. Each pivot
// column is emptied by exact row operations, after which dropping its row and
// column is a unimodular reduction to the Schur complement. Row updates go
// through a scratch buffer so an int64 overflow aborts between elementary
// operations, leaving a valid partially reduced state for the wide engine.
UnitPhase unit_phase_int64(const IntMatrix& m, const Deadline& dl) {
  const std::size_t R = m.rows(), C = m.cols();
  UnitPhase out;
  std::vector<long long> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      const Int& v = m(i, j);
      if (v > LLONG_MAX || v < LLONG_MIN) {
        out.core = m;
        return out;
      }
      a[i * C + j] = static_cast<long long>(v);
    }
  std::vector<char> rlive(R, 1), clive(C, 1);
  std::vector<std::size_t> rnnz(R, 0), cnnz(C, 0);
  std::vector<std::pair<std::size_t, std::size_t>> cand;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (a[i * C + j] != 0) {
        ++rnnz[i];
        ++cnnz[j];
        if (a[i * C + j] == 1 || a[i * C + j] == -1) cand.emplace_back(i, j);
      }

  std::vector<long long> scratch(C);
  bool promoted = false;
  while (!promoted) {
    dl.check();
    std::size_t bi = 0, bj = 0;
    long long best = LLONG_MAX;
    std::size_t w = 0;
    for (std::size_t r = 0; r < cand.size(); ++r) {
      auto [i, j] = cand[r];
      long long v = a[i * C + j];
      if (!rlive[i] || !clive[j] || (v != 1 && v != -1)) continue;
      cand[w++] = cand[r];
      long long score = static_cast<long long>(rnnz[i] - 1) *
                        static_cast<long long>(cnnz[j] - 1);
      if (score < best) {
        best = score;
        bi = i;
        bj = j;
        if (score == 0) {
          for (++r; r < cand.size(); ++r) {
            auto [i2, j2] = cand[r];
            long long v2 = a[i2 * C + j2];
            if (rlive[i2] && clive[j2] && (v2 == 1 || v2 == -1))
              cand[w++] = cand[r];
          }
          break;
        }
      }
    }
    cand.resize(w);
    if (best == LLONG_MAX) break;

    const long long s = a[bi * C + bj];
    const long long* piv = a.data() + bi * C;
    for (std::size_t i = 0; i < R; ++i) {
      if (!rlive[i] || i == bi) continue;
      long long f = a[i * C + bj];
      if (f == 0) continue;
      dl.check();
      long long* row = a.data() + i * C;
      try {
        f = chk_mul(f, s);
        for (std::size_t j = 0; j < C; ++j)
          scratch[j] = clive[j] ? chk_sub(row[j], chk_mul(f, piv[j])) : row[j];
      } catch (const Promote&) {
        promoted = true;
        break;
      }
      for (std::size_t j = 0; j < C; ++j) {
        if (!clive[j] || scratch[j] == row[j]) continue;
        long long old = row[j];
        row[j] = scratch[j];
        if (old == 0) {
          ++rnnz[i];
          ++cnnz[j];
        } else if (row[j] == 0) {
          --rnnz[i];
          --cnnz[j];
        }
        if (row[j] == 1 || row[j] == -1) cand.emplace_back(i, j);
      }
    }
    if (promoted) break;
    for (std::size_t j = 0; j < C; ++j)
      if (clive[j] && piv[j] != 0) --cnnz[j];
    rlive[bi] = 0;
    clive[bj] = 0;
    ++out.ones;
  }

  std::vector<std::size_t> ri, cj;
  for (std::size_t i = 0; i < R; ++i)
    if (rlive[i] && rnnz[i] > 0) ri.push_back(i);
  for (std::size_t j = 0; j < C; ++j)
    if (clive[j] && cnnz[j] > 0) cj.push_back(j);
  out.core = IntMatrix(ri.size(), cj.size());
  for (std::size_t i = 0; i < ri.size(); ++i)
    for (std::size_t j = 0; j < cj.size(); ++j)
      out.core(i, j) = a[ri[i] * C + cj[j]];
  return out;
}

SnfDiagonal smith_impl(const IntMatrix& m, const Deadline& dl) {
  const std::size_t len = std::min(m.rows(), m.cols());
  UnitPhase up = unit_phase_int64(m, dl);
  std::vector<Int> diag = eliminate(std::move(up.core), Strategy::PivotValue, dl);
  diag.insert(diag.end(), up.ones, Int(1));
  return finalize_diagonal(std::move(diag), len);
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

// Barrett reduction for x < 2^63: floor(x/p) is q or q+1, one fixup.
struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor(2^64 / p)

  explicit Barrett(std::uint64_t p) : p(p), magic(~std::uint64_t(0) / p) {}

  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    return r >= p ? r - p : r;
  }
};

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? Int(1) : Int(sign) * a(n - 1, n - 1);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BezoutCertificate vec_gcd(const std::vector<Int>& v) {
  BezoutCertificate cert;
  cert.gcd = 0;
  cert.coefficients.assign(v.size(), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (cert.gcd == 0) {
      cert.gcd = abs_val(v[i]);
      cert.coefficients[i] = v[i] < 0 ? -1 : 1;
      continue;
    }
    Int g, s, t;
    ext_gcd(cert.gcd, v[i], g, s, t);
    if (s != 1)
      for (std::size_t j = 0; j < i; ++j) cert.coefficients[j] *= s;
    cert.coefficients[i] = t;
    cert.gcd = g;
  }
  return cert;
}

PivotValueMatrix pivot_value_matrix(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  PivotValueMatrix p(R, C);

  // Post-reduction magnitude when a line is cleared by its gcd certificate;
  // the combined certificate line itself counts toward the maximum.
  std::vector<Int> col_score(C), row_score(R);
  std::vector<char> col_fin(C, 0), row_fin(R, 0);

  std::vector<Int> line, combo;
  for (std::size_t j = 0; j < C; ++j) {
    line.resize(R);
    for (std::size_t i = 0; i < R; ++i) line[i] = m(i, j);
    BezoutCertificate cert = vec_gcd(line);
    if (cert.gcd == 0) continue;
    combo.assign(C, Int(0));
    for (std::size_t i = 0; i < R; ++i) {
      if (cert.coefficients[i] == 0) continue;
      for (std::size_t c = 0; c < C; ++c)
        combo[c] += cert.coefficients[i] * m(i, c);
    }
    Int s = 0;
    for (std::size_t c = 0; c < C; ++c) s = std::max(s, abs_val(combo[c]));
    for (std::size_t i = 0; i < R; ++i) {
      Int q = m(i, j) / cert.gcd;
      for (std::size_t c = 0; c < C; ++c)
        s = std::max(s, abs_val(m(i, c) - q * combo[c]));
    }
    col_score[j] = s;
    col_fin[j] = 1;
  }
  for (std::size_t i = 0; i < R; ++i) {
    line.resize(C);
    for (std::size_t j = 0; j < C; ++j) line[j] = m(i, j);
    BezoutCertificate cert = vec_gcd(line);
    if (cert.gcd == 0) continue;
    combo.assign(R, Int(0));
    for (std::size_t j = 0; j < C; ++j) {
      if (cert.coefficients[j] == 0) continue;
      for (std::size_t r = 0; r < R; ++r)
        combo[r] += cert.coefficients[j] * m(r, j);
    }
    Int s = 0;
    for (std::size_t r = 0; r < R; ++r) s = std::max(s, abs_val(combo[r]));
    for (std::size_t j = 0; j < C; ++j) {
      Int q = m(i, j) / cert.gcd;
      for (std::size_t r = 0; r < R; ++r)
        s = std::max(s, abs_val(m(r, j) - q * combo[r]));
    }
    row_score[i] = s;
    row_fin[i] = 1;
  }

  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (row_fin[i] && col_fin[j]) p.set(i, j, row_score[i] * col_score[j]);
  return p;
}

SnfDiagonal snf_naive(const IntMatrix& m) {
  Deadline dl;
  return finalize_diagonal(eliminate(m, Strategy::MinEntry, dl),
                           std::min(m.rows(), m.cols()));
}

SnfDiagonal snf_pivot(const IntMatrix& m) {
  Deadline dl;
  return finalize_diagonal(eliminate(m, Strategy::PivotValue, dl),
                           std::min(m.rows(), m.cols()));
}

SnfDiagonal smith(const IntMatrix& m) {
  Deadline dl;
  return smith_impl(m, dl);
}

std::optional<SnfDiagonal> smith_bounded(
    const IntMatrix& m, std::chrono::steady_clock::time_point deadline) {
  Deadline dl;
  dl.enabled = true;
  dl.at = deadline;
  try {
    return smith_impl(m, dl);
  } catch (const Timeout&) {
    return std::nullopt;
  }
}

ModPRank snf_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (p > 2147483647ull)
    throw std::invalid_argument("modulus too large (need p < 2^31)");
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
  const std::size_t R = m.rows(), C = m.cols();
  const Int pbig(p);
  std::vector<std::vector<std::uint64_t>> rows(R, std::vector<std::uint64_t>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      Int r = m(i, j) % pbig;
      if (r < 0) r += pbig;
      rows[i][j] = static_cast<std::uint64_t>(r);
    }
  const Barrett bar(p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && rows[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = powmod_u64(rows[rank][col], p - 2, p);
    if (inv != 1)
      for (std::size_t j = col; j < C; ++j)
        rows[rank][j] = mulmod_u64(rows[rank][j], inv, p);
    for (std::size_t i = rank + 1; i < R; ++i) {
      std::uint64_t f = rows[i][col];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      const std::uint64_t* src = rows[rank].data();
      std::uint64_t* dst = rows[i].data();
      for (std::size_t j = col; j < C; ++j)
        if (src[j]) dst[j] = bar.reduce(dst[j] + nf * src[j]);
    }
    ++rank;
  }
  return ModPRank{rank, C - rank};
}

std::vector<Int> determinant_divisors(const IntMatrix& m, std::size_t bound) {
  const std::size_t n = std::min(m.rows(), m.cols());
  if (n > bound) {
    std::ostringstream msg;
    msg << "determinant_divisors: min dimension " << n << " exceeds bound "
        << bound;
    throw std::invalid_argument(msg.str());
  }
  std::vector<Int> d;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<std::size_t> ri(k), cj(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    bool more_rows = true;
    while (more_rows && g != 1) {
      for (std::size_t j = 0; j < k; ++j) cj[j] = j;
      bool more_cols = true;
      while (more_cols && g != 1) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(ri[i], cj[j]);
        g = gcd_val(g, det_bareiss(std::move(minor)));
        more_cols = next_combination(cj, m.cols());
      }
      more_rows = next_combination(ri, m.rows());
    }
    if (g == 0) break;
    d.push_back(g);
  }
  return d;
}

AbelianGroupStructure cokernel_of_diagonal(const SnfDiagonal& d,
                                           std::size_t cols) {
  AbelianGroupStructure g;
  std::size_t nonzero = 0;
  for (const Int& x : d.diagonal) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) g.invariant_factors.push_back(x);
  }
  g.free_rank = static_cast<std::int64_t>(cols) -
                static_cast<std::int64_t>(nonzero);
  return g;
}

AbelianGroupStructure cokernel(const IntMatrix& rows_span) {
  return cokernel_of_diagonal(smith(rows_span), rows_span.cols());
}

std::string to_text(const AbelianGroupStructure& g) {
  std::ostringstream os;
  bool any = false;
  if (g.free_rank > 0) {
    os << 'Z';
    if (g.free_rank > 1) os << '^' << g.free_rank;
    any = true;
  }
  for (const Int& f : g.invariant_factors) {
    if (any) os << '+';
    os << "Z_" << f;
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace flagloop
