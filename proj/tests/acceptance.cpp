// Acceptance harness: runs the ten published-table and identity criteria,
// printing one timed PASS/FAIL line each. Exit code = number of failures.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "flagloop/quotient.hpp"
#include "flagloop/snf.hpp"
#include "flagloop/specseq.hpp"
#include "flagloop/torsion.hpp"

using namespace flagloop;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("flagloop_acc_" + std::to_string(++counter) + ".txt");
  std::string cmd = std::string(FLAGLOOP_CLI_PATH) + " " + args + " > " +
                    path.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  r.out = os.str();
  std::filesystem::remove(path);
  return r;
}

// Split a rendered table line on runs of two or more spaces.
std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = line.find("  ", i);
    if (j == std::string::npos) j = line.size();
    if (j > i) out.push_back(line.substr(i, j - i));
    i = line.find_first_not_of(' ', j);
    if (i == std::string::npos) break;
  }
  return out;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // title
  std::getline(is, line);  // degree header
  while (std::getline(is, line))
    if (!line.empty()) rows.push_back(split_cells(line));
  return rows;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops) {
  std::uniform_int_distribution<int> pick(0, int(n) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  IntMatrix u = IntMatrix::identity(n);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = pick(rng), k = pick(rng);
    if (i == k) {
      u.swap_rows(i, (i + 1) % n);
      continue;
    }
    Int c = coef(rng);
    for (std::size_t j = 0; j < n; ++j) u(i, j) += c * u(k, j);
  }
  return u;
}

E2Element random_e2(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> m(0, 3);
  std::uniform_int_distribution<int> mask(0, (1 << n) - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> var(0, n - 1);
  E2Element e;
  e.n = n;
  for (int t = 0; t < 4; ++t) {
    ExponentVector g(n, 0);
    int d = deg(rng);
    for (int j = 0; j < d; ++j) g[var(rng)] += 1;
    e2_add_term(e, E2Key{m(rng), std::uint32_t(mask(rng)), g}, coef(rng));
  }
  return e;
}

// The ideal is graded: check membership one graded piece at a time.
bool components_in_ideal(const E2Element& e, GroupFamily fam,
                         std::string& why) {
  auto gens = family_ideal(e.n, fam);
  for (const auto& [km, p] : e2_components(e)) {
    std::map<int, IntPolynomial> graded;
    for (const auto& [g, c] : p.terms) {
      int d = 0;
      for (int x : g) d += x;
      if (graded.find(d) == graded.end()) graded[d] = make_constant(e.n, 0);
      add_term(graded[d], g, c);
    }
    for (const auto& [d, piece] : graded)
      if (!in_ideal_span(e.n, gens, piece)) {
        why = "component (m=" + std::to_string(km.first) +
              ", mask=" + std::to_string(km.second) + ", degree " +
              std::to_string(d) + ") escapes the ideal";
        return false;
      }
  }
  return true;
}

E2Element reduce_gammas(const E2Element& e) {
  const StaircaseRing& r = su_ring(e.n);
  E2Element out;
  out.n = e.n;
  for (const auto& [km, p] : e2_components(e)) {
    IntPolynomial nf = r.reconstruct(r.reduce(p));
    for (const auto& [g, c] : nf.terms)
      e2_add_term(out, E2Key{km.first, km.second, g}, c);
  }
  return out;
}

E2Element mul_gamma(const E2Element& e, const IntPolynomial& p) {
  E2Element out;
  out.n = e.n;
  for (const auto& [k, c] : e.terms) {
    IntPolynomial prod = Int(c) * (make_monomial(k.gamma, 1) * p);
    for (const auto& [g, cc] : prod.terms)
      e2_add_term(out, E2Key{k.m, k.y_mask, g}, cc);
  }
  return out;
}

const char* kTable2 =
    "E3 page, SU(3)/T^2, integral\n"
    "degree     0    1    2        3\n"
    "missing 1  Z^2  Z^3  Z^2+Z_3  Z_3\n"
    "bottom     Z    Z_3  Z_3      0\n";

const char* kTable3 =
    "E3 page, SU(4)/T^3, integral\n"
    "degree     0    1    2        3            4            5        6\n"
    "missing 2  Z^3  Z^8  Z^12     Z^13         Z^9+Z_2      Z^4+Z_2  Z_4\n"
    "missing 1  Z^3  Z^6  Z^7+Z_2  Z^6+Z_2+Z_4  Z^3+Z_2+Z_4  Z+Z_2    0\n"
    "bottom     Z    Z_4  Z_2      Z_2          0            0        0\n";

const char* kTable4Mod5 =
    "Multiplicity of 5-torsion, E3 page, SU(5)/T^4\n"
    "degree     0  1  2  3  4  5  6  7  8  9  10\n"
    "missing 3  0  0  0  0  0  0  0  1  1  1  1\n"
    "missing 2  0  0  0  0  1  2  3  3  2  1  0\n"
    "missing 1  0  0  1  2  3  3  2  1  0  0  0\n"
    "bottom     0  1  1  1  1  0  0  0  0  0  0\n";

// Published integral n=4 table; "?" marks entries the published table left
// uncomputed, which the criterion exempts.
const std::vector<std::vector<std::string>> kTable4Template = {
    {"missing 3", "Z^4", "Z^15", "Z^32", "Z^51", "Z^65", "Z^68", "Z^58",
     "Z^40+Z_5", "Z^21+Z_5", "Z^7+Z_5", "Z_5"},
    {"missing 2", "Z^6", "Z^20", "Z^39", "Z^58", "Z^69+Z_5", "?", "?", "?",
     "?", "?", "0"},
    {"missing 1", "Z^4", "Z^10", "Z^16+Z_5", "Z^21+Z_5+Z_5",
     "Z^23+Z_5+Z_5+Z_5", "?", "?", "?", "?", "?", "0"},
    {"bottom", "Z", "Z_5", "Z_5", "Z_5", "Z_5", "0", "0", "0", "0", "0", "0"},
};

bool criterion1(std::string& why, long long& limit_ms) {
  limit_ms = 1000;
  RunResult r = run_cli("torsion 2");
  if (r.exit_code != 0 || r.out != kTable2) {
    why = "output mismatch";
    return false;
  }
  return true;
}

bool criterion2(std::string& why, long long& limit_ms) {
  limit_ms = 60000;
  RunResult r = run_cli("torsion 3");
  if (r.exit_code != 0 || r.out != kTable3) {
    why = "output mismatch";
    return false;
  }
  return true;
}

bool criterion3(std::string& why, long long& limit_ms) {
  limit_ms = 600000;
  RunResult r = run_cli("torsion 4 --mod 5");
  if (r.exit_code != 0 || r.out != kTable4Mod5) {
    why = "output mismatch";
    return false;
  }
  return true;
}

bool criterion4(std::string& why, long long&) {
  RunResult r = run_cli("torsion 4");
  if (r.exit_code != 0) {
    why = "nonzero exit";
    return false;
  }
  auto rows = parse_table(r.out);
  if (rows.size() != kTable4Template.size()) {
    why = "row count mismatch";
    return false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != kTable4Template[i].size()) {
      why = "cell count mismatch in row " + std::to_string(i);
      return false;
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string& want = kTable4Template[i][j];
      if (want == "?") continue;  // left blank in the published table
      if (rows[i][j] != want) {
        why = "row " + std::to_string(i) + " degree " + std::to_string(j - 1) +
              ": got " + rows[i][j] + ", want " + want;
        return false;
      }
    }
  }
  return true;
}

bool criterion5(std::string& why, long long& limit_ms) {
  limit_ms = 1000;
  for (int n = 1; n <= 8; ++n) {
    const int top = n * (n + 1) / 2;
    std::int64_t total = 0;
    for (int k = -2; k <= top + 2; ++k) {
      if (mahonian(n, k) != mahonian_explicit(n, k)) {
        why = "explicit formula disagrees at n=" + std::to_string(n);
        return false;
      }
      if (mahonian(n, k) != mahonian(n, top - k)) {
        why = "reflection symmetry fails at n=" + std::to_string(n);
        return false;
      }
      if (k >= 0 && k <= top) total += mahonian(n, k);
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= n + 1; ++i) fact *= i;
    if (total != fact) {
      why = "totals fail at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) {
      std::int64_t s = 0;
      for (int k = 0; k <= n; ++k)
        s += (k % 2 ? -1 : 1) * binomial(n, k) * multiset_coeff(n, m - k);
      if (s != 0) {
        why = "alternating identity fails at n=" + std::to_string(n) +
              ", m=" + std::to_string(m);
        return false;
      }
    }
  return true;
}

bool criterion6(std::string& why, long long& limit_ms) {
  limit_ms = 30000;
  std::mt19937 rng(20260815);
  for (int t = 0; t < 500; ++t) {
    IntMatrix m = random_matrix(rng, 5, 5);
    std::vector<Int> div = determinant_divisors(m);
    SnfDiagonal want;
    Int prev = 1;
    for (const Int& dk : div) {
      want.diagonal.push_back(dk / prev);
      prev = dk;
    }
    while (want.diagonal.size() < 5) want.diagonal.push_back(0);
    if (snf_naive(m) != want || snf_pivot(m) != want || smith(m) != want) {
      why = "engine disagrees with determinant divisors at case " +
            std::to_string(t);
      return false;
    }
  }
  for (int t = 0; t < 100; ++t) {
    IntMatrix m = random_matrix(rng, 5, 5);
    IntMatrix u = random_unimodular(rng, 5, 15);
    IntMatrix v = random_unimodular(rng, 5, 15);
    if (snf_pivot(matmul(u, matmul(m, v))) != snf_pivot(m)) {
      why = "unimodular invariance fails at case " + std::to_string(t);
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& why, long long&) {
  for (int n = 2; n <= 4; ++n) {
    const int top = n * (n + 1) / 2;
    for (int x = 0; x <= top; ++x)
      if (e3_entry({n, x, 0}) != bottom_row_group(n, x)) {
        why = "bottom row: n=" + std::to_string(n) + ", x=" + std::to_string(x);
        return false;
      }
    for (int y = 0; y < n; ++y)
      if (e3_entry({n, top, y}) != last_column_group(n, n - y)) {
        why = "last column: n=" + std::to_string(n) +
              ", missing=" + std::to_string(y);
        return false;
      }
  }
  return true;
}

bool criterion8(std::string& why, long long&) {
  std::mt19937 rng(271828);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 50; ++t) {
      for (GroupFamily fam : {GroupFamily::SU, GroupFamily::Sp}) {
        E2Element e = random_e2(rng, n);
        E2Element im2 = apply_d2(apply_d2(e, fam), fam);
        if (!components_in_ideal(im2, fam, why)) {
          why = "d2 o d2: " + why;
          return false;
        }
      }
      // Stronger form for SU: normal-form the intermediate page first.
      E2Element e = random_e2(rng, n);
      E2Element mid = reduce_gammas(apply_d2(e, GroupFamily::SU));
      if (!components_in_ideal(apply_d2(mid, GroupFamily::SU), GroupFamily::SU,
                               why)) {
        why = "d2 o d2 after normal forms: " + why;
        return false;
      }
    }

  // SU(3): the d4 generator image is a d2 boundary mod the ideal.
  E2Element boundary =
      apply_d2(e2_scale(1, 0, elementary_symmetric(2, 1)), GroupFamily::SU);
  if (!components_in_ideal(su_higher_diff_image(2, 3) - boundary,
                           GroupFamily::SU, why)) {
    why = "SU(3) d4 congruence: " + why;
    return false;
  }

  // Sp(2): sp_d2_image(2,2) + g1^2 sp_d2_image(2,1) = 4 y1 g1^3 mod the
  // ideal, up to a choice of signs.
  E2Element a = sp_d2_image(2, 2);
  E2Element b = mul_gamma(sp_d2_image(2, 1), make_monomial({2, 0}, 1));
  E2Element target = e2_scale(0, 0b01, make_monomial({3, 0}, 4));
  E2Element zero;
  zero.n = 2;
  bool any = false;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      E2Element lhs = (e1 == 1 ? a : zero - a) + b;
      E2Element rhs = e2 == 1 ? target : zero - target;
      std::string unused;
      if (components_in_ideal(lhs - rhs, GroupFamily::Sp, unused)) any = true;
    }
  if (!any) {
    why = "Sp(2) identity fails for every sign choice";
    return false;
  }
  return true;
}

bool criterion9(std::string& why, long long&) {
  for (int n = 1; n <= 4; ++n) {
    const int maxdeg = n * (n + 1) / 2 + 2;

    std::vector<IntPolynomial> sig, alt;
    for (int l = 1; l <= n + 1; ++l)
      sig.push_back(elementary_symmetric(n + 1, l));
    alt.push_back(elementary_symmetric(n + 1, 1));
    for (const auto& xi : xi_generators(n)) alt.push_back(embed(xi, n + 1));
    if (!ideals_equal_up_to(n + 1, sig, alt, maxdeg)) {
      why = "sigma/xi rewrite fails at n=" + std::to_string(n);
      return false;
    }

    std::vector<IntPolynomial> hs, ph;
    for (int k = 1; k <= n; ++k) {
      hs.push_back(complete_homogeneous(n, k));
      ph.push_back(phi(n, k, k));
    }
    if (!ideals_equal_up_to(n, hs, ph, maxdeg)) {
      why = "h/Phi rewrite fails at n=" + std::to_string(n);
      return false;
    }

    // Variable-elimination chain: replace h_j by its fewer-variable form one
    // generator at a time.
    std::vector<IntPolynomial> chain = hs;
    for (int j = 1; j <= n; ++j) {
      chain[j - 1] = phi(n, j, j);
      if (!ideals_equal_up_to(n, hs, chain, maxdeg)) {
        why = "elimination chain fails at n=" + std::to_string(n) +
              ", step " + std::to_string(j);
        return false;
      }
    }
  }
  return true;
}

bool criterion10(std::string& why, long long&) {
  for (int n = 2; n <= 4; ++n) {
    TorsionTable integral = torsion_table(n);
    for (const TorsionRow& row : integral.rows)
      for (const TorsionCell& c : row.cells) {
        if (!c.known) {
          why = "integral cell over budget at n=" + std::to_string(n);
          return false;
        }
        for (const Int& f : c.group.invariant_factors)
          if (Int(n + 1) % f != 0) {
            why = "factor " + f.str() + " does not divide " +
                  std::to_string(n + 1);
            return false;
          }
      }
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      TorsionTable mod = torsion_table(n, p);
      for (std::size_t r = 0; r < mod.rows.size(); ++r)
        for (std::size_t x = 0; x < mod.rows[r].cells.size(); ++x) {
          std::int64_t count = 0;
          for (const Int& f :
               integral.rows[r].cells[x].group.invariant_factors)
            if (f % Int(p) == 0) ++count;
          if (mod.rows[r].cells[x].multiplicity != count) {
            why = "mod-" + std::to_string(p) + " multiplicity mismatch at n=" +
                  std::to_string(n) + ", row " + std::to_string(r) +
                  ", degree " + std::to_string(x);
            return false;
          }
        }
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool(std::string&, long long&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torsion 2 matches the SU(3)/T^2 table within 1 s", criterion1},
      {2, "torsion 3 matches the SU(4)/T^3 table within 60 s", criterion2},
      {3, "torsion 4 --mod 5 matches the mod-5 table within 10 min",
       criterion3},
      {4, "torsion 4 matches every filled integral SU(5)/T^4 cell",
       criterion4},
      {5, "Mahonian identities for n <= 8 and the alternating sum within 1 s",
       criterion5},
      {6, "SNF engines match determinant divisors on 500 randoms within 30 s",
       criterion6},
      {7, "closed forms equal matrix-derived entries for n = 2,3,4",
       criterion7},
      {8, "differential identities: d2 o d2, SU(3) d4, Sp(2) torsion",
       criterion8},
      {9, "ideal rewrite equalities degreewise to n(n+1)/2 + 2 for n <= 4",
       criterion9},
      {10, "invariant factors divide n+1 and match mod-p multiplicities",
       criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    long long limit_ms = 0;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why, limit_ms);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ok && limit_ms > 0 && ms > limit_ms) {
      ok = false;
      why = "exceeded the " + std::to_string(limit_ms) + " ms budget";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  ("
              << ms << " ms)  " << c.title;
    if (!ok) std::cout << "  -- " << why;
    std::cout << '\n';
    if (!ok) ++failures;
  }
  return failures;
}
