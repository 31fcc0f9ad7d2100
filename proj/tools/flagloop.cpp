#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flagloop/combinatorics.hpp"
#include "flagloop/quotient.hpp"
#include "flagloop/snf.hpp"
#include "flagloop/specseq.hpp"
#include "flagloop/torsion.hpp"

namespace {

using namespace flagloop;

int run_mahonian(int n) {
  const int top = n * (n + 1) / 2;
  for (int k = 0; k <= top; ++k) {
    if (k) std::cout << ' ';
    std::cout << mahonian(n, k);
  }
  std::cout << '\n';
  return 0;
}

int run_basis(int n) {
  QuotientBasis b = quotient_basis(n);
  for (std::size_t d = 0; d < b.by_degree.size(); ++d) {
    std::cout << "degree " << d << ':';
    bool first = true;
    for (const ExponentVector& e : b.by_degree[d]) {
      std::cout << (first ? " " : ", ") << monomial_text(e);
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

std::string column_labels(int n, int x, int y) {
  std::ostringstream os;
  bool first = true;
  for (const IndexTuple& s : subsets_lex(n, y))
    for (const ExponentVector& e : enumerate_multisets(n, x)) {
      if (!first) os << ", ";
      first = false;
      os << "yhat{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
      }
      os << "} " << monomial_text(e);
    }
  return os.str();
}

int run_diffmat(int n, int x, int y, const std::string& family,
                const std::string& out) {
  GroupFamily fam = family == "sp" ? GroupFamily::Sp : GroupFamily::SU;
  IntMatrix m = differential_matrix(PageCoordinate{n, x, y}, fam);
  std::ostringstream os;
  os << "# diffmat n=" << n << " x=" << x << " y=" << y << " family=" << family
     << "\n";
  os << "# columns: " << column_labels(n, x, y) << "\n";
  write_matrix(os, m);
  if (out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << os.str();
  }
  return 0;
}

int run_snf(const std::string& file, const std::string& algo,
            std::uint64_t mod) {
  IntMatrix m = read_matrix_file(file);
  if (mod != 0) {
    ModPRank r = snf_mod_p(m, mod);
    std::cout << "rank " << r.rank << " nullity " << r.nullity << '\n';
    return 0;
  }
  SnfDiagonal d = algo == "naive" ? snf_naive(m) : snf_pivot(m);
  for (std::size_t i = 0; i < d.diagonal.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << d.diagonal[i];
  }
  std::cout << '\n';
  return 0;
}

int run_torsion(int n, std::uint64_t mod, const std::string& format,
                int budget_seconds) {
  std::optional<std::uint64_t> p;
  if (mod != 0) p = mod;
  TorsionTable t =
      torsion_table(n, p, std::chrono::milliseconds(budget_seconds * 1000LL));
  std::cout << (format == "json" ? render_json(t) : render_text(t));
  return 0;
}

int run_check(int n) {
  CrossCheckReport rep = cross_check(n);
  std::cout << "checks " << rep.checks << '\n';
  std::cout << "failures " << rep.failures.size() << '\n';
  for (const std::string& f : rep.failures) std::cout << f << '\n';
  return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral E3-page tables for free loop fibrations of flag "
               "manifolds"};
  app.require_subcommand(1);

  int n = 0, x = 0, y = 0, budget = 300;
  std::string family = "su", out, file, algo = "pivot", format = "text";
  std::uint64_t mod = 0;

  CLI::App* c_mah = app.add_subcommand("mahonian", "Mahonian number row");
  c_mah->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  CLI::App* c_basis = app.add_subcommand("basis", "quotient ring basis");
  c_basis->add_option("n", n)->required()->check(CLI::PositiveNumber);

  CLI::App* c_diff = app.add_subcommand("diffmat", "differential matrix");
  c_diff->add_option("n", n)->required()->check(CLI::PositiveNumber);
  c_diff->add_option("x", x)->required()->check(CLI::NonNegativeNumber);
  c_diff->add_option("y", y)->required()->check(CLI::NonNegativeNumber);
  c_diff->add_option("--family", family)
      ->check(CLI::IsMember({"su", "sp"}));
  c_diff->add_option("--out", out);

  CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form of a file");
  c_snf->add_option("file", file)->required();
  c_snf->add_option("--algo", algo)->check(CLI::IsMember({"naive", "pivot"}));
  c_snf->add_option("--mod", mod)->check(CLI::PositiveNumber);

  CLI::App* c_tor = app.add_subcommand("torsion", "E3 torsion table");
  c_tor->add_option("n", n)->required()->check(CLI::Range(2, 1000));
  c_tor->add_option("--mod", mod)->check(CLI::PositiveNumber);
  c_tor->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  c_tor->add_option("--budget", budget)->check(CLI::PositiveNumber);

  CLI::App* c_check = app.add_subcommand("check", "cross-check closed forms");
  c_check->add_option("n", n)->required()->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_mah->parsed()) return run_mahonian(n);
    if (c_basis->parsed()) return run_basis(n);
    if (c_diff->parsed()) return run_diffmat(n, x, y, family, out);
    if (c_snf->parsed()) return run_snf(file, algo, mod);
    if (c_tor->parsed()) return run_torsion(n, mod, format, budget);
    if (c_check->parsed()) return run_check(n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
