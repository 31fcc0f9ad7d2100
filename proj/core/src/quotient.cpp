#include "flagloop/quotient.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace flagloop {

StaircaseRing::StaircaseRing(int num_vars, std::vector<int> caps)
    : n_(num_vars), caps_(std::move(caps)) {
  if (n_ < 1 || static_cast<int>(caps_.size()) != n_)
    throw std::invalid_argument("StaircaseRing: caps must match variable count");
  rewrite_.reserve(n_);
  for (int v = 1; v <= n_; ++v) {
    int c = caps_[v - 1];
    if (c < 0) throw std::invalid_argument("StaircaseRing: negative cap");
    IntPolynomial h = embed(complete_homogeneous(v, c + 1), n_);
    ExponentVector lead(n_, 0);
    lead[v - 1] = c + 1;
    add_term(h, lead, Int(-1));
    rewrite_.push_back(-h);
  }
}

int StaircaseRing::top_degree() const {
  int d = 0;
  for (int c : caps_) d += c;
  return d;
}

const std::map<ExponentVector, Int>& StaircaseRing::reduce_monomial(
    const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("reduce_monomial: arity mismatch");
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
  }
  // Rewrite the highest violating variable; its exponent strictly drops and
  // only earlier variables gain exponent, so this terminates.
  int v = -1;
  for (int i = n_ - 1; i >= 0; --i)
    if (e[i] > caps_[i]) {
      v = i;
      break;
    }
  std::map<ExponentVector, Int> out;
  if (v < 0) {
    out.emplace(e, Int(1));
  } else {
    ExponentVector rem = e;
    rem[v] -= caps_[v] + 1;
    ExponentVector ne(n_);
    for (const auto& [me, mc] : rewrite_[v].terms) {
      for (int i = 0; i < n_; ++i) ne[i] = rem[i] + me[i];
      for (const auto& [be, bc] : reduce_monomial(ne)) {
        Int& slot = out[be];
        slot += mc * bc;
        if (slot == 0) out.erase(be);
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  return cache_.emplace(e, std::move(out)).first->second;
}

QuotientElement StaircaseRing::reduce(const IntPolynomial& p) const {
  if (p.num_vars != n_)
    throw std::invalid_argument("reduce: arity mismatch");
  QuotientElement q;
  for (const auto& [e, c] : p.terms)
    for (const auto& [be, bc] : reduce_monomial(e)) {
      Int& slot = q.basis_coefficients[be];
      slot += c * bc;
      if (slot == 0) q.basis_coefficients.erase(be);
    }
  return q;
}

IntPolynomial StaircaseRing::reconstruct(const QuotientElement& q) const {
  IntPolynomial p;
  p.num_vars = n_;
  for (const auto& [e, c] : q.basis_coefficients) p.terms.emplace(e, c);
  return p;
}

namespace {

const StaircaseRing& cached_ring(int n, int top_cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<StaircaseRing>> cache;
  if (n < 1) throw std::invalid_argument("ring: need n >= 1");
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[{n, top_cap}];
  if (!slot) {
    std::vector<int> caps(n);
    for (int i = 0; i < n; ++i) caps[i] = top_cap - i;
    slot = std::make_unique<StaircaseRing>(n, std::move(caps));
  }
  return *slot;
}

}  // namespace

const StaircaseRing& flag_ring(int n) { return cached_ring(n, n - 1); }

const StaircaseRing& su_ring(int n) { return cached_ring(n, n); }

QuotientBasis quotient_basis(int n) {
  const StaircaseRing& ring = flag_ring(n);
  QuotientBasis b;
  b.n = n;
  b.by_degree.resize(ring.top_degree() + 1);
  for (int d = 0; d <= ring.top_degree(); ++d)
    for (ExponentVector& e : enumerate_multisets(n, d)) {
      bool in = true;
      for (int i = 0; i < n && in; ++i) in = e[i] <= ring.caps()[i];
      if (in) b.by_degree[d].push_back(std::move(e));
    }
  return b;
}

QuotientElement reduce(const IntPolynomial& p, int n) {
  return flag_ring(n).reduce(p);
}

bool zero_criterion(const ExponentVector& monomial, int n) {
  if (static_cast<int>(monomial.size()) != n)
    throw std::invalid_argument("zero_criterion: arity mismatch");
  ExponentVector d = monomial;
  std::sort(d.rbegin(), d.rend());
  std::int64_t sum = 0, cap = 0;
  for (int k = 1; k <= n; ++k) {
    sum += d[k - 1];
    cap += n + 1 - k;
    if (sum > cap) return true;
  }
  return false;
}

ExponentVector top_class(int n) {
  ExponentVector e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return e;
}

ExponentVector top_class_missing_one(int i, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("top_class_missing_one: index out of range");
  ExponentVector e = top_class(n);
  --e[i - 1];
  return e;
}

int top_class_product(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("top_class_product: index out of range");
  if (j == i) return 1;
  if (j == i + 1) return -1;
  return 0;
}

std::vector<std::int64_t> poincare_counts(int n) {
  QuotientBasis b = quotient_basis(n);
  std::vector<std::int64_t> out;
  out.reserve(b.by_degree.size());
  for (const auto& level : b.by_degree)
    out.push_back(static_cast<std::int64_t>(level.size()));
  return out;
}

}  // namespace flagloop
