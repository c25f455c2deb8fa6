#include "cherednik/cyclo.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

struct PowerTable {
  int phi = 0;
  // rows[k] = zeta_N^k in the power basis, 0 <= k < N.
  std::vector<std::vector<long>> rows;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<long> compute_cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& div = cyclotomic_coefficients(d);
    std::size_t dd = div.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      long c = num[i];  // divisor is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

const PowerTable& power_table(int n) {
  static std::map<int, std::unique_ptr<PowerTable>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const auto& phi_n = cyclotomic_coefficients(n);
  auto table = std::make_unique<PowerTable>();
  int phi = static_cast<int>(phi_n.size()) - 1;
  table->phi = phi;
  table->rows.reserve(n);
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    table->rows.push_back(cur);
    // multiply by x, reduce modulo the monic Phi_n
    long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * phi_n[i];
  }
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

void add_scaled_power(std::vector<Rational>& acc, const PowerTable& t, long k, const Rational& c) {
  const auto& row = t.rows[static_cast<std::size_t>(k)];
  for (int i = 0; i < t.phi; ++i)
    if (row[i] != 0) acc[i] += c * row[i];
}

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& r) {
  constexpr unsigned long kPrime = 4294967291UL;
  std::size_t n = mpz_fdiv_ui(r.get_num_mpz_t(), kPrime);
  std::size_t d = mpz_fdiv_ui(r.get_den_mpz_t(), kPrime);
  return mix(n * 31 + (mpz_sgn(r.get_num_mpz_t()) < 0), d);
}

}  // namespace

const std::vector<long>& cyclotomic_coefficients(int n) {
  if (n < 1) throw InvalidInput("cyclotomic index must be positive");
  if (n > 2000) throw InvalidInput("cyclotomic index too large");
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<long> coeffs = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<long>>(std::move(coeffs)));
  return *it->second;
}

CycloNum::CycloNum(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw InvalidInput("cyclotomic order must be positive");
  const auto& t = power_table(order);
  if (static_cast<int>(coeffs_.size()) != t.phi) {
    // Accept longer vectors (coefficients of zeta^k for arbitrary k < N).
    if (static_cast<int>(coeffs_.size()) > order)
      throw InvalidInput("too many coefficients for cyclotomic order");
    std::vector<Rational> acc(t.phi, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) add_scaled_power(acc, t, static_cast<long>(k), coeffs_[k]);
    coeffs_ = std::move(acc);
  }
  normalize();
}

CycloNum CycloNum::zeta(int n, long k) {
  if (n < 1) throw InvalidInput("root of unity order must be positive");
  long e = ((k % n) + n) % n;
  const auto& t = power_table(n);
  std::vector<Rational> c(t.phi, Rational(0));
  add_scaled_power(c, t, e, Rational(1));
  return CycloNum(n, std::move(c));
}

CycloNum CycloNum::two_cos(int n, long k) { return zeta(n, k) + zeta(n, -k); }

void CycloNum::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  Rational c0 = coeffs_.empty() ? Rational(0) : coeffs_[0];
  order_ = 1;
  coeffs_ = {c0};
}

bool CycloNum::is_zero() const { return order_ == 1 && coeffs_[0] == 0; }
bool CycloNum::is_one() const { return order_ == 1 && coeffs_[0] == 1; }
bool CycloNum::is_rational() const { return order_ == 1; }

Rational CycloNum::to_rational() const {
  if (order_ != 1) throw InternalError("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

CycloNum CycloNum::lifted(int L) const {
  if (L % order_ != 0) throw InternalError("lift target must be a multiple of the order");
  if (L == order_) return *this;
  const auto& t = power_table(L);
  std::vector<Rational> acc(t.phi, Rational(0));
  long step = L / order_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) add_scaled_power(acc, t, static_cast<long>(k) * step, coeffs_[k]);
  CycloNum out;
  out.order_ = L;
  out.coeffs_ = std::move(acc);
  return out;  // deliberately not normalized: callers want the order-L layout
}

CycloNum CycloNum::reduced() const {
  CycloNum cur = *this;
  bool changed = true;
  while (changed && cur.order_ > 1) {
    changed = false;
    int n = cur.order_;
    if (n % 4 == 2) {
      // zeta_n = -zeta_{n/2}^{(n/2+1)/2}
      int h = n / 2;
      CycloNum z = -zeta(h, (h + 1) / 2);
      CycloNum acc(0), pw(1);
      for (std::size_t k = 0; k < cur.coeffs_.size(); ++k) {
        if (cur.coeffs_[k] != 0) acc += pw * CycloNum(cur.coeffs_[k]);
        pw *= z;
      }
      cur = acc;
      changed = true;
      continue;
    }
    for (int p = 2; p <= n; ++p) {
      if (n % (p * p) != 0) continue;
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      bool supported = true;
      for (std::size_t k = 0; k < cur.coeffs_.size(); ++k)
        if (k % p != 0 && cur.coeffs_[k] != 0) supported = false;
      if (!supported) continue;
      // Phi_n(x) = Phi_{n/p}(x^p): power basis restricts cleanly.
      std::vector<Rational> sub;
      for (std::size_t k = 0; k < cur.coeffs_.size(); k += p) sub.push_back(cur.coeffs_[k]);
      sub.resize(static_cast<std::size_t>(totient(n / p)), Rational(0));
      cur = CycloNum(n / p, std::move(sub));
      changed = true;
      break;
    }
  }
  return cur;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.order_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    normalize();
    return *this;
  }
  int L = static_cast<int>(lcm_i64(order_, o.order_));
  CycloNum a = lifted(L);
  CycloNum b = o.lifted(L);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  return *this = std::move(a);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    normalize();
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  int L = static_cast<int>(lcm_i64(order_, o.order_));
  CycloNum a = lifted(L);
  CycloNum b = o.lifted(L);
  const auto& t = power_table(L);
  std::vector<Rational> acc(t.phi, Rational(0));
  std::vector<Rational> conv(2 * t.phi, Rational(0));
  for (int i = 0; i < t.phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < t.phi; ++j)
      if (b.coeffs_[j] != 0) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (static_cast<int>(k) < t.phi)
      acc[k] += conv[k];
    else
      add_scaled_power(acc, t, static_cast<long>(k) % L, conv[k]);
  }
  order_ = L;
  coeffs_ = std::move(acc);
  normalize();
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inv(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  int L = static_cast<int>(lcm_i64(a.order_, b.order_));
  return a.lifted(L).coeffs_ == b.lifted(L).coeffs_;
}

CycloNum CycloNum::galois(long t) const {
  if (order_ == 1) return *this;
  if (gcd_i64(t, order_) != 1) throw InternalError("galois exponent must be coprime to the order");
  const auto& tab = power_table(order_);
  std::vector<Rational> acc(tab.phi, Rational(0));
  long tt = ((t % order_) + order_) % order_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) add_scaled_power(acc, tab, (static_cast<long>(k) * tt) % order_, coeffs_[k]);
  CycloNum out;
  out.order_ = order_;
  out.coeffs_ = std::move(acc);
  out.normalize();
  return out;
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return CycloNum(Rational(1) / coeffs_[0]);
  // a^{-1} = prod_{t != 1} sigma_t(a) / N(a), N(a) rational.
  CycloNum others(1);
  for (long t = 2; t < order_; ++t)
    if (gcd_i64(t, order_) == 1) others *= galois(t);
  CycloNum norm = others * *this;
  return others * CycloNum(Rational(1) / norm.to_rational());
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    z += coeffs_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::optional<Rational> CycloNum::root_of_unity_angle() const {
  auto z = to_complex();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  long m = order_ % 2 ? 2L * order_ : order_;
  double a = std::arg(z) / (2.0 * std::numbers::pi);
  long k = std::lround(a * static_cast<double>(m));
  k = ((k % m) + m) % m;
  if (zeta(static_cast<int>(m), k) != *this) return std::nullopt;
  return make_rational(k, m);
}

std::size_t CycloNum::hash_at(int L) const {
  std::size_t h = static_cast<std::size_t>(L);
  if (order_ == 1) {
    h = mix(h, hash_rational(coeffs_[0]));
    return h;
  }
  CycloNum lifted_value = lifted(L);
  // keep rationals and order-L values with zero tail hashing identically
  bool tail_zero = true;
  for (std::size_t i = 1; i < lifted_value.coeffs_.size(); ++i)
    if (lifted_value.coeffs_[i] != 0) tail_zero = false;
  h = mix(h, hash_rational(lifted_value.coeffs_[0]));
  if (tail_zero) return h;
  for (std::size_t i = 1; i < lifted_value.coeffs_.size(); ++i)
    h = mix(h, hash_rational(lifted_value.coeffs_[i]) + i);
  return h;
}

std::string CycloNum::str() const {
  if (order_ == 1) return to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string cs = to_string(k == 0 ? c : abs(c));
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0 && k != 0) os << "-";
    if (k == 0) {
      os << cs;
    } else {
      if (abs(c) != 1) os << cs << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace cherednik
