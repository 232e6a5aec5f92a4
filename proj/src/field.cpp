#include "tkklab/field.hpp"

#include <algorithm>
#include <sstream>

namespace tkk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::uint64_t lead_inv = 1;
  {
    std::uint64_t b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = std::uint32_t((a[shift + i] + p - (c * m[i]) % p) % p);
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  Poly f = monic;
  trim(f);
  std::size_t deg = f.empty() ? 0 : f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // all monic polynomials of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(r % p);
        r /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(1), q_(p), modulus_(std::move(modulus)) {
  if (!tkk::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw FieldError("characteristic 2 and 3 are not supported");
  if (p >= (1u << 31)) throw FieldError("characteristic too large");
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  if (modulus_.empty()) {
    k_ = 1;
  } else {
    if (modulus_.back() != 1) throw FieldError("modulus must be monic");
    k_ = std::uint32_t(modulus_.size() - 1);
    if (k_ > 4) throw FieldError("extension degree must be at most 4");
    if (k_ >= 1 && !is_irreducible_mod_p(modulus_, p)) throw FieldError("modulus is reducible over F_p");
  }
  if (k_ == 1) {
    modulus_.clear();
    inv_.assign(0, 0);
    if (p_ <= (1u << 20)) {
      inv_.resize(p_);
      for (std::uint32_t a = 1; a < p_; ++a) inv_[a] = pow(a, p_ - 2);
    }
    return;
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k_; ++i) q *= p;
  if (q > (1u << 16)) throw FieldError("extension field too large");
  q_ = std::uint32_t(q);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(a);
    std::vector<long long> nd(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) nd[i] = -static_cast<long long>(d[i]);
    neg_[a] = from_digits(nd);
  }
  if (std::uint64_t(q_) * q_ <= (1u << 23)) {
    add_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) add_[std::size_t(a) * q_ + b] = std::uint16_t(add_digits(a, b));
  }
  // primitive element for log/exp tables
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t n = q_ - 1;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_factors.push_back(n);
  }
  auto slow_pow = [&](value_type a, std::uint64_t e) {
    value_type r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  value_type gen = 0;
  for (value_type g = 2; g < q_; ++g) {
    bool ok = true;
    for (auto r : prime_factors)
      if (slow_pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen == 0) throw FieldError("no primitive element found");
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  value_type x = 1;
  for (std::uint32_t e = 0; e + 1 < q_; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = poly_mul(x, gen);
  }
  inv_.resize(q_);
  inv_[0] = 0;
  for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::vector<std::uint32_t> FiniteField::digits(value_type a) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::value_type FiniteField::from_digits(const std::vector<long long>& d) const {
  if (d.size() > k_) throw FieldError("too many coefficients for field element");
  value_type r = 0, scale = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    long long c = d[i] % static_cast<long long>(p_);
    if (c < 0) c += p_;
    r += value_type(c) * scale;
    scale *= p_;
  }
  return r;
}

FiniteField::value_type FiniteField::add_digits(value_type a, value_type b) const {
  value_type r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::value_type FiniteField::poly_mul(value_type a, value_type b) const {
  auto da = digits(a), db = digits(b);
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
  Poly r = poly_mod(prod, modulus_, p_);
  std::vector<long long> d(r.begin(), r.end());
  return from_digits(d);
}

FiniteField::value_type FiniteField::from_int(long long n) const {
  long long c = n % static_cast<long long>(p_);
  if (c < 0) c += p_;
  return value_type(c);
}

FiniteField::value_type FiniteField::from_rational(long long num, long long den) const {
  value_type d = from_int(den);
  if (d == 0) throw FieldError("denominator vanishes in characteristic " + std::to_string(p_));
  return mul(from_int(num), inv(d));
}

FiniteField::value_type FiniteField::pow(value_type a, std::uint64_t e) const {
  value_type r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::to_string(value_type a) const {
  if (k_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string FiniteField::describe() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  std::ostringstream os;
  os << "F_" << q_ << " = F_" << p_ << "[t]/(";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace tkk
