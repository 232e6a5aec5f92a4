#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkk {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite field F_q, q = p^k with k <= 4. Elements are encoded as integers in
// [0, q): the base-p digits are the coefficients of 1, t, t^2, ... where t is
// a root of the monic modulus.
class FiniteField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_finite = true;

  explicit FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus = {});

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime() const { return k_ == 1; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }

  value_type add(value_type a, value_type b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
    return add_digits(a, b);
  }
  value_type neg(value_type a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (k_ == 1) return value_type((std::uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("division by zero in finite field");
    if (inv_.empty()) return pow(a, p_ - 2);
    return inv_[a];
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(long long n) const;
  value_type from_rational(long long num, long long den) const;
  // Digits of the element, low degree first.
  std::vector<std::uint32_t> digits(value_type a) const;
  value_type from_digits(const std::vector<long long>& d) const;

  value_type element(std::uint32_t index) const { return index; }
  std::uint32_t index(value_type a) const { return a; }
  int compare(value_type a, value_type b) const { return a < b ? -1 : (a > b ? 1 : 0); }
  std::size_t hash(value_type a) const { return a; }
  std::string to_string(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  // Frobenius x -> x^p.
  value_type frobenius(value_type a) const { return pow(a, p_); }
  std::string describe() const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint32_t> neg_, inv_, log_, exp_;

  value_type add_digits(value_type a, value_type b) const;
  value_type poly_mul(value_type a, value_type b) const;
};

class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_finite = false;

  std::uint32_t characteristic() const { return 0; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }
  value_type from_int(long long n) const { return mpq_class(mpz_class(std::to_string(n))); }
  value_type from_rational(long long num, long long den) const {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return r;
  }
  value_type from_string(const std::string& s) const {
    mpq_class r(s);
    r.canonicalize();
    return r;
  }
  int compare(const value_type& a, const value_type& b) const { return cmp(a, b); }
  std::size_t hash(const value_type& a) const { return std::hash<std::string>{}(a.get_str()); }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string describe() const { return "Q"; }
};

bool is_prime(std::uint64_t n);
// Monic irreducibility over F_p by exhaustive search for factors of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace tkk
