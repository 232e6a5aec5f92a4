#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tkklab/exactlin.hpp"

namespace tkk {

struct Check {
  std::string name;
  bool pass = true;
  std::uint64_t evaluated = 0;
  std::string witness;
  std::string note;

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}
  // Records the first failure only.
  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
  void require(bool ok, const std::string& w) {
    ++evaluated;
    if (!ok) fail(w);
  }
};

struct Report {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  std::string format() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.evaluated << " evaluated)";
      if (!c.note.empty()) os << " [" << c.note << "]";
      os << "\n";
      if (!c.pass) os << "  witness: " << c.witness << "\n";
    }
    return os.str();
  }
};

using Rng = std::mt19937_64;

template <class K>
Scalar<K> random_scalar(const K& k, Rng& rng) {
  if constexpr (K::is_finite) {
    std::uniform_int_distribution<std::uint32_t> d(0, k.order() - 1);
    return k.element(d(rng));
  } else {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    int n = num(rng);
    int dd = den(rng);
    return k.from_rational(n, dd);
  }
}

template <class K>
Scalar<K> random_nonzero_scalar(const K& k, Rng& rng) {
  while (true) {
    auto x = random_scalar(k, rng);
    if (!k.is_zero(x)) return x;
  }
}

template <class K>
Vec<K> random_vector(const K& k, std::size_t n, Rng& rng) {
  Vec<K> v(n);
  for (auto& x : v) x = random_scalar(k, rng);
  return v;
}

}  // namespace tkk
