#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affmod {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime_to(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
  }

  /// this / divisor; the divisor must divide this.
  Monomial operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw std::domain_error("monomial does not divide");
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
  }

  // Storage order for term maps (plain lexicographic on the exponent vector).
  // Monomial orders for algorithms live in MonomialOrder.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// Total, multiplicative order on monomials of a fixed ring.
///
/// Lex and grevlex treat variable 0 as the largest. The weighted kind compares
/// the integer weight of each monomial first and breaks ties with grevlex; it
/// is a well-order only when every weight is non-negative.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, {}); }
  static MonomialOrder weighted(std::vector<long> weights) {
    return MonomialOrder(Kind::Weighted, std::move(weights));
  }

  Kind kind() const { return kind_; }
  const std::vector<long>& weights() const { return weights_; }

  bool is_well_order() const {
    if (kind_ != Kind::Weighted) return true;
    return std::all_of(weights_.begin(), weights_.end(), [](long w) { return w >= 0; });
  }

  long long weight(const Monomial& m) const {
    if (weights_.size() != m.size()) throw std::invalid_argument("weight vector length does not match ring");
    long long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long long>(weights_[i]) * m[i];
    return s;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        return a.exponents() <=> b.exponents();
      case Kind::GrevLex:
        return compare_grevlex(a, b);
      case Kind::Weighted: {
        auto wa = weight(a), wb = weight(b);
        if (wa != wb) return wa <=> wb;
        return compare_grevlex(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex:
        return "lex";
      case Kind::GrevLex:
        return "grevlex";
      case Kind::Weighted: {
        std::string s = "weighted(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
        return s + ")";
      }
    }
    return "?";
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::vector<long> weights) : kind_(kind), weights_(std::move(weights)) {}

  static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];  // smaller exponent in the last differing variable wins
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::vector<long> weights_;
};

}  // namespace affmod
