#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "affmod/poly.hpp"

namespace affmod {

/// A polynomial ring with a declared finite set of inverted elements,
/// e.g. k[x, y] with t = x^n y - 1 inverted.
template <class Field>
class Localization {
 public:
  Localization(RingPtr<Field> ring, std::vector<Poly<Field>> inverted)
      : ring_(std::move(ring)), inverted_(std::move(inverted)) {
    for (const auto& d : inverted_) {
      if (!same_ring(ring_, d.ring())) throw RingMismatch();
      if (d.is_zero()) throw std::domain_error("cannot invert the zero polynomial");
    }
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<Poly<Field>>& inverted() const { return inverted_; }

 private:
  RingPtr<Field> ring_;
  std::vector<Poly<Field>> inverted_;
};

template <class Field>
using LocalizationPtr = std::shared_ptr<const Localization<Field>>;

/// numerator / prod(inverted[i]^powers[i]).
template <class Field>
class LocalizedFraction {
 public:
  using P = Poly<Field>;

  LocalizedFraction(LocalizationPtr<Field> loc, P numerator, std::vector<unsigned> powers = {})
      : loc_(std::move(loc)), numerator_(std::move(numerator)), powers_(std::move(powers)) {
    if (powers_.size() > loc_->inverted().size()) throw std::invalid_argument("denominator names an undeclared element");
    powers_.resize(loc_->inverted().size(), 0);
    if (!same_ring(loc_->ring(), numerator_.ring())) throw RingMismatch();
  }

  static LocalizedFraction element(LocalizationPtr<Field> loc, P p) { return LocalizedFraction(std::move(loc), std::move(p)); }

  /// 1 / inverted[i]^power
  static LocalizedFraction inverse(LocalizationPtr<Field> loc, std::size_t i, unsigned power = 1) {
    if (i >= loc->inverted().size()) throw std::invalid_argument("denominator names an undeclared element");
    std::vector<unsigned> pw(loc->inverted().size(), 0);
    pw[i] = power;
    auto one = P::from_int(loc->ring(), 1);
    return LocalizedFraction(std::move(loc), std::move(one), std::move(pw));
  }

  const LocalizationPtr<Field>& localization() const { return loc_; }
  const P& numerator() const { return numerator_; }
  const std::vector<unsigned>& powers() const { return powers_; }

  P denominator() const {
    P d = P::from_int(loc_->ring(), 1);
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if (powers_[i]) d *= loc_->inverted()[i].pow(powers_[i]);
    return d;
  }

  friend LocalizedFraction operator*(const LocalizedFraction& a, const LocalizedFraction& b) {
    a.require_same(b);
    std::vector<unsigned> pw(a.powers_);
    for (std::size_t i = 0; i < pw.size(); ++i) pw[i] += b.powers_[i];
    return LocalizedFraction(a.loc_, a.numerator_ * b.numerator_, std::move(pw));
  }

  friend LocalizedFraction operator+(const LocalizedFraction& a, const LocalizedFraction& b) {
    a.require_same(b);
    std::vector<unsigned> pw(a.powers_.size());
    P na = a.numerator_, nb = b.numerator_;
    const auto& inv = a.loc_->inverted();
    for (std::size_t i = 0; i < pw.size(); ++i) {
      pw[i] = std::max(a.powers_[i], b.powers_[i]);
      if (pw[i] > a.powers_[i]) na *= inv[i].pow(pw[i] - a.powers_[i]);
      if (pw[i] > b.powers_[i]) nb *= inv[i].pow(pw[i] - b.powers_[i]);
    }
    return LocalizedFraction(a.loc_, na + nb, std::move(pw));
  }

  LocalizedFraction operator-() const { return LocalizedFraction(loc_, -numerator_, powers_); }
  friend LocalizedFraction operator-(const LocalizedFraction& a, const LocalizedFraction& b) { return a + (-b); }

  bool is_zero() const { return numerator_.is_zero(); }

  /// Equality in the localization (cross multiplication; the base is a domain).
  friend bool operator==(const LocalizedFraction& a, const LocalizedFraction& b) {
    a.require_same(b);
    return a.numerator_ * b.denominator() == b.numerator_ * a.denominator();
  }

 private:
  void require_same(const LocalizedFraction& other) const {
    if (loc_ != other.loc_ && !(same_ring(loc_->ring(), other.loc_->ring()) &&
                                loc_->inverted() == other.loc_->inverted()))
      throw std::invalid_argument("fractions live in different localizations");
  }

  LocalizationPtr<Field> loc_;
  P numerator_;
  std::vector<unsigned> powers_;
};

}  // namespace affmod
