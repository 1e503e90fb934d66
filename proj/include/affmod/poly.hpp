#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affmod/errors.hpp"
#include "affmod/field.hpp"
#include "affmod/monomial.hpp"

namespace affmod {

inline constexpr std::size_t kMaxVariables = 8;

/// Coefficient field plus an ordered list of variable names.
template <class Field>
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxVariables)
      throw std::invalid_argument("a ring needs between 1 and 8 variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
        throw std::invalid_argument("bad variable name '" + n + "'");
      for (char c : n)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw std::invalid_argument("bad variable name '" + n + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == n) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  bool operator==(const PolyRing& other) const { return field_ == other.field_ && names_ == other.names_; }

 private:
  Field field_;
  std::vector<std::string> names_;
};

template <class Field>
using RingPtr = std::shared_ptr<const PolyRing<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing<Field>>(std::move(field), std::move(names));
}

inline RingPtr<RationalField> rational_ring(std::vector<std::string> names) {
  return make_ring(RationalField{}, std::move(names));
}

template <class Field>
bool same_ring(const RingPtr<Field>& a, const RingPtr<Field>& b) {
  return a == b || (a && b && *a == *b);
}

/// Sparse polynomial: a map from exponent vectors to nonzero coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
template <class Field>
class Poly {
 public:
  using Element = typename Field::Element;
  using TermMap = std::map<Monomial, Element>;

  explicit Poly(RingPtr<Field> ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr<Field> ring, const Element& c) {
    Poly p(std::move(ring));
    p.add_term(Monomial(p.ring_->nvars()), c);
    return p;
  }
  static Poly from_int(RingPtr<Field> ring, long c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), e);
  }
  static Poly variable(RingPtr<Field> ring, std::size_t index, Monomial::Exponent power = 1) {
    Poly p(ring);
    p.add_term(Monomial::variable(ring->nvars(), index, power), ring->field().one());
    return p;
  }
  static Poly variable(RingPtr<Field> ring, std::string_view name, Monomial::Exponent power = 1) {
    auto i = ring->require_index(name);
    return variable(std::move(ring), i, power);
  }
  static Poly term(RingPtr<Field> ring, Monomial m, const Element& c) {
    if (m.size() != ring->nvars()) throw std::invalid_argument("monomial length does not match ring");
    Poly p(std::move(ring));
    p.add_term(m, c);
    return p;
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field().zero() : it->second;
  }
  Element constant_term() const { return coefficient(Monomial(ring_->nvars())); }

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Element& c) {
    const auto& f = field();
    if (f.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& q) {
    require_same(q);
    if (&q == this) return *this = scaled(field().from_int(2));
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& q) {
    require_same(q);
    if (&q == this) return *this = Poly(ring_);
    for (const auto& [m, c] : q.terms_) add_term(m, field().neg(c));
    return *this;
  }
  Poly operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field().neg(c));
    return r;
  }
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }

  friend Poly operator*(const Poly& p, const Poly& q) {
    p.require_same(q);
    Poly r(p.ring_);
    const auto& f = p.field();
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, f.mul(c1, c2));
    return r;
  }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  Poly scaled(const Element& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, field().mul(a, c));
    return r;
  }
  Poly times_monomial(const Monomial& m, const Element& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    for (const auto& [mm, a] : terms_) r.terms_.emplace(mm * m, field().mul(a, c));
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result = from_int(ring_, 1), base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Highest exponent of variable v; -1 for the zero polynomial.
  long degree_in(std::size_t v) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m[v]);
    return d;
  }
  long total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.total_degree()));
    return d;
  }
  bool uses_variable(std::size_t v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
  }
  std::vector<std::size_t> variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
      if (uses_variable(v)) out.push_back(v);
    return out;
  }

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient_of(std::size_t v, Monomial::Exponent k) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[v] != k) continue;
      auto exps = m.exponents();
      exps[v] = 0;
      r.terms_.emplace(Monomial(std::move(exps)), c);
    }
    return r;
  }

  Poly derivative(std::size_t v) const {
    Poly r(ring_);
    const auto& f = field();
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      auto exps = m.exponents();
      auto e = exps[v]--;
      r.add_term(Monomial(std::move(exps)), f.mul(c, f.from_int(static_cast<long>(e))));
    }
    return r;
  }

  /// Scales so the coefficient of the given monomial is one.
  Poly made_monic_at(const Monomial& m) const {
    auto c = coefficient(m);
    return scaled(field().inv(c));
  }

  friend bool operator==(const Poly& p, const Poly& q) {
    return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
  }

 private:
  void require_same(const Poly& q) const {
    if (!same_ring(ring_, q.ring_)) throw RingMismatch();
  }

  RingPtr<Field> ring_;
  TermMap terms_;
};

template <class Field>
Poly<Field> add(const Poly<Field>& p, const Poly<Field>& q) {
  return p + q;
}

template <class Field>
Poly<Field> mul(const Poly<Field>& p, const Poly<Field>& q) {
  return p * q;
}

template <class Field>
void require_same_ring(const Poly<Field>& p, const Poly<Field>& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
}

/// Simultaneous substitution. Every bound name must be a variable of p's
/// ring. Images share one target ring; unbound variables map to the variable
/// of the same name in the target ring.
template <class Field>
Poly<Field> substitute(const Poly<Field>& p, const std::map<std::string, Poly<Field>>& bindings,
                       RingPtr<Field> target = nullptr) {
  const auto& src = *p.ring();
  for (const auto& [name, image] : bindings) {
    src.require_index(name);
    if (!target) target = image.ring();
    if (!same_ring(target, image.ring())) throw RingMismatch();
  }
  if (!target) return p;

  std::vector<Poly<Field>> images;
  images.reserve(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = bindings.find(src.name(i));
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (p.uses_variable(i)) {
      images.push_back(Poly<Field>::variable(target, target->require_index(src.name(i))));
    } else {
      images.push_back(Poly<Field>(target));
    }
  }

  // power cache per variable
  std::vector<std::vector<Poly<Field>>> powers(src.nvars());
  auto power_of = [&](std::size_t i, Monomial::Exponent e) -> const Poly<Field>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly<Field>::from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Poly<Field> result(target);
  for (const auto& [m, c] : p.terms()) {
    auto term = Poly<Field>::constant(target, c);
    for (std::size_t i = 0; i < src.nvars(); ++i)
      if (m[i] != 0) term *= power_of(i, m[i]);
    result += term;
  }
  return result;
}

/// Order-maximal term of a nonzero polynomial.
template <class Field>
std::pair<Monomial, typename Field::Element> leading_term(const Poly<Field>& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

template <class Field>
Monomial leading_monomial(const Poly<Field>& p, const MonomialOrder& ord) {
  return leading_term(p, ord).first;
}

template <class Field>
Poly<Field> make_monic(const Poly<Field>& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  return p.scaled(p.field().inv(leading_term(p, ord).second));
}

/// Value of p at a point of k^n.
template <class Field>
typename Field::Element evaluate(const Poly<Field>& p, const std::vector<typename Field::Element>& point) {
  const auto& f = p.field();
  if (point.size() != p.ring()->nvars()) throw std::invalid_argument("point dimension does not match ring");
  auto sum = f.zero();
  for (const auto& [m, c] : p.terms()) {
    auto term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Monomial::Exponent k = 0; k < m[i]; ++k) term = f.mul(term, point[i]);
    sum = f.add(sum, term);
  }
  return sum;
}

}  // namespace affmod
