#pragma once

// Univariate gcd / squarefree machinery on MultiPoly values that happen to
// involve a single variable, and the linear-in-one-variable decomposition
// p = g * (c' v + d') used to read off components of plane curves.

#include <optional>
#include <string>
#include <vector>

#include "affmod/poly.hpp"

namespace affmod {

namespace dense {

template <class Field>
using Coeffs = std::vector<typename Field::Element>;  // index = exponent

template <class Field>
void trim(const Field& f, Coeffs<Field>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

/// a = q*b + r with deg r < deg b; b nonzero.
template <class Field>
std::pair<Coeffs<Field>, Coeffs<Field>> divmod(const Field& f, Coeffs<Field> a, const Coeffs<Field>& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  Coeffs<Field> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    auto shift = a.size() - b.size();
    auto c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    a.pop_back();
    trim(f, a);
  }
  trim(f, q);
  return {q, a};
}

template <class Field>
Coeffs<Field> monic(const Field& f, Coeffs<Field> a) {
  if (a.empty()) return a;
  auto inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

/// Euclidean remainder sequence; monic result, empty only if both are zero.
template <class Field>
Coeffs<Field> gcd(const Field& f, Coeffs<Field> a, Coeffs<Field> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

template <class Field>
Coeffs<Field> derivative(const Field& f, const Coeffs<Field>& a) {
  Coeffs<Field> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(a[i], f.from_int(static_cast<long>(i))));
  trim(f, d);
  return d;
}

template <class Field>
Coeffs<Field> multiply(const Field& f, const Coeffs<Field>& a, const Coeffs<Field>& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<Field> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(f, r);
  return r;
}

}  // namespace dense

/// True when every term of p involves no variable other than v.
template <class Field>
bool is_univariate_in(const Poly<Field>& p, std::size_t v) {
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != v && m[i] != 0) return false;
  return true;
}

template <class Field>
dense::Coeffs<Field> to_dense(const Poly<Field>& p, std::size_t v) {
  if (!is_univariate_in(p, v))
    throw std::invalid_argument("polynomial is not univariate in " + p.ring()->name(v));
  const auto& f = p.field();
  dense::Coeffs<Field> out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree_in(v)) + 1, f.zero());
  for (const auto& [m, c] : p.terms()) out[m[v]] = c;
  return out;
}

template <class Field>
Poly<Field> from_dense(const RingPtr<Field>& ring, std::size_t v, const dense::Coeffs<Field>& a) {
  Poly<Field> p(ring);
  for (std::size_t i = 0; i < a.size(); ++i) p.add_term(Monomial::variable(ring->nvars(), v, static_cast<Monomial::Exponent>(i)), a[i]);
  return p;
}

/// Monic gcd of two polynomials univariate in v.
template <class Field>
Poly<Field> gcd_univariate(const Poly<Field>& p, const Poly<Field>& q, std::size_t v) {
  require_same_ring(p, q);
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  auto g = dense::gcd(p.field(), to_dense(p, v), to_dense(q, v));
  return from_dense(p.ring(), v, g);
}

/// Product of the distinct irreducible factors of p (monic): p / gcd(p, p').
///
/// In characteristic ℓ > 0 the formula misses factors whose multiplicity is
/// divisible by ℓ; that case is detected (p must divide sfp^deg p) and reported
/// as UnreliableCharacteristic instead of returning a wrong radical.
template <class Field>
Poly<Field> squarefree_part(const Poly<Field>& p, std::size_t v) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  const auto& f = p.field();
  auto a = to_dense(p, v);
  auto g = dense::gcd(f, a, dense::derivative(f, a));
  auto s = dense::monic(f, dense::divmod(f, a, g).first);
  if (f.characteristic() != 0 && a.size() > 1) {
    dense::Coeffs<Field> acc{f.one()};
    for (std::size_t i = 0; i + 1 < a.size(); ++i) acc = dense::multiply(f, acc, s);
    if (!dense::divmod(f, acc, a).second.empty())
      throw UnreliableCharacteristic("squarefree part not determined in characteristic " +
                                     std::to_string(f.characteristic()));
  }
  return from_dense(p.ring(), v, s);
}

/// Number of distinct roots of p over the algebraic closure.
template <class Field>
std::size_t distinct_root_count(const Poly<Field>& p, std::size_t v) {
  auto s = squarefree_part(p, v);
  return static_cast<std::size_t>(s.degree_in(v));
}

/// The single variable a polynomial involves; nullopt for constants, and
/// throws if there are several.
template <class Field>
std::optional<std::size_t> sole_variable(const Poly<Field>& p) {
  auto used = p.variables_used();
  if (used.empty()) return std::nullopt;
  if (used.size() > 1) throw std::invalid_argument("polynomial involves more than one variable");
  return used.front();
}

template <class Field>
std::optional<Poly<Field>> exact_univariate_quotient(const Poly<Field>& a, const Poly<Field>& b, std::size_t v) {
  const auto& f = a.field();
  auto [q, r] = dense::divmod(f, to_dense(a, v), to_dense(b, v));
  if (!r.empty()) return std::nullopt;
  return from_dense(a.ring(), v, q);
}

/// p = common * (c_prime * v + d_prime) with gcd(c_prime, d_prime) = 1.
template <class Field>
struct LinearDecomposition {
  std::size_t variable;
  Poly<Field> common;
  Poly<Field> c_prime;
  Poly<Field> d_prime;
  /// Variable the coefficients live in; nullopt when they are all constants.
  std::optional<std::size_t> coefficient_variable;

  Poly<Field> reconstruct() const {
    auto v = Poly<Field>::variable(common.ring(), variable);
    return common * (c_prime * v + d_prime);
  }
};

/// Splits p, of degree at most 1 in v, as g * (c' v + d') where g is the
/// monic gcd of the two v-coefficients. Both coefficients must be univariate
/// in one shared variable (or constant).
template <class Field>
LinearDecomposition<Field> linear_decompose(const Poly<Field>& p, std::size_t v) {
  if (p.is_zero()) throw DecompositionError("cannot decompose the zero polynomial");
  if (p.degree_in(v) > 1) throw DecompositionError("polynomial is not linear in " + p.ring()->name(v));
  auto c = p.coefficient_of(v, 1);
  auto d = p.coefficient_of(v, 0);

  std::optional<std::size_t> w;
  for (const auto* part : {&c, &d}) {
    for (auto i : part->variables_used()) {
      if (w && *w != i) throw DecompositionError("coefficients are not univariate in a single variable");
      w = i;
    }
  }
  // all-constant coefficients are univariate in any variable
  std::size_t wv = w ? *w : v;
  auto g = gcd_univariate(c, d, wv);
  auto c_prime = *exact_univariate_quotient(c, g, wv);
  auto d_prime = *exact_univariate_quotient(d, g, wv);
  return {v, std::move(g), std::move(c_prime), std::move(d_prime), w};
}

}  // namespace affmod
