#pragma once

// Classification of plane curves f(a, b) = 0 that are linear in one
// coordinate, and the fibers of x, u, y on V_n = Spec k[x, y, u]/(u(x^n y - 1) - (x - 1)).

#include <algorithm>
#include <string>
#include <vector>

#include "affmod/division.hpp"
#include "affmod/poly.hpp"
#include "affmod/univariate.hpp"

namespace affmod {

/// Isomorphism type of a reduced affine curve, or of a union of components.
class CurveClass {
 public:
  enum class Kind { Empty, Point, AffineLine, PuncturedLine, Union, Unknown };

  static CurveClass empty() { return CurveClass(Kind::Empty); }
  static CurveClass point() { return CurveClass(Kind::Point); }
  static CurveClass affine_line() { return CurveClass(Kind::AffineLine); }
  /// The affine line with r points removed; r = 0 is the affine line itself.
  static CurveClass punctured_line(std::size_t r) {
    if (r == 0) return affine_line();
    CurveClass c(Kind::PuncturedLine);
    c.punctures_ = r;
    return c;
  }
  static CurveClass unknown(std::string reason) {
    CurveClass c(Kind::Unknown);
    c.reason_ = std::move(reason);
    return c;
  }
  /// Flattened, sorted; a single component collapses, no components is Empty,
  /// and any Unknown component makes the whole union Unknown.
  static CurveClass union_of(const std::vector<CurveClass>& parts) {
    std::vector<CurveClass> flat;
    for (const auto& p : parts) {
      if (p.kind_ == Kind::Unknown) return p;
      if (p.kind_ == Kind::Empty) continue;
      if (p.kind_ == Kind::Union)
        flat.insert(flat.end(), p.components_.begin(), p.components_.end());
      else
        flat.push_back(p);
    }
    if (flat.empty()) return empty();
    if (flat.size() == 1) return flat.front();
    std::sort(flat.begin(), flat.end(), [](const CurveClass& a, const CurveClass& b) { return a.sort_key() < b.sort_key(); });
    CurveClass c(Kind::Union);
    c.components_ = std::move(flat);
    return c;
  }

  Kind kind() const { return kind_; }
  std::size_t punctures() const { return punctures_; }
  const std::vector<CurveClass>& components() const { return components_; }
  const std::string& reason() const { return reason_; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Empty: return "Empty";
      case Kind::Point: return "Point";
      case Kind::AffineLine: return "AffineLine";
      case Kind::PuncturedLine: return "PuncturedLine(" + std::to_string(punctures_) + ")";
      case Kind::Unknown: return "Unknown(" + reason_ + ")";
      case Kind::Union: {
        std::string s = "Union{";
        for (std::size_t i = 0; i < components_.size(); ++i) s += (i ? ", " : "") + components_[i].to_string();
        return s + "}";
      }
    }
    return "?";
  }

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.kind_ == b.kind_ && a.punctures_ == b.punctures_ && a.components_ == b.components_ &&
           a.reason_ == b.reason_;
  }

 private:
  explicit CurveClass(Kind k) : kind_(k) {}
  std::pair<int, std::size_t> sort_key() const { return {static_cast<int>(kind_), punctures_}; }

  Kind kind_;
  std::size_t punctures_ = 0;
  std::vector<CurveClass> components_;
  std::string reason_;
};

namespace detail {

/// Each distinct root of a univariate polynomial gives one line in the plane.
template <class Field>
CurveClass lines_from_roots(const Poly<Field>& g, std::size_t w) {
  if (g.is_constant()) return CurveClass::empty();
  std::vector<CurveClass> lines(distinct_root_count(g, w), CurveClass::affine_line());
  return CurveClass::union_of(lines);
}

}  // namespace detail

/// Classifies the plane curve p = 0 in Spec k[a, b] (p's ring must have
/// exactly two variables).
///
/// p is split as g(w) * (c'(w) v + d'(w)) for a variable v of degree one:
/// every distinct root of g is a line, and the residual is the graph of
/// -d'/c' over the w-line minus the roots of c'. Components are counted
/// set-theoretically.
template <class Field>
CurveClass classify_curve(const Poly<Field>& p) {
  if (p.ring()->nvars() != 2) return CurveClass::unknown("curve must live in a two-variable ring");
  if (p.is_zero()) return CurveClass::unknown("zero polynomial defines the whole plane");
  if (p.is_constant()) return CurveClass::empty();

  try {
    auto used = p.variables_used();
    if (used.size() == 1) return detail::lines_from_roots(p, used.front());

    std::optional<std::size_t> v;
    long best = 0;
    for (std::size_t cand = 0; cand < 2; ++cand) {
      if (p.degree_in(cand) != 1) continue;
      long lead_deg = p.coefficient_of(cand, 1).total_degree();
      if (!v || lead_deg < best) {
        v = cand;
        best = lead_deg;
      }
    }
    if (!v) return CurveClass::unknown("no variable occurs linearly");

    std::size_t w = 1 - *v;
    auto dec = linear_decompose(p, *v);
    std::vector<CurveClass> parts{detail::lines_from_roots(dec.common, w)};
    if (dec.d_prime.is_zero())
      parts.push_back(CurveClass::affine_line());  // c' is a unit: the line v = 0
    else
      parts.push_back(dec.c_prime.is_constant() ? CurveClass::affine_line()
                                                : CurveClass::punctured_line(distinct_root_count(dec.c_prime, w)));
    return CurveClass::union_of(parts);
  } catch (const UnreliableCharacteristic& e) {
    return CurveClass::unknown(e.what());
  } catch (const DecompositionError& e) {
    return CurveClass::unknown(e.what());
  }
}

/// True when p is linear in some variable with coprime coefficients and no
/// common factor: c' v + d' with gcd = 1 is irreducible over any field.
/// Coprimality is shown either by a univariate gcd or by one coefficient
/// being certified irreducible and not dividing the other.
template <class Field>
bool is_certified_irreducible(const Poly<Field>& p) {
  if (p.is_constant()) return false;
  auto used = p.variables_used();
  if (used.size() == 1) {
    // over the closure a univariate polynomial is irreducible iff it has degree one
    return p.degree_in(used.front()) == 1;
  }
  for (std::size_t v : used) {
    if (p.degree_in(v) != 1) continue;
    auto c = p.coefficient_of(v, 1), d = p.coefficient_of(v, 0);
    if (d.is_zero()) continue;  // p = c v, irreducible only for constant c, caught above
    if (c.is_constant()) return true;
    try {
      if (linear_decompose(p, v).common.is_constant()) return true;
      continue;
    } catch (const DecompositionError&) {
    }
    if (is_certified_irreducible(c) && !exact_quotient(d, c)) return true;
    if (!d.is_constant() && is_certified_irreducible(d) && !exact_quotient(c, d)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// fibers of V_n

enum class Generator { X, U, Y };

inline std::string to_string(Generator g) {
  switch (g) {
    case Generator::X: return "x";
    case Generator::U: return "u";
    case Generator::Y: return "y";
  }
  return "?";
}

/// The two remaining coordinates after fixing `g`.
inline std::vector<std::string> fiber_plane(Generator g) {
  switch (g) {
    case Generator::X: return {"y", "u"};
    case Generator::U: return {"x", "y"};
    case Generator::Y: return {"x", "u"};
  }
  return {};
}

/// The relation u(x^n y - 1) - (x - 1) with generator g set to lambda, as a
/// polynomial in the remaining two coordinates.
template <class Field>
Poly<Field> fiber_poly(unsigned n, Generator g, const typename Field::Element& lambda, const Field& field) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  using P = Poly<Field>;
  auto ambient = make_ring(field, {"x", "y", "u"});
  auto x = P::variable(ambient, 0), y = P::variable(ambient, 1), u = P::variable(ambient, 2);
  auto one = P::from_int(ambient, 1);
  auto relation = u * (x.pow(n) * y - one) - (x - one);

  auto plane = make_ring(field, fiber_plane(g));
  return substitute(relation, {{to_string(g), P::constant(plane, lambda)}}, plane);
}

template <class Field>
struct FiberTableRow {
  unsigned n;
  Generator generator;
  typename Field::Element lambda;
  Poly<Field> fiber;
  CurveClass cls;
};

/// Rows for x, u, y at every lambda, in that order.
template <class Field>
std::vector<FiberTableRow<Field>> fiber_table(unsigned n, const std::vector<typename Field::Element>& lambdas,
                                              const Field& field) {
  std::vector<FiberTableRow<Field>> rows;
  for (const auto& lambda : lambdas)
    for (auto g : {Generator::X, Generator::U, Generator::Y}) {
      auto f = fiber_poly(n, g, lambda, field);
      auto cls = classify_curve(f);
      rows.push_back({n, g, lambda, std::move(f), std::move(cls)});
    }
  return rows;
}

enum class FiberKind { Zero, Reducible, General };

template <class Field>
FiberKind fiber_kind(const typename Field::Element& lambda, const Field& field) {
  if (field.is_zero(lambda)) return FiberKind::Zero;
  if (field.is_one(lambda)) return FiberKind::Reducible;
  return FiberKind::General;
}

/// The tabulated class of each fiber in characteristic zero. The u = 1 fiber
/// is listed as A^1 ∪ A^1_* for every n; at n = 1 the actual fiber is two
/// lines, which classify_curve reports.
inline CurveClass tabulated_fiber_class(unsigned n, Generator g, FiberKind kind) {
  using C = CurveClass;
  switch (kind) {
    case FiberKind::Zero:
      return C::affine_line();
    case FiberKind::General:
      return g == Generator::Y ? C::punctured_line(n) : C::punctured_line(1);
    case FiberKind::Reducible:
      switch (g) {
        case Generator::X: return C::union_of({C::affine_line(), C::affine_line()});
        case Generator::U: return C::union_of({C::affine_line(), C::punctured_line(1)});
        case Generator::Y: return C::union_of({C::affine_line(), C::punctured_line(n - 1)});
      }
  }
  return C::unknown("unreachable");
}

/// The class the fiber actually has: the tabulated one, except the n = 1
/// u-fiber at lambda = 1, where x^{n-1} y - 1 = y - 1 is a line.
inline CurveClass expected_fiber_class(unsigned n, Generator g, FiberKind kind) {
  if (n == 1 && g == Generator::U && kind == FiberKind::Reducible)
    return CurveClass::union_of({CurveClass::affine_line(), CurveClass::affine_line()});
  return tabulated_fiber_class(n, g, kind);
}

}  // namespace affmod
