#pragma once

// Presented rings k[vars]/I for the affine modifications A[b/a] = A[T]/(aT - b),
// in particular B_n, C_1 and C_2, and witness-based checks of ring maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affmod/expr_io.hpp"
#include "affmod/fiber_lab.hpp"
#include "affmod/ideal.hpp"
#include "affmod/poly.hpp"

namespace affmod {

template <class Field>
class PresentedRing {
 public:
  using P = Poly<Field>;

  /// Throws if the defining ideal is the unit ideal.
  PresentedRing(std::string label, Ideal<Field> defining) : label_(std::move(label)), defining_(std::move(defining)) {
    if (defining_.is_unit_ideal()) throw std::invalid_argument(label_ + ": defining ideal is the unit ideal");
  }

  const std::string& label() const { return label_; }
  const RingPtr<Field>& ambient() const { return defining_.ring(); }
  const Ideal<Field>& defining() const { return defining_; }
  const std::vector<std::string>& generator_names() const { return ambient()->names(); }

  P var(std::string_view name) const { return P::variable(ambient(), name); }
  P parse(std::string_view text) const { return parse_poly(text, ambient()); }
  P reduce(const P& p) const { return defining_.normal_form(p); }

 private:
  std::string label_;
  Ideal<Field> defining_;
};

/// The same ambient ring modulo I : f^infinity, i.e. with the components
/// inside V(f) removed.
template <class Field>
PresentedRing<Field> saturated(const PresentedRing<Field>& ring, const Poly<Field>& f, std::string label) {
  return PresentedRing<Field>(std::move(label), saturate(ring.defining(), f));
}

template <class Field>
bool element_equal_in_quotient(const PresentedRing<Field>& ring, const Poly<Field>& p, const Poly<Field>& q) {
  return ring.reduce(p - q).is_zero();
}

/// A[T]/(aT - b) for a, b in a two-variable ring A; the new variable is
/// named u (or `new_var`).
template <class Field>
PresentedRing<Field> build_modification(const Poly<Field>& a, const Poly<Field>& b, std::string label = "A[b/a]",
                                        std::string new_var = "u") {
  require_same_ring(a, b);
  if (a.is_constant() || b.is_constant()) throw std::invalid_argument("a and b must be non-constant");
  const auto& base = *a.ring();
  auto names = base.names();
  names.push_back(new_var);
  auto ambient = make_ring(base.field(), names);
  auto lift = [&](const Poly<Field>& p) {
    Poly<Field> out(ambient);
    for (const auto& [m, c] : p.terms()) {
      auto e = m.exponents();
      e.push_back(0);
      out.add_term(Monomial(std::move(e)), c);
    }
    return out;
  };
  auto t = Poly<Field>::variable(ambient, names.size() - 1);
  return PresentedRing<Field>(std::move(label), Ideal<Field>(ambient, {lift(a) * t - lift(b)}));
}

/// B_n = k[x, y][(x - 1)/(x^n y - 1)].
template <class Field = RationalField>
PresentedRing<Field> build_Bn(unsigned n, const Field& field = Field{}) {
  if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
  auto A = make_ring(field, {"x", "y"});
  auto x = Poly<Field>::variable(A, 0), y = Poly<Field>::variable(A, 1), one = Poly<Field>::from_int(A, 1);
  return build_modification(x.pow(n) * y - one, x - one, "B_" + std::to_string(n));
}

template <class Field = RationalField>
PresentedRing<Field> build_C1(const Field& field = Field{}) {
  auto R = make_ring(field, {"x", "y", "u", "v"});
  return PresentedRing<Field>("C_1", Ideal<Field>(R, parse_polys<Field>({"u*x - (y - 1)", "v*y - (x - 1)"}, R)));
}

/// C_1's ambient ring with the alternative generators x(uv-1)+(v+1), y(uv-1)+(u+1).
template <class Field = RationalField>
PresentedRing<Field> build_C1_alternative(const Field& field = Field{}) {
  auto R = make_ring(field, {"x", "y", "u", "v"});
  return PresentedRing<Field>(
      "C_1'", Ideal<Field>(R, parse_polys<Field>({"x*(u*v - 1) + (v + 1)", "y*(u*v - 1) + (u + 1)"}, R)));
}

template <class Field = RationalField>
PresentedRing<Field> build_C2(const Field& field = Field{}) {
  auto R = make_ring(field, {"X", "Y", "U", "V"});
  return PresentedRing<Field>(
      "C_2", Ideal<Field>(R, parse_polys<Field>({"U*(X*Y - 1) - (X - 1)", "V*(X*Y - 1) - (Y - 1)"}, R)));
}

// ---------------------------------------------------------------------------
// ring maps

/// k-algebra map of ambient rings, sending source variable i to images[i].
template <class Field>
struct RingMap {
  PresentedRing<Field> source;
  PresentedRing<Field> target;
  std::vector<Poly<Field>> images;

  Poly<Field> apply(const Poly<Field>& p) const {
    std::map<std::string, Poly<Field>> bind;
    const auto& names = source.generator_names();
    if (images.size() != names.size()) throw std::invalid_argument("one image per source variable is required");
    for (std::size_t i = 0; i < names.size(); ++i) bind.emplace(names[i], images[i]);
    return substitute(p, bind, target.ambient());
  }
};

template <class Field>
RingMap<Field> make_ring_map(const PresentedRing<Field>& source, const PresentedRing<Field>& target,
                             const std::vector<std::string>& images) {
  return {source, target, parse_polys<Field>(images, target.ambient())};
}

/// g after f.
template <class Field>
RingMap<Field> compose(const RingMap<Field>& f, const RingMap<Field>& g) {
  std::vector<Poly<Field>> images;
  for (const auto& img : f.images) images.push_back(g.apply(img));
  return {f.source, g.target, std::move(images)};
}

template <class Field>
struct RingMapCheck {
  std::vector<Poly<Field>> residuals;  // normal forms of the mapped source relations
  bool well_defined = false;
  bool signed_permutation = false;
  std::optional<bool> image_ideal_equal;  // only for signed permutations of variables

  bool ok() const { return well_defined && image_ideal_equal.value_or(true); }
};

namespace detail {

template <class Field>
bool is_signed_variable_permutation(const std::vector<Poly<Field>>& images, std::size_t target_vars) {
  if (images.size() != target_vars) return false;
  std::vector<bool> hit(target_vars, false);
  for (const auto& p : images) {
    if (p.size() != 1 || p.total_degree() != 1) return false;
    const auto& [m, c] = *p.terms().begin();
    const auto& f = p.field();
    if (!f.is_one(c) && !f.is_one(f.neg(c))) return false;
    auto v = p.variables_used().front();
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace detail

template <class Field>
RingMapCheck<Field> check_ring_map(const RingMap<Field>& map) {
  RingMapCheck<Field> r;
  std::vector<Poly<Field>> mapped;
  r.well_defined = true;
  for (const auto& g : map.source.defining().generators()) {
    auto img = map.apply(g);
    mapped.push_back(img);
    auto nf = map.target.reduce(img);
    if (!nf.is_zero()) r.well_defined = false;
    r.residuals.push_back(std::move(nf));
  }
  r.signed_permutation = detail::is_signed_variable_permutation(map.images, map.target.ambient()->nvars());
  if (r.signed_permutation)
    r.image_ideal_equal = ideals_equal(Ideal<Field>(map.target.ambient(), mapped, map.target.defining().order()),
                                       map.target.defining());
  return r;
}

template <class Field>
bool verify_ring_map(const RingMap<Field>& map) {
  return check_ring_map(map).ok();
}

/// Whether map sends every generator to itself modulo the target ideal.
template <class Field>
bool fixes_generators(const RingMap<Field>& map) {
  const auto& names = map.source.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto v = Poly<Field>::variable(map.target.ambient(), names[i]);
    if (!element_equal_in_quotient(map.target, map.images[i], v)) return false;
  }
  return true;
}

/// f and g are well defined and inverse to each other.
template <class Field>
bool is_isomorphism_pair(const RingMap<Field>& f, const RingMap<Field>& g) {
  return verify_ring_map(f) && verify_ring_map(g) && fixes_generators(compose(f, g)) && fixes_generators(compose(g, f));
}

// ---------------------------------------------------------------------------
// hypotheses for A[b/a] to be factorial with trivial units

enum class Verdict { Verified, Failed, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "hypotheses-verified";
    case Verdict::Failed: return "failed";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

/// Each check is true, false, or undecided.
using Flag = std::optional<bool>;

template <class Field>
struct SamuelReport {
  Flag a_irreducible;
  Flag b_irreducible;
  Flag relatively_prime;
  Flag sum_ideal_is_point;
  CurveClass quotient_a_class = CurveClass::unknown("not computed");
  CurveClass quotient_b_class = CurveClass::unknown("not computed");
  std::optional<std::vector<typename Field::Element>> point;
  Colength sum_colength;
  Verdict verdict = Verdict::Unknown;
  std::string witness;  // first failed or undecided check
  std::vector<std::string> transcript;
};

/// Checks, for a, b in k[x, y]:
///   a and b are irreducible (linear in a variable with coprime coefficients);
///   (a, b) has finite colength, i.e. a and b share no factor;
///   (a, b) is the maximal ideal of a single rational point, colength 1;
///   A/aA is a once-punctured line and A/bA an affine line.
/// Inputs outside the recognizable class give Unknown, never Verified.
template <class Field>
SamuelReport<Field> samuel_check(const Poly<Field>& a, const Poly<Field>& b) {
  require_same_ring(a, b);
  if (a.ring()->nvars() != 2) throw std::invalid_argument("samuel_check expects a two-variable ring");
  SamuelReport<Field> r;
  const auto& f = a.field();
  auto fa = format(a), fb = format(b);

  auto irreducible = [&](const Poly<Field>& p) -> Flag {
    if (p.is_constant()) return false;
    if (is_certified_irreducible(p)) return true;
    auto used = p.variables_used();
    if (used.size() == 1) return false;  // univariate of degree >= 2 splits over the closure
    for (auto v : used) {
      if (p.degree_in(v) != 1) continue;
      try {
        if (!linear_decompose(p, v).common.is_constant()) return false;  // proper common factor
      } catch (const DecompositionError&) {
      }
    }
    return std::nullopt;
  };
  r.a_irreducible = irreducible(a);
  r.b_irreducible = irreducible(b);
  auto show = [](Flag x) { return x ? (*x ? "yes" : "no") : "undecided"; };
  r.transcript.push_back("a = " + fa + " irreducible: " + show(r.a_irreducible));
  r.transcript.push_back("b = " + fb + " irreducible: " + show(r.b_irreducible));

  Ideal<Field> sum(a.ring(), {a, b}, MonomialOrder::lex());
  r.sum_colength = colength(sum);
  // plane curves without a common component meet in finitely many points
  r.relatively_prime = !r.sum_colength.infinite;
  std::string gb;
  for (const auto& g : sum.groebner_basis()) gb += (gb.empty() ? "" : ", ") + format(g);
  r.transcript.push_back("lex Groebner basis of (a, b): {" + gb + "}; colength " +
                         (r.sum_colength.infinite ? std::string("infinite") : std::to_string(r.sum_colength.value)));

  r.point = is_point_ideal(sum);
  r.sum_ideal_is_point = r.point.has_value() && !r.sum_colength.infinite && r.sum_colength.value == 1;
  if (r.point) {
    std::string pt;
    for (const auto& c : *r.point) pt += (pt.empty() ? "" : ", ") + f.to_string(c);
    r.transcript.push_back("(a, b) is the point (" + pt + ")");
  }

  r.quotient_a_class = classify_curve(a);
  r.quotient_b_class = classify_curve(b);
  r.transcript.push_back("A/aA: " + r.quotient_a_class.to_string());
  r.transcript.push_back("A/bA: " + r.quotient_b_class.to_string());

  std::vector<std::pair<std::string, Flag>> checks{
      {"a irreducible", r.a_irreducible},
      {"b irreducible", r.b_irreducible},
      {"a, b relatively prime", r.relatively_prime},
      {"(a, b) is a reduced point", r.sum_ideal_is_point},
  };
  auto class_flag = [](const CurveClass& c, const CurveClass& want) -> Flag {
    if (c.is_unknown()) return std::nullopt;
    return c == want;
  };
  checks.emplace_back("A/aA is a punctured line", class_flag(r.quotient_a_class, CurveClass::punctured_line(1)));
  checks.emplace_back("A/bA is an affine line", class_flag(r.quotient_b_class, CurveClass::affine_line()));

  r.verdict = Verdict::Verified;
  // a or b outside the linear class: nothing after this is trusted
  for (std::size_t i = 0; i < 2 && r.verdict == Verdict::Verified; ++i) {
    if (checks[i].second && !*checks[i].second) {
      r.verdict = Verdict::Failed;
      r.witness = checks[i].first + ": no";
    }
  }
  for (std::size_t i = 0; i < 2 && r.verdict == Verdict::Verified; ++i) {
    if (!checks[i].second) {
      r.verdict = Verdict::Unknown;
      r.witness = checks[i].first + ": undecided";
    }
  }
  if (r.verdict != Verdict::Verified) return r;
  for (const auto& [name, flag] : checks) {
    if (flag && !*flag) {
      r.verdict = Verdict::Failed;
      r.witness = name + ": no";
      break;
    }
    if (!flag && r.verdict == Verdict::Verified) {
      r.verdict = Verdict::Unknown;
      r.witness = name + ": undecided";
    }
  }
  return r;
}

}  // namespace affmod
