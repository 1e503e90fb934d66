#pragma once

// Weight-induced degree functions on k[x, y], their extension to
// localizations, the degree-module filtration F_d = {deg <= d}, and the
// weight-family probe for non-negative degree functions on B_n.
//
// Everything here is restricted to the weight family: a result such as
// "no nonzero weight is non-negative on B_n" says nothing about degree
// functions that are not induced by weights.

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "affmod/localized.hpp"
#include "affmod/poly.hpp"

namespace affmod {

/// Integer or minus infinity.
class Degree {
 public:
  constexpr Degree(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  long long value() const {
    if (!finite_) throw std::domain_error("degree is -inf");
    return value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend Degree operator-(Degree a, Degree b) {
    if (!b.finite_) throw std::domain_error("subtracting a -inf degree");
    if (!a.finite_) return neg_infinity();
    return Degree(a.value_ - b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, Degree b) { return (a <=> b) == 0; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  constexpr Degree() : value_(0), finite_(false) {}
  long long value_;
  bool finite_ = true;
};

/// One integer weight per ring variable; deg of a monomial is the dot product.
struct WeightDegree {
  std::vector<long> weights;

  bool is_zero() const {
    for (long w : weights)
      if (w != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (long w : weights)
      if (w < 0) return false;
    return true;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ")";
  }
};

template <class Field>
Degree weight_degree(const Poly<Field>& p, const WeightDegree& w) {
  if (w.weights.size() != p.ring()->nvars()) throw std::invalid_argument("weight vector length does not match ring");
  if (p.is_zero()) return Degree::neg_infinity();
  long long best = std::numeric_limits<long long>::min();
  for (const auto& [m, c] : p.terms()) {
    long long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(w.weights[i]) * m[i];
    best = std::max(best, d);
  }
  return Degree(best);
}

/// deg(numerator) minus the degrees of the inverted factors.
template <class Field>
Degree valuation_degree(const LocalizedFraction<Field>& f, const WeightDegree& w) {
  Degree d = weight_degree(f.numerator(), w);
  const auto& inv = f.localization()->inverted();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (f.powers()[i] == 0) continue;
    Degree di = weight_degree(inv[i], w);
    if (di.is_neg_infinity()) throw std::domain_error("zero element in the denominator");
    if (!d.is_neg_infinity()) d = d - Degree(di.value() * static_cast<long long>(f.powers()[i]));
  }
  return d;
}

template <class Field>
bool in_filtration(const Poly<Field>& p, const WeightDegree& w, long long d) {
  return weight_degree(p, w) <= Degree(d);
}

// ---------------------------------------------------------------------------
// weight-family probe on B_n = k[x, y, (x-1)/(x^n y - 1)]

enum class ProbeSet {
  Full,            ///< x, y, u = (x-1)/t, v = (y-1)/t
  WithoutSwapped,  ///< x, y, u only
};

enum class ProbeVerdict { TrivialOk, Witness, NoWitness };

inline std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::TrivialOk: return "trivial-ok";
    case ProbeVerdict::Witness: return "witness";
    case ProbeVerdict::NoWitness: return "no-witness";
  }
  return "?";
}

struct ProbeResult {
  unsigned n = 0;
  WeightDegree weight;
  ProbeVerdict verdict = ProbeVerdict::NoWitness;
  std::string witness;  // probe name, empty unless verdict == Witness
  std::optional<long long> witness_degree;
  std::vector<std::pair<std::string, long long>> degrees;  // every probe evaluated
};

template <class Field>
struct ProbeElements {
  LocalizationPtr<Field> localization;
  std::vector<std::pair<std::string, LocalizedFraction<Field>>> probes;
};

/// Probe elements of B_n inside k[x, y] with t = x^n y - 1 inverted.
template <class Field>
ProbeElements<Field> probe_elements(unsigned n, const Field& field, ProbeSet set = ProbeSet::Full) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  auto ring = make_ring(field, {"x", "y"});
  using P = Poly<Field>;
  auto x = P::variable(ring, 0), y = P::variable(ring, 1), one = P::from_int(ring, 1);
  auto t = x.pow(n) * y - one;
  auto loc = std::make_shared<const Localization<Field>>(ring, std::vector<P>{t});
  using LF = LocalizedFraction<Field>;
  ProbeElements<Field> out{loc, {}};
  out.probes.emplace_back("x", LF::element(loc, x));
  out.probes.emplace_back("y", LF::element(loc, y));
  out.probes.emplace_back("u", LF(loc, x - one, {1}));
  if (set == ProbeSet::Full) out.probes.emplace_back("v", LF(loc, y - one, {1}));
  return out;
}

/// Looks for a probe element of negative degree under w. A weight that is
/// nonzero but non-negative on every probe would be a nontrivial non-negative
/// degree function on B_n and is reported as NoWitness.
template <class Field = RationalField>
ProbeResult probe_nonnegativity(unsigned n, const WeightDegree& w, ProbeSet set = ProbeSet::Full,
                                const Field& field = Field{}) {
  if (w.weights.size() != 2) throw std::invalid_argument("weights are over k[x, y]");
  auto elems = probe_elements(n, field, set);
  ProbeResult r{n, w, ProbeVerdict::NoWitness, {}, std::nullopt, {}};
  for (const auto& [name, f] : elems.probes) {
    auto d = valuation_degree(f, w).value();
    r.degrees.emplace_back(name, d);
    if (d < 0 && r.witness.empty()) {
      r.witness = name;
      r.witness_degree = d;
    }
  }
  if (w.is_zero())
    r.verdict = ProbeVerdict::TrivialOk;
  else if (!r.witness.empty())
    r.verdict = ProbeVerdict::Witness;
  return r;
}

/// Every nonzero weight in [-box, box]^2, for every n in [1, n_max].
template <class Field = RationalField>
std::vector<ProbeResult> exhaustive_probe(unsigned n_max, long box, ProbeSet set = ProbeSet::Full,
                                          const Field& field = Field{}) {
  std::vector<ProbeResult> out;
  for (unsigned n = 1; n <= n_max; ++n)
    for (long a = -box; a <= box; ++a)
      for (long b = -box; b <= box; ++b) {
        if (a == 0 && b == 0) continue;
        out.push_back(probe_nonnegativity(n, WeightDegree{{a, b}}, set, field));
      }
  return out;
}

// ---------------------------------------------------------------------------
// filtration properties on sampled pairs

struct F0Report {
  std::size_t pairs = 0;
  std::size_t subring_checks = 0;
  std::size_t ideal_checks = 0;
  std::size_t factorial_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks on each (f, g):
///   F_0 is closed under + and *;
///   for d = deg f <= 0 and g in F_0, fg is in F_d, and F_d is closed under +;
///   when f, g are nonzero of non-negative degree, fg in F_0 forces f, g in F_0.
template <class Field>
F0Report check_F0_properties(const WeightDegree& w, const std::vector<std::pair<Poly<Field>, Poly<Field>>>& samples) {
  F0Report rep;
  auto note = [&](const std::string& what, const Poly<Field>&, const Poly<Field>&) {
    rep.violations.push_back(what + " under weight " + w.to_string());
  };
  for (const auto& [f, g] : samples) {
    ++rep.pairs;
    auto df = weight_degree(f, w), dg = weight_degree(g, w);
    bool f0 = df <= Degree(0), g0 = dg <= Degree(0);
    if (f0 && g0) {
      rep.subring_checks += 2;
      if (!in_filtration(f + g, w, 0)) note("F_0 not closed under +", f, g);
      if (!in_filtration(f * g, w, 0)) note("F_0 not closed under *", f, g);
    }
    if (!df.is_neg_infinity() && df <= Degree(0)) {
      long long d = df.value();
      if (g0) {
        ++rep.ideal_checks;
        if (!in_filtration(f * g, w, d)) note("F_d * F_0 not inside F_d", f, g);
      }
      if (dg <= df) {
        ++rep.ideal_checks;
        if (!in_filtration(f + g, w, d)) note("F_d not closed under +", f, g);
      }
    }
    if (!f.is_zero() && !g.is_zero() && df >= Degree(0) && dg >= Degree(0)) {
      ++rep.factorial_checks;
      if (in_filtration(f * g, w, 0) && !(f0 && g0)) note("F_0 not factorially closed", f, g);
    }
  }
  return rep;
}

/// For t = x^m y - 1 and the grading deg x = 1, deg y = -m (so deg t = 0):
/// if deg h < 0 then h lies in y A_t. Returns whether the implication holds
/// for this h; vacuously true when deg h >= 0.
template <class Field>
bool negative_degree_implies_y_divisible(unsigned m, const LocalizedFraction<Field>& h) {
  const auto& loc = *h.localization();
  const auto& ring = loc.ring();
  if (ring->nvars() != 2) throw std::invalid_argument("expected k[x, y]");
  using P = Poly<Field>;
  auto t = P::variable(ring, 0).pow(m) * P::variable(ring, 1) - P::from_int(ring, 1);
  for (std::size_t i = 0; i < loc.inverted().size(); ++i)
    if (h.powers()[i] != 0 && loc.inverted()[i] != t)
      throw std::invalid_argument("element is not in the localization at x^m y - 1");

  WeightDegree w{{1, -static_cast<long>(m)}};
  auto d = valuation_degree(h, w);
  if (d >= Degree(0)) return true;
  // y is prime and coprime to t, so h in y A_t iff y divides the numerator
  for (const auto& [mono, c] : h.numerator().terms())
    if (mono[1] == 0) return false;
  return true;
}

}  // namespace affmod
