#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "affmod/division.hpp"
#include "affmod/poly.hpp"

namespace affmod {

namespace detail {

template <class Field>
Poly<Field> s_polynomial(const Poly<Field>& f, const Poly<Field>& g, const MonomialOrder& ord) {
  auto [mf, cf] = leading_term(f, ord);
  auto [mg, cg] = leading_term(g, ord);
  auto l = mf.lcm(mg);
  const auto& k = f.field();
  return f.times_monomial(l / mf, k.inv(cf)) - g.times_monomial(l / mg, k.inv(cg));
}

/// Minimal, monic, tail-reduced basis sorted by descending leading monomial.
/// The input must already be a Gröbner basis.
template <class Field>
std::vector<Poly<Field>> reduce_basis(std::vector<Poly<Field>> g, const MonomialOrder& ord) {
  for (auto& p : g) p = make_monic(p, ord);
  std::vector<Poly<Field>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto mi = leading_monomial(g[i], ord);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      auto mj = leading_monomial(g[j], ord);
      // equal leading monomials: keep the first occurrence
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly<Field>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<Field>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto lead = leading_term(minimal[i], ord);
    auto tail = minimal[i] - Poly<Field>::term(minimal[i].ring(), lead.first, lead.second);
    reduced.push_back(Poly<Field>::term(minimal[i].ring(), lead.first, lead.second) + reduce_fully(tail, others, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly<Field>& a, const Poly<Field>& b) {
    return ord.less(leading_monomial(b, ord), leading_monomial(a, ord));
  });
  return reduced;
}

}  // namespace detail

/// Reduced Gröbner basis by Buchberger's algorithm.
///
/// Pairs are processed by the normal strategy (smallest lcm total degree
/// first, ties by the order on the lcm, then by insertion); pairs whose
/// leading monomials are coprime are skipped. Zero generators are dropped;
/// the unit ideal yields {1}, the zero ideal the empty list.
template <class Field>
std::vector<Poly<Field>> buchberger_gb(const std::vector<Poly<Field>>& gens, const MonomialOrder& ord) {
  if (!ord.is_well_order()) throw std::invalid_argument("Gröbner bases need a well-ordering");
  std::vector<Poly<Field>> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g, ord));
  if (basis.empty()) return basis;
  for (const auto& g : basis) require_same_ring(basis.front(), g);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(leading_monomial(g, ord));
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].coprime_to(leads[j])) continue;
      pairs.push_back({i, j, leads[i].lcm(leads[j])});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto da = a.lcm.total_degree(), db = b.lcm.total_degree();
    if (da != db) return da < db;
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *best;
    pairs.erase(best);
    auto h = reduce_fully(detail::s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
    if (h.is_zero()) continue;
    h = make_monic(h, ord);
    if (h.is_constant()) return {h};
    basis.push_back(h);
    leads.push_back(leading_monomial(h, ord));
    add_pairs_for(basis.size() - 1);
  }
  return detail::reduce_basis(std::move(basis), ord);
}

/// Ideal generated by a finite list, with a populate-once Gröbner basis cache
/// shared between copies.
template <class Field>
class Ideal {
 public:
  using P = Poly<Field>;

  Ideal(RingPtr<Field> ring, std::vector<P> generators, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), generators_(std::move(generators)), order_(std::move(order)),
        cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators_)
      if (!same_ring(ring_, g.ring())) throw RingMismatch();
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<P>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  const std::vector<P>& groebner_basis() const {
    std::call_once(cache_->once, [this] { cache_->basis = buchberger_gb(generators_, order_); });
    return cache_->basis;
  }

  Ideal with_order(MonomialOrder order) const { return Ideal(ring_, generators_, std::move(order)); }

  P normal_form(const P& p) const {
    if (!same_ring(ring_, p.ring())) throw RingMismatch();
    const auto& gb = groebner_basis();
    if (gb.empty()) return p;
    return reduce_fully(p, gb, order_);
  }

  bool contains(const P& p) const { return normal_form(p).is_zero(); }

  bool is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<P> basis;
  };

  RingPtr<Field> ring_;
  std::vector<P> generators_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

template <class Field>
Poly<Field> normal_form(const Poly<Field>& p, const Ideal<Field>& ideal) {
  return ideal.normal_form(p);
}

/// Equality of ideals via their reduced Gröbner bases under a's order.
template <class Field>
bool ideals_equal(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  auto b_same = b.order() == a.order() ? b : b.with_order(a.order());
  return a.groebner_basis() == b_same.groebner_basis();
}

/// k-dimension of R/I: the number of standard monomials. `infinite` when
/// the staircase is unbounded.
struct Colength {
  bool infinite = false;
  std::size_t value = 0;

  static Colength finite(std::size_t v) { return {false, v}; }
  static Colength unbounded() { return {true, 0}; }
  bool operator==(const Colength&) const = default;
};

template <class Field>
Colength colength(const Ideal<Field>& ideal) {
  const auto& gb = ideal.groebner_basis();
  const auto n = ideal.ring()->nvars();
  if (gb.empty()) return Colength::unbounded();
  if (ideal.is_unit_ideal()) return Colength::finite(0);

  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(leading_monomial(g, ideal.order()));
  std::vector<Monomial::Exponent> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads) {
      bool pure = m[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (bound[v] == 0) return Colength::unbounded();
  }

  std::size_t count = 0;
  std::vector<Monomial::Exponent> e(n, 0);
  while (true) {
    Monomial m(e);
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    std::size_t v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  return Colength::finite(count);
}

/// Coordinates (a_1, ..., a_n) when the reduced lex basis is {x_i - a_i}.
template <class Field>
std::optional<std::vector<typename Field::Element>> is_point_ideal(const Ideal<Field>& ideal) {
  auto lex = ideal.with_order(MonomialOrder::lex());
  const auto& gb = lex.groebner_basis();
  const auto n = ideal.ring()->nvars();
  if (gb.size() != n) return std::nullopt;
  const auto& f = ideal.ring()->field();
  std::vector<typename Field::Element> point(n, f.zero());
  std::vector<bool> seen(n, false);
  for (const auto& g : gb) {
    if (g.total_degree() != 1 || g.variables_used().size() != 1) return std::nullopt;
    auto v = g.variables_used().front();
    if (seen[v] || !f.is_one(g.coefficient(Monomial::variable(n, v)))) return std::nullopt;
    seen[v] = true;
    point[v] = f.neg(g.constant_term());
  }
  return point;
}

/// I : f^infinity, computed as (I + (1 - s f)) eliminated of a fresh variable s.
template <class Field>
Ideal<Field> saturate(const Ideal<Field>& ideal, const Poly<Field>& f) {
  if (!same_ring(ideal.ring(), f.ring())) throw RingMismatch();
  using P = Poly<Field>;
  const auto& base = *ideal.ring();
  auto names = base.names();
  std::string s = "s";
  while (std::find(names.begin(), names.end(), s) != names.end()) s += "s";
  names.push_back(s);
  auto big = make_ring(base.field(), names);
  const auto n = base.nvars();
  auto lift = [&](const P& p) {
    P out(big);
    for (const auto& [m, c] : p.terms()) {
      auto e = m.exponents();
      e.push_back(0);
      out.add_term(Monomial(std::move(e)), c);
    }
    return out;
  };
  std::vector<P> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g));
  gens.push_back(P::from_int(big, 1) - P::variable(big, n) * lift(f));
  std::vector<long> w(n + 1, 0);
  w[n] = 1;
  std::vector<P> kept;
  for (const auto& g : buchberger_gb(gens, MonomialOrder::weighted(w))) {
    if (g.uses_variable(n)) continue;
    P down(ideal.ring());
    for (const auto& [m, c] : g.terms()) {
      auto e = m.exponents();
      e.pop_back();
      down.add_term(Monomial(std::move(e)), c);
    }
    kept.push_back(std::move(down));
  }
  return Ideal<Field>(ideal.ring(), std::move(kept), ideal.order());
}

}  // namespace affmod
