#pragma once

// Slow, independent reference implementations used only by tests. None of
// them calls the library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "semicurve/monomial.hpp"
#include "semicurve/monomial_ideal.hpp"
#include "semicurve/semigroup.hpp"

namespace oracle {

using semicurve::Exponent;
using semicurve::Integer;
using semicurve::Monomial;
using semicurve::MonomialIdeal;

// x is a sum of generators iff some coefficient choice for the first
// generator leaves a representable remainder for the others.
inline bool representable(const std::vector<Integer>& gens, std::size_t from, Integer x) {
  if (x == 0) return true;
  if (x < 0 || from == gens.size()) return false;
  for (Integer left = x; left >= 0; left -= gens[from]) {
    if (representable(gens, from + 1, left)) return true;
  }
  return false;
}

inline bool member(std::vector<Integer> gens, Integer x) {
  std::sort(gens.rbegin(), gens.rend());
  return representable(gens, 0, x);
}

struct Lemma {
  Integer u, v, w, lambda, z, mu;
  std::size_t w_solutions, z_solutions;
  bool identity;
};

// Lemma scan straight from the definitions: g_t by enumerating (q, r)
// pairs, S by two membership calls, every pair found by a full range scan.
inline Lemma lemma(const semicurve::CurveInstance& c) {
  const auto p = static_cast<Integer>(c.p());
  const auto& m = c.arith;
  const Integer mn = c.extra;
  auto all = m;
  all.push_back(mn);
  std::vector<Integer> arith_only = m;
  auto g = [&](Integer t) {
    for (Integer q = -1; q <= t; ++q) {
      for (Integer r = 1; r <= p; ++r) {
        if (q * p + r == t) return q * m[p] + m[r];
      }
    }
    return Integer(-1);
  };
  auto r_of = [&](Integer t) { return t - ((t + p - 1) / p - 1) * p; };
  Lemma out{};
  for (Integer t = 0;; ++t) {
    const Integer gt = g(t);
    if (!(member(all, gt) && !member(all, gt - m[0]))) {
      out.u = t;
      break;
    }
  }
  for (Integer b = 1;; ++b) {
    if (member(arith_only, b * mn)) {
      out.v = b;
      break;
    }
  }
  const Integer gu = g(out.u);
  for (Integer w = 0; w < out.v; ++w) {
    const Integer rest = gu - w * mn;
    if (rest >= m[0] && rest % m[0] == 0) {
      ++out.w_solutions;
      out.w = w;
      out.lambda = rest / m[0];
    }
  }
  for (Integer z = 0; z < out.u; ++z) {
    const Integer rest = out.v * mn - g(z);
    if (rest >= 0 && rest % m[0] == 0) {
      ++out.z_solutions;
      out.z = z;
      out.mu = rest / m[0];
    }
  }
  const Integer lhs = g(out.u - out.z) + (out.v - out.w) * mn;
  const Integer k = out.lambda + out.mu + (r_of(out.u - out.z) < r_of(out.u) ? 1 : 0);
  out.identity = lhs == k * m[0];
  return out;
}

// Tuple formulation of the order: compare (deg, -a0, -a1, ...)
// lexicographically.
inline int order_cmp(const Monomial& a, const Monomial& b, const std::vector<std::uint32_t>& wts) {
  std::vector<std::int64_t> ta{0}, tb{0};
  for (std::size_t i = 0; i < a.arity(); ++i) {
    ta[0] += std::int64_t(a[i]) * wts[i];
    tb[0] += std::int64_t(b[i]) * wts[i];
    ta.push_back(-std::int64_t(a[i]));
    tb.push_back(-std::int64_t(b[i]));
  }
  return ta < tb ? -1 : (ta == tb ? 0 : 1);
}

// Every monomial of the given arity with total degree at most d.
inline std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned d) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(arity, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == arity) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

// m in (gens) iff m = g * h for some generator g and some monomial h of
// degree at most deg(m); h is found by enumeration, never by division.
inline bool contains(const std::vector<Monomial>& gens, const Monomial& m) {
  const auto hs = monomials_up_to(m.arity(), static_cast<unsigned>(m.total_degree()));
  for (const auto& g : gens) {
    for (const auto& h : hs) {
      if (g * h == m) return true;
    }
  }
  return false;
}

inline bool contains(const MonomialIdeal& I, const Monomial& m) {
  return std::any_of(I.gens().begin(), I.gens().end(), [&](const Monomial& g) {
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (g[i] > m[i]) return false;
    }
    return true;
  });
}

// Raw products of k generators, not minimalized.
inline std::vector<Monomial> raw_power(const std::vector<Monomial>& gens, std::size_t arity, std::size_t k) {
  std::set<Monomial> cur{Monomial(arity)};
  for (std::size_t step = 0; step < k; ++step) {
    std::set<Monomial> next;
    for (const auto& a : cur) {
      for (const auto& g : gens) next.insert(a * g);
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

inline bool in_raw(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// m in rad(I) iff some power of m lies in I; a power equal to the largest
// generator exponent is always enough.
inline bool in_radical(const MonomialIdeal& I, const Monomial& m) {
  Exponent top = 1;
  for (const auto& g : I.gens()) {
    for (auto e : g.exponents()) top = std::max(top, e);
  }
  return contains(I, semicurve::power(m, top));
}

// c * I^k inside I^{k+1}, with both powers taken as raw products.
inline bool in_colon_power(const MonomialIdeal& I, const Monomial& c, std::size_t k) {
  const auto lo = raw_power(I.gens(), I.arity(), k);
  const auto hi = raw_power(I.gens(), I.arity(), k + 1);
  return std::all_of(lo.begin(), lo.end(), [&](const Monomial& a) { return in_raw(hi, c * a); });
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t arity, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Exponent> v(arity);
  for (auto& x : v) x = e(rng);
  return Monomial(std::move(v));
}

inline std::vector<Monomial> random_gens(std::mt19937_64& rng, std::size_t arity, std::size_t max_gens,
                                         unsigned max_exp) {
  std::uniform_int_distribution<std::size_t> n(1, max_gens);
  std::vector<Monomial> out;
  const auto count = n(rng);
  while (out.size() < count) {
    auto m = random_monomial(rng, arity, max_exp);
    if (!m.is_unit()) out.push_back(std::move(m));
  }
  return out;
}

// A copy of `m` with `extra` unused variables inserted at position `at`.
inline Monomial pad(const Monomial& m, std::size_t at, std::size_t extra) {
  std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(at), extra, 0);
  return Monomial(std::move(e));
}

inline MonomialIdeal pad(const MonomialIdeal& I, std::size_t at, std::size_t extra) {
  std::vector<Monomial> g;
  for (const auto& m : I.gens()) g.push_back(pad(m, at, extra));
  return MonomialIdeal(I.arity() + extra, std::move(g));
}

}  // namespace oracle
