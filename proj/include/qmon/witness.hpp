#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/queue.hpp"
#include "qmon/rational.hpp"
#include "qmon/words.hpp"

namespace qmon {

using Exponent = std::int64_t;
using Exponents = std::array<Exponent, 3>;

struct ProjectionSolution {
  Exponents x{};
  Exponents y{};
};

namespace detail {

inline Exponent to_exponent(const Integer& v) {
  require(v >= std::numeric_limits<Exponent>::min() && v <= std::numeric_limits<Exponent>::max(),
          ErrorCode::internal_inconsistency, "exponent does not fit in 64 bits");
  return static_cast<Exponent>(v);
}

inline Exponent dot(const Exponents& a, const Exponents& x) {
  return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

inline Exponent ceil_div(Exponent num, Exponent den) { return (num + den - 1) / den; }

}  // namespace detail

/// Distinct x, y in ℕ³ (entries >= min_entry) with a·x = a·y and b·x = b·y.
///
/// The difference d = x - y spans the kernel of the 2×3 system; x and y are
/// the positive and negative parts of d, both lifted by min_entry.
inline ProjectionSolution solve_projection_system(const Exponents& a, const Exponents& b, Exponent min_entry) {
  detail::require(min_entry >= 0, ErrorCode::precondition_violated, "min_entry must be natural");
  const bool zero_a = std::all_of(a.begin(), a.end(), [](Exponent e) { return e == 0; });
  const bool zero_b = std::all_of(b.begin(), b.end(), [](Exponent e) { return e == 0; });
  if (zero_a && zero_b) detail::fail(ErrorCode::degenerate_system, "both coefficient rows are zero");

  RationalMatrix m{{Rational(a[0]), Rational(a[1]), Rational(a[2])},
                   {Rational(b[0]), Rational(b[1]), Rational(b[2])}};
  auto d = integer_kernel_vector(std::move(m), 3);
  // Two equations in three unknowns always leave a free column.
  if (!d) detail::fail(ErrorCode::degenerate_system, "only the trivial difference solves the system");

  ProjectionSolution s;
  for (std::size_t i = 0; i < 3; ++i) {
    const Exponent di = detail::to_exponent((*d)[i]);
    s.x[i] = std::max<Exponent>(di, 0) + min_entry;
    s.y[i] = std::max<Exponent>(-di, 0) + min_entry;
  }
  return s;
}

enum class WitnessKind { p2p3, non_conjugated, conjugated, p4 };

/// Which rotation (u, v, w) of the inputs (u', v', w') the conjugated
/// witness uses.
enum class Rotation { trivial, vwu, wuv };

constexpr std::string_view to_string(WitnessKind k) noexcept {
  switch (k) {
    case WitnessKind::p2p3: return "P2P3";
    case WitnessKind::non_conjugated: return "NonConjugated";
    case WitnessKind::conjugated: return "Conjugated";
    case WitnessKind::p4: return "P4";
  }
  return "";
}

constexpr std::string_view to_string(Rotation r) noexcept {
  switch (r) {
    case Rotation::trivial: return "(u',v',w')";
    case Rotation::vwu: return "(v',w',u')";
    case Rotation::wuv: return "(w',u',v')";
  }
  return "";
}

/// A verified queue-monoid identity lhs ≡ rhs built from exponent vectors.
///
/// Exponent layout per kind:
///   P2P3            x = (x_u, x_v, x_w), y = (y_u, y_v, y_w);
///                   lhs = u^x_u v^x_v u w^x_w, rhs = u^y_u w^y_w u v^y_v
///   NonConjugated,
///   Conjugated      x, y over the (rotated) triple;
///                   lhs = u^x_u v^x_v w^x_w,   rhs = u^y_u v^y_v w^y_w
///   P4              x = (x_t, x_u1, x_u2, x_v, x_w), y empty;
///                   lhs = u^x_u1 v^x_v w t^x_t w^x_w u^x_u2,
///                   rhs = u^x_u1 w u^x_u2 w^x_w t^x_t v^x_v
struct WitnessReport {
  WitnessKind kind = WitnessKind::p2p3;
  Rotation rotation = Rotation::trivial;
  std::vector<Exponent> x;
  std::vector<Exponent> y;
  QueueWord lhs;
  QueueWord rhs;
  bool verified = false;
};

namespace detail {

struct Factor {
  const QueueWord* word;
  Exponent exponent;
};

inline QueueWord product_of_powers(std::initializer_list<Factor> factors) {
  QueueWord out;
  for (const auto& f : factors) {
    require(f.exponent >= 0, ErrorCode::internal_inconsistency, "negative exponent");
    for (Exponent i = 0; i < f.exponent; ++i) out.insert(out.end(), f.word->begin(), f.word->end());
  }
  return out;
}

inline void require_nonempty(std::initializer_list<const QueueWord*> words) {
  for (const auto* w : words)
    require(!w->empty(), ErrorCode::precondition_violated, "witness inputs must be nonempty words");
}

// Exponent of `w` as a power of `root`, failing with `code` otherwise.
inline Exponent power_exponent(const Word& w, const Word& root, ErrorCode code, const std::string& what) {
  auto e = exponent_of(w, root);
  if (!e) fail(code, what);
  return static_cast<Exponent>(*e);
}

// Common primitive root of two commuting words; empty when both are empty.
inline Word common_root(const Word& x, const Word& y) {
  const Word xy = concat(x, y);
  if (xy.empty()) return {};
  return primitive_root(xy).root;
}

inline void finish(WitnessReport& r, bool nontrivial) {
  if (!equivalent(r.lhs, r.rhs)) fail(ErrorCode::verification_failed, "constructed sides are not equivalent");
  r.verified = nontrivial;
  require(r.verified, ErrorCode::verification_failed, "witness exponents are trivial");
}

}  // namespace detail

/// u^x_u v^x_v u w^x_w ≡ u^y_u w^y_w u v^y_v with x_v + x_w != 0, for a
/// write-only u and commuting, inequivalent v and w.
inline WitnessReport p2p3_witness(const QueueWord& u, const QueueWord& v, const QueueWord& w) {
  detail::require_nonempty({&u, &v, &w});
  detail::require(project_neg(u).empty(), ErrorCode::precondition_violated, "u must not read");
  detail::require(!equivalent(v, w), ErrorCode::precondition_violated, "v and w must differ in Q");
  detail::require(equivalent(concat(v, w), concat(w, v)), ErrorCode::precondition_violated,
                  "v and w must commute in Q");

  const Word pv = project_pos(v), pw = project_pos(w), nv = project_neg(v), nw = project_neg(w);
  const Word p = detail::common_root(pv, pw), q = detail::common_root(nv, nw);
  const auto coherent = [](const Word& x, const Word& root) {
    return detail::power_exponent(x, root, ErrorCode::internal_inconsistency,
                                  "commuting projections without a common root");
  };
  const Exponent a_v = coherent(pv, p), a_w = coherent(pw, p), b_v = coherent(nv, q), b_w = coherent(nw, q);

  Exponent x_v = 0, x_w = 0, y_v = 0, y_w = 0;
  if (a_v == 0) {
    x_v = y_v = 1;
  } else if (a_w == 0) {
    x_w = y_w = 1;
  } else if (a_v * b_w == a_w * b_v) {
    x_v = y_v = a_w + b_w;
    x_w = y_w = a_v + b_v;
  } else {
    // Unknowns (x_v, x_w, y_v, y_w).
    RationalMatrix m{{Rational(a_v), Rational(0), Rational(0), Rational(-a_w)},
                     {Rational(0), Rational(a_w), Rational(-a_v), Rational(0)},
                     {Rational(b_v), Rational(b_w), Rational(-b_v), Rational(-b_w)}};
    auto sol = integer_kernel_vector(std::move(m), 4);
    detail::require(sol.has_value(), ErrorCode::internal_inconsistency, "system has only the trivial solution");
    const bool nonneg = std::all_of(sol->begin(), sol->end(), [](const Integer& e) { return e >= 0; });
    const bool nonpos = std::all_of(sol->begin(), sol->end(), [](const Integer& e) { return e <= 0; });
    detail::require(nonneg || nonpos, ErrorCode::internal_inconsistency, "solution is not sign-coherent");
    x_v = detail::to_exponent(abs((*sol)[0]));
    x_w = detail::to_exponent(abs((*sol)[1]));
    y_v = detail::to_exponent(abs((*sol)[2]));
    y_w = detail::to_exponent(abs((*sol)[3]));
  }

  const Exponent reads_needed = static_cast<Exponent>(nv.size()) * x_v + static_cast<Exponent>(nw.size()) * x_w;
  const Exponent x_u = detail::ceil_div(reads_needed, static_cast<Exponent>(u.size()));

  WitnessReport r;
  r.kind = WitnessKind::p2p3;
  r.x = {x_u, x_v, x_w};
  r.y = {x_u, y_v, y_w};
  r.lhs = detail::product_of_powers({{&u, x_u}, {&v, x_v}, {&u, 1}, {&w, x_w}});
  r.rhs = detail::product_of_powers({{&u, x_u}, {&w, y_w}, {&u, 1}, {&v, y_v}});
  detail::finish(r, x_v + x_w != 0);
  return r;
}

/// u^x_u v^x_v w^x_w ≡ u^y_u v^y_v w^y_w with x != y, when all projections
/// are powers of non-conjugate primitive roots p (writes) and q (reads).
inline WitnessReport nonconjugated_witness(const QueueWord& u, const QueueWord& v, const QueueWord& w,
                                           const Word& p, const Word& q) {
  detail::require_nonempty({&u, &v, &w});
  detail::require(is_primitive(p) && is_primitive(q), ErrorCode::precondition_violated,
                  "p and q must be primitive");
  detail::require(!conjugacy_decomposition(p, q), ErrorCode::precondition_violated, "p and q are conjugate");

  Exponents a{}, b{};
  const std::array<const QueueWord*, 3> triple{&u, &v, &w};
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = detail::power_exponent(project_pos(*triple[i]), p, ErrorCode::precondition_violated,
                                  "positive projection is not a power of p");
    b[i] = detail::power_exponent(project_neg(*triple[i]), q, ErrorCode::precondition_violated,
                                  "negative projection is not a power of q");
    detail::require(a[i] > 0 && b[i] > 0, ErrorCode::precondition_violated, "projections must be nonempty");
  }

  auto s = solve_projection_system(a, b, 0);
  const Exponent P = static_cast<Exponent>(p.size()), Q = static_cast<Exponent>(q.size());
  auto large_enough = [&](const Exponents& x) {
    return P + Q <= b[2] * x[2] * Q && P + Q <= (a[0] * x[0] + a[1] * x[1]) * P;
  };
  Exponent lift = 0;
  while (!(large_enough(s.x) && large_enough(s.y))) {
    for (auto& e : s.x) ++e;
    for (auto& e : s.y) ++e;
    detail::require(++lift <= 1'000'000, ErrorCode::iteration_cap_exceeded, "lifting did not converge");
  }

  WitnessReport r;
  r.kind = WitnessKind::non_conjugated;
  r.x.assign(s.x.begin(), s.x.end());
  r.y.assign(s.y.begin(), s.y.end());
  r.lhs = detail::product_of_powers({{&u, s.x[0]}, {&v, s.x[1]}, {&w, s.x[2]}});
  r.rhs = detail::product_of_powers({{&u, s.y[0]}, {&v, s.y[1]}, {&w, s.y[2]}});
  detail::finish(r, s.x != s.y);
  return r;
}

/// π = p^a, π̄ = q^b, and c = -1 if |μ| < |g|, else ⌊|μ|/|q|⌋.
struct PowerProfile {
  Exponent a = 0;
  Exponent b = 0;
  Exponent c = 0;
  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};

inline PowerProfile power_profile(const ConjugacyDecomposition& dec, const QueueWord& u) {
  const auto nf = normal_form(u);
  PowerProfile pr;
  pr.a = detail::power_exponent(nf.pos(), dec.p(), ErrorCode::precondition_violated,
                                "positive projection is not a power of p");
  pr.b = detail::power_exponent(nf.neg(), dec.q(), ErrorCode::precondition_violated,
                                "negative projection is not a power of q");
  detail::require(pr.a > 0 && pr.b > 0, ErrorCode::precondition_violated, "projections must be nonempty");
  pr.c = nf.center.size() < dec.g().size()
             ? -1
             : static_cast<Exponent>(nf.center.size() / dec.q().size());
  return pr;
}

/// The three affine forms whose minimum is X_x.
inline std::array<Exponent, 3> mixed_rows(const std::array<PowerProfile, 3>& pr, const Exponents& x) {
  const auto& [u, v, w] = pr;
  const Exponent mu = std::min(u.a, u.b), mv = std::min(v.a, v.b), mw = std::min(w.a, w.b);
  return {mu * x[0] + v.b * x[1] + w.b * x[2] + u.c - mu,
          u.a * x[0] + mv * x[1] + w.b * x[2] + v.c - mv,
          u.a * x[0] + v.a * x[1] + mw * x[2] + w.c - mw};
}

/// X_x with μ(u^x_u v^x_v w^x_w) = g·q^X = p^X·g.
inline Exponent mixed_exponent(const std::array<PowerProfile, 3>& pr, const Exponents& x) {
  for (const auto& p : pr)
    detail::require(p.a >= 1 && p.b >= 1, ErrorCode::precondition_violated, "a and b must be positive");
  for (Exponent e : x) detail::require(e >= 2, ErrorCode::precondition_violated, "exponents must be >= 2");
  const auto rows = mixed_rows(pr, x);
  return *std::min_element(rows.begin(), rows.end());
}

/// Like nonconjugated_witness for conjugate roots p = gh, q = hg; may
/// rotate the inputs, which the report records.
inline WitnessReport conjugated_witness(const QueueWord& u0, const QueueWord& v0, const QueueWord& w0,
                                        const ConjugacyDecomposition& dec) {
  detail::require_nonempty({&u0, &v0, &w0});
  const std::array<const QueueWord*, 3> input{&u0, &v0, &w0};
  std::array<PowerProfile, 3> in_pr{};
  for (std::size_t i = 0; i < 3; ++i) in_pr[i] = power_profile(dec, *input[i]);

  auto balanced = [](const PowerProfile& p) { return p.a == p.b; };
  enum class Case { balanced, writes_heavy_first, reads_heavy_last };
  Case which = Case::balanced;
  std::size_t shift = 0;  // rotation (u,v,w) = input[shift], input[shift+1], input[shift+2]
  if (!std::all_of(in_pr.begin(), in_pr.end(), balanced)) {
    bool found = false;
    for (std::size_t s = 0; s < 3 && !found; ++s) {
      if (in_pr[s].a > in_pr[s].b) {
        which = Case::writes_heavy_first;
      } else if (in_pr[(s + 2) % 3].a < in_pr[(s + 2) % 3].b) {
        which = Case::reads_heavy_last;
      } else {
        continue;
      }
      shift = s;
      found = true;
    }
    if (!found) detail::fail(ErrorCode::no_rotation_applicable, "no rotation satisfies the case split");
  }

  std::array<PowerProfile, 3> pr{};
  std::array<const QueueWord*, 3> t{};
  for (std::size_t i = 0; i < 3; ++i) {
    pr[i] = in_pr[(shift + i) % 3];
    t[i] = input[(shift + i) % 3];
  }

  auto s = solve_projection_system({pr[0].a, pr[1].a, pr[2].a}, {pr[0].b, pr[1].b, pr[2].b}, 2);
  if (which != Case::balanced) {
    // Lift the exponent of u (resp. w) until the target row is the minimum
    // for both vectors; that row grows strictly slower than the others.
    const std::size_t target = which == Case::writes_heavy_first ? 0 : 2;
    auto dominated = [&](const Exponents& x) {
      const auto rows = mixed_rows(pr, x);
      return rows[target] <= rows[(target + 1) % 3] && rows[target] <= rows[(target + 2) % 3];
    };
    Exponent k = 0;
    while (!(dominated(s.x) && dominated(s.y))) {
      ++s.x[target];
      ++s.y[target];
      detail::require(++k <= 1'000'000, ErrorCode::iteration_cap_exceeded, "k search did not terminate");
    }
  }
  detail::require(mixed_exponent(pr, s.x) == mixed_exponent(pr, s.y), ErrorCode::internal_inconsistency,
                  "mixed exponents of x and y differ");

  WitnessReport r;
  r.kind = WitnessKind::conjugated;
  r.rotation = shift == 0 ? Rotation::trivial : shift == 1 ? Rotation::vwu : Rotation::wuv;
  r.x.assign(s.x.begin(), s.x.end());
  r.y.assign(s.y.begin(), s.y.end());
  r.lhs = detail::product_of_powers({{t[0], s.x[0]}, {t[1], s.x[1]}, {t[2], s.x[2]}});
  r.rhs = detail::product_of_powers({{t[0], s.y[0]}, {t[1], s.y[1]}, {t[2], s.y[2]}});
  detail::finish(r, s.x != s.y);
  return r;
}

/// u^x_u1 v^x_v w t^x_t w^x_w u^x_u2 ≡ u^x_u1 w u^x_u2 w^x_w t^x_t v^x_v for
/// write-only u commuting with t and read-only v commuting with w.
inline WitnessReport p4_witness(const QueueWord& t, const QueueWord& u, const QueueWord& v, const QueueWord& w) {
  detail::require_nonempty({&t, &u, &v, &w});
  detail::require(project_neg(u).empty(), ErrorCode::precondition_violated, "u must not read");
  detail::require(project_pos(v).empty(), ErrorCode::precondition_violated, "v must not write");
  detail::require(equivalent(concat(v, w), concat(w, v)), ErrorCode::precondition_violated,
                  "v and w must commute in Q");
  detail::require(equivalent(concat(t, u), concat(u, t)), ErrorCode::precondition_violated,
                  "t and u must commute in Q");

  const auto [p, a_u_raw] = primitive_root(project_pos(u));
  const auto [q, b_v_raw] = primitive_root(project_neg(v));
  const auto a_u = static_cast<Exponent>(a_u_raw), b_v = static_cast<Exponent>(b_v_raw);
  const Exponent a_t = detail::power_exponent(project_pos(t), p, ErrorCode::root_mismatch,
                                              "positive projection of t is not a power of p");
  const Exponent b_w = detail::power_exponent(project_neg(w), q, ErrorCode::root_mismatch,
                                              "negative projection of w is not a power of q");

  const auto len_neg = [](const QueueWord& x) { return static_cast<Exponent>(project_neg(x).size()); };
  const Exponent reads_needed = b_w * len_neg(v) + len_neg(w) + a_u * len_neg(t) + b_v * len_neg(w);
  const Exponent y = detail::ceil_div(reads_needed, static_cast<Exponent>(u.size()));

  const Exponent x_t = a_u, x_u1 = y, x_u2 = a_t, x_v = b_w, x_w = b_v;
  WitnessReport r;
  r.kind = WitnessKind::p4;
  r.x = {x_t, x_u1, x_u2, x_v, x_w};
  r.lhs = detail::product_of_powers({{&u, x_u1}, {&v, x_v}, {&w, 1}, {&t, x_t}, {&w, x_w}, {&u, x_u2}});
  r.rhs = detail::product_of_powers({{&u, x_u1}, {&w, 1}, {&u, x_u2}, {&w, x_w}, {&t, x_t}, {&v, x_v}});
  detail::finish(r, x_t != 0 && x_w != 0);
  return r;
}

}  // namespace qmon
