#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qmon/error.hpp"
#include "qmon/letter.hpp"

namespace qmon {

inline bool is_prefix(std::span<const Letter> x, std::span<const Letter> w) {
  return x.size() <= w.size() && std::equal(x.begin(), x.end(), w.begin());
}

inline bool is_suffix(std::span<const Letter> x, std::span<const Letter> w) {
  return x.size() <= w.size() && std::equal(x.begin(), x.end(), w.end() - x.size());
}

/// ol(u, v): the longest word that is a suffix of `u` and a prefix of `v`.
///
/// Runs the Knuth-Morris-Pratt automaton of `v` over `u`; the state after
/// the last letter of `u` is the length of the overlap.
inline Word overlap(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.empty() || v.empty()) return {};
  std::vector<std::size_t> fail(v.size(), 0);
  for (std::size_t i = 1, k = 0; i < v.size(); ++i) {
    while (k > 0 && v[i] != v[k]) k = fail[k - 1];
    if (v[i] == v[k]) ++k;
    fail[i] = k;
  }
  // Only the last |v| letters of u can take part in the overlap.
  std::size_t start = u.size() > v.size() ? u.size() - v.size() : 0;
  std::size_t state = 0;
  for (std::size_t i = start; i < u.size(); ++i) {
    if (state == v.size()) state = fail[state - 1];
    while (state > 0 && u[i] != v[state]) state = fail[state - 1];
    if (u[i] == v[state]) ++state;
  }
  return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(state));
}

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

/// Decomposes a nonempty word as root^exponent with a primitive root.
inline PrimitiveRoot primitive_root(std::span<const Letter> w) {
  detail::require(!w.empty(), ErrorCode::empty_word, "the empty word has no primitive root");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)), n / d};
  }
  return {Word(w.begin(), w.end()), 1};  // unreachable: d = n always matches
}

inline bool is_primitive(std::span<const Letter> w) {
  return !w.empty() && primitive_root(w).exponent == 1;
}

/// k with w = root^k, if any. The empty word is root^0.
inline std::optional<std::size_t> exponent_of(std::span<const Letter> w,
                                              std::span<const Letter> root) {
  if (root.empty()) return w.empty() ? std::optional<std::size_t>(0) : std::nullopt;
  if (w.size() % root.size() != 0) return std::nullopt;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != root[i % root.size()]) return std::nullopt;
  }
  return w.size() / root.size();
}

/// p = g·h and q = h·g with h nonempty and both p, q primitive.
class ConjugacyDecomposition {
 public:
  static ConjugacyDecomposition make(Word g, Word h) {
    detail::require(!h.empty(), ErrorCode::precondition_violated, "h must be nonempty");
    ConjugacyDecomposition d(std::move(g), std::move(h));
    detail::require(is_primitive(d.p_) && is_primitive(d.q_), ErrorCode::not_primitive,
                    "g·h and h·g must be primitive");
    return d;
  }

  [[nodiscard]] const Word& g() const noexcept { return g_; }
  [[nodiscard]] const Word& h() const noexcept { return h_; }
  [[nodiscard]] const Word& p() const noexcept { return p_; }
  [[nodiscard]] const Word& q() const noexcept { return q_; }

  friend bool operator==(const ConjugacyDecomposition& a, const ConjugacyDecomposition& b) {
    return a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  ConjugacyDecomposition(Word g, Word h)
      : g_(std::move(g)), h_(std::move(h)), p_(concat(g_, h_)), q_(concat(h_, g_)) {}

  Word g_, h_, p_, q_;
};

/// For primitive p, q: the split p = gh, q = hg with the shortest g, or
/// nothing when p and q are not conjugate.
inline std::optional<ConjugacyDecomposition> conjugacy_decomposition(std::span<const Letter> p,
                                                                     std::span<const Letter> q) {
  detail::require(is_primitive(p) && is_primitive(q), ErrorCode::not_primitive,
                  "conjugacy decomposition needs primitive words");
  if (p.size() != q.size()) return std::nullopt;
  for (std::size_t split = 0; split < p.size(); ++split) {
    Word g(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(split));
    Word h(p.begin() + static_cast<std::ptrdiff_t>(split), p.end());
    if (concat(h, g) == Word(q.begin(), q.end())) return ConjugacyDecomposition::make(g, h);
  }
  return std::nullopt;
}

/// If y is a suffix of some q^i and a prefix of some p^j, returns
/// k = ⌊|y|/|q|⌋, for which y = g·q^k = p^k·g holds.
inline std::optional<std::size_t> sandwich_form(const ConjugacyDecomposition& dec,
                                                std::span<const Letter> y) {
  const auto& p = dec.p();
  const auto& q = dec.q();
  detail::require(y.size() >= q.size(), ErrorCode::precondition_violated,
                  "sandwich_form needs |y| >= |q|");
  // Suffixes (prefixes) of q^i (p^j) of a fixed length stabilise once the
  // power is long enough, so one power per side decides membership.
  const std::size_t reps = y.size() / q.size() + 1;
  if (!is_suffix(y, repeat(q, reps)) || !is_prefix(y, repeat(p, reps))) return std::nullopt;
  const std::size_t k = y.size() / q.size();
  const Word left = concat(dec.g(), repeat(q, k));
  const Word right = concat(repeat(p, k), dec.g());
  detail::require(left == right && std::equal(y.begin(), y.end(), left.begin(), left.end()),
                  ErrorCode::internal_inconsistency, "y does not factor as g·q^k");
  return k;
}

/// ol(p'·g·q^i, p^j·g·q') for a proper suffix p' of p and a proper prefix
/// q' of q; always g·q^min(i,j).
inline Word overlap_gq(const ConjugacyDecomposition& dec, std::span<const Letter> p_suffix,
                       std::span<const Letter> q_prefix, std::size_t i, std::size_t j) {
  detail::require(p_suffix.size() < dec.p().size() && is_suffix(p_suffix, dec.p()),
                  ErrorCode::precondition_violated, "p' must be a proper suffix of p");
  detail::require(q_prefix.size() < dec.q().size() && is_prefix(q_prefix, dec.q()),
                  ErrorCode::precondition_violated, "q' must be a proper prefix of q");
  return concat(dec.g(), repeat(dec.q(), std::min(i, j)));
}

}  // namespace qmon
