#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/queue.hpp"

namespace qmon {

using Edge = std::pair<Letter, Letter>;

/// (Γ, I): a finite loop-free undirected graph whose vertices are letters.
class IndependenceAlphabet {
 public:
  IndependenceAlphabet() = default;

  /// Rejects self-pairs and duplicate pairs (in either orientation).
  IndependenceAlphabet(Alphabet letters, std::span<const Edge> independent)
      : letters_(std::move(letters)),
        adjacent_(letters_.size(), std::vector<bool>(letters_.size(), false)) {
    for (auto [a, b] : independent) {
      const std::string pair = "[" + name_or_id(a) + ", " + name_or_id(b) + "]";
      detail::require(letters_.contains(a) && letters_.contains(b), ErrorCode::parse_error,
                      "pair " + pair + " uses an undeclared letter");
      detail::require(a != b, ErrorCode::parse_error, "self-pair " + pair);
      detail::require(!adjacent_[a.id][b.id], ErrorCode::parse_error, "duplicate pair " + pair);
      adjacent_[a.id][b.id] = adjacent_[b.id][a.id] = true;
    }
  }

  IndependenceAlphabet(Alphabet letters, std::initializer_list<Edge> independent)
      : IndependenceAlphabet(std::move(letters), std::span<const Edge>(independent.begin(), independent.size())) {}

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] std::vector<Letter> letters() const { return letters_.letters(); }

  [[nodiscard]] bool independent(Letter a, Letter b) const { return adjacent_.at(a.id).at(b.id); }

  [[nodiscard]] std::vector<Letter> neighbors(Letter a) const {
    std::vector<Letter> out;
    for (std::size_t b = 0; b < size(); ++b)
      if (adjacent_[a.id][b]) out.push_back(Letter{static_cast<std::uint32_t>(b)});
    return out;
  }

  [[nodiscard]] std::size_t degree(Letter a) const {
    return static_cast<std::size_t>(std::count(adjacent_.at(a.id).begin(), adjacent_.at(a.id).end(), true));
  }

  /// Edges as (smaller, larger) pairs in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::uint32_t a = 0; a < size(); ++a)
      for (std::uint32_t b = a + 1; b < size(); ++b)
        if (adjacent_[a][b]) out.emplace_back(Letter{a}, Letter{b});
    return out;
  }

  friend bool operator==(const IndependenceAlphabet&, const IndependenceAlphabet&) = default;

 private:
  std::string name_or_id(Letter a) const {
    return letters_.contains(a) ? letters_.name(a) : "#" + std::to_string(a.id);
  }

  Alphabet letters_;
  std::vector<std::vector<bool>> adjacent_;
};

/// Connected components, each sorted, ordered by their least letter.
inline std::vector<std::vector<Letter>> connected_components(const IndependenceAlphabet& g) {
  std::vector<std::vector<Letter>> out;
  std::vector<bool> seen(g.size(), false);
  for (Letter start : g.letters()) {
    if (seen[start.id]) continue;
    std::vector<Letter> component{start}, stack{start};
    seen[start.id] = true;
    while (!stack.empty()) {
      Letter a = stack.back();
      stack.pop_back();
      for (Letter b : g.neighbors(a)) {
        if (!seen[b.id]) {
          seen[b.id] = true;
          component.push_back(b);
          stack.push_back(b);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

struct Bipartition {
  std::vector<Letter> first;
  std::vector<Letter> second;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// c0 - c1 - ... - c(k-1) - c0 with k odd.
struct OddCycle {
  std::vector<Letter> cycle;
  friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

/// Two letters on opposite sides of the 2-colouring that are not independent.
struct MissingPair {
  Letter a, b;
  friend bool operator==(const MissingPair&, const MissingPair&) = default;
};

using BipartiteCheck = std::variant<Bipartition, OddCycle, MissingPair>;

/// Decides whether the component is complete bipartite. On success the
/// smaller part comes first (ties: the part holding the least letter).
inline BipartiteCheck is_complete_bipartite(std::span<const Letter> component,
                                            const IndependenceAlphabet& g) {
  detail::require(!component.empty(), ErrorCode::precondition_violated, "empty component");
  std::vector<Letter> sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());
  {
    bool is_component = false;
    for (const auto& c : connected_components(g)) is_component = is_component || c == sorted;
    detail::require(is_component, ErrorCode::precondition_violated,
                    "letters do not form a connected component");
  }

  // BFS 2-colouring from the least letter.
  constexpr int unseen = -1;
  std::vector<int> colour(g.size(), unseen);
  std::vector<Letter> parent(g.size());
  std::vector<std::size_t> depth(g.size(), 0);
  std::vector<Letter> order{sorted.front()};
  colour[sorted.front().id] = 0;
  parent[sorted.front().id] = sorted.front();
  for (std::size_t head = 0; head < order.size(); ++head) {
    Letter a = order[head];
    for (Letter b : g.neighbors(a)) {
      if (colour[b.id] == unseen) {
        colour[b.id] = 1 - colour[a.id];
        parent[b.id] = a;
        depth[b.id] = depth[a.id] + 1;
        order.push_back(b);
      } else if (colour[b.id] == colour[a.id]) {
        // Both tree paths meet at a common ancestor; splice them into a cycle
        // that starts at that ancestor.
        std::vector<Letter> left{a}, right{b};
        while (left.back() != right.back()) {
          if (depth[left.back().id] >= depth[right.back().id]) {
            left.push_back(parent[left.back().id]);
          } else {
            right.push_back(parent[right.back().id]);
          }
        }
        right.pop_back();
        OddCycle odd;
        odd.cycle.assign(left.rbegin(), left.rend());
        odd.cycle.insert(odd.cycle.end(), right.begin(), right.end());
        return odd;
      }
    }
  }

  Bipartition parts;
  for (Letter a : sorted) (colour[a.id] == 0 ? parts.first : parts.second).push_back(a);
  for (Letter a : parts.first)
    for (Letter b : parts.second)
      if (!g.independent(a, b)) return MissingPair{std::min(a, b), std::max(a, b)};

  if (parts.second.size() < parts.first.size()) std::swap(parts.first, parts.second);
  return parts;
}

/// Four distinct letters (a, b, c, d) inducing the path a-b-c-d, if any.
inline std::optional<std::array<Letter, 4>> find_induced_p4(const IndependenceAlphabet& g) {
  const auto v = g.letters();
  auto I = [&](Letter x, Letter y) { return g.independent(x, y); };
  for (Letter a : v)
    for (Letter b : v) {
      if (b == a || !I(a, b)) continue;
      for (Letter c : v) {
        if (c == a || c == b || !I(b, c) || I(a, c)) continue;
        for (Letter d : v) {
          if (d == a || d == b || d == c) continue;
          if (I(c, d) && !I(b, d) && !I(d, a)) return std::array<Letter, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

/// Nothing when no four letters induce a path; otherwise such a path.
inline std::optional<std::array<Letter, 4>> is_p4_free(const IndependenceAlphabet& g) {
  return find_induced_p4(g);
}

/// Every letter has at most one independent partner.
struct MatchingCase {
  std::vector<Edge> pairs;
  std::vector<Letter> isolated;
  friend bool operator==(const MatchingCase&, const MatchingCase&) = default;
};

/// Exactly one nontrivial component, complete bipartite between `first` and
/// `second`; every other letter is isolated.
struct BipartiteCase {
  std::vector<Letter> first;
  std::vector<Letter> second;
  std::vector<Letter> isolated;
  friend bool operator==(const BipartiteCase&, const BipartiteCase&) = default;
};

struct TwoNontrivialComponents {
  Edge first_edge;
  Edge second_edge;
  friend bool operator==(const TwoNontrivialComponents&, const TwoNontrivialComponents&) = default;
};

struct NotCompleteBipartite {
  std::variant<OddCycle, MissingPair> witness;
  friend bool operator==(const NotCompleteBipartite&, const NotCompleteBipartite&) = default;
};

struct Classification {
  std::variant<MatchingCase, BipartiteCase, TwoNontrivialComponents, NotCompleteBipartite> verdict;

  [[nodiscard]] bool embeddable() const noexcept { return verdict.index() < 2; }
};

/// The trace monoid of `g` embeds into the queue monoid (equivalently, into
/// a direct product of two free monoids) iff all degrees are <= 1, or there
/// is exactly one nontrivial component and it is complete bipartite.
inline Classification decide_embeddable(const IndependenceAlphabet& g) {
  const auto letters = g.letters();
  const bool matching = std::all_of(letters.begin(), letters.end(),
                                    [&](Letter a) { return g.degree(a) <= 1; });
  if (matching) {
    MatchingCase m;
    for (Letter a : letters) {
      if (g.degree(a) == 0) {
        m.isolated.push_back(a);
      } else if (Letter b = g.neighbors(a).front(); a < b) {
        m.pairs.emplace_back(a, b);
      }
    }
    return {m};
  }

  std::vector<std::vector<Letter>> nontrivial;
  std::vector<Letter> isolated;
  for (auto& c : connected_components(g)) {
    if (c.size() == 1) {
      isolated.push_back(c.front());
    } else {
      nontrivial.push_back(std::move(c));
    }
  }
  if (nontrivial.size() >= 2) {
    auto edge_in = [&](const std::vector<Letter>& c) {
      Letter a = c.front();
      return Edge{a, g.neighbors(a).front()};
    };
    return {TwoNontrivialComponents{edge_in(nontrivial[0]), edge_in(nontrivial[1])}};
  }

  // Degree >= 2 somewhere, so exactly one nontrivial component remains.
  auto check = is_complete_bipartite(nontrivial.front(), g);
  if (auto* odd = std::get_if<OddCycle>(&check)) return {NotCompleteBipartite{*odd}};
  if (auto* missing = std::get_if<MissingPair>(&check)) return {NotCompleteBipartite{*missing}};

  auto parts = std::get<Bipartition>(check);
  const Letter least = nontrivial.front().front();
  if (std::find(parts.first.begin(), parts.first.end(), least) == parts.first.end())
    std::swap(parts.first, parts.second);
  return {BipartiteCase{parts.first, parts.second, isolated}};
}

struct GammaPartition {
  std::vector<Letter> plus;        // π ≠ ε, π̄ = ε
  std::vector<Letter> minus;       // π = ε, π̄ ≠ ε
  std::vector<Letter> plus_minus;  // both nonempty
  friend bool operator==(const GammaPartition&, const GammaPartition&) = default;
};

/// Splits letters by which projections of their queue image are empty.
inline GammaPartition gamma_partition(const std::map<Letter, QueueWord>& images) {
  GammaPartition out;
  for (const auto& [a, image] : images) {
    const bool pos = !project_pos(image).empty();
    const bool neg = !project_neg(image).empty();
    detail::require(pos || neg, ErrorCode::identity_image,
                    "letter #" + std::to_string(a.id) + " is mapped to the identity");
    (pos && neg ? out.plus_minus : pos ? out.plus : out.minus).push_back(a);
  }
  return out;
}

inline std::string describe(const Classification& c, const Alphabet& names) {
  auto list = [&](const std::vector<Letter>& ls) {
    std::string s = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + names.name(ls[i]);
    return s + "}";
  };
  auto edge = [&](Edge e) { return names.name(e.first) + "-" + names.name(e.second); };
  struct Visitor {
    decltype(list)& list_;
    decltype(edge)& edge_;
    const Alphabet& names_;
    std::string operator()(const MatchingCase& m) const {
      std::string s = "EMBEDDABLE: matching";
      for (auto e : m.pairs) s += " " + edge_(e);
      if (!m.isolated.empty()) s += " isolated " + list_(m.isolated);
      return s;
    }
    std::string operator()(const BipartiteCase& b) const {
      std::string s = "EMBEDDABLE: complete bipartite " + list_(b.first) + " " + list_(b.second);
      if (!b.isolated.empty()) s += " isolated " + list_(b.isolated);
      return s;
    }
    std::string operator()(const TwoNontrivialComponents& t) const {
      return "NOT EMBEDDABLE: two nontrivial components " + edge_(t.first_edge) + " " +
             edge_(t.second_edge);
    }
    std::string operator()(const NotCompleteBipartite& n) const {
      if (auto* odd = std::get_if<OddCycle>(&n.witness)) {
        std::string s = "NOT EMBEDDABLE: odd cycle";
        for (Letter a : odd->cycle) s += " " + names_.name(a);
        return s;
      }
      const auto& m = std::get<MissingPair>(n.witness);
      return "NOT EMBEDDABLE: missing pair " + names_.name(m.a) + " " + names_.name(m.b);
    }
  };
  return std::visit(Visitor{list, edge, names}, c.verdict);
}

}  // namespace qmon
