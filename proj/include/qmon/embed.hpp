#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmon/alphabet.hpp"
#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/trace.hpp"

namespace qmon {

/// An element of a direct product of two free monoids.
struct ProductWord {
  Word first;
  Word second;

  friend ProductWord operator*(const ProductWord& x, const ProductWord& y) {
    return {concat(x.first, y.first), concat(x.second, y.second)};
  }
  friend auto operator<=>(const ProductWord&, const ProductWord&) = default;
  friend bool operator==(const ProductWord&, const ProductWord&) = default;
};

inline std::string format_product(const ProductWord& w, const Alphabet& first, const Alphabet& second) {
  return "(" + format_word(w.first, first) + " | " + format_word(w.second, second) + ")";
}

/// A homomorphism from Γ* into a product of free monoids, given by the
/// image of each letter.
struct ProductMorphism {
  std::vector<ProductWord> images;

  [[nodiscard]] ProductWord apply(std::span<const Letter> u) const {
    ProductWord out;
    for (Letter a : u) {
      const auto& img = images.at(a.id);
      out.first.insert(out.first.end(), img.first.begin(), img.first.end());
      out.second.insert(out.second.end(), img.second.begin(), img.second.end());
    }
    return out;
  }
};

enum class MatchingRole : std::uint8_t { a_side, b_side, isolated };

struct MatchingSlot {
  std::uint32_t index = 0;
  MatchingRole role = MatchingRole::isolated;
  friend bool operator==(const MatchingSlot&, const MatchingSlot&) = default;
};

/// Letter `x` plays role slots[x.id] in the pair a_i - b_i of the infinite
/// matching alphabet.
struct MatchingRecipe {
  std::vector<MatchingSlot> slots;
  friend bool operator==(const MatchingRecipe&, const MatchingRecipe&) = default;
};

/// Γ = first ⊎ second ⊎ isolated with I = first × second ∪ second × first.
struct BipartiteRecipe {
  std::vector<Letter> first;
  std::vector<Letter> second;
  std::vector<Letter> isolated;
  friend bool operator==(const BipartiteRecipe&, const BipartiteRecipe&) = default;
};

using EmbeddingRecipe = std::variant<MatchingRecipe, BipartiteRecipe>;

/// Indices are handed out in declaration order; each letter with a partner
/// opens an index as its a-side, the partner takes the b-side, and isolated
/// letters get an index of their own.
inline MatchingRecipe matching_recipe(const IndependenceAlphabet& g) {
  MatchingRecipe r;
  r.slots.resize(g.size());
  std::vector<bool> done(g.size(), false);
  std::uint32_t next = 0;
  for (Letter a : g.letters()) {
    if (done[a.id]) continue;
    const auto partners = g.neighbors(a);
    detail::require(partners.size() <= 1, ErrorCode::recipe_mismatch,
                    "letter '" + g.alphabet().name(a) + "' has more than one partner");
    done[a.id] = true;
    if (partners.empty()) {
      r.slots[a.id] = {next++, MatchingRole::isolated};
      continue;
    }
    Letter b = partners.front();
    detail::require(g.degree(b) == 1, ErrorCode::recipe_mismatch,
                    "letter '" + g.alphabet().name(b) + "' has more than one partner");
    r.slots[a.id] = {next, MatchingRole::a_side};
    r.slots[b.id] = {next, MatchingRole::b_side};
    done[b.id] = true;
    ++next;
  }
  return r;
}

inline EmbeddingRecipe make_recipe(const IndependenceAlphabet& g) {
  const auto c = decide_embeddable(g);
  if (!c.embeddable()) detail::fail(ErrorCode::not_embeddable, describe(c, g.alphabet()));
  if (std::holds_alternative<MatchingCase>(c.verdict)) return matching_recipe(g);
  const auto& b = std::get<BipartiteCase>(c.verdict);
  return BipartiteRecipe{b.first, b.second, b.isolated};
}

inline void validate(const MatchingRecipe& r, const IndependenceAlphabet& g) {
  detail::require(r.slots.size() == g.size(), ErrorCode::recipe_mismatch, "recipe size differs from alphabet");
  std::map<std::uint32_t, std::vector<Letter>> by_index;
  for (Letter a : g.letters()) by_index[r.slots[a.id].index].push_back(a);
  for (const auto& [index, members] : by_index) {
    const std::string where = "index " + std::to_string(index);
    detail::require(members.size() <= 2, ErrorCode::recipe_mismatch, where + " used by more than two letters");
    if (members.size() == 2) {
      auto ra = r.slots[members[0].id].role, rb = r.slots[members[1].id].role;
      detail::require((ra == MatchingRole::a_side && rb == MatchingRole::b_side) ||
                          (ra == MatchingRole::b_side && rb == MatchingRole::a_side),
                      ErrorCode::recipe_mismatch, where + " needs one a-side and one b-side letter");
      detail::require(g.independent(members[0], members[1]), ErrorCode::recipe_mismatch,
                      where + " pairs letters that are not independent");
    }
  }
  // Every independent pair must share an index, otherwise the images of
  // the pair would not commute.
  for (auto [a, b] : g.edges()) {
    detail::require(r.slots[a.id].index == r.slots[b.id].index, ErrorCode::recipe_mismatch,
                    "independent letters '" + g.alphabet().name(a) + "' and '" + g.alphabet().name(b) +
                        "' are not paired");
  }
}

inline void validate(const BipartiteRecipe& r, const IndependenceAlphabet& g) {
  std::vector<int> side(g.size(), -1);
  auto mark = [&](const std::vector<Letter>& ls, int s) {
    for (Letter a : ls) {
      detail::require(g.alphabet().contains(a) && side[a.id] == -1, ErrorCode::recipe_mismatch,
                      "recipe parts overlap or use unknown letters");
      side[a.id] = s;
    }
  };
  mark(r.first, 0);
  mark(r.second, 1);
  mark(r.isolated, 2);
  for (Letter a : g.letters()) {
    detail::require(side[a.id] != -1, ErrorCode::recipe_mismatch,
                    "letter '" + g.alphabet().name(a) + "' missing from recipe");
    for (Letter b : g.letters()) {
      const bool crossing = (side[a.id] == 0 && side[b.id] == 1) || (side[a.id] == 1 && side[b.id] == 0);
      detail::require(g.independent(a, b) == crossing, ErrorCode::recipe_mismatch,
                      "independence of '" + g.alphabet().name(a) + "' and '" + g.alphabet().name(b) +
                          "' does not match the bipartition");
    }
  }
}

/// η(a_i) = (c_i, d_i), η(b_i) = (c_i, d_i d_i); letter c_i / d_i is Letter{i}.
/// Isolated letters map like a-side letters.
inline ProductMorphism eta_morphism(const MatchingRecipe& r, const IndependenceAlphabet& g) {
  validate(r, g);
  ProductMorphism m;
  for (const auto& slot : r.slots) {
    const Letter i{slot.index};
    if (slot.role == MatchingRole::b_side) {
      m.images.push_back({{i}, {i, i}});
    } else {
      m.images.push_back({{i}, {i}});
    }
  }
  return m;
}

inline ProductWord eta_matching(const MatchingRecipe& r, const TraceWord& u) {
  return eta_morphism(r, u.alphabet()).apply(u.word());
}

/// Projections onto the cliques first ∪ isolated and second ∪ isolated of
/// the dependence graph.
inline ProductMorphism bipartite_morphism(const BipartiteRecipe& r, const IndependenceAlphabet& g) {
  validate(r, g);
  ProductMorphism m;
  m.images.resize(g.size());
  for (Letter a : r.first) m.images[a.id] = {{a}, {}};
  for (Letter a : r.second) m.images[a.id] = {{}, {a}};
  for (Letter a : r.isolated) m.images[a.id] = {{a}, {a}};
  return m;
}

inline ProductWord bipartite_embedding(const BipartiteRecipe& r, const TraceWord& u) {
  return bipartite_morphism(r, u.alphabet()).apply(u.word());
}

/// x_i ↦ zero^i one, reading each letter's id as its index.
inline Word binary_encode(std::span<const Letter> w, Letter zero, Letter one) {
  Word out;
  for (Letter x : w) {
    out.insert(out.end(), x.id, zero);
    out.push_back(one);
  }
  return out;
}

/// Inverse of binary_encode; nothing if `w` is not a concatenation of code words.
inline std::optional<Word> binary_decode(std::span<const Letter> w, Letter zero, Letter one) {
  Word out;
  std::uint32_t run = 0;
  for (Letter x : w) {
    if (x == zero) {
      ++run;
    } else if (x == one) {
      out.push_back(Letter{run});
      run = 0;
    } else {
      return std::nullopt;
    }
  }
  if (run != 0) return std::nullopt;
  return out;
}

/// Target alphabet {a, b} × {c, d}, as the letters a, b, c, d.
inline const Alphabet& two_free_alphabet() {
  static const Alphabet abcd(std::vector<std::string>{"a", "b", "c", "d"});
  return abcd;
}

inline constexpr Letter kLetterA{0}, kLetterB{1}, kLetterC{2}, kLetterD{3};

inline ProductMorphism morphism_for(const EmbeddingRecipe& recipe, const IndependenceAlphabet& g) {
  if (auto* m = std::get_if<MatchingRecipe>(&recipe)) return eta_morphism(*m, g);
  return bipartite_morphism(std::get<BipartiteRecipe>(recipe), g);
}

/// The embedding of M(Γ, I) into {a,b}* × {c,d}*: η or the clique
/// projections, followed by x_i ↦ a^i b on the first and x_i ↦ c^i d on
/// the second component.
inline ProductMorphism two_free_morphism(const IndependenceAlphabet& g) {
  ProductMorphism m = morphism_for(make_recipe(g), g);
  for (auto& img : m.images) {
    img.first = binary_encode(img.first, kLetterA, kLetterB);
    img.second = binary_encode(img.second, kLetterC, kLetterD);
  }
  return m;
}

inline ProductWord embed_to_two_free(const IndependenceAlphabet& g, const TraceWord& u) {
  return two_free_morphism(g).apply(u.word());
}

struct EmbeddingReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::size_t classes = 0;
  /// Two words whose images agree although the traces differ, or the reverse.
  std::optional<std::pair<Word, Word>> counterexample;
};

/// Checks image(u) = image(v) ⟺ u ≡_I v for all words of length <= n.
inline EmbeddingReport verify_embedding_bounded(const IndependenceAlphabet& g, const ProductMorphism& map,
                                                std::size_t n) {
  EmbeddingReport report;
  const LetterOrder order(g.size());
  std::map<Word, std::pair<ProductWord, Word>> by_trace;   // lnf -> (image, representative)
  std::map<ProductWord, std::pair<Word, Word>> by_image;   // image -> (lnf, representative)
  const auto letters = g.letters();
  Word u;
  for (std::size_t len = 0; len <= n; ++len) {
    if (len > 0 && letters.empty()) break;
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      u.resize(len);
      for (std::size_t i = 0; i < len; ++i) u[i] = letters[digits[i]];
      ++report.words_checked;
      Word nf = lex_normal_form(g, u, order);
      ProductWord image = map.apply(u);
      auto [t, fresh_t] = by_trace.try_emplace(nf, image, u);
      if (!fresh_t && t->second.first != image) {
        report.ok = false;
        report.counterexample = {t->second.second, u};
        return report;
      }
      auto [m, fresh_m] = by_image.try_emplace(image, nf, u);
      if (!fresh_m && m->second.first != nf) {
        report.ok = false;
        report.counterexample = {m->second.second, u};
        return report;
      }
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == letters.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  report.classes = by_trace.size();
  return report;
}

}  // namespace qmon
