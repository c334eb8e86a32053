#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "qmon/alphabet.hpp"
#include "qmon/error.hpp"
#include "qmon/letter.hpp"

namespace qmon {

/// A representative word of a trace over a fixed independence alphabet.
/// The alphabet is borrowed and must outlive the trace word.
class TraceWord {
 public:
  TraceWord(const IndependenceAlphabet& alphabet, Word word) : alphabet_(&alphabet), word_(std::move(word)) {
    for (Letter a : word_) {
      detail::require(alphabet.alphabet().contains(a), ErrorCode::precondition_violated,
                      "letter #" + std::to_string(a.id) + " is not in the alphabet");
    }
  }

  static TraceWord parse(const IndependenceAlphabet& alphabet, std::string_view text) {
    return TraceWord(alphabet, parse_word(text, alphabet.alphabet()));
  }

  [[nodiscard]] const IndependenceAlphabet& alphabet() const noexcept { return *alphabet_; }
  [[nodiscard]] const Word& word() const noexcept { return word_; }
  [[nodiscard]] std::string str() const { return format_word(word_, alphabet_->alphabet()); }

 private:
  const IndependenceAlphabet* alphabet_;
  Word word_;
};

/// A total order on the letters, stored as a rank per letter.
class LetterOrder {
 public:
  /// Declaration order.
  explicit LetterOrder(std::size_t size) : rank_(size) {
    for (std::size_t i = 0; i < size; ++i) rank_[i] = static_cast<std::uint32_t>(i);
  }

  /// `sequence` lists every letter exactly once, least first.
  static LetterOrder from_sequence(std::span<const Letter> sequence) {
    LetterOrder order(sequence.size());
    std::vector<bool> seen(sequence.size(), false);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      Letter a = sequence[i];
      detail::require(a.id < sequence.size() && !seen[a.id], ErrorCode::precondition_violated,
                      "letter order must be a permutation");
      seen[a.id] = true;
      order.rank_[a.id] = static_cast<std::uint32_t>(i);
    }
    return order;
  }

  [[nodiscard]] bool less(Letter a, Letter b) const { return rank_.at(a.id) < rank_.at(b.id); }
  [[nodiscard]] std::size_t size() const noexcept { return rank_.size(); }

 private:
  std::vector<std::uint32_t> rank_;
};

/// The lexicographically least representative of [u]_I.
///
/// Repeatedly emits the least letter whose first remaining occurrence is
/// preceded only by letters independent of it.
inline Word lex_normal_form(const IndependenceAlphabet& g, std::span<const Letter> u,
                            const LetterOrder& order) {
  detail::require(order.size() == g.size(), ErrorCode::alphabet_mismatch,
                  "letter order does not match the alphabet");
  std::vector<Letter> rest(u.begin(), u.end());
  Word out;
  out.reserve(rest.size());
  std::vector<std::vector<Letter>> dependent(g.size());
  for (Letter a : g.letters())
    for (Letter b : g.letters())
      if (!g.independent(a, b)) dependent[a.id].push_back(b);
  std::vector<bool> blocked(g.size());
  while (!rest.empty()) {
    std::fill(blocked.begin(), blocked.end(), false);
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      Letter a = rest[i];
      if (!blocked[a.id] && (best == rest.size() || order.less(a, rest[best]))) best = i;
      // Everything dependent on `a` is now blocked, `a` itself included.
      for (Letter b : dependent[a.id]) blocked[b.id] = true;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

inline TraceWord lex_normal_form(const TraceWord& u, const LetterOrder& order) {
  return TraceWord(u.alphabet(), lex_normal_form(u.alphabet(), u.word(), order));
}

inline TraceWord lex_normal_form(const TraceWord& u) {
  return lex_normal_form(u, LetterOrder(u.alphabet().size()));
}

inline bool trace_equivalent(const TraceWord& u, const TraceWord& v) {
  detail::require(&u.alphabet() == &v.alphabet() || u.alphabet() == v.alphabet(),
                  ErrorCode::alphabet_mismatch, "trace words over different alphabets");
  return lex_normal_form(u).word() == lex_normal_form(v).word();
}

/// Test oracle: the ≡_I-class of `u` by closure under swapping adjacent
/// independent letters.
inline std::set<Word> bfs_trace_class(const TraceWord& u, std::size_t cap) {
  const auto& g = u.alphabet();
  std::set<Word> seen{u.word()};
  std::vector<Word> frontier{u.word()};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!g.independent(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) detail::fail(ErrorCode::cap_exceeded, "trace class exceeds cap");
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen;
}

/// Erases every letter outside `clique`.
inline Word clique_projection(std::span<const Letter> u, std::span<const Letter> clique) {
  Word out;
  for (Letter a : u)
    if (std::find(clique.begin(), clique.end(), a) != clique.end()) out.push_back(a);
  return out;
}

inline Word clique_projection(const TraceWord& u, std::span<const Letter> clique) {
  return clique_projection(u.word(), clique);
}

}  // namespace qmon
