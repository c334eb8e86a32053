#pragma once

// Enumeration helpers and brute-force oracles shared by the test binaries.
// Nothing here calls into the code it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmon/qmon.hpp"

namespace qt {

using qmon::Letter;
using qmon::QueueAction;
using qmon::QueueWord;
using qmon::Word;

inline const qmon::Alphabet& lower() {
  static const qmon::Alphabet a = qmon::Alphabet::lowercase();
  return a;
}

inline Word w(std::string_view s) { return qmon::parse_word(s, lower()); }
inline QueueWord qw(std::string_view s) { return qmon::parse_queue_word(s, lower()); }
inline std::string str(const Word& x) { return qmon::format_word(x, lower()); }
inline std::string str(const QueueWord& x) { return qmon::format_queue_word(x, lower()); }

/// Every sequence over `symbols` of length <= max_len, shortest first.
template <class T>
std::vector<std::vector<T>> all_sequences(const std::vector<T>& symbols, std::size_t max_len) {
  std::vector<std::vector<T>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const T& s : symbols) {
        auto next = out[i];
        next.push_back(s);
        out.push_back(std::move(next));
      }
    begin = end;
  }
  return out;
}

inline std::vector<Letter> first_letters(std::size_t k) {
  std::vector<Letter> out;
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(Letter{i});
  return out;
}

inline std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  return all_sequences(first_letters(k), max_len);
}

inline std::vector<QueueWord> all_queue_words(std::size_t k, std::size_t max_len) {
  std::vector<QueueAction> sigma;
  for (Letter a : first_letters(k)) {
    sigma.push_back(QueueAction::write(a));
    sigma.push_back(QueueAction::read(a));
  }
  return all_sequences(sigma, max_len);
}

inline bool ends_with(const Word& x, const Word& suffix) {
  return suffix.size() <= x.size() && std::equal(suffix.begin(), suffix.end(), x.end() - suffix.size());
}

inline bool starts_with(const Word& x, const Word& prefix) {
  return prefix.size() <= x.size() && std::equal(prefix.begin(), prefix.end(), x.begin());
}

/// Longest suffix of u that is a prefix of v, by trying every length.
inline Word brute_overlap(const Word& u, const Word& v) {
  for (std::size_t k = std::min(u.size(), v.size()) + 1; k-- > 0;) {
    Word s(u.end() - k, u.end());
    if (starts_with(v, s)) return s;
  }
  return {};
}

inline Word power(const Word& x, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), x.begin(), x.end());
  return out;
}

inline QueueWord power(const QueueWord& x, std::size_t n) {
  QueueWord out;
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), x.begin(), x.end());
  return out;
}

/// Smallest d dividing |x| with x = (x[0..d))^(|x|/d).
inline std::pair<Word, std::size_t> divisor_root(const Word& x) {
  for (std::size_t d = 1; d <= x.size(); ++d) {
    if (x.size() % d != 0) continue;
    Word r(x.begin(), x.begin() + d);
    if (power(r, x.size() / d) == x) return {r, x.size() / d};
  }
  return {x, 1};
}

inline bool brute_primitive(const Word& x) { return !x.empty() && divisor_root(x).second == 1; }

inline bool brute_conjugate(const Word& p, const Word& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Word r(p.begin() + i, p.end());
    r.insert(r.end(), p.begin(), p.begin() + i);
    if (r == q) return true;
  }
  return p.empty();
}

/// Direct simulation of the queue action, one step at a time.
inline std::optional<Word> simulate(Word q, const QueueWord& u) {
  for (const auto& x : u) {
    if (!x.is_read()) {
      q.push_back(x.letter);
    } else if (!q.empty() && q.front() == x.letter) {
      q.erase(q.begin());
    } else {
      return std::nullopt;
    }
  }
  return q;
}

inline Word writes_of(const QueueWord& u) {
  Word out;
  for (const auto& x : u)
    if (!x.is_read()) out.push_back(x.letter);
  return out;
}

inline Word reads_of(const QueueWord& u) {
  Word out;
  for (const auto& x : u)
    if (x.is_read()) out.push_back(x.letter);
  return out;
}

/// Letters a, b, c, ... as names.
inline qmon::Alphabet named(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return qmon::Alphabet(names);
}

/// All unordered pairs {i < j} of n vertices, in a fixed order.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// Graph on n vertices whose edge set is selected by the bits of `mask`
/// over vertex_pairs(n).
inline qmon::IndependenceAlphabet graph(std::size_t n, std::uint64_t mask) {
  std::vector<qmon::Edge> edges;
  const auto pairs = vertex_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1U) edges.emplace_back(Letter{pairs[k].first}, Letter{pairs[k].second});
  return qmon::IndependenceAlphabet(named(n), edges);
}

inline qmon::IndependenceAlphabet graph(std::string_view letters, std::vector<std::string> pairs) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  qmon::Alphabet a(names);
  std::vector<qmon::Edge> edges;
  for (const auto& p : pairs) edges.emplace_back(a.letter(p.substr(0, 1)), a.letter(p.substr(1, 1)));
  return qmon::IndependenceAlphabet(a, edges);
}

}  // namespace qt
