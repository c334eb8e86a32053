#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmon/error.hpp"

namespace qmon {

/// A letter is an index into a declared alphabet. Letters are totally
/// ordered by that index, which is also their declaration order.
struct Letter {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

template <class T, class... More>
std::vector<T> concat(std::vector<T> head, const More&... more) {
  head.reserve((head.size() + ... + more.size()));
  (head.insert(head.end(), more.begin(), more.end()), ...);
  return head;
}

/// `w` repeated `n` times.
template <class T>
std::vector<T> repeat(std::span<const T> w, std::size_t n) {
  std::vector<T> out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

template <class T>
std::vector<T> repeat(const std::vector<T>& w, std::size_t n) {
  return repeat(std::span<const T>(w), n);
}

/// Named, ordered, finite base alphabet. Letter `i` is the i-th declared name.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      detail::require(!n.empty(), ErrorCode::parse_error, "empty letter name");
      detail::require(n.front() != '~', ErrorCode::parse_error,
                      "letter name '" + n + "' may not start with '~'");
      for (char c : n) {
        detail::require(!std::isspace(static_cast<unsigned char>(c)) && c != '|',
                        ErrorCode::parse_error,
                        "letter name '" + n + "' contains a reserved character");
      }
      auto [it, fresh] = index_.emplace(n, static_cast<std::uint32_t>(i));
      detail::require(fresh, ErrorCode::parse_error, "duplicate letter '" + n + "'");
    }
  }

  /// The default queue alphabet {a, ..., z}.
  static Alphabet lowercase() {
    std::vector<std::string> names;
    for (char c = 'a'; c <= 'z'; ++c) names.emplace_back(1, c);
    return Alphabet(std::move(names));
  }

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] bool contains(Letter a) const noexcept { return a.id < names_.size(); }
  [[nodiscard]] const std::string& name(Letter a) const { return names_.at(a.id); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  [[nodiscard]] std::optional<Letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return Letter{it->second};
  }

  [[nodiscard]] Letter letter(std::string_view name) const {
    auto a = find(name);
    if (!a) detail::fail(ErrorCode::parse_error, "unknown letter '" + std::string(name) + "'");
    return *a;
  }

  [[nodiscard]] std::vector<Letter> letters() const {
    std::vector<Letter> out(names_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Letter{static_cast<std::uint32_t>(i)};
    return out;
  }

  /// True when every name is one character, so words print without separators.
  [[nodiscard]] bool single_char() const noexcept {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct Token {
  Letter letter;
  bool read = false;
};

namespace detail {

// Token grammar: `x` or `~x`. Whitespace separates tokens; inside a
// whitespace-free chunk that is not itself a token, single-character
// letters may be juxtaposed.
inline std::vector<Token> tokenize(std::string_view text, const Alphabet& alphabet,
                                   bool allow_reads) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view chunk = text.substr(i, j - i);
    i = j;

    auto whole = [&](std::string_view c) -> bool {
      bool read = !c.empty() && c.front() == '~';
      if (read) c.remove_prefix(1);
      auto a = alphabet.find(c);
      if (!a) return false;
      if (read && !allow_reads) fail(ErrorCode::parse_error, "read token '~" + std::string(c) + "' not allowed here");
      out.push_back({*a, read});
      return true;
    };
    if (whole(chunk)) continue;

    std::size_t k = 0;
    while (k < chunk.size()) {
      bool read = chunk[k] == '~';
      std::size_t start = k;
      if (read) ++k;
      if (k >= chunk.size()) fail(ErrorCode::parse_error, "dangling '~' in token '" + std::string(chunk) + "'");
      std::string_view one = chunk.substr(k, 1);
      auto a = alphabet.find(one);
      if (!a) {
        fail(ErrorCode::parse_error, "unknown letter '" + std::string(chunk.substr(start, k + 1 - start)) +
                                         "' in token '" + std::string(chunk) + "'");
      }
      if (read && !allow_reads) fail(ErrorCode::parse_error, "read token '~" + std::string(one) + "' not allowed here");
      out.push_back({*a, read});
      ++k;
    }
  }
  return out;
}

}  // namespace detail

inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  for (const auto& t : detail::tokenize(text, alphabet, false)) w.push_back(t.letter);
  return w;
}

inline std::string format_word(std::span<const Letter> w, const Alphabet& alphabet) {
  const bool packed = alphabet.single_char();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!packed && i > 0) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

}  // namespace qmon
