#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/words.hpp"

namespace qmon {

enum class Polarity : std::uint8_t { write, read };

/// A basic queue action: write `a` (a) or read `a` (~a).
struct QueueAction {
  Letter letter;
  Polarity polarity = Polarity::write;

  static constexpr QueueAction write(Letter a) noexcept { return {a, Polarity::write}; }
  static constexpr QueueAction read(Letter a) noexcept { return {a, Polarity::read}; }

  [[nodiscard]] constexpr bool is_read() const noexcept { return polarity == Polarity::read; }

  friend constexpr auto operator<=>(const QueueAction&, const QueueAction&) = default;
};

using QueueWord = std::vector<QueueAction>;

inline QueueWord writes(std::span<const Letter> w) {
  QueueWord out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(QueueAction::write(a));
  return out;
}

inline QueueWord reads(std::span<const Letter> w) {
  QueueWord out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(QueueAction::read(a));
  return out;
}

/// a1 ~a1 a2 ~a2 ... an ~an
inline QueueWord interleave(std::span<const Letter> w) {
  QueueWord out;
  out.reserve(2 * w.size());
  for (Letter a : w) {
    out.push_back(QueueAction::write(a));
    out.push_back(QueueAction::read(a));
  }
  return out;
}

/// Positive projection π: keeps the written letters.
inline Word project_pos(std::span<const QueueAction> w) {
  Word out;
  for (const auto& x : w)
    if (!x.is_read()) out.push_back(x.letter);
  return out;
}

/// Negative projection π̄: keeps the read letters.
inline Word project_neg(std::span<const QueueAction> w) {
  Word out;
  for (const auto& x : w)
    if (x.is_read()) out.push_back(x.letter);
  return out;
}

/// Queue contents, or the absorbing error state ⊥.
class QueueState {
 public:
  QueueState() = default;
  explicit QueueState(Word contents) : contents_(std::move(contents)) {}

  static QueueState bottom() {
    QueueState s;
    s.contents_.reset();
    return s;
  }

  [[nodiscard]] bool is_bottom() const noexcept { return !contents_.has_value(); }
  [[nodiscard]] const Word& contents() const {
    detail::require(!is_bottom(), ErrorCode::precondition_violated, "bottom has no contents");
    return *contents_;
  }

  friend bool operator==(const QueueState&, const QueueState&) = default;

 private:
  std::optional<Word> contents_ = Word{};
};

/// q.w: run the actions of `w` on queue `q`.
inline QueueState action(const QueueState& q, std::span<const QueueAction> w) {
  if (q.is_bottom()) return q;
  std::deque<Letter> queue(q.contents().begin(), q.contents().end());
  for (const auto& x : w) {
    if (!x.is_read()) {
      queue.push_back(x.letter);
    } else if (!queue.empty() && queue.front() == x.letter) {
      queue.pop_front();
    } else {
      return QueueState::bottom();
    }
  }
  return QueueState(Word(queue.begin(), queue.end()));
}

/// ⟨u1, u2, u3⟩ denoting ~u1 · interleave(u2) · u3.
struct QueueNormalForm {
  Word reads_prefix;   // u1
  Word center;         // u2 = μ
  Word writes_suffix;  // u3

  static QueueNormalForm identity() { return {}; }

  static QueueNormalForm of(QueueAction x) {
    QueueNormalForm nf;
    (x.is_read() ? nf.reads_prefix : nf.writes_suffix).push_back(x.letter);
    return nf;
  }

  [[nodiscard]] QueueWord word() const {
    return concat(reads(reads_prefix), interleave(center), writes(writes_suffix));
  }
  [[nodiscard]] Word pos() const { return concat(center, writes_suffix); }
  [[nodiscard]] Word neg() const { return concat(reads_prefix, center); }
  [[nodiscard]] std::size_t size() const noexcept {
    return reads_prefix.size() + 2 * center.size() + writes_suffix.size();
  }

  friend auto operator<=>(const QueueNormalForm&, const QueueNormalForm&) = default;
  friend bool operator==(const QueueNormalForm&, const QueueNormalForm&) = default;
};

/// nf(xy) from nf(x) and nf(y):
///   μ(xy) = ol(μ(x)·π̄(y), π(x)·μ(y)),  s·μ(xy) = π̄(xy),  μ(xy)·t = π(xy).
inline QueueNormalForm multiply(const QueueNormalForm& x, const QueueNormalForm& y) {
  Word left = concat(x.center, y.reads_prefix, y.center);    // μ(x)·π̄(y)
  Word right = concat(x.center, x.writes_suffix, y.center);  // π(x)·μ(y)
  Word center = overlap(left, right);

  Word neg = concat(x.reads_prefix, left);    // π̄(xy)
  Word pos = concat(right, y.writes_suffix);  // π(xy)
  if (!is_suffix(center, neg) || !is_prefix(center, pos)) {
    detail::fail(ErrorCode::internal_inconsistency, "center is not a suffix of π̄ / prefix of π");
  }
  neg.resize(neg.size() - center.size());
  pos.erase(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(center.size()));
  return {std::move(neg), std::move(center), std::move(pos)};
}

inline QueueNormalForm normal_form(std::span<const QueueAction> w) {
  QueueNormalForm nf;
  for (const auto& x : w) nf = multiply(nf, QueueNormalForm::of(x));
  return nf;
}

inline Word mu(std::span<const QueueAction> w) { return normal_form(w).center; }

/// x^n by repeated squaring.
inline QueueNormalForm power(const QueueNormalForm& x, std::size_t n) {
  QueueNormalForm result, base = x;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

/// μ(x^n) = ol(μ(x)·π̄(x)^(n-1), π(x)^(n-1)·μ(x)).
inline Word power_mu(const QueueNormalForm& x, std::size_t n) {
  detail::require(n >= 1, ErrorCode::precondition_violated, "power_mu needs n >= 1");
  return overlap(concat(x.center, repeat(x.neg(), n - 1)),
                 concat(repeat(x.pos(), n - 1), x.center));
}

inline bool equivalent(std::span<const QueueAction> u, std::span<const QueueAction> v) {
  return normal_form(u) == normal_form(v);
}

namespace detail {

inline bool distinct_write_read(const QueueAction& x, const QueueAction& y) {
  return !x.is_read() && y.is_read() && x.letter != y.letter;
}

// Applies the first directed rule at position i, returning whether one fired:
//   a ~b     -> ~b a     (a != b)
//   a ~b ~c  -> ~b a ~c
//   a b ~c   -> a ~c b
inline bool rewrite_at(QueueWord& w, std::size_t i) {
  if (i + 1 < w.size() && distinct_write_read(w[i], w[i + 1])) {
    std::swap(w[i], w[i + 1]);
    return true;
  }
  if (i + 2 < w.size() && !w[i].is_read() && w[i + 1].is_read() && w[i + 2].is_read()) {
    std::swap(w[i], w[i + 1]);
    return true;
  }
  if (i + 2 < w.size() && !w[i].is_read() && !w[i + 1].is_read() && w[i + 2].is_read()) {
    std::swap(w[i + 1], w[i + 2]);
    return true;
  }
  return false;
}

}  // namespace detail

/// Test oracle: rewrites `w` with the directed rules, leftmost redex first,
/// until no rule applies.
inline QueueWord rewrite_nf_oracle(QueueWord w) {
  const std::size_t cap = w.size() * w.size() + w.size();
  std::size_t steps = 0;
  for (;;) {
    bool fired = false;
    for (std::size_t i = 0; i < w.size() && !fired; ++i) fired = detail::rewrite_at(w, i);
    if (!fired) return w;
    if (++steps > cap) detail::fail(ErrorCode::iteration_cap_exceeded, "rewriting did not terminate");
  }
}

/// Test oracle: the full ≡-class of `w`, closing under both directions of
/// every rule at every position. Rules preserve length, so the class is finite.
inline std::set<QueueWord> bfs_class_oracle(const QueueWord& w, std::size_t cap) {
  std::set<QueueWord> seen{w};
  std::vector<QueueWord> frontier{w};
  auto visit = [&](QueueWord next) {
    if (seen.insert(next).second) {
      if (seen.size() > cap) detail::fail(ErrorCode::cap_exceeded, "congruence class exceeds cap");
      frontier.push_back(std::move(next));
    }
  };
  while (!frontier.empty()) {
    QueueWord cur = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const bool has2 = i + 1 < cur.size(), has3 = i + 2 < cur.size();
      // a ~b <-> ~b a for a != b
      if (has2 && (detail::distinct_write_read(cur[i], cur[i + 1]) ||
                   detail::distinct_write_read(cur[i + 1], cur[i]))) {
        QueueWord n = cur;
        std::swap(n[i], n[i + 1]);
        visit(std::move(n));
      }
      if (!has3) continue;
      const bool r0 = cur[i].is_read(), r1 = cur[i + 1].is_read(), r2 = cur[i + 2].is_read();
      // a ~b ~c <-> ~b a ~c
      if (r2 && r0 != r1) {
        QueueWord n = cur;
        std::swap(n[i], n[i + 1]);
        visit(std::move(n));
      }
      // a b ~c <-> a ~c b
      if (!r0 && r1 != r2) {
        QueueWord n = cur;
        std::swap(n[i + 1], n[i + 2]);
        visit(std::move(n));
      }
    }
  }
  return seen;
}

enum class ShiftSide { read_block, write_block };

struct ShiftInstance {
  QueueWord lhs;
  QueueWord rhs;
  bool holds = false;
};

/// read_block:  u ~v ~w ≡ ~v u ~w   when |u| <= |w|
/// write_block: u v ~w ≡ u ~w v     when |u| >= |w|
inline ShiftInstance generalized_shift(std::span<const Letter> u, std::span<const Letter> v,
                                       std::span<const Letter> w, ShiftSide side) {
  ShiftInstance out;
  if (side == ShiftSide::read_block) {
    detail::require(u.size() <= w.size(), ErrorCode::precondition_violated,
                    "read-block shift needs |u| <= |w|");
    out.lhs = concat(writes(u), reads(v), reads(w));
    out.rhs = concat(reads(v), writes(u), reads(w));
  } else {
    detail::require(u.size() >= w.size(), ErrorCode::precondition_violated,
                    "write-block shift needs |u| >= |w|");
    out.lhs = concat(writes(u), writes(v), reads(w));
    out.rhs = concat(writes(u), reads(w), writes(v));
  }
  out.holds = equivalent(out.lhs, out.rhs);
  return out;
}

/// Bounded semantic search for a queue q with q.u != q.v. Queues are drawn
/// from `letters` in shortlex order up to length `max_len`.
inline std::optional<Word> distinguishing_queue(std::span<const QueueAction> u,
                                                std::span<const QueueAction> v,
                                                std::span<const Letter> letters,
                                                std::size_t max_len) {
  Word q;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0 && letters.empty()) break;
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      q.resize(len);
      for (std::size_t i = 0; i < len; ++i) q[i] = letters[digits[i]];
      QueueState s(q);
      if (action(s, u) != action(s, v)) return q;
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == letters.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

// ---- text syntax -------------------------------------------------------

inline QueueWord parse_queue_word(std::string_view text, const Alphabet& alphabet) {
  QueueWord w;
  for (const auto& t : detail::tokenize(text, alphabet, true))
    w.push_back(t.read ? QueueAction::read(t.letter) : QueueAction::write(t.letter));
  return w;
}

inline std::string format_queue_word(std::span<const QueueAction> w, const Alphabet& alphabet) {
  const bool packed = alphabet.single_char();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!packed && i > 0) out += ' ';
    if (w[i].is_read()) out += '~';
    out += alphabet.name(w[i].letter);
  }
  return out;
}

inline std::string format_normal_form(const QueueNormalForm& nf, const Alphabet& alphabet) {
  return "<" + format_word(nf.reads_prefix, alphabet) + "|" + format_word(nf.center, alphabet) +
         "|" + format_word(nf.writes_suffix, alphabet) + ">";
}

/// Parses "<u1|u2|u3>".
inline QueueNormalForm parse_normal_form(std::string_view text, const Alphabet& alphabet) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    detail::fail(ErrorCode::parse_error, "normal form must look like <u1|u2|u3>: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  auto bar1 = text.find('|');
  auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos || text.find('|', bar2 + 1) != std::string_view::npos) {
    detail::fail(ErrorCode::parse_error, "normal form needs exactly two '|' separators");
  }
  // Every triple denotes an irreducible word, so no further check is needed.
  return {parse_word(text.substr(0, bar1), alphabet),
          parse_word(text.substr(bar1 + 1, bar2 - bar1 - 1), alphabet),
          parse_word(text.substr(bar2 + 1), alphabet)};
}

inline std::string format_state(const QueueState& s, const Alphabet& alphabet) {
  return s.is_bottom() ? std::string("BOTTOM") : format_word(s.contents(), alphabet);
}

}  // namespace qmon
