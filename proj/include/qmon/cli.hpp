#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmon/alphabet.hpp"
#include "qmon/embed.hpp"
#include "qmon/error.hpp"
#include "qmon/json_io.hpp"
#include "qmon/letter.hpp"
#include "qmon/queue.hpp"
#include "qmon/trace.hpp"
#include "qmon/witness.hpp"
#include "qmon/words.hpp"

namespace qmon::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kPrecondition = 3,
  kNotEmbeddable = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
      return kParseError;
    case ErrorCode::precondition_violated:
    case ErrorCode::empty_word:
    case ErrorCode::not_primitive:
    case ErrorCode::alphabet_mismatch:
    case ErrorCode::root_mismatch:
    case ErrorCode::degenerate_system:
    case ErrorCode::recipe_mismatch:
    case ErrorCode::identity_image:
      return kPrecondition;
    case ErrorCode::not_embeddable:
      return kNotEmbeddable;
    default:
      return kFailure;
  }
}

namespace detail {

struct Options {
  std::string alphabet_file;
  std::size_t max_len = 8;
  bool json = false;
};

inline Alphabet queue_alphabet(const Options& opt) {
  if (opt.alphabet_file.empty()) return Alphabet::lowercase();
  return load_alphabet(opt.alphabet_file, false).alphabet();
}

inline Json nf_json(const QueueNormalForm& nf, const Alphabet& names) {
  Json j;
  j["normal_form"] = format_normal_form(nf, names);
  j["reads"] = format_word(nf.reads_prefix, names);
  j["center"] = format_word(nf.center, names);
  j["writes"] = format_word(nf.writes_suffix, names);
  return j;
}

inline Json letters_json(const std::vector<Letter>& ls, const Alphabet& names) {
  Json j = Json::array();
  for (Letter a : ls) j.push_back(names.name(a));
  return j;
}

inline Json decide_json(const Classification& c, const Alphabet& names) {
  Json j;
  j["embeddable"] = c.embeddable();
  j["summary"] = describe(c, names);
  auto edge = [&](Edge e) { return Json::array({names.name(e.first), names.name(e.second)}); };
  if (auto* m = std::get_if<MatchingCase>(&c.verdict)) {
    j["case"] = "matching";
    j["pairs"] = Json::array();
    for (auto e : m->pairs) j["pairs"].push_back(edge(e));
    j["isolated"] = letters_json(m->isolated, names);
  } else if (auto* b = std::get_if<BipartiteCase>(&c.verdict)) {
    j["case"] = "complete_bipartite";
    j["first"] = letters_json(b->first, names);
    j["second"] = letters_json(b->second, names);
    j["isolated"] = letters_json(b->isolated, names);
  } else if (auto* t = std::get_if<TwoNontrivialComponents>(&c.verdict)) {
    j["case"] = "two_nontrivial_components";
    j["edges"] = Json::array({edge(t->first_edge), edge(t->second_edge)});
  } else {
    const auto& n = std::get<NotCompleteBipartite>(c.verdict);
    if (auto* odd = std::get_if<OddCycle>(&n.witness)) {
      j["case"] = "odd_cycle";
      j["cycle"] = letters_json(odd->cycle, names);
    } else {
      const auto& mp = std::get<MissingPair>(n.witness);
      j["case"] = "missing_pair";
      j["pair"] = Json::array({names.name(mp.a), names.name(mp.b)});
    }
  }
  return j;
}

// Letters of u and v, plus the first letter of A that occurs in neither.
inline std::vector<Letter> search_letters(const QueueWord& u, const QueueWord& v, const Alphabet& names) {
  std::vector<bool> used(names.size(), false);
  for (const auto& x : u) used[x.letter.id] = true;
  for (const auto& x : v) used[x.letter.id] = true;
  std::vector<Letter> out;
  bool fresh = false;
  for (Letter a : names.letters()) {
    if (used[a.id]) {
      out.push_back(a);
    } else if (!fresh) {
      out.push_back(a);
      fresh = true;
    }
  }
  return out;
}

inline WitnessReport run_witness(const std::string& kind, const std::vector<std::string>& args,
                                 const Alphabet& names) {
  auto arity = [&](std::size_t n, const char* usage) {
    if (args.size() != n)
      qmon::detail::fail(ErrorCode::parse_error, "witness " + kind + " expects " + usage + ", got " +
                                                     std::to_string(args.size()) + " arguments");
  };
  auto qw = [&](std::size_t i) { return parse_queue_word(args[i], names); };
  if (kind == "p2p3") {
    arity(3, "u v w");
    return p2p3_witness(qw(0), qw(1), qw(2));
  }
  if (kind == "nonconj") {
    arity(5, "u v w p q");
    return nonconjugated_witness(qw(0), qw(1), qw(2), parse_word(args[3], names), parse_word(args[4], names));
  }
  if (kind == "conj") {
    arity(3, "u v w");
    const QueueWord u = qw(0);
    const auto nf = normal_form(u);
    qmon::detail::require(!nf.pos().empty() && !nf.neg().empty(), ErrorCode::precondition_violated,
                          "u must both write and read");
    const Word p = primitive_root(nf.pos()).root, q = primitive_root(nf.neg()).root;
    auto dec = conjugacy_decomposition(p, q);
    qmon::detail::require(dec.has_value(), ErrorCode::precondition_violated,
                          "roots '" + format_word(p, names) + "' and '" + format_word(q, names) +
                              "' are not conjugate");
    return conjugated_witness(u, qw(1), qw(2), *dec);
  }
  if (kind == "p4") {
    arity(4, "t u v w");
    return p4_witness(qw(0), qw(1), qw(2), qw(3));
  }
  qmon::detail::fail(ErrorCode::parse_error,
                     "unknown witness kind '" + kind + "' (expected p2p3, nonconj, conj or p4)");
}

}  // namespace detail

/// Runs one command; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Queue monoid and trace monoid toolkit", "qmon"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Options opt;
  app.add_option("--alphabet", opt.alphabet_file, "JSON file declaring the queue alphabet");
  app.add_option("--max-len", opt.max_len, "longest queue tried when searching for a distinguishing queue");
  app.add_flag("--json", opt.json, "machine-readable output");

  std::string file, w1, w2, kind;
  std::vector<std::string> rest;

  auto* decide = app.add_subcommand("decide", "decide embeddability of an independence alphabet");
  decide->add_option("FILE", file)->required();
  auto* nf = app.add_subcommand("nf", "normal form of a queue word");
  nf->add_option("WORD", w1)->required();
  auto* mul = app.add_subcommand("mul", "normal form of a product");
  mul->add_option("W1", w1)->required();
  mul->add_option("W2", w2)->required();
  auto* eq = app.add_subcommand("eq", "equivalence of two queue words");
  eq->add_option("W1", w1)->required();
  eq->add_option("W2", w2)->required();
  auto* act = app.add_subcommand("action", "run a queue word on a queue");
  act->add_option("QUEUE", w1)->required();
  act->add_option("WORD", w2)->required();
  auto* traceeq = app.add_subcommand("traceeq", "equivalence of two trace words");
  traceeq->add_option("FILE", file)->required();
  traceeq->add_option("W1", w1)->required();
  traceeq->add_option("W2", w2)->required();
  auto* lexnf = app.add_subcommand("lexnf", "lexicographic normal form of a trace word");
  lexnf->add_option("FILE", file)->required();
  lexnf->add_option("WORD", w1)->required();
  auto* embed = app.add_subcommand("embed", "image of a trace word in {a,b}* x {c,d}*");
  embed->add_option("FILE", file)->required();
  embed->add_option("WORD", w1)->required();
  auto* witness = app.add_subcommand("witness", "construct and verify a witness equation");
  witness->add_option("KIND", kind, "p2p3 | nonconj | conj | p4")->required();
  witness->add_option("ARGS", rest)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (decide->parsed()) {
      const auto g = load_alphabet(file);
      const auto c = decide_embeddable(g);
      if (opt.json) {
        out << detail::decide_json(c, g.alphabet()).dump() << "\n";
      } else {
        out << describe(c, g.alphabet()) << "\n";
      }
      return kOk;
    }
    if (witness->parsed()) {
      const auto names = detail::queue_alphabet(opt);
      out << to_json(detail::run_witness(kind, rest, names), names).dump() << "\n";
      return kOk;
    }
    if (traceeq->parsed() || lexnf->parsed() || embed->parsed()) {
      const auto g = load_alphabet(file);
      const auto u = TraceWord::parse(g, w1);
      if (lexnf->parsed()) {
        const auto s = lex_normal_form(u).str();
        if (opt.json) {
          out << Json{{"lnf", s}}.dump() << "\n";
        } else {
          out << s << "\n";
        }
      } else if (traceeq->parsed()) {
        const auto v = TraceWord::parse(g, w2);
        const bool same = trace_equivalent(u, v);
        if (opt.json) {
          out << Json{{"equivalent", same}, {"lnf1", lex_normal_form(u).str()}, {"lnf2", lex_normal_form(v).str()}}.dump()
              << "\n";
        } else {
          out << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
        }
      } else {
        const auto image = embed_to_two_free(g, u);
        const auto& ab = two_free_alphabet();
        if (opt.json) {
          out << Json{{"first", format_word(image.first, ab)}, {"second", format_word(image.second, ab)}}.dump()
              << "\n";
        } else {
          out << format_product(image, ab, ab) << "\n";
        }
      }
      return kOk;
    }

    const auto names = detail::queue_alphabet(opt);
    if (nf->parsed() || mul->parsed()) {
      QueueWord w = parse_queue_word(w1, names);
      if (mul->parsed()) w = concat(w, parse_queue_word(w2, names));
      const auto n = normal_form(w);
      out << (opt.json ? detail::nf_json(n, names).dump() : format_normal_form(n, names)) << "\n";
      return kOk;
    }
    if (eq->parsed()) {
      const auto u = parse_queue_word(w1, names), v = parse_queue_word(w2, names);
      const bool same = equivalent(u, v);
      std::optional<Word> queue;
      if (!same) queue = distinguishing_queue(u, v, detail::search_letters(u, v, names), opt.max_len);
      if (opt.json) {
        Json j{{"equivalent", same}};
        j["queue"] = queue ? Json(format_word(*queue, names)) : Json(nullptr);
        out << j.dump() << "\n";
      } else if (same) {
        out << "EQUIVALENT\n";
      } else if (queue) {
        out << "DISTINGUISHED by queue '" << format_word(*queue, names) << "'\n";
      } else {
        out << "DISTINGUISHED\n";
      }
      return kOk;
    }
    if (act->parsed()) {
      const auto s = action(QueueState(parse_word(w1, names)), parse_queue_word(w2, names));
      if (opt.json) {
        Json j{{"bottom", s.is_bottom()}};
        j["queue"] = s.is_bottom() ? Json(nullptr) : Json(format_word(s.contents(), names));
        out << j.dump() << "\n";
      } else {
        out << format_state(s, names) << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kFailure;
}

}  // namespace qmon::cli
