#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qmon/alphabet.hpp"
#include "qmon/error.hpp"
#include "qmon/letter.hpp"
#include "qmon/queue.hpp"
#include "qmon/witness.hpp"

namespace qmon {

using Json = nlohmann::ordered_json;

/// Reads {"letters": [...], "independent": [[x, y], ...]}. With
/// `require_pairs` false the "independent" member may be left out.
inline IndependenceAlphabet alphabet_from_json(std::string_view text, bool require_pairs = true) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  detail::require(doc.is_object(), ErrorCode::parse_error, "alphabet file must hold a JSON object");
  detail::require(doc.contains("letters") && doc["letters"].is_array(), ErrorCode::parse_error,
                  "alphabet file needs a \"letters\" array");

  std::vector<std::string> names;
  for (const auto& x : doc["letters"]) {
    detail::require(x.is_string(), ErrorCode::parse_error, "letter " + x.dump() + " is not a string");
    names.push_back(x.get<std::string>());
  }
  Alphabet letters(std::move(names));

  std::vector<Edge> pairs;
  if (!doc.contains("independent")) {
    detail::require(!require_pairs, ErrorCode::parse_error, "alphabet file needs an \"independent\" array");
    return IndependenceAlphabet(std::move(letters), pairs);
  }
  const auto& ind = doc["independent"];
  detail::require(ind.is_array(), ErrorCode::parse_error, "\"independent\" must be an array");
  for (const auto& pair : ind) {
    const bool shaped = pair.is_array() && pair.size() == 2 && pair[0].is_string() && pair[1].is_string();
    detail::require(shaped, ErrorCode::parse_error, "pair " + pair.dump() + " must be two letter names");
    const auto x = letters.find(pair[0].get<std::string>());
    const auto y = letters.find(pair[1].get<std::string>());
    detail::require(x && y, ErrorCode::parse_error, "pair " + pair.dump() + " uses an undeclared letter");
    pairs.emplace_back(*x, *y);
  }
  return IndependenceAlphabet(std::move(letters), pairs);
}

inline IndependenceAlphabet load_alphabet(const std::string& path, bool require_pairs = true) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), ErrorCode::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return alphabet_from_json(buf.str(), require_pairs);
}

inline Json to_json(const WitnessReport& r, const Alphabet& names) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  if (r.kind == WitnessKind::conjugated) j["rotation"] = std::string(to_string(r.rotation));
  j["x"] = r.x;
  j["y"] = r.kind == WitnessKind::p4 ? Json(nullptr) : Json(r.y);
  j["lhs"] = format_queue_word(r.lhs, names);
  j["rhs"] = format_queue_word(r.rhs, names);
  j["verified"] = r.verified;
  return j;
}

}  // namespace qmon
