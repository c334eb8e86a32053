#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace qmon;

namespace {

const IndependenceAlphabet& matching2() {
  static const IndependenceAlphabet g(Alphabet(std::vector<std::string>{"a0", "b0", "a1", "b1"}),
                                      {{Letter{0}, Letter{1}}, {Letter{2}, Letter{3}}});
  return g;
}

Word repeat_letter(std::uint32_t id, std::size_t n) { return Word(n, Letter{id}); }

}  // namespace

TEST(Eta, Examples) {
  const auto& g = matching2();
  const auto r = matching_recipe(g);
  EXPECT_EQ(eta_matching(r, TraceWord::parse(g, "a0 b0")), (ProductWord{repeat_letter(0, 2), repeat_letter(0, 3)}));
  EXPECT_EQ(eta_matching(r, TraceWord(g, {})), ProductWord{});
  const auto ba = eta_matching(r, TraceWord::parse(g, "b1 a1"));
  EXPECT_EQ(ba, (ProductWord{repeat_letter(1, 2), repeat_letter(1, 3)}));
  EXPECT_EQ(ba, eta_matching(r, TraceWord::parse(g, "a1 b1")));
}

TEST(Eta, IsolatedLettersGetFreshIndex) {
  const auto g = qt::graph("abc", {"ac"});
  const auto r = matching_recipe(g);
  EXPECT_EQ(r.slots[0], (MatchingSlot{0, MatchingRole::a_side}));
  EXPECT_EQ(r.slots[2], (MatchingSlot{0, MatchingRole::b_side}));
  EXPECT_EQ(r.slots[1], (MatchingSlot{1, MatchingRole::isolated}));
  EXPECT_EQ(eta_morphism(r, g).images[1], (ProductWord{{Letter{1}}, {Letter{1}}}));
}

TEST(Eta, BadRecipesRejected) {
  const auto& g = matching2();
  auto r = matching_recipe(g);
  r.slots[2].index = 0;  // three letters on index 0
  EXPECT_THROW((void)eta_morphism(r, g), Error);
  r = matching_recipe(g);
  r.slots[1].role = MatchingRole::a_side;
  EXPECT_THROW((void)eta_morphism(r, g), Error);
  r = matching_recipe(g);
  r.slots[1] = {5, MatchingRole::isolated};  // breaks the pair a0-b0
  try {
    (void)eta_morphism(r, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::recipe_mismatch);
  }
  EXPECT_THROW((void)matching_recipe(qt::graph("abc", {"ab", "bc"})), Error);
}

TEST(Bipartite, Examples) {
  const auto g = qt::graph("abc", {"ab", "bc"});
  const BipartiteRecipe r{{Letter{1}}, {Letter{0}, Letter{2}}, {}};
  EXPECT_EQ(bipartite_embedding(r, TraceWord::parse(g, "abc")), (ProductWord{qt::w("b"), qt::w("ac")}));
  EXPECT_EQ(bipartite_embedding(r, TraceWord(g, {})), ProductWord{});
  EXPECT_EQ(bipartite_embedding(r, TraceWord::parse(g, "ba")), (ProductWord{qt::w("b"), qt::w("a")}));
  EXPECT_EQ(bipartite_embedding(r, TraceWord::parse(g, "ab")), (ProductWord{qt::w("b"), qt::w("a")}));
}

TEST(Bipartite, BadRecipesRejected) {
  const auto g = qt::graph("abcd", {"ab", "bc"});
  EXPECT_THROW((void)bipartite_morphism(BipartiteRecipe{{Letter{1}}, {Letter{0}}, {Letter{3}}}, g), Error);
  EXPECT_THROW((void)bipartite_morphism(BipartiteRecipe{{Letter{1}}, {Letter{0}, Letter{2}, Letter{3}}, {}}, g),
               Error);
  EXPECT_THROW((void)bipartite_morphism(BipartiteRecipe{{Letter{1}}, {Letter{1}, Letter{0}, Letter{2}}, {Letter{3}}}, g),
               Error);
  EXPECT_NO_THROW((void)bipartite_morphism(BipartiteRecipe{{Letter{1}}, {Letter{0}, Letter{2}}, {Letter{3}}}, g));
}

TEST(Binary, Examples) {
  const Word x02{Letter{0}, Letter{2}};
  EXPECT_EQ(binary_encode(x02, kLetterA, kLetterB), qt::w("baab"));
  EXPECT_EQ(binary_encode(Word{}, kLetterA, kLetterB), Word{});
  EXPECT_EQ(binary_encode(Word{Letter{1}, Letter{1}}, kLetterA, kLetterB), qt::w("abab"));
}

TEST(Binary, DecodeRoundTrip) {
  for (const auto& x : qt::all_words(6, 6)) {
    const auto code = binary_encode(x, kLetterA, kLetterB);
    ASSERT_EQ(binary_decode(code, kLetterA, kLetterB), std::optional<Word>(x));
  }
  EXPECT_FALSE(binary_decode(qt::w("ba"), kLetterA, kLetterB).has_value());
  EXPECT_FALSE(binary_decode(qt::w("bc"), kLetterA, kLetterB).has_value());
}

TEST(TwoFree, Examples) {
  const auto g = qt::graph("ab", {"ab"});
  IndependenceAlphabet named(Alphabet(std::vector<std::string>{"a0", "b0"}), {{Letter{0}, Letter{1}}});
  const auto img = embed_to_two_free(named, TraceWord::parse(named, "a0"));
  EXPECT_EQ(format_product(img, two_free_alphabet(), two_free_alphabet()), "(b | d)");
  EXPECT_EQ(embed_to_two_free(g, TraceWord(g, {})), ProductWord{});
  const auto k3 = qt::graph("abc", {"ab", "bc", "ac"});
  try {
    (void)embed_to_two_free(k3, TraceWord::parse(k3, "a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_embeddable);
    EXPECT_NE(std::string(e.what()).find("odd cycle a b c"), std::string::npos);
  }
}

TEST(Verify, Examples) {
  const auto& g = matching2();
  auto rep = verify_embedding_bounded(g, two_free_morphism(g), 4);
  EXPECT_TRUE(rep.ok);
  EXPECT_FALSE(rep.counterexample);

  const auto k12 = qt::graph("abc", {"ab", "bc"});
  rep = verify_embedding_bounded(k12, two_free_morphism(k12), 4);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.words_checked, 1u + 3 + 9 + 27 + 81);

  const auto ab = qt::graph("ab", {});
  ProductMorphism bad{{ProductWord{{Letter{0}}, {Letter{0}}}, ProductWord{{Letter{0}}, {Letter{0}}}}};
  rep = verify_embedding_bounded(ab, bad, 2);
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_EQ(rep.counterexample->first, qt::w("a"));
  EXPECT_EQ(rep.counterexample->second, qt::w("b"));
}

// Images of concatenations are concatenations of images, and equivalent
// traces have equal images, on every embeddable graph with <= 5 letters.
TEST(TwoFree, HomomorphismAndInvariance) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = qt::vertex_pairs(n).size();
    const auto words = qt::all_words(n, n <= 4 ? 6 : 5);
    const auto short_words = qt::all_words(n, 3);
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      const auto g = qt::graph(n, mask);
      if (!decide_embeddable(g).embeddable()) continue;
      ++checked;
      const auto m = two_free_morphism(g);
      for (const auto& u : short_words)
        for (const auto& v : short_words) ASSERT_EQ(m.apply(concat(u, v)), m.apply(u) * m.apply(v));
      const LetterOrder order(n);
      std::map<Word, ProductWord> seen;
      for (const auto& u : words) {
        auto [it, fresh] = seen.emplace(lex_normal_form(g, u, order), m.apply(u));
        ASSERT_TRUE(fresh || it->second == m.apply(u)) << n << " " << mask;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}
