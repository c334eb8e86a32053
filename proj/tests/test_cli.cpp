#include <gtest/gtest.h>

#include <sstream>

#include "qmon/cli.hpp"
#include "support.hpp"

#ifndef QMON_DATA_DIR
#error "QMON_DATA_DIR must point at the sample data"
#endif

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmon");
  std::ostringstream out, err;
  const int code = qmon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QMON_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Examples) {
  auto r = run({"eq", "a~b~c", "~ba~c"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUIVALENT\n");
  r = run({"decide", data("k3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NOT EMBEDDABLE: odd cycle a b c\n");
  r = run({"nf", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "<||>\n");
}

TEST(Cli, QueueCommands) {
  EXPECT_EQ(run({"nf", "ab~b"}).out, "<b||ab>\n");
  EXPECT_EQ(run({"mul", "a~a", "b~b"}).out, "<|ab|>\n");
  EXPECT_EQ(run({"action", "ab", "~a"}).out, "b\n");
  EXPECT_EQ(run({"action", "b", "~a"}).out, "BOTTOM\n");
  EXPECT_EQ(run({"action", "", "a b ~a"}).out, "b\n");
  EXPECT_EQ(run({"eq", "a~a", "~aa"}).out, "DISTINGUISHED by queue ''\n");
  EXPECT_EQ(run({"eq", "ab", "ba"}).out, "DISTINGUISHED by queue ''\n");
  EXPECT_EQ(run({"eq", "~a~b", "~b~a"}).out, "DISTINGUISHED by queue 'ab'\n");
  EXPECT_EQ(run({"--max-len", "1", "eq", "~a~b", "~b~a"}).out, "DISTINGUISHED\n");
}

TEST(Cli, TraceCommands) {
  EXPECT_EQ(run({"lexnf", data("p4.json"), "dcba"}).out, "cdab\n");
  EXPECT_EQ(run({"traceeq", data("p4.json"), "ab", "ba"}).out, "EQUIVALENT\n");
  EXPECT_EQ(run({"traceeq", data("p4.json"), "ac", "ca"}).out, "NOT EQUIVALENT\n");
  EXPECT_EQ(run({"embed", data("matching.json"), "a0"}).out, "(b | d)\n");
  EXPECT_EQ(run({"embed", data("matching.json"), "a0 b0 a1"}).out, run({"embed", data("matching.json"), "b0 a0 a1"}).out);
  const auto k3 = run({"embed", data("k3.json"), "a"});
  EXPECT_EQ(k3.code, 4);
  EXPECT_NE(k3.err.find("odd cycle a b c"), std::string::npos);
}

TEST(Cli, Decide) {
  EXPECT_EQ(run({"decide", data("p4.json")}).out, "NOT EMBEDDABLE: missing pair a d\n");
  EXPECT_EQ(run({"decide", data("matching.json")}).out, "EMBEDDABLE: matching a0-b0 a1-b1\n");
  EXPECT_EQ(run({"decide", data("k23.json")}).out, "EMBEDDABLE: complete bipartite {a,b} {c,d,e} isolated {f}\n");
  EXPECT_EQ(run({"--json", "decide", data("k3.json")}).out,
            R"({"embeddable":false,"summary":"NOT EMBEDDABLE: odd cycle a b c","case":"odd_cycle","cycle":["a","b","c"]})"
            "\n");
}

TEST(Cli, Witness) {
  const auto r = run({"witness", "p4", "a", "a", "~b", "~b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"kind":"P4","x":[1,3,1,1,1],"y":null,"lhs":"aaa~b~ba~ba","rhs":"aaa~ba~ba~b","verified":true})"
            "\n");
  EXPECT_EQ(run({"witness", "p2p3", "a", "b~c", "bb~c~c"}).code, 0);
  EXPECT_EQ(run({"witness", "nonconj", "a~b", "a~b", "a~b", "a", "b"}).code, 0);
  const auto c = run({"witness", "conj", "a~aa", "a~a", "a~a"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find(R"x("rotation":"(u',v',w')")x"), std::string::npos);
  EXPECT_EQ(run({"witness", "p2p3", "a", "b", "c"}).code, 3);
  EXPECT_EQ(run({"witness", "conj", "a~b", "a~b", "a~b"}).code, 3);
  EXPECT_EQ(run({"witness", "p2p3", "a", "b"}).code, 2);
  EXPECT_EQ(run({"witness", "nope", "a"}).code, 2);
}

TEST(Cli, ExitCodesAndMessages) {
  auto r = run({"nf", "a~Q"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'~Q'"), std::string::npos);
  r = run({"decide", data("missing.json")});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  r = run({});
  EXPECT_EQ(r.code, 2);
  r = run({"--alphabet", data("matching.json"), "nf", "a0 ~b0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "<b0||a0>\n");
  r = run({"--alphabet", data("matching.json"), "nf", "a0 ~c0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("c0"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  EXPECT_EQ(run({"--json", "nf", "a~b~c"}).out,
            R"({"normal_form":"<bc||a>","reads":"bc","center":"","writes":"a"})"
            "\n");
  EXPECT_EQ(run({"--json", "eq", "a", "b"}).out, R"({"equivalent":false,"queue":""})"
                                                 "\n");
  EXPECT_EQ(run({"--json", "action", "b", "~a"}).out, R"({"bottom":true,"queue":null})"
                                                      "\n");
  EXPECT_EQ(run({"--json", "embed", data("matching.json"), "a0"}).out, R"({"first":"b","second":"d"})"
                                                                       "\n");
}

TEST(Cli, ByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"nf", "ab~b~a~ba"},
      {"eq", "ab~a", "b~aa"},
      {"decide", data("k23.json")},
      {"embed", data("k23.json"), "acfbd"},
      {"witness", "conj", "a~aa", "a~a", "~a~aa"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, PrintedNormalFormsReparse) {
  for (const auto& u : qt::all_queue_words(3, 4)) {
    const auto printed = run({"nf", qt::str(u)}).out;
    ASSERT_FALSE(printed.empty());
    const auto back = qmon::parse_normal_form(printed.substr(0, printed.size() - 1), qt::lower());
    ASSERT_EQ(back, qmon::normal_form(u));
  }
}
