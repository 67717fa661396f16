// Copyright 2026 discopile contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <string>
#include <vector>

#include "discopile/corpus.hpp"
#include "discopile/errors.hpp"
#include "discopile/pregroup.hpp"
#include "doctest.h"

using namespace discopile;

TEST_CASE("type strings parse and format round-trip") {
  PregroupType t = parse_type("n.r@s@n.l");
  REQUIRE(t.factors.size() == 3);
  CHECK(t.factors[0] == make_simple(Base::N, 1));
  CHECK(t.factors[1] == make_simple(Base::S, 0));
  CHECK(t.factors[2] == make_simple(Base::N, -1));
  CHECK(format_type(t) == "n.r@s@n.l");

  CHECK(parse_type("1").factors.empty());
  CHECK(format_type(PregroupType{}) == "1");
  CHECK(parse_type("n.l.l").factors[0].adjoint == -2);
  CHECK(parse_type("s.r.r").factors[0].adjoint == 2);
  CHECK(format_simple(make_simple(Base::N, -1)) == "n.l");
}

TEST_CASE("type string parser rejects malformed input") {
  CHECK_THROWS_AS(parse_type("n.l.l.l"), ParseError);
  CHECK_THROWS_AS(parse_type("x"), ParseError);
  CHECK_THROWS_AS(parse_type("n.z"), ParseError);
  CHECK_THROWS_AS(parse_type("n.l.r"), ParseError);
  CHECK_THROWS_AS(parse_type("n@@s"), ParseError);
}

TEST_CASE("cancellation pairs left adjoint below right") {
  CHECK(cancels(make_simple(Base::N, -1), make_simple(Base::N, 0)));
  CHECK(cancels(make_simple(Base::N, 0), make_simple(Base::N, 1)));
  CHECK(cancels(make_simple(Base::S, -1), make_simple(Base::S, 0)));
  CHECK_FALSE(cancels(make_simple(Base::N, 0), make_simple(Base::N, 0)));
  CHECK_FALSE(cancels(make_simple(Base::N, 1), make_simple(Base::N, 0)));
  CHECK_FALSE(cancels(make_simple(Base::N, -1), make_simple(Base::S, 0)));
  CHECK_FALSE(cancels(make_simple(Base::N, 0), make_simple(Base::N, 2)));
}

TEST_CASE("sentence type is the concatenated word types") {
  Lexicon lex = builtin_lexicon();
  PregroupType t = type_of_sentence({"alice", "plays", "guitar"}, lex);
  CHECK(format_type(t) == "n@n.r@s@n.l@n");

  CHECK(type_of_sentence({}, lex).factors.empty());
  CHECK(format_type(type_of_sentence({"pancakes", "are", "tasty"}, lex)) ==
        "n@n.r@s@n.l@n");
  CHECK_THROWS_AS(type_of_sentence({"alice", "defenestrates"}, lex),
                  UnknownTokenError);
}

TEST_CASE("transitive sentence reduces to a single s") {
  ReductionTrace tr = reduce(parse_type("n@n.r@s@n.l@n"));
  REQUIRE(tr.cups.size() == 2);
  CHECK(tr.cups[0] == std::pair<int, int>{0, 1});
  CHECK(tr.cups[1] == std::pair<int, int>{3, 4});
  REQUIRE(tr.leftovers.size() == 1);
  CHECK(tr.leftovers[0] == 2);
}

TEST_CASE("already-reduced and irreducible types keep their residue") {
  ReductionTrace tr = reduce(parse_type("s"));
  CHECK(tr.cups.empty());
  CHECK(tr.leftovers == std::vector<int>{0});

  // Verb followed by its object only: the n.r has no subject to eat.
  tr = reduce(parse_type("n.r@s@n.l@n"));
  REQUIRE(tr.leftovers.size() == 2);
  CHECK(tr.leftovers[0] == 0);
  CHECK(tr.leftovers[1] == 1);
  CHECK(reduce(PregroupType{}).cups.empty());
}

TEST_CASE("reduction backtracks past a greedy dead end") {
  // Leftmost-first greedy cancels (0,1) and strands n.r@n; the maximal
  // reduction instead nests (1,2) inside (0,3) and empties the type.
  ReductionTrace tr = reduce(parse_type("n.l@n@n.r@n"));
  REQUIRE(tr.cups.size() == 2);
  CHECK(tr.cups[0] == std::pair<int, int>{1, 2});
  CHECK(tr.cups[1] == std::pair<int, int>{0, 3});
  CHECK(tr.leftovers.empty());
}

TEST_CASE("grammaticality means residue is exactly one plain s") {
  Lexicon lex = builtin_lexicon();
  CHECK(is_grammatical(type_of_sentence({"alice", "plays", "guitar"}, lex)));
  CHECK(is_grammatical(type_of_sentence({"pasta", "is", "delicious"}, lex)));
  CHECK_FALSE(is_grammatical(parse_type("n")));
  CHECK_FALSE(is_grammatical(parse_type("n.l@n@n.r@n")));  // empty residue
  CHECK_FALSE(is_grammatical(PregroupType{}));
  CHECK_FALSE(is_grammatical(type_of_sentence({"plays", "alice"}, lex)));
}

TEST_CASE("replaying a trace reproduces its leftovers") {
  Lexicon lex = builtin_lexicon();
  Corpus corpus = builtin_corpus();
  for (const LabeledSentence& s : corpus.sentences) {
    PregroupType t = type_of_sentence(s.tokens, lex);
    ReductionTrace tr = reduce(t);
    CHECK(replay_trace(t, tr) == tr.leftovers);
    REQUIRE(tr.leftovers.size() == 1);
    CHECK(t.factors[tr.leftovers[0]] == make_simple(Base::S, 0));
  }
}

TEST_CASE("produced cups never cross") {
  std::vector<std::string> cases = {"n@n.r@s@n.l@n", "n.l@n@n.r@n",
                                    "n@n.r@s@s.l@s@n", "n@n.r"};
  for (const std::string& text : cases) {
    ReductionTrace tr = reduce(parse_type(text));
    for (std::size_t x = 0; x < tr.cups.size(); ++x) {
      for (std::size_t y = x + 1; y < tr.cups.size(); ++y) {
        auto [i, j] = tr.cups[x];
        auto [k, l] = tr.cups[y];
        if (k < i) {
          std::swap(i, k);
          std::swap(j, l);
        }
        CHECK((j < k || l < j));
      }
    }
  }
}

TEST_CASE("lexicon file round-trips and reports parse errors") {
  std::string path = "/tmp/discopile_test_lexicon.tsv";
  Lexicon lex = builtin_lexicon();
  save_lexicon(lex, path);
  Lexicon reloaded = load_lexicon(path);
  CHECK(reloaded.entries == lex.entries);

  FILE* f = std::fopen(path.c_str(), "wb");
  REQUIRE(f != nullptr);
  std::fputs("alice\tn\nbroken line without tab\n", f);
  std::fclose(f);
  try {
    load_lexicon(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(load_lexicon("/tmp/no_such_discopile_lexicon"), IoError);
  std::remove(path.c_str());
}
