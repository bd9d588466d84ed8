#include <doctest.h>

#include <quadstab/errors.hpp>
#include <quadstab/words.hpp>

using namespace quadstab;

TEST_SUITE("words") {

TEST_CASE("parse and serialize round trip") {
  for (const char* text : {"a", "a^-1", "a*b", "a^2*b^-3*a", "a1*b1*a1^-1",
                           "x*y*x*y*x*y"}) {
    Word w = parse_word(text);
    CHECK(parse_word(serialize_word(w)) == w);
  }
  CHECK(serialize_word(parse_word("a*b^2")) == "a*b^2");
  CHECK(serialize_word(Word{}) == "1");
  CHECK(parse_word("1").is_identity());
}

TEST_CASE("free reduction") {
  CHECK(parse_word("a*a^-1").is_identity());
  CHECK(parse_word("a*b*b^-1*a^-1").is_identity());
  CHECK(parse_word("a^2*a^-1") == parse_word("a"));
  CHECK(parse_word("a^0*b") == parse_word("b"));
  // adjacent same-generator syllables merge
  CHECK(parse_word("a*a") == parse_word("a^2"));
  Word w = free_reduce({{"a", 2}, {"a", -1}, {"b", 0}, {"b", 3}});
  CHECK(w == parse_word("a*b^3"));
}

TEST_CASE("parentheses and powers") {
  CHECK(parse_word("(a*b)^2") == parse_word("a*b*a*b"));
  CHECK(parse_word("(a*b)^-1") == parse_word("b^-1*a^-1"));
  CHECK(parse_word("(a*b*a)^2*c") == parse_word("a*b*a*a*b*a*c"));
  CHECK(parse_word("(a)^3") == parse_word("a^3"));
  CHECK(parse_word("(a*b)^0").is_identity());
}

TEST_CASE("word algebra laws") {
  Word a = parse_word("a*b^2");
  Word b = parse_word("b^-1*a");
  Word c = parse_word("a^-2*b*a");
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * a.inverse()).is_identity());
  CHECK((a.inverse() * a).is_identity());
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inverse());
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  CHECK(parse_word("a").length() == 1);
  CHECK(parse_word("a^-3*b").length() == 4);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_word("a**b"), ParseError);
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  CHECK_THROWS_AS(parse_word("(a*b"), ParseError);
  CHECK_THROWS_AS(parse_word("*a"), ParseError);
  CHECK_THROWS_AS(parse_word("a%b"), ParseError);
}

TEST_CASE("presentation parse and serialize") {
  Presentation p = parse_presentation("gens a b; rels a*b*a*b^-1*a^-1*b^-1;");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == parse_word("a*b*a*b^-1*a^-1*b^-1"));
  CHECK(p.has_generator("a"));
  CHECK(!p.has_generator("c"));

  Presentation q = parse_presentation(serialize_presentation(p));
  CHECK(q == p);

  // multiple relators, whitespace and newlines
  Presentation r = parse_presentation(
      "gens L N;\nrels (L*N)^2*N^-3,\n     N^6;");
  CHECK(r.generators.size() == 2);
  REQUIRE(r.relators.size() == 2);
  CHECK(r.relators[0] == parse_word("L*N*L*N*N^-3"));

  // an empty relator list gives a free group
  Presentation f = parse_presentation("gens x y; rels;");
  CHECK(f.relators.empty());
  CHECK_THROWS_AS(parse_presentation("gens x y;"), ParseError);
}

TEST_CASE("presentation rejects undeclared generators") {
  CHECK_THROWS_AS(parse_presentation("gens a; rels a*b;"), UnknownGenerator);
}

TEST_CASE("substitution") {
  std::map<std::string, Word> images{{"a", parse_word("x*y")},
                                     {"b", parse_word("y^-1")}};
  CHECK(substitute(parse_word("a*b"), images) == parse_word("x"));
  CHECK(substitute(parse_word("a^-1"), images) == parse_word("y^-1*x^-1"));
  CHECK(substitute(Word{}, images).is_identity());
  CHECK_THROWS_AS(substitute(parse_word("c"), images), UnknownGenerator);
}

}  // TEST_SUITE
