#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "iipm/io.hpp"

using namespace iipm;
using namespace iipm::testing;

namespace {

int line_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("minimal document: operator block fixes the dimension") {
  const Document doc = parse_document("%IIPM v1\n"
                                      "ring gf2k k=1 modulus=2 star=identity\n"
                                      "operator name=T\n"
                                      "1\n");
  CHECK(doc.ring == gf2());
  REQUIRE(doc.space.has_value());
  CHECK(doc.space->dim() == 1);
  CHECK(exact_equal(doc.space->gram(), identity_matrix(gf2(), 1)));
  REQUIRE(doc.operators.size() == 1);
  CHECK(doc.operators[0].first == "T");
  CHECK(doc.operators[0].second == identity_op(*doc.space));
}

TEST_CASE("full document with explicit gram") {
  const std::string text =
      "%IIPM v1\n"
      "ring gf2k k=2 modulus=7 star=frobenius:1\n"
      "space dim=2\n"
      "gram\n"
      "1 2\n"
      "3 0\n"
      "operator name=A\n"
      "2 0\n"
      "0 3\n"
      "operator name=B\n"
      "1 1\n"
      "0 1\n";
  const Document doc = parse_document(text);
  CHECK(doc.ring == gf4(true));
  CHECK(doc.space->dim() == 2);
  CHECK(doc.space->gram()(0, 1) == gf4(true).element(2));
  REQUIRE(doc.operators.size() == 2);
  CHECK(doc.find("A") != nullptr);
  CHECK(doc.find("B") != nullptr);
  CHECK(doc.find("C") == nullptr);

  // canonical serialization round-trips to an equal document
  CHECK(parse_document(serialize_document(doc)) == doc);
  CHECK(serialize_document(parse_document(serialize_document(doc))) ==
        serialize_document(doc));
}

TEST_CASE("quotient ring documents") {
  const Document doc = parse_document("%IIPM v1\n"
                                      "ring quotient k=2 modulus=5 star=identity\n"
                                      "space dim=1\n"
                                      "gram\n"
                                      "2\n");
  CHECK(doc.ring == quotient_x1sq());
  CHECK(doc.space->gram()(0, 0) == doc.ring.element(2));
}

TEST_CASE("round trip on random documents") {
  Rng rng(20260808);
  for (int rep = 0; rep < 200; ++rep) {
    const Document doc = random_document(rng);
    const std::string text = serialize_document(doc);
    CAPTURE(text);
    const Document back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK(line_of([] { parse_document("%IIPM v2\n"); }) == 1);
  CHECK(line_of([] {
          parse_document("%IIPM v1\n"
                         "ring gf2k k=1 modulus=2 star=identity\n"
                         "frobnicate\n");
        }) == 3);
  CHECK(line_of([] {
          parse_document("%IIPM v1\n"
                         "ring gf2k k=1 modulus=2 star=identity\n"
                         "space dim=2\n"
                         "gram\n"
                         "1 0\n"
                         "0\n");
        }) == 6);
}

TEST_CASE("malformed documents are rejected with the specific error") {
  const auto parse = [](const std::string& text) { return parse_document(text); };

  // not even the magic line
  CHECK_THROWS_AS(parse(""), ParseError);
  // ring line problems
  CHECK_THROWS_AS(parse("%IIPM v1\nring gf2k k=1 modulus=2\n"), ParseError);
  CHECK_THROWS_AS(parse("%IIPM v1\nring gf2k k=1 modulus=Z star=identity\n"), ParseError);
  CHECK_THROWS_AS(parse("%IIPM v1\nring gf3k k=1 modulus=2 star=identity\n"), ParseError);
  CHECK_THROWS_AS(parse("%IIPM v1\nspace dim=1\n"), ParseError);  // ring must come first
  // ring invariant violations surface as their own classes
  CHECK_THROWS_AS(parse("%IIPM v1\nring gf2k k=2 modulus=5 star=identity\n"), ReducibleModulus);
  CHECK_THROWS_AS(parse("%IIPM v1\nring gf2k k=2 modulus=2 star=identity\n"), InvalidModulus);
  CHECK_THROWS_AS(parse("%IIPM v1\nring quotient k=2 modulus=5 star=frobenius:1\n"), InvalidStar);
  // element masks must fit the ring
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=2 modulus=7 star=identity\n"
                        "operator name=T\n"
                        "4\n"),
                  MaskOutOfRange);
  // gram invariants
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "space dim=2\n"
                        "gram\n"
                        "1 1\n"
                        "1 1\n"),
                  GramSingular);
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "space dim=2\n"
                        "gram\n"
                        "0 1\n"
                        "0 1\n"),
                  GramNotHermitian);
  // structural problems
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "gram\n"
                        "1\n"),
                  ParseError);  // gram before space
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "space dim=1\n"
                        "space dim=2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "operator name=T\n"
                        "1\n"
                        "space dim=1\n"),
                  ParseError);  // space after operators
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "operator name=T\n"
                        "1\n"
                        "operator name=T\n"
                        "1\n"),
                  ParseError);  // duplicate name
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "operator name=T\n"),
                  ParseError);  // missing matrix block
  CHECK_THROWS_AS(parse("%IIPM v1\n"
                        "ring gf2k k=1 modulus=2 star=identity\n"
                        "operator name=9bad\n"
                        "1\n"),
                  ParseError);
}

TEST_CASE("identifier strings") {
  CHECK(ring_directive(gf2()) == "gf2k k=1 modulus=2 star=identity");
  CHECK(ring_directive(gf4(true)) == "gf2k k=2 modulus=7 star=frobenius:1");
  CHECK(ring_directive(quotient_x1sq()) == "quotient k=2 modulus=5 star=identity");
  CHECK(ring_csv_id(gf4(true)) == "gf2k_k2_m7_sf1");
  CHECK(ring_csv_id(dual_numbers()) == "quot_k2_m4_sid");
  CHECK(mat_csv_id(identity_matrix(gf2(), 2)) == "1.0.0.1");
}

}  // TEST_SUITE
