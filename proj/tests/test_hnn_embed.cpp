#include <doctest.h>

#include "hnnembed/error.hpp"
#include "hnnembed/hnn_embed.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/w_family.hpp"

using namespace hnnembed;

namespace {

PartialAscHNN from_text(const char* text) { return hnn_from_file(parse_presentation_file(text)); }

const char* kIntro =
    "gens: a b c t\n"
    "hnn: t; ascending: a b; free: c\n"
    "rel a: a^t = ( a b c )^8\n"
    "rel b: b^t = ( a c )^9 b\n";

}  // namespace

TEST_CASE("hnn file round trip") {
  const auto h = from_text(kIntro);
  CHECK(h.alphabet.name(h.stable) == "t");
  CHECK(h.ascending.size() == 2);
  CHECK(h.free.size() == 1);
  CHECK(h.image_of(0).size() == 24);
  CHECK(validate(h).empty());
  const auto again = from_text(write_hnn_file(h).c_str());
  CHECK(again.images == h.images);
  CHECK(again.ascending == h.ascending);
  CHECK(again.free == h.free);
}

TEST_CASE("hnn file errors") {
  CHECK_THROWS_AS(from_text("gens: a t\nrel: a a\n"), ParseError);
  CHECK_THROWS_AS(from_text("gens: a t\nhnn: s; ascending: a\nrel a: a^t = a\n"), ParseError);
  CHECK_THROWS_AS(from_text("gens: a t\nhnn: t; ascending: a\n"), ParseError);
  CHECK_THROWS_AS(from_text("gens: a t\nhnn: t; ascending: a\nrel: a a\n"), ParseError);
  CHECK_THROWS_AS(from_text("gens: a t\nhnn: t; ascending: a\nrel: a^t = a\nrel: a^t = a a\n"), ParseError);
  CHECK_THROWS_AS(from_text("gens: a t\nhnn: t; ascending: a\nrel: a^t = t a\n"), ParseError);
}

TEST_CASE("validate diagnostics") {
  auto h = from_text(kIntro);
  auto bad = h;
  bad.images[0] = Word{gen(0), inv(0), gen(1)};
  auto d = validate(bad);
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("unreduced image") != std::string::npos);

  bad = h;
  bad.images[0] = Word{gen(0), gen(3)};
  d = validate(bad);
  REQUIRE_FALSE(d.empty());
  CHECK(d[0].find("stable letter") != std::string::npos);

  bad = h;
  bad.images[1] = bad.images[0];
  CHECK_FALSE(validate(bad).empty());

  bad = h;
  bad.free.clear();
  CHECK_FALSE(validate(bad).empty());

  bad = h;
  bad.images[0] = Word{};
  CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("build_X_and_Y") {
  const auto h = from_text(kIntro);
  const auto r = construct_embedding(h);
  const auto spec = build_X_and_Y(h, r.group);
  CHECK(spec.parent().size() == 5);
  CHECK(spec.sub_relators().size() == 2);
  CHECK(spec.sub_generators().size() == 4);
}

TEST_CASE("W family") {
  const Alphabet cc{"c1", "c2"};
  const auto f = generate_w_family(3, cc, 0, 1);
  CHECK(f.words.size() == 3);
  CHECK(w_family_acceptable(cc, f.words));
  for (const Word& w : f.words) CHECK_FALSE(is_proper_power(w));
  CHECK(check_Cprime(Presentation(cc, f.words), 1, 7).verdict);
  const auto again = generate_w_family(3, cc, 0, 1);
  CHECK(again.words == f.words);
  CHECK(generate_w_family(1, cc, 0, 1).words.size() == 1);
  CHECK_THROWS_WITH_AS(generate_w_family(3, cc, 0, 1, {0, 2, 0}), "generator exhausted", Error);
}

TEST_CASE("construct_embedding on the intro example") {
  const auto h = from_text(kIntro);
  const auto r = construct_embedding(h);
  CHECK(r.new_generators.size() == 2);
  CHECK(r.group.alphabet.size() == 6);
  CHECK(r.group.ascending.size() == 5);
  CHECK(r.group.free.empty());
  CHECK(r.certificate.all_true());
  CHECK(r.certificate.w_sources.size() == 3);
  CHECK(r.certificate.c7.verdict);
  for (const auto& p : r.certificate.powers) CHECK(p.exponent == 1);
  // Every relator of X has exponent 1.
  const auto x = hnn_presentation(r.group);
  for (const Word& rel : x.relators()) CHECK(exponent(rel) == 1);
  // Deterministic.
  CHECK(construct_embedding(h).group.images == r.group.images);
  CHECK(construct_embedding(h, {1, 64, 16}).group.images != r.group.images);
  // Independent recertification.
  CHECK(certify_embedding(h, r.group, Construction::ascending).all_true());
}

TEST_CASE("construct_embedding degenerate inputs") {
  // Already ascending.
  auto h = from_text("gens: a b t\nhnn: t; ascending: a b; free:\nrel: a^t = a b\nrel: b^t = b a b\n");
  auto r = construct_embedding(h);
  CHECK(r.certificate.w_sources.size() == 2);
  CHECK(r.certificate.all_true());

  h = from_text("gens: a t\nhnn: t; ascending: a\nrel: a^t = a\n");
  r = construct_embedding(h);
  CHECK(r.certificate.monomorphism);
  CHECK(r.certificate.all_true());

  // No ascending generators.
  h = from_text("gens: b t\nhnn: t; free: b\n");
  r = construct_embedding(h);
  CHECK(r.certificate.all_true());
  CHECK_THROWS_AS(construct_embedding(PartialAscHNN{}), Error);
}

TEST_CASE("certificate detects tampering") {
  const auto h = from_text(kIntro);
  const auto r = construct_embedding(h);
  auto g = r.group;
  g.images[4] = Word{};
  CHECK_THROWS_AS(certify_embedding(h, g, Construction::ascending), Error);
  g = r.group;
  g.images[0] = Word{gen(0)};
  CHECK_THROWS_AS(certify_embedding(h, g, Construction::ascending), Error);
  // Shrinking a W word below 7 pieces breaks the small cancellation verdicts.
  g = r.group;
  g.images[2] = Word{gen(4), gen(5)};
  const auto small = certify_embedding(h, g, Construction::ascending);
  CHECK_FALSE(small.all_true());
}

TEST_CASE("construct_irreducible_embedding") {
  const auto h = from_text(kIntro);
  const auto r = construct_irreducible_embedding(h);
  REQUIRE(r.certificate.irreducible);
  const auto& e = *r.certificate.irreducible;
  CHECK(r.certificate.all_true());
  CHECK(e.inputs.chosen_labels.size() == 2);
  for (const auto& c : e.coverage) CHECK(c.verdict);
  CHECK(e.wedge_check);
  CHECK(e.core_is_wedge);
  CHECK(e.basepoint_degree <= e.degree_bound);
  CHECK(certify_embedding(h, r.group, Construction::irreducible, e.inputs).all_true());

  // Tampered labels are caught.
  auto bad = e.inputs;
  bad.chosen_labels[0] = bad.chosen_labels[1];
  CHECK_FALSE(certify_embedding(h, r.group, Construction::irreducible, bad).all_true());

  CHECK_THROWS_AS(certify_embedding(h, r.group, Construction::irreducible), Error);
  CHECK_THROWS_AS(
      construct_irreducible_embedding(from_text("gens: a b t\nhnn: t; ascending: a b\nrel: a^t = a\nrel: b^t = b\n")),
      Error);
}

TEST_CASE("irreducible labels avoid the core's basepoint letters") {
  const auto h = from_text("gens: a b t\nhnn: t; ascending: a; free: b\nrel: a^t = a\n");
  const auto r = construct_irreducible_embedding(h);
  const auto& labels = r.certificate.irreducible->inputs.chosen_labels;
  REQUIRE(labels.size() == 2);
  for (Letter l : labels) CHECK(r.group.alphabet.name(l.gen) == "b");
  CHECK(r.certificate.all_true());
}
