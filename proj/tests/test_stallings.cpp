#include <doctest.h>

#include "hnnembed/error.hpp"
#include "hnnembed/stallings.hpp"
#include "hnnembed/syntax.hpp"
#include "oracles.hpp"

using namespace hnnembed;

namespace {

const Alphabet ab{"a", "b"};
Word W(const char* s) { return parse_word(s, ab); }

}  // namespace

TEST_CASE("bouquet") {
  const auto g = bouquet({W("a b")});
  CHECK(g.edges().size() == 2);
  CHECK(g.vertex_count() == 2);
  CHECK(bouquet({W("a"), W("a")}).edges().size() == 2);
  CHECK(bouquet({W("a b a'"), W("b")}).edges().size() == 4);
  const auto empty = bouquet({});
  CHECK(empty.vertex_count() == 1);
  CHECK(empty.edges().empty());
  CHECK_THROWS_AS(bouquet({Word{}}), Error);
}

TEST_CASE("fold examples") {
  auto g = fold(bouquet({W("a"), W("a")}));
  CHECK(g.folded());
  CHECK(g.edges().size() == 1);
  CHECK(g.vertex_count() == 1);

  g = fold(bouquet({W("a b a'"), W("b")}));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges().size() == 3);
  CHECK(rank(g) == 2);
  CHECK(basepoint_degree(g) == 3);

  g = fold(bouquet({W("a b"), W("a b")}));
  CHECK(g.edges().size() == 2);
  CHECK(rank(g) == 1);
  CHECK(membership(g, W("a b")));
}

TEST_CASE("trim_to_core") {
  const CoreGraph tail(3, 0, {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}}, true);
  const auto t = trim_to_core(tail);
  CHECK(t.vertex_count() == 1);
  CHECK(t.edges().size() == 1);
  const CoreGraph point(1, 0, {}, true);
  CHECK(trim_to_core(point).vertex_count() == 1);
  const auto loops = fold(bouquet({W("a b"), W("b b a")}));
  CHECK(canonical_form(trim_to_core(loops)) == canonical_form(loops));
}

TEST_CASE("membership and rank") {
  const auto a = subgroup_core({W("a")});
  CHECK(membership(a, W("a a a a a")));
  CHECK_FALSE(membership(a, W("b")));
  CHECK(membership(a, Word{}));
  const auto h = subgroup_core({W("a b a'"), W("b")});
  CHECK(membership(h, W("a b b a'")));
  CHECK(membership(h, W("a b a' b' a b a'")));
  CHECK(rank(CoreGraph(1, 0, {}, true)) == 0);
  CHECK(basepoint_degree(CoreGraph(1, 0, {}, true)) == 0);
  CHECK(basepoint_degree(a) == 2);
  CHECK_THROWS_AS(membership(bouquet({W("a")}), W("a")), Error);
  CHECK_THROWS_AS(rank(CoreGraph(2, 0, {}, true)), Error);
}

TEST_CASE("unused basepoint labels") {
  const auto h = subgroup_core({W("a b a'"), W("b")});
  CHECK(unused_basepoint_labels(h, ab) == std::vector<Letter>{inv(0)});
  CHECK(unused_basepoint_labels(CoreGraph(1, 0, {}, true), ab).size() == 4);
  CHECK(unused_basepoint_labels(subgroup_core({W("a"), W("b")}), ab).empty());
  CHECK_THROWS_WITH_AS(take_unused_basepoint_labels(h, ab, 2), "degree bound violated", Error);
}

TEST_CASE("is_monomorphism") {
  CHECK(is_monomorphism({W("a"), W("b")}));
  CHECK_FALSE(is_monomorphism({W("a"), W("a")}));
  CHECK(is_monomorphism({W("a a"), W("b a b'")}));
  CHECK_FALSE(is_monomorphism({W("a a'")}));
}

TEST_CASE("wedge extension") {
  const auto a = subgroup_core({W("a")});
  CHECK(wedge_extension_check(a, {W("b b")}));
  CHECK_FALSE(wedge_extension_check(a, {W("a b")}));
  CHECK_FALSE(wedge_extension_check(a, {W("b"), W("b")}));
  const auto w = wedge(a, {W("b b")});
  CHECK(w.edges().size() == 3);
  CHECK(canonical_form(fold(w)) == canonical_form(w));
}

TEST_CASE("folding properties") {
  Rng rng(7);
  const Alphabet abc{"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> gens;
    const std::size_t k = 1 + draw_below(rng, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(oracle::random_cyclic_word(rng, 3, 1 + draw_below(rng, 6)));
    const auto g1 = fold(bouquet(gens), FoldOrder::first_edge);
    const auto g2 = fold(bouquet(gens), FoldOrder::last_edge);
    CHECK(canonical_form(g1) == canonical_form(g2));
    CHECK(rank(g1) <= gens.size());
    CHECK(is_monomorphism(gens) == (rank(g1) == gens.size()));
    const auto core = trim_to_core(g1);
    CHECK(basepoint_degree(core) <= 2 * gens.size());
    for (const Word& w : oracle::subgroup_elements(gens, 3)) CHECK(membership(g1, w));
    // Every vertex of the core other than the basepoint has degree at least 2.
    for (std::size_t v = 0; v < core.vertex_count(); ++v)
      if (v != core.basepoint()) CHECK(core.degree(v) >= 2);
  }
}
