#include <catch_amalgamated.hpp>

#include <random>

#include "common.hpp"
#include "gbds/io.hpp"
#include "gbds/random.hpp"
#include "gbds/stone.hpp"
#include "gbds/verify.hpp"

using namespace gbds;
using namespace gbds::testing;

namespace {

  using Family = std::vector<Member>;

  // Every subset of members that is a proper filter: nonempty, upward closed,
  // closed under meets, and without ∅.
  std::vector<Family> filters_by_definition(FiniteGBA const& g) {
    auto const&         ms = g.members();
    std::vector<Family> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ms.size()); ++mask) {
      Family f;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (mask >> i & 1) {
          f.push_back(ms[i]);
        }
      }
      auto in = [&](Member m) { return std::find(f.begin(), f.end(), m) != f.end(); };
      bool ok = !in(Member());
      for (Member x : f) {
        for (Member y : ms) {
          ok = ok && (!x.subset_of(y) || in(y));
        }
        for (Member y : f) {
          ok = ok && in(x & y);
        }
      }
      if (ok) {
        out.push_back(f);
      }
    }
    return out;
  }

  // θ_a(F) ⊆ F' over whole filters.
  bool edge_by_definition(DynamicalSystem const& sys, int a, Family const& f, Family const& fp) {
    for (Member y : f) {
      if (std::find(fp.begin(), fp.end(), sys.theta(a, y)) == fp.end()) {
        return false;
      }
    }
    return true;
  }

  Family up_set(FiniteGBA const& g, Member w) {
    Family out;
    for (Member y : g.members()) {
      if (w.subset_of(y)) {
        out.push_back(y);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("filter counts", "[stone]") {
  auto s = fix1();
  CHECK(filters(s->algebra()).size() == 3);
  CHECK(filters_by_definition(s->algebra()).size() == 3);

  auto p3 = FiniteGBA::powerset({"x", "y", "z"});
  CHECK(filters(p3).size() == 7);
  CHECK(filters_by_definition(p3).size() == 7);

  CHECK(filters(FiniteGBA::validate({}, {Member()})).empty());
}

TEST_CASE("filters are the principal up-sets", "[stone][property]") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 20; ++k) {
    auto sys = random_system(rng, 3, 1);
    auto const& g = sys.algebra();
    auto        expected = filters_by_definition(g);
    std::vector<Family> actual;
    for (Member w : filters(g)) {
      actual.push_back(up_set(g, w));
    }
    REQUIRE(actual.size() == expected.size());
    for (auto const& f : actual) {
      REQUIRE(std::find(expected.begin(), expected.end(), f) != expected.end());
    }
  }
}

TEST_CASE("V sets", "[stone]") {
  auto        s = fix1();
  auto const& g = s->algebra();
  CHECK(v_set(g, set({0, 1})) == set({0, 1, 2}));
  CHECK(v_set(g, set({0})) == set({0}));
  CHECK(v_set(g, Member()).empty());
  CHECK(v_set(g, set({0}) & set({1})) == (v_set(g, set({0})) & v_set(g, set({1}))));
  auto coarse = FiniteGBA::from_atoms({"x", "y"}, {set({0, 1})});
  CHECK(error_kind([&] { v_set(coarse, set({0})); }) == ErrorKind::NotAMember);
}

TEST_CASE("Stone graph of FIX1", "[stone]") {
  auto s  = fix1();
  auto sp = stone_graph(*s);
  CHECK(sp.vertices == std::vector<std::string>{"F[v1]", "F[v2]", "F[v1 v2]"});
  CHECK(sp.edges == std::vector<LabelledEdge>{{0, 1, 0}, {2, 1, 0}});

  auto fs = filters(s->algebra());
  for (unsigned i = 0; i < fs.size(); ++i) {
    for (unsigned j = 0; j < fs.size(); ++j) {
      bool edge = std::find(sp.edges.begin(), sp.edges.end(), LabelledEdge{i, j, 0}) != sp.edges.end();
      CHECK(edge == edge_by_definition(*s, 0, up_set(s->algebra(), fs[i]), up_set(s->algebra(), fs[j])));
    }
  }

  CHECK(to_dot(sp)
        == "digraph stone {\n"
           "  \"F[v1]\";\n"
           "  \"F[v2]\";\n"
           "  \"F[v1 v2]\";\n"
           "  \"F[v1]\" -> \"F[v2]\" [label=\"a\"];\n"
           "  \"F[v1 v2]\" -> \"F[v2]\" [label=\"a\"];\n"
           "}\n");
}

TEST_CASE("Stone graph of FIX2", "[stone]") {
  auto s  = fix2();
  auto sp = stone_graph(*s);
  CHECK(sp.vertices.size() == 7);
  auto has = [&](unsigned i, unsigned j, int a) {
    return std::find(sp.edges.begin(), sp.edges.end(), LabelledEdge{i, j, a}) != sp.edges.end();
  };
  CHECK(has(0, 1, 0));
  CHECK(has(1, 2, 1));
  CHECK(has(2, 0, 0));

  auto const& g  = s->algebra();
  auto        fs = filters(g);
  for (int a = 0; a < 2; ++a) {
    for (unsigned i = 0; i < fs.size(); ++i) {
      if (s->theta(a, fs[i]).empty()) {
        for (unsigned j = 0; j < fs.size(); ++j) {
          CHECK_FALSE(has(i, j, a));
        }
      }
      for (unsigned j = 0; j < fs.size(); ++j) {
        CHECK(has(i, j, a) == edge_by_definition(*s, a, up_set(g, fs[i]), up_set(g, fs[j])));
      }
    }
  }
}

TEST_CASE("range on Stone graphs", "[stone]") {
  auto s1 = fix1();
  auto g1 = stone_graph(*s1);
  CHECK(range(g1, v_set(s1->algebra(), set({0})), 0) == v_set(s1->algebra(), set({1})));
  CHECK(range(g1, Member(), 0).empty());
  CHECK(error_kind([&] { range(g1, Member(), 3); }) == ErrorKind::UnknownLabel);
  CHECK(error_kind([&] { range(g1, set({0, 1}), 0); }) == ErrorKind::NotAMember);

  auto s2 = fix2();
  auto g2 = stone_graph(*s2);
  CHECK(range(g2, v_set(s2->algebra(), set({2})), 0) == v_set(s2->algebra(), set({0})));
}

TEST_CASE("duality law", "[stone][property]") {
  std::mt19937_64        rng(41);
  std::vector<SystemPtr> systems{fix1(), fix2()};
  for (int k = 0; k < 30; ++k) {
    systems.push_back(make_system(random_system(rng)));
  }
  for (auto const& sys : systems) {
    auto const& g  = sys->algebra();
    auto        sp = stone_graph(*sys);
    for (std::size_t a = 0; a < sys->num_letters(); ++a) {
      for (Member x : g.members()) {
        REQUIRE(range(sp, v_set(g, x), static_cast<int>(a)) == v_set(g, sys->theta(static_cast<int>(a), x)));
      }
    }
  }
}

TEST_CASE("labelled spaces to systems", "[stone]") {
  auto loop = labelled_from_json(read_json_file(fixture_path("labelled_loop.json")));
  auto sys  = labelled_to_gbds(loop);
  CHECK(sys.algebra().atoms().size() == 2);
  CHECK(sys.theta(0, set({0})) == set({1}));
  CHECK(sys.theta(0, set({1})) == set({0}));

  auto bad = labelled_from_json(read_json_file(fixture_path("labelled_not_wlr.json")));
  CHECK(error_kind([&] { labelled_to_gbds(bad); }) == ErrorKind::ValidationFailure);
  CHECK(error_detail([&] { labelled_to_gbds(bad); }) == "WLR,[x],[y],a");
  CHECK(range(bad, set({0}) & set({1}), 0) != (range(bad, set({0}), 0) & range(bad, set({1}), 0)));

  LabelledSpace single;
  single.vertices   = {"v"};
  single.labels     = {"a"};
  single.family     = {Member(), set({0})};
  single.ideal_tops = {Member()};
  auto one          = labelled_to_gbds(single);
  CHECK(one.theta(0, set({0})).empty());
  CHECK(one.reg_top().empty());
}

TEST_CASE("round trip on one-atom systems", "[stone]") {
  auto p       = fix1_parts();
  p.gba        = make_gba(FiniteGBA::powerset({"v"}));
  p.theta      = {{set({0})}};
  p.ideal_tops = {set({0})};
  auto sys     = DynamicalSystem::validate(p);
  auto dual    = labelled_to_gbds(stone_graph(sys));
  CHECK(is_isomorphism(sys, dual, v_map(sys, dual)));
  CHECK(find_isomorphism(sys, dual));
}

TEST_CASE("isomorphism search", "[stone]") {
  auto s = fix2();
  CHECK(find_isomorphism(*s, *s) == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(find_isomorphism(*fix1(), *fix1_jempty()));
  CHECK_FALSE(find_isomorphism(*fix1(), *s));
}

TEST_CASE("principal-filter families are not union closed", "[stone]") {
  // V_{v1} ∪ V_{v2} misses the filter generated by {v1, v2}.
  auto        s = fix1();
  auto const& g = s->algebra();
  CHECK((v_set(g, set({0})) | v_set(g, set({1}))) != v_set(g, set({0, 1})));
  CHECK(error_detail([&] { labelled_to_gbds(stone_graph(*s)); }) == "family-union,[F[v1]],[F[v2]]");
}
