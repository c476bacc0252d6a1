#include <catch_amalgamated.hpp>

#include <random>

#include "common.hpp"
#include "gbds/ideals.hpp"
#include "gbds/random.hpp"
#include "gbds/verify.hpp"

using namespace gbds;
using namespace gbds::testing;

namespace {

  bool moves_outside(DynamicalSystem const& sys, Member B, Member h) {
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      if (!sys.theta(static_cast<int>(a), B).subset_of(h)) {
        return true;
      }
    }
    return false;
  }

  // Exhaustive scan: H closed under θ and J-saturated, S an ideal between
  // H ∪ J and the members regular modulo H.
  std::vector<std::pair<Member, Member>> pairs_by_definition(DynamicalSystem const& sys) {
    auto const&                            g = sys.algebra();
    std::vector<std::pair<Member, Member>> out;
    for (Member h : g.members()) {
      bool ok = true;
      for (Member A : g.members()) {
        if (A.subset_of(h) && moves_outside(sys, A, h)) {
          ok = false;
        }
        if (A.subset_of(sys.j_top()) && !A.subset_of(h) && !moves_outside(sys, A, h)) {
          ok = false;
        }
      }
      if (!ok) {
        continue;
      }
      Member bh;
      for (Member A : g.members()) {
        bool reg = true;
        for (Member B : g.members()) {
          if (B.subset_of(A) && !B.subset_of(h) && !moves_outside(sys, B, h)) {
            reg = false;
          }
        }
        if (reg) {
          bh |= A;
        }
      }
      for (Member s : g.members()) {
        if ((h | sys.j_top()).subset_of(s) && s.subset_of(bh)) {
          out.emplace_back(h, s);
        }
      }
    }
    return out;
  }

  std::vector<std::pair<Member, Member>> listed(PairLattice const& lat) {
    std::vector<std::pair<Member, Member>> out;
    for (auto const& p : lat.pairs) {
      out.emplace_back(p.h, p.s);
    }
    return out;
  }

}  // namespace

TEST_CASE("FIX1 has two admissible pairs under full J", "[ideals]") {
  auto s   = fix1();
  auto lat = admissible_pairs(*s);
  using P  = std::pair<Member, Member>;
  CHECK(listed(lat) == std::vector<P>{{Member(), set({0})}, {set({0, 1}), set({0, 1})}});
  CHECK(listed(lat) == pairs_by_definition(*s));
  CHECK(lat.hasse == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("FIX1 has four admissible pairs under empty J", "[ideals]") {
  auto s   = fix1_jempty();
  auto lat = admissible_pairs(*s);
  using P  = std::pair<Member, Member>;
  CHECK(listed(lat)
        == std::vector<P>{{Member(), Member()}, {Member(), set({0})}, {set({1}), set({1})}, {set({0, 1}), set({0, 1})}});
  CHECK(listed(lat) == pairs_by_definition(*s));
  for (std::size_t i = 0; i < lat.pairs.size(); ++i) {
    for (std::size_t j = 0; j < lat.pairs.size(); ++j) {
      CHECK(lat.meet(i, j));
      CHECK(lat.join(i, j));
    }
  }
  auto top = lat.find(set({0, 1}), set({0, 1}));
  REQUIRE(top);
  for (std::size_t i = 0; i < lat.pairs.size(); ++i) {
    CHECK(lat.pairs[i].leq(lat.pairs[*top]));
  }
}

TEST_CASE("generators of the pair ideals", "[ideals]") {
  auto                 s = fix1_jempty();
  Algebra<IntegerRing> alg(s, IntegerRing{});
  auto                 lat = admissible_pairs(*s);

  auto g1 = ideal_generators(alg, lat.pairs[*lat.find(Member(), set({0}))]);
  REQUIRE(g1.size() == 1);
  CHECK(alg.equal(g1[0].second, alg.q(set({0}))));
  CHECK(alg.format(g1[0].second) == "p[v1] - s{a,[v2]}S{a,[v2]}");

  auto g2 = ideal_generators(alg, lat.pairs[*lat.find(set({1}), set({1}))]);
  REQUIRE(g2.size() == 1);
  CHECK(alg.format(g2[0].second) == "p[v2]");

  CHECK(ideal_generators(alg, lat.pairs[*lat.find(Member(), Member())]).empty());
}

TEST_CASE("quotient systems", "[ideals]") {
  auto s = fix1_jempty();
  CHECK(is_hereditary(*s, set({1})));
  CHECK_FALSE(is_hereditary(*s, set({0})));
  CHECK(is_j_saturated(*s, set({1})));
  auto q = quotient_system(*s, set({1}), set({1}));
  CHECK(q.algebra().members().size() == 2);
  CHECK(b_h_top(*s, Member()) == set({0}));
  CHECK(b_h_top(*s, set({1})) == set({1}));
}

TEST_CASE("pair lattices agree with the definition", "[ideals][property]") {
  std::mt19937_64        rng(23);
  std::vector<SystemPtr> systems{fix1(), fix1_jempty(), fix2()};
  for (int k = 0; k < 40; ++k) {
    auto sys = random_system(rng);
    systems.push_back(make_system(sys));
    systems.push_back(make_system(sys.with_j(Member())));
  }
  for (auto const& sys : systems) {
    auto lat = admissible_pairs(*sys);
    REQUIRE(listed(lat) == pairs_by_definition(*sys));
    auto rep = verify_ideals(*sys);
    for (auto const& f : rep.families) {
      INFO(f.name);
      REQUIRE(f.passed());
    }
  }
}
