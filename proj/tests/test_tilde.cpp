#include <catch_amalgamated.hpp>

#include <random>

#include "common.hpp"
#include "gbds/random.hpp"
#include "gbds/tilde.hpp"
#include "gbds/verify.hpp"

using namespace gbds;
using namespace gbds::testing;

namespace {

  // Regularity straight from the definition: every nonempty B ⊆ A moves
  // under some letter.
  bool regular_by_definition(DynamicalSystem const& sys, Member A) {
    for (Member B : sys.algebra().members()) {
      if (B.empty() || !B.subset_of(A)) {
        continue;
      }
      bool moves = false;
      for (std::size_t a = 0; a < sys.num_letters(); ++a) {
        moves = moves || !sys.theta(static_cast<int>(a), B).empty();
      }
      if (!moves) {
        return false;
      }
    }
    return true;
  }

  // (A, B) with A and B agreeing off B_reg, second coordinate cut down by J.
  std::size_t pair_count(DynamicalSystem const& sys) {
    std::vector<std::pair<Member, Member>> seen;
    for (Member A : sys.algebra().members()) {
      for (Member B : sys.algebra().members()) {
        bool agree = true;
        for (Member U : sys.algebra().members()) {
          if (regular_by_definition(sys, U) && (A | U) == (B | U)) {
            agree = true;
            break;
          }
          agree = false;
        }
        std::pair<Member, Member> key{A, B - sys.j_top()};
        if (agree && std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
        }
      }
    }
    return seen.size();
  }

}  // namespace

TEST_CASE("FIX1 with empty J pairs into eight members", "[tilde]") {
  auto        base = fix1_jempty();
  TildeSystem t(base);
  auto const& ts = t.system();
  CHECK(ts.algebra().members().size() == 8);
  CHECK(pair_count(*base) == 8);

  std::vector<Member> regular;
  for (Member x : ts.algebra().members()) {
    if (regular_by_definition(ts, x)) {
      regular.push_back(x);
    }
  }
  REQUIRE(regular.size() == 2);
  CHECK(t.format(regular[0]) == "([],[])");
  CHECK(t.format(regular[1]) == "([v1],[])");
  CHECK(t.regular_members() == regular);
}

TEST_CASE("full J collapses the second coordinate", "[tilde]") {
  auto        base = fix1();
  TildeSystem t(base);
  CHECK(t.system().algebra().members().size() == 4);
  CHECK(pair_count(*base) == 4);
  for (Member x : t.system().algebra().members()) {
    CHECK(t.second(x).subset_of(set({1})));
  }
  CHECK(t.pair(Member(), Member()).empty());
}

TEST_CASE("regular sets of the paired system", "[tilde][property]") {
  std::mt19937_64 rng(17);
  std::vector<SystemPtr> systems{fix1(), fix1_jempty(), fix2()};
  for (int k = 0; k < 30; ++k) {
    systems.push_back(make_system(random_system(rng, 3, 2)));
  }
  for (auto const& sys : systems) {
    TildeSystem t(sys);
    std::vector<Member> expected, actual;
    for (Member A : sys->algebra().members()) {
      if (regular_by_definition(*sys, A)) {
        expected.push_back(t.pair(A, Member()));
      }
    }
    for (Member x : t.system().algebra().members()) {
      if (regular_by_definition(t.system(), x)) {
        actual.push_back(x);
      }
    }
    std::sort(expected.begin(), expected.end(), CanonicalLess());
    std::sort(actual.begin(), actual.end(), CanonicalLess());
    REQUIRE(expected == actual);
  }
}

TEST_CASE("find_CD returns the minimal witness", "[tilde]") {
  auto s = fix1();
  auto cd = find_CD(*s, set({0}), Member());
  CHECK(cd.first.empty());
  CHECK(cd.second == set({0}));
  CHECK((set({0}) | cd.first) == (Member() | cd.second));

  auto same = find_CD(*s, set({0, 1}), set({0, 1}));
  CHECK(same.first.empty());
  CHECK(same.second.empty());

  CHECK(error_kind([&] { find_CD(*s, set({1}), Member()); }) == ErrorKind::NotEquivalent);
}

TEST_CASE("phi and psi invert each other on generators", "[tilde]") {
  for (auto const& sys : {fix1(), fix1_jempty(), fix2()}) {
    auto rep = verify_tilde(sys);
    for (auto const& f : rep.families) {
      INFO(f.name);
      CHECK(f.passed());
      CHECK(f.checked > 0);
    }
  }

  auto                   base = fix1_jempty();
  TildeSystem            t(base);
  Algebra<IntegerRing>   a(base, IntegerRing{});
  Algebra<IntegerRing>   b(t.system_ptr(), IntegerRing{});
  TildeMaps<IntegerRing> tm(t, a, b);
  // ψ(p_([v1],[])) = p_v1 + q_∅ - q_v1.
  auto y = b.p(t.pair(set({0}), Member()));
  CHECK(a.format(tm.psi(y)) == "s{a,[v2]}S{a,[v2]}");
  CHECK(b.equal(tm.phi(tm.psi(y)), y));
}

TEST_CASE("expanding ideals to the whole algebra", "[tilde]") {
  auto s = fix1();
  auto e = expand_ideals_to_full(*s);
  CHECK(e.ideal_word(Word{0}).members().size() == 4);
  InverseSemigroup<DynamicalSystem> S(*s);
  InverseSemigroup<DynamicalSystem> T(e);
  for (auto const& x : enumerate_elements(S, 6)) {
    CHECK_NOTHROW(T.make(x.alpha, x.set, x.beta));
  }
  CHECK_NOTHROW(T.make({0}, set({0}), {0}));
  CHECK(enumerate_elements(T, 2).size() > enumerate_elements(S, 2).size());
}
