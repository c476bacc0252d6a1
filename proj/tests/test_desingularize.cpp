#include <catch_amalgamated.hpp>

#include <random>

#include "common.hpp"
#include "gbds/desingularize.hpp"
#include "gbds/random.hpp"
#include "gbds/verify.hpp"

using namespace gbds;
using namespace gbds::testing;

namespace {

  std::vector<int> letters_moving(DynamicalSystem const& sys, Member B) {
    std::vector<int> out;
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      if (!sys.theta(static_cast<int>(a), B).empty()) {
        out.push_back(static_cast<int>(a));
      }
    }
    return out;
  }

  // Join of {U : no nonempty B ⊆ U is a sink, Δ_U ⊆ {a_1, …, a_{i-1}}}.
  Member x_top_by_definition(DynamicalSystem const& sys, std::size_t i) {
    Member top;
    for (Member U : sys.algebra().members()) {
      bool ok = true;
      for (Member B : sys.algebra().members()) {
        if (!B.empty() && B.subset_of(U) && letters_moving(sys, B).empty()) {
          ok = false;
        }
      }
      for (int l : letters_moving(sys, U)) {
        ok = ok && static_cast<std::size_t>(l) + 2 <= i;
      }
      if (ok) {
        top |= U;
      }
    }
    return top;
  }

}  // namespace

TEST_CASE("X-chain of FIX1", "[desingularize]") {
  DesingularizedSystem F(fix1());
  CHECK(F.x_top(0).empty());
  CHECK(F.x_top(1).empty());
  for (std::size_t i = 2; i < 6; ++i) {
    CHECK(F.x_top(i) == set({0}));
  }
  CHECK(F.format(F.level(3, set({0, 1}))) == "[v2]_3");
  CHECK(F.level(2, set({0})).empty());
}

TEST_CASE("X-chain of FIX2", "[desingularize]") {
  DesingularizedSystem F(fix2());
  CHECK(F.x_top(1).empty());
  CHECK(F.x_top(2) == set({0, 2}));
  CHECK(F.x_top(3) == set({0, 1, 2}));
  CHECK(F.x_top(7) == set({0, 1, 2}));
  CHECK(F.level(3, set({1})).empty());
}

TEST_CASE("X-chain agrees with the definition", "[desingularize][property]") {
  std::mt19937_64        rng(29);
  std::vector<SystemPtr> systems{fix1(), fix2()};
  for (int k = 0; k < 60; ++k) {
    systems.push_back(make_system(random_system(rng).with_j(std::nullopt)));
  }
  for (auto const& sys : systems) {
    DesingularizedSystem F(sys);
    for (std::size_t i = 0; i <= sys->num_letters() + 3; ++i) {
      REQUIRE(F.x_top(i) == x_top_by_definition(*sys, i));
    }
  }
}

TEST_CASE("certificates on FIX1", "[desingularize]") {
  DesingularizedSystem F(fix1());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(F.certificate(i, set({1})) == F.b_letter(i + 1));
  }
  CHECK(F.certificate(1, set({0})) == 0);
  CHECK(F.letter_name(F.certificate(1, set({0}))) == "a");
  CHECK(F.letter_name(F.certificate(0, set({0}))) == "b_1");
  for (auto const& c : certify_levels(F, 4)) {
    INFO(F.format(F.level(c.level, c.set)));
    CHECK(c.ok);
  }
  CHECK(F.delta(F.level(1, set({0}))) == std::vector<int>{0});
  CHECK(F.theta(0, F.level(1, set({0}))) == F.level(0, set({1})));
}

TEST_CASE("h substitutes b-prefixes", "[desingularize]") {
  DesingularizedSystem F(fix2());
  CHECK(F.h(Word{}).empty());
  CHECK(F.format(F.h(Word{0})) == "b_1a");
  auto w = F.h(Word{1, 0});
  CHECK(w == Word{F.b_letter(1), F.b_letter(2), 1, F.b_letter(1), 0});
  CHECK(F.format(w) == "b_1b_2bb_1a");
  CHECK(F.h_inverse(w) == Word{1, 0});
  CHECK_FALSE(F.h_inverse(Word{F.b_letter(2), 0}));
  CHECK(error_kind([&] { F.h(Word{5}); }) == ErrorKind::UnknownLetter);
}

TEST_CASE("embedding conditions at bound 6", "[desingularize]") {
  for (auto const& sys : {fix1(), fix2()}) {
    DesingularizedSystem F(sys);
    auto                 rep = check_embedding_conditions(F, 6);
    for (auto const& f : rep.families) {
      INFO(f.name);
      CHECK(f.passed());
      CHECK(f.checked > 0);
    }
    CHECK(rep.counterexamples() == 0);
    CHECK_FALSE(check_embedding_conditions(F, 6, LetterEmbedding::identity).passed());
  }
}

TEST_CASE("the identity control is a morphism when θ vanishes", "[desingularize]") {
  auto p  = fix1_parts();
  p.theta = {{Member(), Member()}};
  p.ideal_tops = {Member()};
  DesingularizedSystem F(make_system(DynamicalSystem::validate(p)));
  CHECK(check_embedding_conditions(F, 4, LetterEmbedding::identity).passed());
}

TEST_CASE("embedding needs I = F", "[desingularize]") {
  auto                 wide = make_system(expand_ideals_to_full(*fix1()));
  DesingularizedSystem F(wide);
  CHECK_FALSE(check_embedding_conditions(F, 4).passed());
  // (a,[v1],ω) is an element upstairs, but [v1]_0 is not below θ_a of the
  // top of I_{b_1}.
  CHECK_FALSE(F.in_ideal(F.h(Word{0}), F.level(0, set({0}))));

  DesingularizedSystem G(make_system(restrict_ideals_to_f(*wide)));
  CHECK(check_embedding_conditions(G, 4).passed());
}

TEST_CASE("desingularization errors", "[desingularize]") {
  CHECK(error_kind([] { DesingularizedSystem F(fix1_jempty()); }) == ErrorKind::RelativeSystemUnsupported);
  DesingularizedSystem F(fix1());
  CHECK(error_kind([&] { check_embedding_conditions(F, 1); }) == ErrorKind::BoundTooSmall);
}

TEST_CASE("desingularization suite on random systems", "[desingularize][property]") {
  std::mt19937_64 rng(31);
  VerifyOptions   opt;
  opt.bound = 4;
  for (int k = 0; k < 15; ++k) {
    auto sys = random_system(rng, 3, 2);
    auto out = verify_desingularization(sys, opt);
    for (auto const& f : out.suite.families) {
      INFO(f.name);
      REQUIRE(f.passed());
    }
  }
}
