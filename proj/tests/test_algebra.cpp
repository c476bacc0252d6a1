#include <catch_amalgamated.hpp>

#include <array>
#include <random>

#include "common.hpp"
#include "gbds/algebra.hpp"
#include "gbds/random.hpp"
#include "gbds/verify.hpp"

using namespace gbds;
using namespace gbds::testing;

namespace {

  using Mat = std::array<std::array<long, 2>, 2>;

  Mat mat_mul(Mat const& x, Mat const& y) {
    Mat z{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          z[i][j] += x[i][k] * y[k][j];
        }
      }
    }
    return z;
  }

  // FIX1 is the path algebra of v1 --a--> v2, which is M_2(Z):
  // p_v1 = e11, p_v2 = e22, s_{a,v2} = e12, s*_{a,v2} = e21.
  Mat to_matrix(Algebra<IntegerRing>::element const& x) {
    Mat out{};
    for (auto const& [m, r] : x.terms()) {
      Mat e{};
      bool v1 = m.atom == set({0});
      if (m.alpha.empty() && m.beta.empty()) {
        e[v1 ? 0 : 1][v1 ? 0 : 1] = 1;
      } else if (m.beta.empty()) {
        e[0][1] = 1;
      } else if (m.alpha.empty()) {
        e[1][0] = 1;
      } else {
        e[0][0] = 1;
      }
      for (auto& row : e) {
        for (auto& v : row) {
          v *= r;
        }
      }
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          out[i][j] += e[i][j];
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("the adjoint relation on FIX1", "[algebra]") {
  Algebra<IntegerRing> alg(fix1(), IntegerRing{});
  CHECK(alg.format(parse_expression(alg, "S{a,[v2]}*s{a,[v2]}")) == "p[v2]");
  CHECK(alg.format(alg.mul(alg.s(0, set({1}), true), alg.s(0, set({1})))) == "p[v2]");
  CHECK(alg.equal(alg.p(set({0})), alg.mul(alg.s(0, set({1})), alg.s(0, set({1}), true))));
  CHECK(alg.p(Member()).is_zero());
}

TEST_CASE("q vanishes on J and only there", "[algebra]") {
  Algebra<IntegerRing> full(fix1(), IntegerRing{});
  CHECK(full.q(set({0})).is_zero());

  Algebra<IntegerRing> rel(fix1_jempty(), IntegerRing{});
  auto                 q = rel.q(set({0}));
  CHECK_FALSE(q.is_zero());
  CHECK(rel.equal(rel.mul(q, q), q));
  CHECK(rel.format(q) == "p[v1] - s{a,[v2]}S{a,[v2]}");
}

TEST_CASE("FIX1 matches its matrix model", "[algebra][property]") {
  Algebra<IntegerRing> alg(fix1(), IntegerRing{});
  std::vector<Algebra<IntegerRing>::element> els;
  std::size_t                                normal = 0;
  for (auto const& m : alg.monomials(4)) {
    els.push_back(alg.monomial(m));
    auto const& t = els.back().terms();
    normal += t.size() == 1 && t.begin()->first == m;
  }
  //! s s* collapses onto p_v1; the other four span M_2(Z).
  CHECK(normal == 4);
  els.push_back(alg.p(set({0})));
  els.push_back(alg.p(set({0, 1})));
  for (auto const& x : els) {
    for (auto const& y : els) {
      CHECK(to_matrix(alg.mul(x, y)) == mat_mul(to_matrix(x), to_matrix(y)));
    }
  }
  CHECK(to_matrix(alg.p(set({0, 1}))) == Mat{{{1, 0}, {0, 1}}});
}

TEST_CASE("scalars and modular rings", "[algebra]") {
  Algebra<ModularRing> m2(fix1(), ModularRing(2));
  CHECK(m2.scale(2, m2.p(set({1}))).is_zero());
  CHECK(m2.format(parse_expression(m2, "3 p[v2]")) == "p[v2]");

  Algebra<ModularRing> m6(fix2(), ModularRing(6));
  CHECK(m6.format(m6.scale(4, m6.s(0, set({1})))) == "4*s{a,[v2]}");
  CHECK(m6.scale(3, m6.scale(2, m6.p(set({2})))).is_zero());

  Algebra<IntegerRing> z(fix1(), IntegerRing{});
  CHECK(z.format(parse_expression(z, "2 p[v2] - 3 s{a,[v2]}")) == "2*p[v2] - 3*s{a,[v2]}");
  CHECK(error_kind([] { ModularRing(0); }) == ErrorKind::ParseError);
}

TEST_CASE("elements of different algebras do not mix", "[algebra]") {
  Algebra<IntegerRing> x(fix1(), IntegerRing{});
  Algebra<IntegerRing> y(fix1(), IntegerRing{});
  CHECK(error_kind([&] { x.mul(x.p(set({0})), y.p(set({0}))); }) == ErrorKind::MixedSystems);
}

TEST_CASE("expression errors", "[algebra]") {
  Algebra<IntegerRing> alg(fix1(), IntegerRing{});
  CHECK(error_kind([&] { parse_expression(alg, "p[v9]"); }) == ErrorKind::ParseError);
  CHECK(error_kind([&] { parse_expression(alg, "s{b,[v2]}"); }) == ErrorKind::UnknownLetter);
  CHECK(error_kind([&] { parse_expression(alg, "p[v1] +"); }) == ErrorKind::ParseError);
  CHECK(error_kind([&] { parse_expression(alg, "s{a,[v1]}"); }) == ErrorKind::NotInIdeal);
}

TEST_CASE("grading splits by word-length difference", "[algebra]") {
  Algebra<IntegerRing> alg(fix2(), IntegerRing{});
  auto                 x = parse_expression(alg, "p[v2] + s{a,[v2]} - 2 S{b,[v3]}");
  auto                 z = alg.z_components(x);
  REQUIRE(z.size() == 3);
  CHECK(alg.format(z.at(0)) == "p[v2]");
  CHECK(alg.format(z.at(1)) == "s{a,[v2]}");
  CHECK(alg.format(z.at(-1)) == "-2*S{b,[v3]}");
}

TEST_CASE("annihilators of FIX1", "[algebra]") {
  Algebra<IntegerRing> alg(fix1(), IntegerRing{});
  auto                 b = ann_basis(alg);
  REQUIRE(b.ann.size() == 1);
  CHECK(b.ann.front().atom == set({1}));
  REQUIRE(b.perp.size() == 1);
  CHECK(b.perp.front().atom == set({0}));
  CHECK(b.matches_closed_form);
  CHECK(b.trivial_intersection);

  Algebra<IntegerRing> rel(fix1_jempty(), IntegerRing{});
  CHECK(error_kind([&] { ann_basis(rel); }) == ErrorKind::RelativeSystemUnsupported);
}

TEST_CASE("algebra suites on the fixtures", "[algebra][property]") {
  VerifyOptions opt;
  opt.grading_pairs        = 500;
  opt.confluence_elements  = 100;
  opt.confluence_schedules = 10;
  for (auto const& sys : {fix1(), fix2(), fix1_jempty()}) {
    Algebra<IntegerRing> z(sys, IntegerRing{});
    for (auto const& f : verify_algebra(z, opt).families) {
      INFO(f.name);
      CHECK(f.passed());
    }
    CHECK(verify_nonzero(z, {1, -1, 2, 7}, 4).passed());
    for (std::int64_t m : {2, 3, 4}) {
      Algebra<ModularRing> r(sys, ModularRing(m));
      std::vector<std::int64_t> scalars;
      for (std::int64_t k = 1; k < m; ++k) {
        scalars.push_back(k);
      }
      CHECK(verify_nonzero(r, scalars, 4).passed());
    }
  }
}

TEST_CASE("random normal forms are schedule independent", "[algebra][property]") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    auto                 sys = make_system(random_system(rng, 3, 2));
    Algebra<IntegerRing> alg(sys, IntegerRing{});
    auto                 basis = alg.monomials(3);
    if (basis.empty()) {
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < 30; ++i) {
      std::vector<std::pair<std::int64_t, Monomial>> raw;
      for (int t = 0; t < 3; ++t) {
        raw.emplace_back(t + 1, basis[pick(rng)]);
      }
      auto nf = alg.normalize(raw);
      for (int s = 0; s < 5; ++s) {
        REQUIRE(alg.equal(nf, alg.normalize_randomly(raw, rng)));
      }
    }
  }
}
