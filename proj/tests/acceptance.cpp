#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gbds/algebra.hpp"
#include "gbds/ideals.hpp"
#include "gbds/io.hpp"
#include "gbds/random.hpp"
#include "gbds/stone.hpp"
#include "gbds/tilde.hpp"
#include "gbds/verify.hpp"

using namespace gbds;

namespace {

  constexpr double suite_limit = 60.0;

  struct Corpus {
    std::string name;
    SystemPtr   sys;
  };

  SystemPtr fixture(std::string const& name) {
    return make_system(parse_system(std::string(GBDS_FIXTURES) + "/" + name));
  }

  std::vector<Corpus> corpus() {
    std::vector<Corpus> out{{"FIX1", fixture("fix1.json")}, {"FIX1/J=∅", fixture("fix1_jempty.json")}, {"FIX2", fixture("fix2.json")}};
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 100; ++k) {
      out.push_back({"random#" + std::to_string(k), make_system(random_system(rng))});
    }
    return out;
  }

  //! Collects the first failure and a count of checks.
  struct Outcome {
    std::size_t checked = 0;
    std::size_t failed  = 0;
    std::string first;

    void absorb(std::string const& where, CheckFamily const& f) {
      checked += f.checked;
      if (!f.passed()) {
        ++failed;
        if (first.empty()) {
          first = where + " " + f.name + (f.failures.empty() ? "" : ": " + f.failures.front());
        }
      }
    }
    void absorb(std::string const& where, SuiteReport const& r) {
      for (auto const& f : r.families) {
        absorb(where, f);
      }
    }
    void require(bool ok, std::string const& what) {
      ++checked;
      if (!ok) {
        ++failed;
        if (first.empty()) {
          first = what;
        }
      }
    }
  };

  CheckFamily only(SuiteReport const& r, std::vector<std::string> const& names, std::string const& label) {
    CheckFamily out(label);
    for (auto const& f : r.families) {
      if (std::find(names.begin(), names.end(), f.name) == names.end()) {
        continue;
      }
      out.checked += f.checked;
      for (auto const& msg : f.failures) {
        out.fail(f.name + ": " + msg);
      }
      if (!f.passed() && f.failures.empty()) {
        out.fail(f.name);
      }
    }
    return out;
  }

  using Body = std::function<Outcome(std::vector<Corpus> const&)>;

  Outcome semigroup_laws(std::vector<Corpus> const& cs) {
    Outcome o;
    auto    start = std::chrono::steady_clock::now();
    for (auto const& c : cs) {
      double left = suite_limit - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (left <= 0) {
        o.require(false, "time limit reached before " + c.name);
        break;
      }
      VerifyOptions opt;
      opt.time_budget_seconds = left;
      o.absorb(c.name, verify_semigroup(*c.sys, opt));
    }
    return o;
  }

  Outcome relations(std::vector<Corpus> const& cs) {
    Outcome       o;
    VerifyOptions opt;
    opt.grading_pairs       = 0;
    opt.confluence_elements = 0;
    for (auto const& c : cs) {
      Algebra<IntegerRing> alg(c.sys, IntegerRing{});
      auto                 r = verify_algebra(alg, opt);
      o.absorb(c.name, only(r, {"relation-1", "relation-2", "relation-3", "relation-4", "relation-5", "q-products"}, "relations"));
    }
    return o;
  }

  Outcome nonzeroness(std::vector<Corpus> const& cs) {
    Outcome o;
    for (auto const& c : cs) {
      Algebra<IntegerRing> alg(c.sys, IntegerRing{});
      o.absorb(c.name, verify_nonzero(alg, {1, -1, 2, -3, 7}, 6));
      for (std::int64_t m : {2, 3, 4, 6}) {
        Algebra<ModularRing>      am(c.sys, ModularRing(m));
        std::vector<std::int64_t> rs;
        for (std::int64_t r = 1; r < m; ++r) {
          rs.push_back(r);
        }
        o.absorb(c.name + " mod " + std::to_string(m), verify_nonzero(am, rs, 6));
      }
    }
    return o;
  }

  Outcome annihilators(std::vector<Corpus> const& cs) {
    Outcome o;
    for (auto const& c : cs) {
      Algebra<IntegerRing> alg(make_system(c.sys->with_j(std::nullopt)), IntegerRing{});
      o.absorb(c.name, verify_annihilators(alg));
    }
    return o;
  }

  Outcome regular_sets(std::vector<Corpus> const& cs) {
    Outcome o;
    for (auto const& c : cs) {
      o.absorb(c.name, verify_tilde(c.sys));
    }
    TildeSystem t(cs[1].sys);
    auto        reg = t.regular_members();
    o.require(t.system().algebra().members().size() == 8, "FIX1/J=∅ tilde does not have 8 members");
    o.require(reg.size() == 2, "FIX1/J=∅ tilde does not have 2 regular members");
    return o;
  }

  Outcome ideal_lattice(std::vector<Corpus> const& cs) {
    Outcome o;
    for (auto const& c : cs) {
      o.absorb(c.name, verify_ideals(*c.sys));
    }
    o.require(admissible_pairs(*cs[0].sys).pairs.size() == 2, "FIX1 does not have 2 admissible pairs");
    o.require(admissible_pairs(*cs[1].sys).pairs.size() == 4, "FIX1/J=∅ does not have 4 admissible pairs");
    return o;
  }

  Outcome desingularization(std::vector<Corpus> const& cs) {
    Outcome       o;
    VerifyOptions opt;
    opt.bound = 6;
    for (auto const& c : cs) {
      o.absorb(c.name, verify_desingularization(*c.sys, opt).suite);
    }
    return o;
  }

  Outcome stone(std::vector<Corpus> const& cs) {
    Outcome o;
    for (auto const& c : cs) {
      o.absorb(c.name, verify_stone(*c.sys));
    }
    auto sp = stone_graph(*cs[0].sys);
    o.require(sp.vertices.size() == 3, "FIX1 Stone graph does not have 3 vertices");
    o.require(sp.edges.size() == 2, "FIX1 Stone graph does not have 2 edges");
    return o;
  }

  Outcome algebra_family(std::vector<Corpus> const& cs, VerifyOptions const& opt, std::vector<std::string> const& names) {
    Outcome o;
    for (auto const& c : cs) {
      Algebra<IntegerRing> alg(c.sys, IntegerRing{});
      o.absorb(c.name, only(verify_algebra(alg, opt), names, names.front()));
    }
    return o;
  }

  Outcome grading(std::vector<Corpus> const& cs) {
    VerifyOptions opt;
    opt.confluence_elements = 0;
    return algebra_family(cs, opt, {"grading", "involution"});
  }

  Outcome confluence(std::vector<Corpus> const& cs) {
    VerifyOptions opt;
    opt.grading_pairs = 0;
    return algebra_family(cs, opt, {"confluence"});
  }

}  // namespace

int main() {
  auto cs = corpus();

  std::vector<std::pair<std::string, Body>> criteria{
      {"semigroup laws at bound 6", semigroup_laws},
      {"defining relations", relations},
      {"nonzero generators over Z and Z/m", nonzeroness},
      {"annihilator closed forms", annihilators},
      {"regular sets of the paired system", regular_sets},
      {"ideal-pair lattice", ideal_lattice},
      {"desingularization", desingularization},
      {"Stone duality", stone},
      {"Z-grading and involution", grading},
      {"confluence of normalization", confluence},
  };

  int    failures = 0;
  double total    = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    start   = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(cs);
    } catch (std::exception const& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (secs >= suite_limit) {
      o.require(false, "took " + std::to_string(secs) + " s");
    }
    bool ok = o.failed == 0;
    failures += ok ? 0 : 1;
    std::printf("criterion %zu: %s  %s  (%zu checks, %.2f s)%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.checked, secs, ok ? "" : "  first failure: ", o.first.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed, %.2f s total\n", failures, criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
