#pragma once

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "check.hpp"
#include "desingularize.hpp"
#include "gba.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "random.hpp"
#include "semigroup.hpp"
#include "stone.hpp"
#include "system.hpp"
#include "tilde.hpp"

namespace gbds {

  struct VerifyOptions {
    std::size_t   bound               = 6;
    std::uint64_t seed                = 1;
    std::size_t   grading_pairs       = 10'000;
    std::size_t   confluence_elements = 1'000;
    std::size_t   confluence_schedules = 50;
    //! Wall-clock limit for the exhaustive semigroup scans; 0 means none.
    double        time_budget_seconds = 0;
  };

  //! Closure, atoms, quotient projections and disjointify.
  inline SuiteReport verify_gba(DynamicalSystem const& sys, VerifyOptions const& opt) {
    auto const& g = sys.algebra();
    SuiteReport rep{"gba-core", {}};

    CheckFamily closure("closure");
    for (Member A : g.members()) {
      for (Member B : g.members()) {
        ++closure.checked;
        if (!g.contains(A | B) || !g.contains(A & B) || !g.contains(A - B)) {
          closure.fail(g.format(A) + "," + g.format(B));
        }
      }
    }
    rep.families.push_back(std::move(closure));

    CheckFamily atoms("atoms");
    for (std::size_t i = 0; i < g.atoms().size(); ++i) {
      for (std::size_t j = i + 1; j < g.atoms().size(); ++j) {
        ++atoms.checked;
        if (g.atoms()[i].meets(g.atoms()[j])) {
          atoms.fail("overlap " + g.format(g.atoms()[i]) + "," + g.format(g.atoms()[j]));
        }
      }
    }
    for (Member A : g.members()) {
      Member join;
      for (Member c : g.atoms_below(A)) {
        join |= c;
      }
      ++atoms.checked;
      if (join != A) {
        atoms.fail("join of atoms below " + g.format(A));
      }
    }
    rep.families.push_back(std::move(atoms));

    CheckFamily proj("quotient-projection");
    for (Member u : g.members()) {
      auto q = quotient(sys.gba(), GbaIdeal::principal(sys.gba(), u));
      for (Member A : g.members()) {
        for (Member B : g.members()) {
          ++proj.checked;
          if (q.project(A | B) != (q.project(A) | q.project(B)) || q.project(A & B) != (q.project(A) & q.project(B))
              || q.project(A - B) != (q.project(A) - q.project(B))) {
            proj.fail("ideal " + g.format(u) + " at " + g.format(A) + "," + g.format(B));
          }
        }
      }
    }
    rep.families.push_back(std::move(proj));

    CheckFamily                            disj("disjointify");
    std::mt19937_64                        rng(opt.seed);
    IntegerRing                            Z;
    std::uniform_int_distribution<int>     coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, g.members().size() - 1);
    for (int round = 0; round < 200; ++round) {
      std::vector<Term<IntegerRing>> terms;
      int                            len = 1 + round % 4;
      for (int k = 0; k < len; ++k) {
        terms.push_back({coef(rng), g.members()[pick(rng)]});
      }
      auto out = disjointify(g, Z, terms);
      auto expand = [&](auto const& ts) {
        std::map<std::uint64_t, std::int64_t> v;
        for (auto const& [r, m] : ts) {
          for (Member c : g.atoms_below(m)) {
            v[c.bits()] += r;
          }
        }
        std::erase_if(v, [](auto const& kv) { return kv.second == 0; });
        return v;
      };
      ++disj.checked;
      bool pairwise = true;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
          pairwise = pairwise && !out[i].second.meets(out[j].second);
        }
      }
      if (!pairwise || expand(terms) != expand(out)) {
        disj.fail("round " + std::to_string(round));
      }
    }
    rep.families.push_back(std::move(disj));
    return rep;
  }

  //! Word action, ideal recursions, regular and sink sets.
  inline SuiteReport verify_system(DynamicalSystem const& sys, VerifyOptions const&) {
    auto const&       g = sys.algebra();
    SuiteReport       rep{"gbds", {}};
    std::vector<Word> words{Word{}};
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (auto const& w : words) {
        if (w.size() + 1 == len) {
          for (std::size_t a = 0; a < sys.num_letters(); ++a) {
            next.push_back(concat(w, Word{static_cast<int>(a)}));
          }
        }
      }
      words.insert(words.end(), next.begin(), next.end());
    }

    CheckFamily morph("word-morphism");
    for (auto const& w : words) {
      for (Member A : g.members()) {
        for (Member B : g.members()) {
          ++morph.checked;
          if (sys.theta_word(w, A & B) != (sys.theta_word(w, A) & sys.theta_word(w, B))
              || sys.theta_word(w, A | B) != (sys.theta_word(w, A) | sys.theta_word(w, B))) {
            morph.fail(sys.format(w) + " at " + g.format(A) + "," + g.format(B));
          }
        }
      }
    }
    rep.families.push_back(std::move(morph));

    CheckFamily rec("ideal-recursion");
    for (auto const& w : words) {
      if (w.empty()) {
        continue;
      }
      // By the definition: A ⊆ θ_{w_2…w_n}(B) for some B ∈ I_{w_1}.
      Member def;
      for (Member B : g.down_set(sys.ideal_top(w.front()))) {
        def |= sys.theta_word(Word(w.begin() + 1, w.end()), B);
      }
      // One letter at a time: I_{αb} = {A ⊆ θ_b(B) : B ∈ I_α}.
      Member step = sys.ideal_top(w.front());
      for (std::size_t i = 1; i < w.size(); ++i) {
        Member next;
        for (Member B : g.down_set(step)) {
          next |= sys.theta(w[i], B);
        }
        step = next;
      }
      ++rec.checked;
      if (def != step || def != sys.ideal_top(w)) {
        rec.fail(sys.format(w));
      }
    }
    rep.families.push_back(std::move(rec));

    CheckFamily reg("regular-ideal");
    for (Member A : g.members()) {
      bool regular = true;
      for (Member B : g.down_set(A)) {
        if (!B.empty() && sys.delta(B).empty()) {
          regular = false;
        }
      }
      ++reg.checked;
      if (regular != sys.is_regular(A)) {
        reg.fail("classification of " + g.format(A));
      }
      if (sys.is_regular(A)) {
        for (Member B : g.down_set(A)) {
          if (!sys.is_regular(B)) {
            reg.fail(g.format(B) + " below regular " + g.format(A));
          }
        }
      }
    }
    rep.families.push_back(std::move(reg));

    CheckFamily sink("sinks");
    for (Member A : g.down_set(sys.sink_top())) {
      ++sink.checked;
      if (!sys.delta(A).empty()) {
        sink.fail(g.format(A));
      }
    }
    rep.families.push_back(std::move(sink));
    return rep;
  }

  namespace detail {

    //! Elements sorted by one of their words, for finding every element whose
    //! word is a prefix or an extension of a given word. Those are the only
    //! possible partners of a nonzero product.
    class PartnerIndex {
     public:
      PartnerIndex(std::vector<SemigroupElement<Member>> const& elems, bool by_alpha)
          : _elems(&elems), _by_alpha(by_alpha) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (!elems[i].zero) {
            _order.push_back(i);
          }
        }
        std::sort(_order.begin(), _order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
      }

      template <typename F>
      void for_each_comparable(Word const& w, F&& f) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
          Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
          auto [lo, hi] = std::equal_range(_order.begin(), _order.end(), p, Less{this});
          for (auto it = lo; it != hi; ++it) {
            f(*it);
          }
        }
        auto it = std::lower_bound(_order.begin(), _order.end(), w, Less{this});
        for (; it != _order.end() && is_prefix(w, key(*it)); ++it) {
          f(*it);
        }
      }

     private:
      struct Less {
        PartnerIndex const* self;
        bool operator()(std::size_t x, Word const& w) const {
          return self->key(x) < w;
        }
        bool operator()(Word const& w, std::size_t x) const {
          return w < self->key(x);
        }
      };
      Word const& key(std::size_t i) const {
        return _by_alpha ? (*_elems)[i].alpha : (*_elems)[i].beta;
      }

      std::vector<SemigroupElement<Member>> const* _elems;
      bool                                         _by_alpha;
      std::vector<std::size_t>                     _order;
    };

    class Deadline {
     public:
      explicit Deadline(double seconds)
          : _limit(seconds), _start(std::chrono::steady_clock::now()) {}
      bool expired() {
        if (_limit <= 0 || ++_ticks % 4096 != 0) {
          return false;
        }
        _hit = _hit || std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count() > _limit;
        return _hit;
      }
      bool hit() const noexcept {
        return _hit;
      }

     private:
      double                                _limit;
      std::chrono::steady_clock::time_point _start;
      std::uint64_t                         _ticks = 0;
      bool                                  _hit   = false;
    };

  }  // namespace detail

  //! Associativity, involution, E*-unitarity, commuting idempotents and the
  //! factorization of elements along their grades.
  //!
  //! Associativity and involution cover every triple (pair) of elements
  //! within the bound. Zero is checked to absorb on both sides; among nonzero
  //! factors only triples with a nonzero side are multiplied out, which are
  //! found through the partner index.
  inline SuiteReport verify_semigroup(DynamicalSystem const& sys, VerifyOptions const& opt) {
    InverseSemigroup<DynamicalSystem> S(sys);
    using E = SemigroupElement<Member>;
    SuiteReport rep{"inv-semigroup", {}};
    auto        elems = enumerate_elements(S, opt.bound);
    detail::PartnerIndex by_alpha(elems, true);
    detail::PartnerIndex by_beta(elems, false);
    detail::Deadline     deadline(opt.time_budget_seconds);
    E const              zero = E::make_zero();

    CheckFamily assoc("associativity");
    for (auto const& s : elems) {
      ++assoc.checked;
      if (!S.multiply(zero, s).zero || !S.multiply(s, zero).zero) {
        assoc.fail("zero does not absorb " + S.format(s));
      }
    }
    // Every triple with (st)u ≠ 0.
    for (auto const& s : elems) {
      by_alpha.for_each_comparable(s.beta, [&](std::size_t j) {
        auto const& t  = elems[j];
        E           st = S.multiply(s, t);
        if (st.zero || deadline.hit()) {
          return;
        }
        by_alpha.for_each_comparable(st.beta, [&](std::size_t k) {
          auto const& u   = elems[k];
          E           lhs = S.multiply(st, u);
          if (lhs.zero || deadline.expired()) {
            return;
          }
          ++assoc.checked;
          if (!(lhs == S.multiply(s, S.multiply(t, u)))) {
            assoc.fail(S.format(s) + S.format(t) + S.format(u));
          }
        });
      });
    }
    // The remaining triples with s(tu) ≠ 0.
    for (auto const& t : elems) {
      by_alpha.for_each_comparable(t.beta, [&](std::size_t k) {
        auto const& u  = elems[k];
        E           tu = S.multiply(t, u);
        if (tu.zero || deadline.hit()) {
          return;
        }
        by_beta.for_each_comparable(tu.alpha, [&](std::size_t i) {
          auto const& s   = elems[i];
          E           rhs = S.multiply(s, tu);
          if (rhs.zero || deadline.expired()) {
            return;
          }
          if (S.multiply(S.multiply(s, t), u).zero) {
            ++assoc.checked;
            assoc.fail(S.format(s) + S.format(t) + S.format(u) + " only right side nonzero");
          }
        });
      });
    }
    if (deadline.hit()) {
      assoc.fail("time budget exceeded with " + std::to_string(elems.size()) + " elements");
    }
    rep.families.push_back(std::move(assoc));

    CheckFamily inv("involution");
    for (auto const& s : elems) {
      ++inv.checked;
      if (!(S.star(S.star(s)) == s) || !S.star(zero).zero) {
        inv.fail(S.format(s));
      }
    }
    // Pairs with st ≠ 0, then pairs with t*s* ≠ 0 and st = 0.
    for (auto const& s : elems) {
      by_alpha.for_each_comparable(s.beta, [&](std::size_t j) {
        auto const& t  = elems[j];
        E           st = S.multiply(s, t);
        if (st.zero || deadline.expired()) {
          return;
        }
        ++inv.checked;
        if (!(S.star(st) == S.multiply(S.star(t), S.star(s)))) {
          inv.fail(S.format(s) + S.format(t));
        }
      });
    }
    for (auto const& ts : elems) {
      by_alpha.for_each_comparable(ts.beta, [&](std::size_t j) {
        E t  = S.star(ts);
        E s  = S.star(elems[j]);
        if (S.multiply(ts, elems[j]).zero || deadline.expired()) {
          return;
        }
        if (S.multiply(s, t).zero) {
          ++inv.checked;
          inv.fail(S.format(s) + S.format(t) + " only t*s* nonzero");
        }
      });
    }
    if (deadline.hit()) {
      inv.fail("time budget exceeded with " + std::to_string(elems.size()) + " elements");
    }
    rep.families.push_back(std::move(inv));

    CheckFamily unitary("strongly-E*-unitary");
    CheckFamily commute("idempotents-commute");
    CheckFamily factor("grade-factorization");
    std::vector<E> idem;
    for (auto const& s : elems) {
      if (!s.zero && s.is_idempotent()) {
        idem.push_back(s);
      }
    }
    for (auto const& e : idem) {
      for (auto const& f : idem) {
        ++commute.checked;
        if (!(S.multiply(e, f) == S.multiply(f, e))) {
          commute.fail(S.format(e) + S.format(f));
        }
      }
    }
    for (auto const& s : elems) {
      if (s.zero) {
        continue;
      }
      ++unitary.checked;
      if (S.grade(s).is_identity() && !s.is_idempotent()) {
        unitary.fail(S.format(s));
      }
      // s = (α' p, A, β' p) with α'β'^-1 reduced; every cut of the reduced
      // grade gives a factorization with those two grades.
      std::size_t common = 0;
      while (common < s.alpha.size() && common < s.beta.size()
             && s.alpha[s.alpha.size() - 1 - common] == s.beta[s.beta.size() - 1 - common]) {
        ++common;
      }
      Word ap(s.alpha.begin(), s.alpha.end() - static_cast<std::ptrdiff_t>(common));
      Word bp(s.beta.begin(), s.beta.end() - static_cast<std::ptrdiff_t>(common));
      Word p(s.alpha.end() - static_cast<std::ptrdiff_t>(common), s.alpha.end());
      auto try_split = [&](E const& t, E const& u, std::string const& where) {
        ++factor.checked;
        if (!S.valid(t) || !S.valid(u) || !(S.multiply(t, u) == s)
            || !(S.grade(t) * S.grade(u) == S.grade(s))) {
          factor.fail(S.format(s) + " at " + where);
        }
      };
      for (std::size_t k = 1; k < ap.size(); ++k) {
        Word a1(ap.begin(), ap.begin() + static_cast<std::ptrdiff_t>(k));
        Word a2(ap.begin() + static_cast<std::ptrdiff_t>(k), ap.end());
        try_split(S.raw(a1, sys.ideal_top(a1), Word{}), S.raw(concat(a2, p), s.set, s.beta), "α" + std::to_string(k));
      }
      for (std::size_t k = 1; k < bp.size(); ++k) {
        Word b1(bp.begin(), bp.begin() + static_cast<std::ptrdiff_t>(k));
        Word b2(bp.begin() + static_cast<std::ptrdiff_t>(k), bp.end());
        try_split(S.raw(s.alpha, s.set, concat(b2, p)), S.raw(Word{}, sys.ideal_top(b1), b1), "β" + std::to_string(k));
      }
      if (!ap.empty() && !bp.empty()) {
        try_split(S.raw(s.alpha, s.set, p), S.raw(p, s.set, s.beta), "middle");
      }
    }
    rep.families.push_back(std::move(unitary));
    rep.families.push_back(std::move(commute));
    rep.families.push_back(std::move(factor));
    return rep;
  }

  namespace detail {

    template <CoefficientRing Ring, typename Rng>
    std::vector<std::pair<typename Ring::value_type, Monomial>> random_raw(Algebra<Ring> const&         alg,
                                                                            std::vector<Monomial> const& basis,
                                                                            Rng&                         rng,
                                                                            std::size_t                  max_terms) {
      std::uniform_int_distribution<std::size_t> len(1, max_terms);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      std::uniform_int_distribution<int>         coef(-4, 4);
      std::vector<std::pair<typename Ring::value_type, Monomial>> raw;
      std::size_t                                                 n = len(rng);
      for (std::size_t i = 0; i < n; ++i) {
        int r = coef(rng);
        raw.emplace_back(alg.ring().from_int(r == 0 ? 1 : r), basis[pick(rng)]);
      }
      return raw;
    }

  }  // namespace detail

  //! The defining relations, the q product identities, grading, involution and
  //! confluence of the collapse rewriting, over one ring.
  template <CoefficientRing Ring>
  SuiteReport verify_algebra(Algebra<Ring> const& alg, VerifyOptions const& opt) {
    auto const& sys = alg.system();
    auto const& g   = sys.algebra();
    SuiteReport rep{"skew-algebra", {}};
    using El = typename Algebra<Ring>::element;
    auto zero_check = [&](CheckFamily& fam, El const& x, std::string const& what) {
      ++fam.checked;
      if (!x.is_zero()) {
        fam.fail(what + " leaves " + alg.format(x));
      }
    };

    CheckFamily r1("relation-1");
    zero_check(r1, alg.p(Member()), "p_∅");
    for (Member A : g.members()) {
      for (Member B : g.members()) {
        zero_check(r1, alg.sub(alg.p(A & B), alg.mul(alg.p(A), alg.p(B))), "p_{A∩B} - p_A p_B");
        zero_check(r1, alg.sub(alg.p(A | B), alg.sub(alg.add(alg.p(A), alg.p(B)), alg.p(A & B))),
                   "p_{A∪B} - p_A - p_B + p_{A∩B} at " + g.format(A) + "," + g.format(B));
      }
    }
    rep.families.push_back(std::move(r1));

    CheckFamily r2("relation-2");
    CheckFamily r3("relation-3");
    CheckFamily r4("relation-4");
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      int l = static_cast<int>(a);
      for (Member B : g.down_set(sys.ideal_top(l))) {
        for (Member A : g.members()) {
          Member t = sys.theta(l, A);
          zero_check(r2, alg.sub(alg.mul(alg.p(A), alg.s(l, B)), alg.mul(alg.s(l, B), alg.p(t))), "p_A s = s p_θ(A)");
          zero_check(r2, alg.sub(alg.mul(alg.s(l, B, true), alg.p(A)), alg.mul(alg.p(t), alg.s(l, B, true))),
                     "s* p_A = p_θ(A) s*");
          zero_check(r4, alg.sub(alg.mul(alg.s(l, B), alg.p(A)), alg.s(l, B & A)), "s_B p_A = s_{B∩A}");
          zero_check(r4, alg.sub(alg.mul(alg.p(A), alg.s(l, B, true)), alg.s(l, B & A, true)), "p_A s*_B = s*_{B∩A}");
        }
        for (std::size_t b = 0; b < sys.num_letters(); ++b) {
          int m = static_cast<int>(b);
          for (Member C : g.down_set(sys.ideal_top(m))) {
            El rhs = a == b ? alg.p(B & C) : alg.zero();
            zero_check(r3, alg.sub(alg.mul(alg.s(l, B, true), alg.s(m, C)), rhs), "s*_{a,B} s_{b,C}");
          }
        }
      }
    }
    rep.families.push_back(std::move(r2));
    rep.families.push_back(std::move(r3));
    rep.families.push_back(std::move(r4));

    CheckFamily r5("relation-5");
    for (Member A : g.down_set(sys.j_top())) {
      El sum = alg.zero();
      for (int l : sys.delta(A)) {
        Member t = sys.theta(l, A);
        sum      = alg.add(sum, alg.mul(alg.s(l, t), alg.s(l, t, true)));
      }
      zero_check(r5, alg.sub(alg.p(A), sum), "p_A - Σ s s* at " + g.format(A));
    }
    rep.families.push_back(std::move(r5));

    CheckFamily qcalc("q-products");
    for (Member B : g.down_set(sys.reg_top())) {
      El qb = alg.q(B);
      for (Member A : g.members()) {
        zero_check(qcalc, alg.sub(alg.mul(alg.p(A), qb), alg.q(A & B)), "p_A q_B - q_{A∩B}");
        zero_check(qcalc, alg.sub(alg.mul(qb, alg.p(A)), alg.q(A & B)), "q_B p_A - q_{A∩B}");
      }
    }
    rep.families.push_back(std::move(qcalc));

    std::mt19937_64 rng(opt.seed);
    auto            basis = alg.monomials(std::min<std::size_t>(opt.bound, 4));

    CheckFamily grading("grading");
    CheckFamily invol("involution");
    for (std::size_t i = 0; i < opt.grading_pairs && !basis.empty(); ++i) {
      El x = alg.normalize(detail::random_raw(alg, basis, rng, 3));
      El y = alg.normalize(detail::random_raw(alg, basis, rng, 3));
      El xy = alg.mul(x, y);
      std::set<long> allowed;
      for (auto const& [dx, cx] : alg.z_components(x)) {
        for (auto const& [dy, cy] : alg.z_components(y)) {
          allowed.insert(dx + dy);
        }
      }
      ++grading.checked;
      El sum = alg.zero();
      for (auto const& [d, c] : alg.z_components(xy)) {
        sum = alg.add(sum, c);
        if (!allowed.count(d)) {
          grading.fail("degree " + std::to_string(d) + " in " + alg.format(x) + " · " + alg.format(y));
        }
        for (auto const& [m, r] : c.terms()) {
          if (m.degree() != d) {
            grading.fail("mixed component " + std::to_string(d));
          }
        }
      }
      if (!alg.equal(sum, xy)) {
        grading.fail("components do not sum to the product");
      }
      ++invol.checked;
      if (!alg.equal(alg.star(xy), alg.mul(alg.star(y), alg.star(x))) || !alg.equal(alg.star(alg.star(x)), x)) {
        invol.fail(alg.format(x) + " · " + alg.format(y));
      }
      for (auto const& [d, c] : alg.z_components(alg.star(x))) {
        if (!alg.z_components(x).count(-d)) {
          invol.fail("star does not negate degree " + std::to_string(d));
        }
      }
    }
    rep.families.push_back(std::move(grading));
    rep.families.push_back(std::move(invol));

    CheckFamily confl("confluence");
    for (std::size_t i = 0; i < opt.confluence_elements && !basis.empty(); ++i) {
      auto raw = detail::random_raw(alg, basis, rng, 4);
      El   nf  = alg.normalize(raw);
      for (std::size_t k = 0; k < opt.confluence_schedules; ++k) {
        ++confl.checked;
        El other = alg.normalize_randomly(raw, rng);
        if (!alg.equal(nf, other)) {
          confl.fail(alg.format(nf) + " vs " + alg.format(other));
          break;
        }
      }
    }
    rep.families.push_back(std::move(confl));
    return rep;
  }

  //! r·p_A, r·s_{α,A} and r·q_B stay nonzero for every nonzero scalar r.
  template <CoefficientRing Ring>
  CheckFamily verify_nonzero(Algebra<Ring> const& alg, std::vector<typename Ring::value_type> const& scalars, std::size_t bound) {
    auto const&                       sys = alg.system();
    auto const&                       g   = sys.algebra();
    CheckFamily                       fam("nonzero-" + alg.ring().name());
    InverseSemigroup<DynamicalSystem> S(sys);
    auto                              words = live_words(sys, bound);
    for (auto r : scalars) {
      if (alg.ring().is_zero(r)) {
        continue;
      }
      for (Member A : g.members()) {
        if (A.empty()) {
          continue;
        }
        ++fam.checked;
        if (alg.scale(r, alg.p(A)).is_zero()) {
          fam.fail(alg.ring().to_string(r) + "·p" + g.format(A));
        }
        if (A.subset_of(sys.reg_top()) && !A.subset_of(sys.j_top())) {
          ++fam.checked;
          if (alg.scale(r, alg.q(A)).is_zero()) {
            fam.fail(alg.ring().to_string(r) + "·q" + g.format(A));
          }
        }
      }
      for (auto const& w : words) {
        if (w.empty()) {
          continue;
        }
        for (Member A : g.down_set(sys.ideal_top(w))) {
          if (A.empty()) {
            continue;
          }
          ++fam.checked;
          if (alg.scale(r, alg.s(w, A)).is_zero()) {
            fam.fail(alg.ring().to_string(r) + "·s{" + sys.format(w) + "," + g.format(A) + "}");
          }
        }
      }
    }
    return fam;
  }

  //! Annihilator bases against the sink description, trivial intersection
  //! and local units for every set of atom-level generators.
  template <CoefficientRing Ring>
  SuiteReport verify_annihilators(Algebra<Ring> const& alg) {
    auto const& sys = alg.system();
    auto const& g   = sys.algebra();
    SuiteReport rep{"annihilators", {}};
    auto        basis = ann_basis(alg);

    CheckFamily closed("closed-form");
    ++closed.checked;
    if (!basis.matches_closed_form) {
      closed.fail("kernel spans differ from the sink description");
    }
    rep.families.push_back(std::move(closed));

    CheckFamily inter("trivial-intersection");
    ++inter.checked;
    if (!basis.trivial_intersection) {
      inter.fail("Ann ∩ Ann^⊥ ≠ 0");
    }
    rep.families.push_back(std::move(inter));

    CheckFamily units("local-units");
    std::vector<std::pair<int, Member>> gens;
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      for (Member c : g.atoms_below(sys.ideal_top(static_cast<int>(a)))) {
        gens.emplace_back(static_cast<int>(a), c);
      }
    }
    if (gens.size() <= 16) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
        std::map<int, Member> tops;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (mask >> i & 1) {
            tops[gens[i].first] |= gens[i].second;
          }
        }
        auto unit = alg.zero();
        for (auto const& [l, A] : tops) {
          unit = alg.add(unit, alg.mul(alg.s(l, A), alg.s(l, A, true)));
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (!(mask >> i & 1)) {
            continue;
          }
          auto x  = alg.s(gens[i].first, gens[i].second);
          auto xs = alg.s(gens[i].first, gens[i].second, true);
          ++units.checked;
          if (!alg.equal(alg.mul(unit, x), x) || !alg.equal(alg.mul(xs, unit), xs)) {
            units.fail("subset " + std::to_string(mask) + " at " + alg.format(x));
          }
        }
      }
    } else {
      units.fail("too many generators for subset enumeration");
    }
    rep.families.push_back(std::move(units));
    return rep;
  }

  //! Regular sets of the paired system and the two maps on generators.
  inline SuiteReport verify_tilde(SystemPtr const& sys) {
    SuiteReport rep{"tilde", {}};
    TildeSystem tilde(sys);
    CheckFamily reg("regular-sets");
    ++reg.checked;
    auto expected = tilde.expected_regular();
    auto actual   = tilde.regular_members();
    std::sort(expected.begin(), expected.end(), CanonicalLess());
    std::sort(actual.begin(), actual.end(), CanonicalLess());
    if (expected != actual) {
      reg.fail("regular sets differ from {(A,[∅]) : A ∈ B_reg}");
    }
    rep.families.push_back(std::move(reg));

    CheckFamily            maps("phi-psi");
    IntegerRing            Z;
    Algebra<IntegerRing>   base(sys, Z);
    Algebra<IntegerRing>   paired(tilde.system_ptr(), Z);
    TildeMaps<IntegerRing> tm(tilde, base, paired);
    auto check_base = [&](Algebra<IntegerRing>::element const& x) {
      ++maps.checked;
      auto back = tm.psi(tm.phi(x));
      if (!base.equal(back, x)) {
        maps.fail("ψφ(" + base.format(x) + ") = " + base.format(back));
      }
    };
    auto check_paired = [&](Algebra<IntegerRing>::element const& y) {
      ++maps.checked;
      auto back = tm.phi(tm.psi(y));
      if (!paired.equal(back, y)) {
        maps.fail("φψ(" + paired.format(y) + ") = " + paired.format(back));
      }
    };
    auto const& bs = *sys;
    for (Member A : bs.algebra().members()) {
      check_base(base.p(A));
    }
    for (std::size_t a = 0; a < bs.num_letters(); ++a) {
      for (Member A : bs.algebra().down_set(bs.ideal_top(static_cast<int>(a)))) {
        check_base(base.s(static_cast<int>(a), A));
        check_base(base.s(static_cast<int>(a), A, true));
      }
    }
    auto const& ts = tilde.system();
    for (Member x : ts.algebra().members()) {
      check_paired(paired.p(x));
    }
    for (std::size_t a = 0; a < ts.num_letters(); ++a) {
      for (Member x : ts.algebra().down_set(ts.ideal_top(static_cast<int>(a)))) {
        check_paired(paired.s(static_cast<int>(a), x));
        check_paired(paired.s(static_cast<int>(a), x, true));
      }
    }
    rep.families.push_back(std::move(maps));
    return rep;
  }

  //! Lattice closure of the admissible pairs and validity of every quotient.
  inline SuiteReport verify_ideals(DynamicalSystem const& sys) {
    SuiteReport rep{"ideals", {}};
    auto        lat = admissible_pairs(sys);
    CheckFamily lattice("lattice");
    for (std::size_t i = 0; i < lat.pairs.size(); ++i) {
      for (std::size_t j = 0; j < lat.pairs.size(); ++j) {
        ++lattice.checked;
        if (!lat.meet(i, j) || !lat.join(i, j)) {
          lattice.fail("pairs " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
    ++lattice.checked;
    Member top = sys.algebra().universe();
    if (!lat.find(top, top)) {
      lattice.fail("(B, B) missing");
    }
    rep.families.push_back(std::move(lattice));

    CheckFamily quot("quotients");
    for (auto const& p : lat.pairs) {
      ++quot.checked;
      try {
        auto again = quotient_system(sys, p.h, p.s);
        if (!(again == *p.quotient)) {
          quot.fail("unstable quotient at " + sys.format(p.h));
        }
      } catch (Error const& e) {
        quot.fail(e.what());
      }
    }
    rep.families.push_back(std::move(quot));
    return rep;
  }

  struct DesingularizationSummary {
    SuiteReport     suite;
    EmbeddingReport embedding;
    EmbeddingReport control;
    bool            restricted_to_f = false;
  };

  //! Certificates, the X-chain and the embedding checks. Embedding checks run
  //! on the system with I replaced by F when the two differ, since the
  //! embedding needs I^F_{h(a)} = [I_a]_0.
  inline DesingularizationSummary verify_desingularization(DynamicalSystem const& sys, VerifyOptions const& opt) {
    DesingularizationSummary out{{"desingularize", {}}, {}, {}, false};
    auto                     nonrel = make_system(sys.with_j(std::nullopt));
    DesingularizedSystem     F(nonrel);
    std::size_t const        n = sys.num_letters();

    CheckFamily cert("regularity-certificates");
    for (auto const& c : certify_levels(F, n + 3)) {
      ++cert.checked;
      if (!c.ok) {
        cert.fail(F.format(F.level(c.level, c.set)) + " via " + F.letter_name(c.letter));
      }
    }
    // Every nonzero element meets a certified single level.
    std::mt19937_64 rng(opt.seed);
    auto const&     g = sys.algebra();
    std::uniform_int_distribution<std::size_t> pick(0, g.members().size() - 1);
    for (int k = 0; k < 200; ++k) {
      LevelSet s;
      for (std::size_t i = 0; i <= n + 3; ++i) {
        s = s | F.level(i, g.members()[pick(rng)]);
      }
      if (s.empty()) {
        continue;
      }
      ++cert.checked;
      if (F.delta(s).empty()) {
        cert.fail(F.format(s) + " has empty Δ");
      }
    }
    out.suite.families.push_back(std::move(cert));

    CheckFamily chain("x-chain");
    for (std::size_t i = 0; i + 1 <= n + 3; ++i) {
      ++chain.checked;
      if (!F.x_top(i).subset_of(F.x_top(i + 1))) {
        chain.fail("X_" + std::to_string(i) + " ⊄ X_" + std::to_string(i + 1));
      }
    }
    ++chain.checked;
    if (!F.x_top(0).empty() || !F.x_top(1).empty()) {
      chain.fail("X_0 or X_1 nonzero");
    }
    for (std::size_t i = n + 1; i <= n + 3; ++i) {
      ++chain.checked;
      if (F.x_top(i) != sys.reg_top() - sys.sink_top()) {
        chain.fail("X_" + std::to_string(i) + " differs from the sink-free top");
      }
    }
    out.suite.families.push_back(std::move(chain));

    SystemPtr emb_base = nonrel;
    if (!ideals_equal_f(*nonrel)) {
      emb_base            = make_system(restrict_ideals_to_f(*nonrel));
      out.restricted_to_f = true;
    }
    DesingularizedSystem G(emb_base);
    out.embedding = check_embedding_conditions(G, opt.bound);
    out.control   = check_embedding_conditions(G, opt.bound, LetterEmbedding::identity);
    for (auto const& f : out.embedding.families) {
      out.suite.families.push_back(f);
    }
    // With every θ_a zero no product applies θ and the identity map is a
    // genuine morphism; otherwise (ω,A,ω)(a,B,ω) separates the two.
    bool discriminating = false;
    for (std::size_t a = 0; a < emb_base->num_letters(); ++a) {
      discriminating = discriminating || !emb_base->f_top(static_cast<int>(a)).empty();
    }
    CheckFamily control("negative-control");
    ++control.checked;
    if (out.control.passed() == discriminating) {
      control.fail(discriminating ? "identity letter map passed the morphism check"
                                  : "identity letter map failed although every θ_a is zero");
    }
    out.suite.families.push_back(std::move(control));
    return out;
  }

  //! Duality law, round trip, V-set laws and validation of the Stone graph.
  inline SuiteReport verify_stone(DynamicalSystem const& sys) {
    SuiteReport rep{"stone-dual", {}};
    auto const& g  = sys.algebra();
    auto        sp = stone_graph(sys);

    CheckFamily law("duality-law");
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      for (Member x : g.members()) {
        ++law.checked;
        int l = static_cast<int>(a);
        if (range(sp, v_set(g, x), l) != v_set(g, sys.theta(l, x))) {
          law.fail("r(V" + g.format(x) + "," + sys.letter_name(l) + ")");
        }
      }
    }
    rep.families.push_back(std::move(law));

    CheckFamily vlaws("v-laws");
    for (Member x : g.members()) {
      for (Member y : g.members()) {
        ++vlaws.checked;
        if (v_set(g, x | y) != (v_set(g, x) | v_set(g, y)) || v_set(g, x & y) != (v_set(g, x) & v_set(g, y))
            || v_set(g, x - y) != (v_set(g, x) - v_set(g, y))) {
          vlaws.fail(g.format(x) + "," + g.format(y));
        }
      }
    }
    rep.families.push_back(std::move(vlaws));

    CheckFamily round("round-trip");
    ++round.checked;
    try {
      auto dual = labelled_to_gbds(sp);
      auto base = sys.with_j(std::nullopt);
      if (!is_isomorphism(base, dual, v_map(base, dual))) {
        round.fail("x ↦ V_x is not an isomorphism");
      }
    } catch (Error const& e) {
      round.fail(e.what());
    }
    rep.families.push_back(std::move(round));
    return rep;
  }

  inline SuiteReport verify_io(DynamicalSystem const& sys) {
    SuiteReport rep{"cli", {}};
    CheckFamily rt("serialize-round-trip");
    ++rt.checked;
    try {
      auto again = system_from_json(json::parse(system_to_json(sys).dump()));
      if (!(again == sys)) {
        rt.fail("reparsed system differs");
      }
    } catch (Error const& e) {
      rt.fail(e.what());
    }
    rep.families.push_back(std::move(rt));
    return rep;
  }

  //! Every module's suite against one system.
  inline std::vector<SuiteReport> verify_all(SystemPtr const& sys, VerifyOptions const& opt) {
    std::vector<SuiteReport> out;
    out.push_back(verify_gba(*sys, opt));
    out.push_back(verify_system(*sys, opt));
    out.push_back(verify_semigroup(*sys, opt));
    {
      Algebra<IntegerRing> alg(sys, IntegerRing{});
      auto                 rep = verify_algebra(alg, opt);
      rep.families.push_back(verify_nonzero(alg, {1, -1, 2, -3, 7}, std::min<std::size_t>(opt.bound, 4)));
      for (std::int64_t m : {2, 3, 4, 6}) {
        Algebra<ModularRing> am(sys, ModularRing(m));
        std::vector<std::int64_t> rs;
        for (std::int64_t r = 1; r < m; ++r) {
          rs.push_back(r);
        }
        rep.families.push_back(verify_nonzero(am, rs, std::min<std::size_t>(opt.bound, 4)));
      }
      out.push_back(std::move(rep));
    }
    {
      auto                 nonrel = make_system(sys->with_j(std::nullopt));
      Algebra<IntegerRing> alg(nonrel, IntegerRing{});
      out.push_back(verify_annihilators(alg));
    }
    out.push_back(verify_tilde(sys));
    out.push_back(verify_ideals(*sys));
    out.push_back(verify_desingularization(*sys, opt).suite);
    out.push_back(verify_stone(*sys));
    out.push_back(verify_io(*sys));
    return out;
  }

}  // namespace gbds
