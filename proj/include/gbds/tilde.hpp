#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "system.hpp"

namespace gbds {

  //! The non-relative system built from a relative one. Its elements are
  //! pairs (A, [B]_J) with A and B equal modulo B_reg; the pair is stored as
  //! the bits of A followed by the bits of B \ max(J) over a doubled ground
  //! set (vertex v and its copy v').
  class TildeSystem {
   public:
    explicit TildeSystem(SystemPtr base) : _base(std::move(base)) {
      auto const& g = _base->algebra();
      _n            = static_cast<unsigned>(g.ground().size());
      if (2 * _n > 64) {
        throw Error(ErrorKind::ValidationFailure, "ground set too large for the paired system");
      }
      std::vector<std::string> ground = g.ground();
      for (auto const& v : g.ground()) {
        ground.push_back(v + "'");
      }
      std::vector<Member> members;
      for (Member A : g.members()) {
        for (Member B : g.members()) {
          if (equivalent(A, B)) {
            members.push_back(pair(A, B));
          }
        }
      }
      auto tg = make_gba(FiniteGBA::validate(std::move(ground), std::move(members)));

      SystemParts p;
      p.gba     = tg;
      p.letters = _base->letters();
      for (std::size_t a = 0; a < _base->num_letters(); ++a) {
        std::vector<Member> images;
        for (Member x : tg->atoms()) {
          Member t = _base->theta(static_cast<int>(a), first(x));
          images.push_back(pair(t, t));
        }
        p.theta.push_back(std::move(images));
        Member top = _base->ideal_top(static_cast<int>(a));
        p.ideal_tops.push_back(pair(top, top));
      }
      _sys = make_system(DynamicalSystem::validate(std::move(p)));
    }

    DynamicalSystem const& system() const noexcept {
      return *_sys;
    }
    SystemPtr const& system_ptr() const noexcept {
      return _sys;
    }
    DynamicalSystem const& base() const noexcept {
      return *_base;
    }

    //! [A]_{B_reg} = [B]_{B_reg}.
    bool equivalent(Member A, Member B) const {
      Member diff = (A - B) | (B - A);
      return diff.subset_of(_base->reg_top());
    }

    //! The element (A, [B]_J).
    Member pair(Member A, Member B) const {
      Member second = B - _base->j_top();
      return Member(A.bits() | (second.bits() << _n));
    }
    Member first(Member x) const {
      return x & Member::full(_n);
    }
    //! The stored representative B \ max(J) of the second coordinate.
    Member second(Member x) const {
      return Member(x.bits() >> _n);
    }

    //! {(A, [∅]) : A ∈ B_reg}, as stored members.
    std::vector<Member> expected_regular() const {
      std::vector<Member> out;
      for (Member A : _base->algebra().down_set(_base->reg_top())) {
        out.push_back(pair(A, Member()));
      }
      return out;
    }

    //! Regular members of the paired system, canonical order.
    std::vector<Member> regular_members() const {
      return _sys->algebra().down_set(_sys->reg_top());
    }

    std::string format(Member x) const {
      return "(" + _base->format(first(x)) + "," + _base->format(second(x)) + ")";
    }

   private:
    SystemPtr _base;
    SystemPtr _sys;
    unsigned  _n = 0;
  };

  //! C = B \ A and D = A \ B; both regular, with A ∪ C = B ∪ D and
  //! A ∩ C = ∅ = B ∩ D.
  inline std::pair<Member, Member> find_CD(DynamicalSystem const& sys, Member A, Member B) {
    sys.algebra().require_member(A);
    sys.algebra().require_member(B);
    Member C = B - A;
    Member D = A - B;
    if (!sys.is_regular(C) || !sys.is_regular(D)) {
      throw Error(ErrorKind::NotEquivalent, sys.format(A) + "," + sys.format(B));
    }
    return {C, D};
  }

  //! The isomorphism between the relative algebra and the algebra of the
  //! paired system, applied to normal-form elements through the factorization
  //! (α, c, β) = s_{α1,T} … s_{αn,T} p_c s*_{βm,T} … s*_{β1,T} with T the
  //! top of each letter's ideal.
  template <CoefficientRing Ring>
  class TildeMaps {
   public:
    TildeMaps(TildeSystem const& tilde, Algebra<Ring> const& base, Algebra<Ring> const& paired)
        : _tilde(&tilde), _base(&base), _paired(&paired) {}

    typename Algebra<Ring>::element phi(typename Algebra<Ring>::element const& x) const {
      auto const& sys = _tilde->base();
      auto        out = _paired->zero();
      for (auto const& [m, r] : x.terms()) {
        auto mid = _paired->p(_tilde->pair(m.atom, m.atom));
        out      = _paired->add(out, _paired->scale(r, wrap(*_paired, m, mid, [&](int a) {
                                   Member t = sys.ideal_top(a);
                                   return _tilde->pair(t, t);
                                 })));
      }
      return out;
    }

    typename Algebra<Ring>::element psi(typename Algebra<Ring>::element const& y) const {
      auto const& sys = _tilde->base();
      auto        out = _base->zero();
      for (auto const& [m, r] : y.terms()) {
        Member A      = _tilde->first(m.atom);
        Member B      = _tilde->second(m.atom);
        auto [C, D]   = find_CD(sys, A, B);
        auto mid      = _base->sub(_base->add(_base->p(A), _base->q(C)), _base->q(D));
        out           = _base->add(out, _base->scale(r, wrap(*_base, m, mid, [&](int a) {
                                 return sys.ideal_top(a);
                               })));
      }
      return out;
    }

   private:
    template <typename Top>
    static typename Algebra<Ring>::element wrap(Algebra<Ring> const&                   alg,
                                                Monomial const&                        m,
                                                typename Algebra<Ring>::element const& mid,
                                                Top                                    top) {
      std::vector<typename Algebra<Ring>::element> factors;
      for (int a : m.alpha) {
        factors.push_back(alg.s(a, top(a)));
      }
      factors.push_back(mid);
      for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) {
        factors.push_back(alg.s(*it, top(*it), true));
      }
      auto out = factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i) {
        out = alg.mul(out, factors[i]);
      }
      return out;
    }

    TildeSystem const*   _tilde;
    Algebra<Ring> const* _base;
    Algebra<Ring> const* _paired;
  };

}  // namespace gbds
