#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "gba.hpp"
#include "system.hpp"

namespace gbds {

  //! θ_a(max H) ⊆ max H for every letter.
  inline bool is_hereditary(DynamicalSystem const& sys, Member h) {
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      if (!sys.theta(static_cast<int>(a), h).subset_of(h)) {
        return false;
      }
    }
    return true;
  }

  //! Every A ∈ J whose letter images all lie in H is itself in H.
  inline bool is_j_saturated(DynamicalSystem const& sys, Member h) {
    for (Member A : sys.algebra().down_set(sys.j_top())) {
      bool inside = true;
      for (std::size_t a = 0; a < sys.num_letters(); ++a) {
        if (!sys.theta(static_cast<int>(a), A).subset_of(h)) {
          inside = false;
        }
      }
      if (inside && !A.subset_of(h)) {
        return false;
      }
    }
    return true;
  }

  //! (B/H, L, θ/H, I/H, J') with classes represented by A \ max H.
  inline DynamicalSystem quotient_system(DynamicalSystem const& sys, Member h, std::optional<Member> j) {
    auto        q = quotient(sys.gba(), GbaIdeal::principal(sys.gba(), h));
    SystemParts p;
    p.gba     = q.algebra();
    p.letters = sys.letters();
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      std::vector<Member> images;
      for (Member c : q.algebra()->atoms()) {
        images.push_back(sys.theta(static_cast<int>(a), c) - h);
      }
      p.theta.push_back(std::move(images));
      p.ideal_tops.push_back(sys.ideal_top(static_cast<int>(a)) - h);
    }
    if (j) {
      p.j_top = *j - h;
    }
    return DynamicalSystem::validate(std::move(p));
  }

  //! Largest element of B_H = {A : [A]_H regular in B/H}.
  inline Member b_h_top(DynamicalSystem const& sys, Member h) {
    auto q = quotient_system(sys, h, Member());
    return q.reg_top() | h;
  }

  struct AdmissiblePair {
    Member    h;
    Member    s;
    SystemPtr quotient;  // (B/H, L, θ/H, I/H, S/H)

    bool leq(AdmissiblePair const& o) const {
      return h.subset_of(o.h) && s.subset_of(o.s);
    }
  };

  struct PairLattice {
    std::vector<AdmissiblePair>                      pairs;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper) covering relations

    std::optional<std::size_t> find(Member h, Member s) const {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].h == h && pairs[i].s == s) {
          return i;
        }
      }
      return std::nullopt;
    }

    //! Componentwise intersection.
    std::optional<std::size_t> meet(std::size_t i, std::size_t j) const {
      return find(pairs[i].h & pairs[j].h, pairs[i].s & pairs[j].s);
    }

    //! Least upper bound in the pair order, if one exists.
    std::optional<std::size_t> join(std::size_t i, std::size_t j) const {
      std::optional<std::size_t> best;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!pairs[i].leq(pairs[k]) || !pairs[j].leq(pairs[k])) {
          continue;
        }
        if (!best || pairs[k].leq(pairs[*best])) {
          best = k;
        }
      }
      if (!best) {
        return std::nullopt;
      }
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[i].leq(pairs[k]) && pairs[j].leq(pairs[k]) && !pairs[*best].leq(pairs[k])) {
          return std::nullopt;
        }
      }
      return best;
    }
  };

  //! All (H, S) with H hereditary and J-saturated and S an ideal with
  //! H ∪ J ⊆ S ⊆ B_H, ordered by (H, S) canonically.
  inline PairLattice admissible_pairs(DynamicalSystem const& sys) {
    PairLattice out;
    auto const& g = sys.algebra();
    for (Member h : g.members()) {
      if (!is_hereditary(sys, h) || !is_j_saturated(sys, h)) {
        continue;
      }
      Member bh = b_h_top(sys, h);
      Member lo = h | sys.j_top();
      for (Member s : g.members()) {
        if (lo.subset_of(s) && s.subset_of(bh)) {
          out.pairs.push_back({h, s, make_system(quotient_system(sys, h, s))});
        }
      }
    }
    auto& ps = out.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i == j || !ps[i].leq(ps[j])) {
          continue;
        }
        bool cover = true;
        for (std::size_t k = 0; k < ps.size() && cover; ++k) {
          if (k != i && k != j && ps[i].leq(ps[k]) && ps[k].leq(ps[j])) {
            cover = false;
          }
        }
        if (cover) {
          out.hasse.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  //! p_A - Σ_{a ∈ Δ_[A]_H} s_{a,θ_a(A)} s*_{a,θ_a(A)} for every nonempty A ∈ S,
  //! with Δ taken in B/H.
  template <CoefficientRing Ring>
  std::vector<std::pair<Member, typename Algebra<Ring>::element>> ideal_generators(Algebra<Ring> const& alg,
                                                                                   AdmissiblePair const& pair) {
    auto const& sys = alg.system();
    std::vector<std::pair<Member, typename Algebra<Ring>::element>> out;
    for (Member A : sys.algebra().down_set(pair.s)) {
      if (A.empty()) {
        continue;
      }
      auto x = alg.p(A);
      for (int a : pair.quotient->delta(A - pair.h)) {
        Member t = sys.theta(a, A);
        x        = alg.sub(x, alg.mul(alg.s(a, t), alg.s(a, t, true)));
      }
      out.emplace_back(A, x);
    }
    return out;
  }

}  // namespace gbds
