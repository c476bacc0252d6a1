#pragma once

#include <random>
#include <string>
#include <vector>

#include "gba.hpp"
#include "system.hpp"

namespace gbds {

  //! A small random system: powerset or coarser partition algebra over at
  //! most \p max_ground vertices, 1..max_letters letters, θ with disjoint
  //! atom images, I equal to F about half the time and J one of ∅, B_reg or
  //! a random regular ideal.
  inline DynamicalSystem random_system(std::mt19937_64& rng, unsigned max_ground = 4, unsigned max_letters = 3) {
    auto     pick   = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
    unsigned ground = pick(1, max_ground);
    std::vector<std::string> names;
    for (unsigned v = 0; v < ground; ++v) {
      names.push_back("v" + std::to_string(v + 1));
    }
    // Partition the ground set into atoms.
    std::vector<Member> atoms;
    bool                coarse = pick(0, 3) == 0;
    for (unsigned v = 0; v < ground; ++v) {
      if (coarse && !atoms.empty() && pick(0, 1) == 0) {
        atoms[pick(0, static_cast<unsigned>(atoms.size()) - 1)] |= Member::singleton(v);
      } else {
        atoms.push_back(Member::singleton(v));
      }
    }
    auto g = make_gba(FiniteGBA::from_atoms(names, atoms));

    SystemParts p;
    p.gba            = g;
    unsigned letters = pick(1, max_letters);
    for (unsigned a = 0; a < letters; ++a) {
      p.letters.push_back(std::string(1, static_cast<char>('a' + a)));
    }
    auto const& at = g->atoms();
    for (unsigned a = 0; a < letters; ++a) {
      std::vector<Member> images(at.size());
      for (Member target : at) {
        unsigned src = pick(0, static_cast<unsigned>(at.size()) * 2);
        if (src < at.size()) {
          images[src] |= target;
        }
      }
      p.theta.push_back(images);
    }
    bool equal_f = pick(0, 1) == 0;
    for (unsigned a = 0; a < letters; ++a) {
      Member f;
      for (Member img : p.theta[a]) {
        f |= img;
      }
      if (!equal_f) {
        for (Member c : at) {
          if (pick(0, 2) == 0) {
            f |= c;
          }
        }
      }
      p.ideal_tops.push_back(f);
    }
    auto base = DynamicalSystem::validate(p);
    switch (pick(0, 2)) {
      case 0: p.j_top = Member(); break;
      case 1: p.j_top.reset(); break;
      default: {
        Member j;
        for (Member c : g->atoms_below(base.reg_top())) {
          if (pick(0, 1) == 0) {
            j |= c;
          }
        }
        p.j_top = j;
      }
    }
    return DynamicalSystem::validate(std::move(p));
  }

  //! The same system with every I_a shrunk to F_a.
  inline DynamicalSystem restrict_ideals_to_f(DynamicalSystem const& sys) {
    SystemParts p = sys.parts();
    for (std::size_t a = 0; a < p.ideal_tops.size(); ++a) {
      p.ideal_tops[a] = sys.f_top(static_cast<int>(a));
    }
    return DynamicalSystem::validate(std::move(p));
  }

  inline bool ideals_equal_f(DynamicalSystem const& sys) {
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      if (sys.ideal_top(static_cast<int>(a)) != sys.f_top(static_cast<int>(a))) {
        return false;
      }
    }
    return true;
  }

}  // namespace gbds
