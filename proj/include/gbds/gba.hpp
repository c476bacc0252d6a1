#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "member.hpp"
#include "ring.hpp"

namespace gbds {

  //! A finite generalized Boolean algebra, represented as a field of sets over
  //! an ordered ground set. Immutable once validated.
  class FiniteGBA {
   public:
    //! Checks that \p candidates contains the empty set and is closed under
    //! union, intersection and relative complement. Members are deduplicated
    //! and stored in canonical order.
    static FiniteGBA validate(std::vector<std::string> ground, std::vector<Member> candidates) {
      if (ground.size() > 64) {
        throw Error(ErrorKind::ValidationFailure, "ground set larger than 64 vertices");
      }
      Member const all = Member::full(static_cast<unsigned>(ground.size()));
      for (Member m : candidates) {
        if (!m.subset_of(all)) {
          throw Error(ErrorKind::NotAMember, "set outside the ground set");
        }
      }
      std::sort(candidates.begin(), candidates.end(), CanonicalLess());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      if (candidates.empty() || !candidates.front().empty()) {
        throw Error(ErrorKind::MissingEmptySet, "empty set not among the members");
      }
      FiniteGBA g;
      g._ground  = std::move(ground);
      g._members = std::move(candidates);
      g._lookup.insert(g._members.begin(), g._members.end());
      for (std::size_t i = 0; i < g._members.size(); ++i) {
        for (std::size_t j = i; j < g._members.size(); ++j) {
          Member a = g._members[i], b = g._members[j];
          auto   fail = [&](char const* op, Member x, Member y) {
            throw Error(ErrorKind::ClosureViolation,
                        std::string(op) + "," + g.format(x) + "," + g.format(y));
          };
          if (!g.contains(a | b)) {
            fail("union", a, b);
          }
          if (!g.contains(a & b)) {
            fail("intersection", a, b);
          }
          if (!g.contains(a - b)) {
            fail("difference", a, b);
          }
          if (!g.contains(b - a)) {
            fail("difference", b, a);
          }
        }
      }
      g.compute_atoms();
      return g;
    }

    static FiniteGBA powerset(std::vector<std::string> ground) {
      auto const n = static_cast<unsigned>(ground.size());
      if (n > 20) {
        throw Error(ErrorKind::ValidationFailure, "powerset ground too large");
      }
      std::vector<Member> all;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        all.emplace_back(b);
      }
      return validate(std::move(ground), std::move(all));
    }

    //! The field of sets generated by a partition of (part of) the ground set.
    static FiniteGBA from_atoms(std::vector<std::string> ground, std::vector<Member> const& atoms) {
      std::vector<Member> all;
      auto const          k = atoms.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Member m;
        for (std::size_t i = 0; i < k; ++i) {
          if ((mask >> i) & 1U) {
            m |= atoms[i];
          }
        }
        all.push_back(m);
      }
      return validate(std::move(ground), std::move(all));
    }

    std::vector<std::string> const& ground() const noexcept {
      return _ground;
    }
    std::vector<Member> const& members() const noexcept {
      return _members;
    }
    //! Minimal nonempty members, in canonical order; pairwise disjoint.
    std::vector<Member> const& atoms() const noexcept {
      return _atoms;
    }
    bool contains(Member m) const {
      return _lookup.count(m) != 0;
    }
    //! The largest member (join of all atoms).
    Member universe() const noexcept {
      return _universe;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }

    std::vector<Member> atoms_below(Member m) const {
      std::vector<Member> out;
      for (Member a : _atoms) {
        if (a.subset_of(m)) {
          out.push_back(a);
        }
      }
      return out;
    }

    //! The unique atom containing vertex \p v, or the empty set if no member
    //! contains it.
    Member atom_of_vertex(unsigned v) const {
      for (Member a : _atoms) {
        if (a.contains(v)) {
          return a;
        }
      }
      return Member();
    }

    //! Members below \p top, canonical order.
    std::vector<Member> down_set(Member top) const {
      std::vector<Member> out;
      for (Member m : _members) {
        if (m.subset_of(top)) {
          out.push_back(m);
        }
      }
      return out;
    }

    std::string format(Member m) const {
      return format_member(m, _ground);
    }

    void require_member(Member m) const {
      if (!contains(m)) {
        throw Error(ErrorKind::NotAMember, format(m));
      }
    }

    friend bool operator==(FiniteGBA const& a, FiniteGBA const& b) {
      return a._ground == b._ground && a._members == b._members;
    }

   private:
    FiniteGBA() = default;

    void compute_atoms() {
      _atoms.clear();
      _universe = Member();
      for (Member m : _members) {
        _universe |= m;
        if (m.empty()) {
          continue;
        }
        bool minimal = true;
        for (Member a : _atoms) {
          if (a.subset_of(m)) {
            minimal = false;
            break;
          }
        }
        // members come in order of increasing size, so a nonempty member with
        // no smaller member below it is an atom
        if (minimal) {
          for (Member n : _members) {
            if (!n.empty() && n != m && n.subset_of(m)) {
              minimal = false;
              break;
            }
          }
        }
        if (minimal) {
          _atoms.push_back(m);
        }
      }
    }

    std::vector<std::string>   _ground;
    std::vector<Member>        _members;
    std::vector<Member>        _atoms;
    std::unordered_set<Member> _lookup;
    Member                     _universe;
  };

  using GbaPtr = std::shared_ptr<FiniteGBA const>;

  inline GbaPtr make_gba(FiniteGBA g) {
    return std::make_shared<FiniteGBA const>(std::move(g));
  }

  //! An ideal of a finite GBA. In the finite case every ideal is the
  //! down-set of its largest element, which is all that is stored.
  class GbaIdeal {
   public:
    GbaIdeal() = default;

    //! The down-set of \p top.
    static GbaIdeal principal(GbaPtr parent, Member top) {
      parent->require_member(top);
      GbaIdeal i;
      i._parent = std::move(parent);
      i._top    = top;
      return i;
    }

    //! The smallest ideal containing every generator.
    static GbaIdeal generated(GbaPtr parent, std::vector<Member> const& gens) {
      Member top;
      for (Member g : gens) {
        parent->require_member(g);
        top |= g;
      }
      return principal(std::move(parent), top);
    }

    //! Validates an explicit family as an ideal of \p parent.
    static GbaIdeal from_members(GbaPtr parent, std::vector<Member> const& family) {
      std::unordered_set<Member> set(family.begin(), family.end());
      Member                     top;
      for (Member m : family) {
        parent->require_member(m);
        top |= m;
      }
      for (Member m : parent->members()) {
        if (m.subset_of(top) && set.count(m) == 0) {
          throw Error(ErrorKind::ValidationFailure,
                      "family is not an ideal: missing " + parent->format(m));
        }
      }
      return principal(std::move(parent), top);
    }

    GbaPtr const& parent() const noexcept {
      return _parent;
    }
    Member top() const noexcept {
      return _top;
    }
    bool contains(Member m) const {
      return m.subset_of(_top) && _parent->contains(m);
    }
    std::vector<Member> members() const {
      return _parent->down_set(_top);
    }
    bool subset_of(GbaIdeal const& other) const noexcept {
      return _top.subset_of(other._top);
    }
    friend bool operator==(GbaIdeal const& a, GbaIdeal const& b) {
      return a._top == b._top && (a._parent == b._parent || *a._parent == *b._parent);
    }

   private:
    GbaPtr _parent;
    Member _top;
  };

  //! B / I. Classes are represented by A \ max(I); the representatives form
  //! a field of sets over the same ground, stored as \c algebra.
  class QuotientGBA {
   public:
    static QuotientGBA make(GbaPtr gba, GbaIdeal const& ideal) {
      if (!(ideal.parent() == gba || *ideal.parent() == *gba)) {
        throw Error(ErrorKind::ForeignIdeal, "ideal does not belong to this algebra");
      }
      std::vector<Member> reps;
      for (Member m : gba->members()) {
        reps.push_back(m - ideal.top());
      }
      QuotientGBA q;
      q._parent  = gba;
      q._ideal   = ideal;
      q._algebra = make_gba(FiniteGBA::validate(gba->ground(), std::move(reps)));
      return q;
    }

    Member project(Member a) const {
      _parent->require_member(a);
      return a - _ideal.top();
    }
    GbaPtr const& parent() const noexcept {
      return _parent;
    }
    GbaIdeal const& ideal() const noexcept {
      return _ideal;
    }
    GbaPtr const& algebra() const noexcept {
      return _algebra;
    }
    std::vector<Member> const& classes() const noexcept {
      return _algebra->members();
    }

   private:
    GbaPtr   _parent;
    GbaIdeal _ideal;
    GbaPtr   _algebra;
  };

  inline QuotientGBA quotient(GbaPtr gba, GbaIdeal const& ideal) {
    return QuotientGBA::make(std::move(gba), ideal);
  }

  //! A morphism given by the images of the source atoms and extended by joins.
  class GbaMorphism {
   public:
    GbaMorphism() = default;

    //! \p images[i] is the image of source->atoms()[i]. The extension is
    //! re-checked against every law on every pair of members.
    static GbaMorphism validate(GbaPtr source, GbaPtr target, std::vector<Member> images) {
      if (images.size() != source->atoms().size()) {
        throw Error(ErrorKind::BadMorphism, "arity,atom image count mismatch");
      }
      GbaMorphism f;
      f._source = std::move(source);
      f._target = std::move(target);
      f._images = std::move(images);
      auto fail = [&](std::string const& law, Member a, Member b) {
        throw Error(ErrorKind::BadMorphism,
                    law + "," + f._source->format(a) + "," + f._source->format(b));
      };
      for (std::size_t i = 0; i < f._images.size(); ++i) {
        if (!f._target->contains(f._images[i])) {
          fail("image", f._source->atoms()[i], Member());
        }
      }
      auto const& ms = f._source->members();
      for (Member a : ms) {
        if (!f._target->contains(f(a))) {
          fail("image", a, Member());
        }
      }
      if (!f(Member()).empty()) {
        fail("empty", Member(), Member());
      }
      for (Member a : ms) {
        for (Member b : ms) {
          if (f(a | b) != (f(a) | f(b))) {
            fail("union", a, b);
          }
          if (f(a & b) != (f(a) & f(b))) {
            fail("intersection", a, b);
          }
          if (f(a - b) != (f(a) - f(b))) {
            fail("difference", a, b);
          }
        }
      }
      return f;
    }

    //! Image of an arbitrary set: the join of the images of the atoms it
    //! contains.
    Member operator()(Member a) const {
      Member out;
      auto const& atoms = _source->atoms();
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].subset_of(a)) {
          out |= _images[i];
        }
      }
      return out;
    }

    GbaPtr const& source() const noexcept {
      return _source;
    }
    GbaPtr const& target() const noexcept {
      return _target;
    }
    std::vector<Member> const& atom_images() const noexcept {
      return _images;
    }

   private:
    GbaPtr              _source;
    GbaPtr              _target;
    std::vector<Member> _images;
  };

  template <CoefficientRing Ring>
  using Term = std::pair<typename Ring::value_type, Member>;

  //! Rewrites Σ r_i p_{A_i} over pairwise disjoint sets by expanding each set
  //! into atoms; zero coefficients are dropped. Output is in atom order.
  template <CoefficientRing Ring>
  std::vector<Term<Ring>> disjointify(FiniteGBA const&               gba,
                                      Ring const&                    ring,
                                      std::vector<Term<Ring>> const& terms) {
    for (auto const& [r, m] : terms) {
      if (!gba.contains(m)) {
        throw Error(ErrorKind::MixedAlgebras, gba.format(m) + " is not a member");
      }
    }
    std::vector<Term<Ring>> out;
    for (Member atom : gba.atoms()) {
      auto c = ring.zero();
      for (auto const& [r, m] : terms) {
        if (atom.subset_of(m)) {
          c = ring.add(c, r);
        }
      }
      if (!ring.is_zero(c)) {
        out.emplace_back(c, atom);
      }
    }
    return out;
  }

}  // namespace gbds
