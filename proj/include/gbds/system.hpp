#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gba.hpp"
#include "member.hpp"
#include "word.hpp"

namespace gbds {

  enum class Regularity { regular, sink, singular };

  struct Classification {
    Regularity kind;
    bool       sink;  // |Δ_A| = 0; set together with regular for the empty set
  };

  inline std::string to_string(Regularity r) {
    switch (r) {
      case Regularity::regular: return "regular";
      case Regularity::sink: return "sink";
      case Regularity::singular: return "singular-non-sink";
    }
    return "";
  }

  //! Raw ingredients of a system before validation. Morphisms are given on
  //! atoms: \c theta[a][i] is the image of the i-th atom under letter a.
  struct SystemParts {
    GbaPtr                           gba;
    std::vector<std::string>         letters;
    std::vector<std::vector<Member>> theta;
    std::vector<Member>              ideal_tops;
    //! Largest element of the relative ideal; empty optional means B_reg.
    std::optional<Member> j_top;
  };

  //! A validated (relative) generalized Boolean dynamical system over a
  //! finite field of sets. Every ideal is principal and is kept as its top.
  class DynamicalSystem {
   public:
    using set_type = Member;

    static DynamicalSystem validate(SystemParts parts) {
      DynamicalSystem s;
      s._gba     = std::move(parts.gba);
      s._letters = std::move(parts.letters);
      if (parts.theta.size() != s._letters.size() || parts.ideal_tops.size() != s._letters.size()) {
        throw Error(ErrorKind::ValidationFailure, "letter count mismatch");
      }
      for (std::size_t a = 0; a < s._letters.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
          if (s._letters[a] == s._letters[b]) {
            throw Error(ErrorKind::ValidationFailure, "duplicate letter " + s._letters[a]);
          }
        }
      }
      for (std::size_t a = 0; a < s._letters.size(); ++a) {
        try {
          s._theta.push_back(GbaMorphism::validate(s._gba, s._gba, std::move(parts.theta[a])));
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::BadMorphism) {
            throw Error(ErrorKind::BadMorphism, s._letters[a] + "," + e.detail());
          }
          throw;
        }
      }
      for (std::size_t a = 0; a < s._letters.size(); ++a) {
        Member top = parts.ideal_tops[a];
        s._gba->require_member(top);
        s._ideal_tops.push_back(top);
        Member f = s._theta[a](s._gba->universe());
        if (!f.subset_of(top)) {
          for (Member m : s._gba->down_set(f)) {
            if (!m.subset_of(top)) {
              throw Error(ErrorKind::IdealTooSmall, s._letters[a] + "," + s._gba->format(m));
            }
          }
        }
      }
      s.compute_tables();
      if (parts.j_top) {
        s._gba->require_member(*parts.j_top);
        s._j_top = *parts.j_top;
        if (!s._j_top.subset_of(s._reg_top)) {
          for (Member m : s._gba->down_set(s._j_top)) {
            if (!m.subset_of(s._reg_top)) {
              throw Error(ErrorKind::JNotRegular, s._gba->format(m));
            }
          }
        }
      } else {
        s._j_top = s._reg_top;
      }
      return s;
    }

    GbaPtr const& gba() const noexcept {
      return _gba;
    }
    FiniteGBA const& algebra() const noexcept {
      return *_gba;
    }
    std::vector<std::string> const& letters() const noexcept {
      return _letters;
    }
    std::size_t num_letters() const noexcept {
      return _letters.size();
    }
    std::string const& letter_name(int a) const {
      return _letters.at(static_cast<std::size_t>(a));
    }
    int letter_index(std::string const& name) const {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_letters[i] == name) {
          return static_cast<int>(i);
        }
      }
      throw Error(ErrorKind::UnknownLetter, name);
    }
    //! Letter indices ordered by name.
    std::vector<int> letters_by_name() const {
      std::vector<int> out(_letters.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<int>(i);
      }
      std::sort(out.begin(), out.end(), [&](int x, int y) {
        return _letters[static_cast<std::size_t>(x)] < _letters[static_cast<std::size_t>(y)];
      });
      return out;
    }
    GbaMorphism const& theta(int a) const {
      check_letter(a);
      return _theta[static_cast<std::size_t>(a)];
    }
    Member theta(int a, Member A) const {
      return theta(a)(A);
    }
    std::string format(Member m) const {
      return _gba->format(m);
    }
    std::string format(Word const& w) const {
      return format_word(w, _letters);
    }

    //! θ_w = θ_{w_n} ∘ … ∘ θ_{w_1}; identity on the empty word.
    Member theta_word(Word const& w, Member A) const {
      for (int a : w) {
        A = theta(a, A);
      }
      return A;
    }

    Member ideal_top(int a) const {
      check_letter(a);
      return _ideal_tops[static_cast<std::size_t>(a)];
    }

    //! Top of I_w: everything for the empty word, θ_{w_2…w_n}(top I_{w_1})
    //! otherwise.
    Member ideal_top(Word const& w) const {
      if (w.empty()) {
        return _gba->universe();
      }
      Member top = ideal_top(w.front());
      for (std::size_t i = 1; i < w.size(); ++i) {
        top = theta(w[i], top);
      }
      return top;
    }

    GbaIdeal ideal_word(Word const& w) const {
      return GbaIdeal::principal(_gba, ideal_top(w));
    }

    bool in_ideal(Word const& w, Member A) const {
      return A.subset_of(ideal_top(w));
    }

    //! Top of F_a = {A : A ⊆ θ_a(B) for some B}.
    Member f_top(int a) const {
      return theta(a, _gba->universe());
    }

    std::vector<int> delta(Member A) const {
      _gba->require_member(A);
      std::vector<int> out;
      for (std::size_t a = 0; a < _letters.size(); ++a) {
        if (!_theta[a](A).empty()) {
          out.push_back(static_cast<int>(a));
        }
      }
      return out;
    }

    Classification classify(Member A) const {
      _gba->require_member(A);
      bool sink = delta(A).empty();
      if (A.subset_of(_reg_top)) {
        return {Regularity::regular, sink};
      }
      return {sink ? Regularity::sink : Regularity::singular, sink};
    }

    bool is_regular(Member A) const {
      return A.subset_of(_reg_top);
    }

    //! Largest regular set. A set is regular exactly when every atom below it
    //! has a nonempty Δ.
    Member reg_top() const noexcept {
      return _reg_top;
    }
    //! Largest set with empty Δ (the sinks form an ideal).
    Member sink_top() const noexcept {
      return _sink_top;
    }
    Member j_top() const noexcept {
      return _j_top;
    }
    bool is_relative() const noexcept {
      return _j_top != _reg_top;
    }
    GbaIdeal reg_ideal() const {
      return GbaIdeal::principal(_gba, _reg_top);
    }
    GbaIdeal sink_ideal() const {
      return GbaIdeal::principal(_gba, _sink_top);
    }
    GbaIdeal j_ideal() const {
      return GbaIdeal::principal(_gba, _j_top);
    }

    SystemParts parts() const {
      SystemParts p;
      p.gba     = _gba;
      p.letters = _letters;
      for (auto const& t : _theta) {
        p.theta.push_back(t.atom_images());
      }
      p.ideal_tops = _ideal_tops;
      p.j_top      = _j_top;
      return p;
    }

    //! Same system with a different relative ideal (empty optional: B_reg).
    DynamicalSystem with_j(std::optional<Member> j) const {
      SystemParts p = parts();
      p.j_top       = j;
      return validate(std::move(p));
    }

    friend bool operator==(DynamicalSystem const& x, DynamicalSystem const& y) {
      if (!(*x._gba == *y._gba) || x._letters != y._letters || x._ideal_tops != y._ideal_tops
          || x._j_top != y._j_top) {
        return false;
      }
      for (std::size_t a = 0; a < x._theta.size(); ++a) {
        if (x._theta[a].atom_images() != y._theta[a].atom_images()) {
          return false;
        }
      }
      return true;
    }

   private:
    DynamicalSystem() = default;

    void check_letter(int a) const {
      if (a < 0 || static_cast<std::size_t>(a) >= _letters.size()) {
        throw Error(ErrorKind::UnknownLetter, "#" + std::to_string(a));
      }
    }

    void compute_tables() {
      _reg_top  = Member();
      _sink_top = Member();
      for (Member c : _gba->atoms()) {
        bool any = false;
        for (auto const& t : _theta) {
          if (!t(c).empty()) {
            any = true;
          }
        }
        if (any) {
          _reg_top |= c;
        } else {
          _sink_top |= c;
        }
      }
    }

    GbaPtr                   _gba;
    std::vector<std::string> _letters;
    std::vector<GbaMorphism> _theta;
    std::vector<Member>      _ideal_tops;
    Member                   _reg_top;
    Member                   _sink_top;
    Member                   _j_top;
  };

  using SystemPtr = std::shared_ptr<DynamicalSystem const>;

  inline SystemPtr make_system(DynamicalSystem s) {
    return std::make_shared<DynamicalSystem const>(std::move(s));
  }

  //! The same system with every I_a replaced by the whole algebra.
  inline DynamicalSystem expand_ideals_to_full(DynamicalSystem const& sys) {
    SystemParts p = sys.parts();
    for (auto& t : p.ideal_tops) {
      t = sys.algebra().universe();
    }
    p.j_top.reset();
    return DynamicalSystem::validate(std::move(p));
  }

}  // namespace gbds
