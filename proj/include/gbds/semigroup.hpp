#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "system.hpp"
#include "word.hpp"

namespace gbds {

  //! What the semigroup needs from a system: word action, ideal membership
  //! and a way to print sets.
  template <typename S>
  concept SemigroupSystem = requires(S const& s, Word const& w, typename S::set_type A) {
    { s.theta_word(w, A) } -> std::same_as<typename S::set_type>;
    { s.in_ideal(w, A) } -> std::same_as<bool>;
    { s.format(A) } -> std::same_as<std::string>;
    { s.format(w) } -> std::same_as<std::string>;
    { A.empty() } -> std::same_as<bool>;
    { A& A } -> std::same_as<typename S::set_type>;
    { A.subset_of(A) } -> std::same_as<bool>;
  };

  static_assert(SemigroupSystem<DynamicalSystem>);

  //! Zero or a triple (α, A, β) with ∅ ≠ A ∈ I_α ∩ I_β.
  template <typename Set>
  struct SemigroupElement {
    bool        zero = true;
    Word        alpha;
    Set         set{};
    Word        beta;
    void const* owner = nullptr;

    static SemigroupElement make_zero() {
      return SemigroupElement();
    }
    bool is_idempotent() const {
      return zero || alpha == beta;
    }
    friend bool operator==(SemigroupElement const& x, SemigroupElement const& y) {
      if (x.zero || y.zero) {
        return x.zero == y.zero;
      }
      return x.alpha == y.alpha && x.set == y.set && x.beta == y.beta;
    }
  };

  template <SemigroupSystem Sys>
  class InverseSemigroup {
   public:
    using set_type = typename Sys::set_type;
    using element  = SemigroupElement<set_type>;

    explicit InverseSemigroup(Sys const& sys) : _sys(&sys) {}

    Sys const& system() const noexcept {
      return *_sys;
    }

    //! Builds (α, A, β); throws if A is empty or outside I_α ∩ I_β.
    element make(Word alpha, set_type A, Word beta) const {
      if (A.empty()) {
        throw Error(ErrorKind::NotInIdeal, "empty set in a triple");
      }
      if (!_sys->in_ideal(alpha, A) || !_sys->in_ideal(beta, A)) {
        throw Error(ErrorKind::NotInIdeal,
                    _sys->format(A) + " not in I_" + _sys->format(alpha) + " ∩ I_"
                        + _sys->format(beta));
      }
      return raw(std::move(alpha), A, std::move(beta));
    }

    //! (α, A, β) without the ideal check, or zero when A is empty.
    element raw(Word alpha, set_type A, Word beta) const {
      if (A.empty()) {
        return element::make_zero();
      }
      element e;
      e.zero  = false;
      e.alpha = std::move(alpha);
      e.set   = A;
      e.beta  = std::move(beta);
      e.owner = _sys;
      return e;
    }

    bool valid(element const& e) const {
      return e.zero
             || (!e.set.empty() && _sys->in_ideal(e.alpha, e.set) && _sys->in_ideal(e.beta, e.set));
    }

    element multiply(element const& s, element const& t) const {
      check_owner(s);
      check_owner(t);
      if (s.zero || t.zero) {
        return element::make_zero();
      }
      if (s.beta == t.alpha) {
        return raw(s.alpha, s.set & t.set, t.beta);
      }
      if (is_prefix(s.beta, t.alpha)) {
        Word     g    = suffix_after(t.alpha, s.beta.size());
        set_type prod = _sys->theta_word(g, s.set) & t.set;
        return raw(concat(s.alpha, g), prod, t.beta);
      }
      if (is_prefix(t.alpha, s.beta)) {
        Word     b    = suffix_after(s.beta, t.alpha.size());
        set_type prod = s.set & _sys->theta_word(b, t.set);
        return raw(s.alpha, prod, concat(t.beta, b));
      }
      return element::make_zero();
    }

    static element star(element const& s) {
      if (s.zero) {
        return s;
      }
      element r = s;
      std::swap(r.alpha, r.beta);
      return r;
    }

    //! The natural order on idempotents.
    bool idempotent_leq(element const& e, element const& f) const {
      if (!e.is_idempotent() || !f.is_idempotent()) {
        throw Error(ErrorKind::NotIdempotent, format(e.is_idempotent() ? f : e));
      }
      if (e.zero) {
        return true;
      }
      if (f.zero) {
        return false;
      }
      if (!is_prefix(f.alpha, e.alpha)) {
        return false;
      }
      Word rest = suffix_after(e.alpha, f.alpha.size());
      return e.set.subset_of(_sys->theta_word(rest, f.set));
    }

    //! s ≤ t in the natural partial order: s = (s s*) t.
    bool leq(element const& s, element const& t) const {
      return multiply(multiply(s, star(s)), t) == s;
    }

    static FreeGroupWord grade(element const& s) {
      if (s.zero) {
        throw Error(ErrorKind::ZeroUngraded, "0");
      }
      return FreeGroupWord::positive(s.alpha) * FreeGroupWord::inverse_of(s.beta);
    }

    //! φ_{g^-1}: (p1 p, A, p1 p) ↦ (p2 p, A, p2 p) for g = p1 p2^-1.
    element phi_conjugate(FreeGroupWord const& g, element const& e) const {
      Word p1, p2;
      if (e.zero) {
        return e;
      }
      if (!g.split(p1, p2) || !e.is_idempotent() || !is_prefix(p1, e.alpha)) {
        throw Error(ErrorKind::NotInDomain, format(e));
      }
      Word target = concat(p2, suffix_after(e.alpha, p1.size()));
      if (!_sys->in_ideal(target, e.set)) {
        throw Error(ErrorKind::NotInDomain, format(e));
      }
      return raw(target, e.set, target);
    }

    std::string format(element const& s) const {
      if (s.zero) {
        return "0";
      }
      return "(" + _sys->format(s.alpha) + "," + _sys->format(s.set) + "," + _sys->format(s.beta)
             + ")";
    }

   private:
    void check_owner(element const& s) const {
      if (!s.zero && s.owner != nullptr && s.owner != _sys) {
        throw Error(ErrorKind::MixedSystems, "element from another system");
      }
    }

    Sys const* _sys;
  };

  //! Words w with |w| <= max_len and I_w ≠ {∅}, shortest first then by
  //! letters. Extensions of a word with empty ideal are skipped since they
  //! also have empty ideal.
  inline std::vector<Word> live_words(DynamicalSystem const& sys, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (std::size_t a = 0; a < sys.num_letters(); ++a) {
          Word v = w;
          v.push_back(static_cast<int>(a));
          if (!sys.ideal_top(v).empty()) {
            next.push_back(v);
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }

  //! All nonzero elements with |α| + |β| <= bound, in a fixed order.
  inline std::vector<SemigroupElement<Member>> enumerate_elements(InverseSemigroup<DynamicalSystem> const& S,
                                                                  std::size_t bound) {
    auto const&                           sys   = S.system();
    auto                                  words = live_words(sys, bound);
    std::vector<SemigroupElement<Member>> out;
    for (auto const& a : words) {
      Member ta = sys.ideal_top(a);
      for (auto const& b : words) {
        if (a.size() + b.size() > bound) {
          continue;
        }
        Member t = ta & sys.ideal_top(b);
        for (Member A : sys.algebra().down_set(t)) {
          if (!A.empty()) {
            out.push_back(S.raw(a, A, b));
          }
        }
      }
    }
    return out;
  }

  //! Nonzero elements of grade g with |α| + |β| <= max_len.
  inline std::vector<SemigroupElement<Member>> fiber(InverseSemigroup<DynamicalSystem> const& S,
                                                     FreeGroupWord const&                     g,
                                                     std::size_t                              max_len) {
    std::vector<SemigroupElement<Member>> out;
    Word                                  p1, p2;
    if (!g.split(p1, p2)) {
      return out;
    }
    auto const& sys = S.system();
    if (p1.size() + p2.size() > max_len) {
      return out;
    }
    std::size_t const slack = (max_len - p1.size() - p2.size()) / 2;
    for (auto const& p : live_words(sys, slack)) {
      Word   a = concat(p1, p);
      Word   b = concat(p2, p);
      Member t = sys.ideal_top(a) & sys.ideal_top(b);
      for (Member A : sys.algebra().down_set(t)) {
        if (!A.empty()) {
          out.push_back(S.raw(a, A, b));
        }
      }
    }
    return out;
  }

}  // namespace gbds
