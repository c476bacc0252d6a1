#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "ring.hpp"
#include "semigroup.hpp"
#include "system.hpp"

namespace gbds {

  //! s_{α,c} s*_{β,c} for an atom c of I_α ∩ I_β; α = β = ω is p_c.
  struct Monomial {
    Word   alpha;
    Member atom;
    Word   beta;

    long degree() const noexcept {
      return static_cast<long>(alpha.size()) - static_cast<long>(beta.size());
    }

    friend bool operator==(Monomial const&, Monomial const&) = default;
    friend bool operator<(Monomial const& x, Monomial const& y) {
      auto lx = x.alpha.size() + x.beta.size();
      auto ly = y.alpha.size() + y.beta.size();
      if (lx != ly) {
        return lx < ly;
      }
      if (x.alpha != y.alpha) {
        return x.alpha < y.alpha;
      }
      if (x.beta != y.beta) {
        return x.beta < y.beta;
      }
      if (x.atom != y.atom) {
        return CanonicalLess()(x.atom, y.atom);
      }
      return false;
    }
  };

  template <CoefficientRing Ring>
  class Algebra;

  //! A finite R-combination of monomials. Only the owning Algebra builds
  //! these, and every element it hands out is in normal form.
  template <CoefficientRing Ring>
  class Element {
   public:
    using value_type = typename Ring::value_type;
    using terms_type = std::map<Monomial, value_type>;

    Element() = default;

    terms_type const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    Algebra<Ring> const* owner() const noexcept {
      return _owner;
    }

   private:
    friend class Algebra<Ring>;
    Element(Algebra<Ring> const* owner, terms_type terms) : _owner(owner), _terms(std::move(terms)) {}

    Algebra<Ring> const* _owner = nullptr;
    terms_type           _terms;
  };

  //! Exact arithmetic in the relative algebra of a system over a coefficient
  //! ring, using the monomial normal form.
  //!
  //! For each atom c of J, ℓ(c) is the least letter (by name) in Δ_c and
  //! d0(c) the canonically least atom below θ_ℓ(c)(c). A monomial whose words
  //! both end in ℓ(c), whose atom is d0(c), and whose truncated words admit c,
  //! is forbidden and gets rewritten by the relative Cuntz-Krieger relation.
  template <CoefficientRing Ring>
  class Algebra {
   public:
    using value_type = typename Ring::value_type;
    using element    = Element<Ring>;
    using Terms      = std::vector<std::pair<Monomial, std::int64_t>>;

    Algebra(SystemPtr sys, Ring ring) : _sys(std::move(sys)), _ring(std::move(ring)), _sg(*_sys) {
      auto const& g = _sys->algebra();
      for (Member c : g.atoms()) {
        if (!c.subset_of(_sys->j_top())) {
          continue;
        }
        for (int a : _sys->letters_by_name()) {
          Member img = _sys->theta(a, c);
          if (img.empty()) {
            continue;
          }
          Member d0 = g.atoms_below(img).front();
          _collapse.emplace(std::make_pair(a, d0.bits()), c);
          _special.emplace(c.bits(), std::make_pair(a, d0));
          break;
        }
      }
    }

    DynamicalSystem const& system() const noexcept {
      return *_sys;
    }
    SystemPtr const& system_ptr() const noexcept {
      return _sys;
    }
    Ring const& ring() const noexcept {
      return _ring;
    }

    //! (ℓ(c), d0(c)) for an atom c of J.
    std::optional<std::pair<int, Member>> special_pair(Member c) const {
      auto it = _special.find(c.bits());
      if (it == _special.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool valid(Monomial const& m) const {
      auto const& g = _sys->algebra();
      bool        atom = false;
      for (Member c : g.atoms()) {
        if (c == m.atom) {
          atom = true;
        }
      }
      return atom && _sys->in_ideal(m.alpha, m.atom) && _sys->in_ideal(m.beta, m.atom);
    }

    //! The atom of J this monomial collapses onto, if it is forbidden.
    std::optional<Member> forbidden(Monomial const& m) const {
      if (m.alpha.empty() || m.beta.empty() || m.alpha.back() != m.beta.back()) {
        return std::nullopt;
      }
      auto it = _collapse.find(std::make_pair(m.alpha.back(), m.atom.bits()));
      if (it == _collapse.end()) {
        return std::nullopt;
      }
      Member c  = it->second;
      Word   a0(m.alpha.begin(), m.alpha.end() - 1);
      Word   b0(m.beta.begin(), m.beta.end() - 1);
      if (!_sys->in_ideal(a0, c) || !_sys->in_ideal(b0, c)) {
        return std::nullopt;
      }
      return c;
    }

    //! One application of the collapse rule to a forbidden monomial.
    Terms rewrite_step(Monomial const& m) const {
      auto c = forbidden(m);
      if (!c) {
        return {{m, 1}};
      }
      auto const& g = _sys->algebra();
      Word        a0(m.alpha.begin(), m.alpha.end() - 1);
      Word        b0(m.beta.begin(), m.beta.end() - 1);
      Terms       out{{Monomial{a0, *c, b0}, 1}};
      for (int a : _sys->delta(*c)) {
        for (Member d : g.atoms_below(_sys->theta(a, *c))) {
          Monomial t{concat(a0, Word{a}), d, concat(b0, Word{a})};
          if (t == m) {
            continue;
          }
          out.emplace_back(t, -1);
        }
      }
      return out;
    }

    //! Integer normal form of a single valid monomial (memoized).
    Terms const& monomial_normal_form(Monomial const& m) const {
      {
        std::lock_guard<std::mutex> lock(_memo_mutex);
        auto                        it = _memo.find(m);
        if (it != _memo.end()) {
          return it->second;
        }
      }
      Terms result;
      if (!forbidden(m)) {
        result.emplace_back(m, 1);
      } else {
        std::map<Monomial, std::int64_t> acc;
        for (auto const& [t, k] : rewrite_step(m)) {
          for (auto const& [u, j] : monomial_normal_form(t)) {
            acc[u] += k * j;
          }
        }
        for (auto const& [u, k] : acc) {
          if (k != 0) {
            result.emplace_back(u, k);
          }
        }
      }
      std::lock_guard<std::mutex> lock(_memo_mutex);
      return _memo.emplace(m, std::move(result)).first->second;
    }

    element zero() const {
      return element(this, {});
    }

    //! Normal form of Σ r_i m_i for arbitrary valid monomials.
    element normalize(std::vector<std::pair<value_type, Monomial>> const& raw) const {
      typename element::terms_type acc;
      for (auto const& [r, m] : raw) {
        if (_ring.is_zero(r)) {
          continue;
        }
        for (auto const& [u, k] : monomial_normal_form(m)) {
          add_to(acc, u, _ring.mul(r, _ring.from_int(k)));
        }
      }
      return element(this, std::move(acc));
    }

    element monomial(Monomial const& m, value_type r) const {
      if (!valid(m)) {
        throw Error(ErrorKind::NotInIdeal, format(m));
      }
      return normalize({{r, m}});
    }
    element monomial(Monomial const& m) const {
      return monomial(m, _ring.one());
    }

    element p(Member A) const {
      _sys->algebra().require_member(A);
      std::vector<std::pair<value_type, Monomial>> raw;
      for (Member c : _sys->algebra().atoms_below(A)) {
        raw.emplace_back(_ring.one(), Monomial{{}, c, {}});
      }
      return normalize(raw);
    }

    //! s_{w,A} (or its adjoint) for a word w and A ∈ I_w.
    element s(Word const& w, Member A, bool starred = false) const {
      _sys->algebra().require_member(A);
      if (!_sys->in_ideal(w, A)) {
        throw Error(ErrorKind::NotInIdeal, _sys->format(A) + " not in I_" + _sys->format(w));
      }
      std::vector<std::pair<value_type, Monomial>> raw;
      for (Member c : _sys->algebra().atoms_below(A)) {
        raw.emplace_back(_ring.one(), starred ? Monomial{{}, c, w} : Monomial{w, c, {}});
      }
      return normalize(raw);
    }
    element s(int a, Member A, bool starred = false) const {
      return s(Word{a}, A, starred);
    }

    element add(element const& x, element const& y) const {
      check(x);
      check(y);
      auto acc = x._terms;
      for (auto const& [m, r] : y._terms) {
        add_to(acc, m, r);
      }
      return element(this, std::move(acc));
    }
    element scale(value_type r, element const& x) const {
      check(x);
      typename element::terms_type acc;
      for (auto const& [m, k] : x._terms) {
        add_to(acc, m, _ring.mul(r, k));
      }
      return element(this, std::move(acc));
    }
    element neg(element const& x) const {
      return scale(_ring.neg(_ring.one()), x);
    }
    element sub(element const& x, element const& y) const {
      return add(x, neg(y));
    }

    //! Product of two monomials through the semigroup product of the triples.
    std::optional<Monomial> product(Monomial const& x, Monomial const& y) const {
      auto e = _sg.multiply(_sg.raw(x.alpha, x.atom, x.beta), _sg.raw(y.alpha, y.atom, y.beta));
      if (e.zero) {
        return std::nullopt;
      }
      return Monomial{e.alpha, e.set, e.beta};
    }

    element mul(element const& x, element const& y) const {
      check(x);
      check(y);
      std::vector<std::pair<value_type, Monomial>> raw;
      for (auto const& [m, r] : x._terms) {
        for (auto const& [n, k] : y._terms) {
          if (auto t = product(m, n)) {
            raw.emplace_back(_ring.mul(r, k), *t);
          }
        }
      }
      return normalize(raw);
    }

    element star(element const& x) const {
      check(x);
      std::vector<std::pair<value_type, Monomial>> raw;
      for (auto const& [m, r] : x._terms) {
        raw.emplace_back(r, Monomial{m.beta, m.atom, m.alpha});
      }
      return normalize(raw);
    }

    bool equal(element const& x, element const& y) const {
      check(x);
      check(y);
      return x._terms == y._terms;
    }

    //! Split by degree |α| - |β|.
    std::map<long, element> z_components(element const& x) const {
      check(x);
      std::map<long, typename element::terms_type> parts;
      for (auto const& [m, r] : x._terms) {
        parts[m.degree()].emplace(m, r);
      }
      std::map<long, element> out;
      for (auto& [d, t] : parts) {
        out.emplace(d, element(this, std::move(t)));
      }
      return out;
    }

    //! q_A = p_A - Σ_{a ∈ Δ_A} s_{a,θ_a(A)} s*_{a,θ_a(A)}.
    element q(Member A) const {
      element out = p(A);
      for (int a : _sys->delta(A)) {
        Member t = _sys->theta(a, A);
        out      = sub(out, mul(s(a, t), s(a, t, true)));
      }
      return out;
    }

    //! Rewrites one randomly chosen forbidden monomial at a time until none
    //! is left. Used to cross-check the memoized normal form.
    template <typename Rng>
    element normalize_randomly(std::vector<std::pair<value_type, Monomial>> const& raw, Rng& rng) const {
      typename element::terms_type acc;
      for (auto const& [r, m] : raw) {
        add_to(acc, m, r);
      }
      while (true) {
        std::vector<Monomial> bad;
        for (auto const& [m, r] : acc) {
          if (forbidden(m)) {
            bad.push_back(m);
          }
        }
        if (bad.empty()) {
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, bad.size() - 1);
        Monomial                                    m = bad[pick(rng)];
        value_type                                  r = acc.at(m);
        acc.erase(m);
        for (auto const& [t, k] : rewrite_step(m)) {
          add_to(acc, t, _ring.mul(r, _ring.from_int(k)));
        }
      }
      return element(this, std::move(acc));
    }

    //! Every valid monomial with |α| + |β| <= bound.
    std::vector<Monomial> monomials(std::size_t bound) const {
      std::vector<Monomial> out;
      InverseSemigroup<DynamicalSystem> S(*_sys);
      for (auto const& e : enumerate_elements(S, bound)) {
        auto below = _sys->algebra().atoms_below(e.set);
        if (below.size() == 1 && below.front() == e.set) {
          out.push_back(Monomial{e.alpha, e.set, e.beta});
        }
      }
      return out;
    }

    std::string format(Monomial const& m) const {
      std::string c = _sys->format(m.atom);
      if (m.alpha.empty() && m.beta.empty()) {
        return "p" + c;
      }
      std::string out;
      if (!m.alpha.empty()) {
        out += "s{" + _sys->format(m.alpha) + "," + c + "}";
      }
      if (!m.beta.empty()) {
        out += "S{" + _sys->format(m.beta) + "," + c + "}";
      }
      return out;
    }

    std::string format(element const& x) const {
      if (x.is_zero()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [m, r] : x._terms) {
        value_type k   = r;
        bool       neg = k < 0;
        if (neg) {
          k = _ring.neg(k);
        }
        if (first) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        first = false;
        if (k != _ring.one()) {
          out += _ring.to_string(k) + "*";
        }
        out += format(m);
      }
      return out;
    }

   private:
    void add_to(typename element::terms_type& acc, Monomial const& m, value_type r) const {
      if (_ring.is_zero(r)) {
        return;
      }
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, r);
        return;
      }
      it->second = _ring.add(it->second, r);
      if (_ring.is_zero(it->second)) {
        acc.erase(it);
      }
    }

    void check(element const& x) const {
      if (x._owner != nullptr && x._owner != this) {
        throw Error(ErrorKind::MixedSystems, "element from another algebra");
      }
    }

    SystemPtr                                        _sys;
    Ring                                             _ring;
    InverseSemigroup<DynamicalSystem>                _sg;
    std::map<std::pair<int, std::uint64_t>, Member>  _collapse;
    std::map<std::uint64_t, std::pair<int, Member>> _special;
    mutable std::mutex                               _memo_mutex;
    mutable std::map<Monomial, Terms>                _memo;
  };

  //! Spanning atoms of Ann_S(I) and of its perp in S = span{p_A}, computed by
  //! linear algebra and compared against the sink description.
  struct AnnihilatorBasis {
    std::vector<Monomial> ann;
    std::vector<Monomial> perp;
    std::size_t           kernel_dim      = 0;
    std::size_t           perp_kernel_dim = 0;
    bool                  matches_closed_form = false;
    bool                  trivial_intersection = false;
  };

  template <CoefficientRing Ring>
  AnnihilatorBasis ann_basis(Algebra<Ring> const& alg) {
    auto const& sys = alg.system();
    if (sys.is_relative()) {
      throw Error(ErrorKind::RelativeSystemUnsupported, "J differs from B_reg");
    }
    auto const& atoms = sys.algebra().atoms();
    std::size_t n     = atoms.size();

    // x = Σ λ_c p_c; the coefficient of (a, d, ω) in x·s_{a,d} is Σ λ_c over
    // atoms c with d ⊆ θ_a(c).
    Matrix rows;
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      for (Member d : sys.algebra().atoms_below(sys.ideal_top(static_cast<int>(a)))) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
          auto t = alg.product(Monomial{{}, atoms[i], {}}, Monomial{{static_cast<int>(a)}, d, {}});
          if (t) {
            row[i] = 1;
          }
        }
        rows.push_back(std::move(row));
      }
    }
    auto kernel = kernel_basis(rows, n);

    // y with y·x = 0 for each kernel vector x: coefficient of p_c is y_c x_c.
    Matrix perp_rows;
    for (auto const& x : kernel) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n, Rational(0));
        row[i] = x[i];
        perp_rows.push_back(std::move(row));
      }
    }
    auto perp_kernel = kernel_basis(perp_rows, n);

    AnnihilatorBasis out;
    out.kernel_dim      = kernel.size();
    out.perp_kernel_dim = perp_kernel.size();

    auto in_span = [&](std::vector<std::vector<Rational>> const& basis, std::size_t i) {
      Matrix                m = basis;
      std::vector<Rational> e(n, Rational(0));
      e[i] = 1;
      m.push_back(std::move(e));
      return rank(m, n) == rank(basis, n);
    };
    std::vector<std::size_t> ann_idx, perp_idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_span(kernel, i)) {
        ann_idx.push_back(i);
        out.ann.push_back(Monomial{{}, atoms[i], {}});
      }
      if (in_span(perp_kernel, i)) {
        perp_idx.push_back(i);
        out.perp.push_back(Monomial{{}, atoms[i], {}});
      }
    }
    std::vector<std::size_t> sink_idx, other_idx;
    for (std::size_t i = 0; i < n; ++i) {
      (atoms[i].subset_of(sys.sink_top()) ? sink_idx : other_idx).push_back(i);
    }
    out.matches_closed_form = ann_idx == sink_idx && kernel.size() == ann_idx.size()
                              && perp_idx == other_idx && perp_kernel.size() == perp_idx.size();
    Matrix both = kernel;
    both.insert(both.end(), perp_kernel.begin(), perp_kernel.end());
    out.trivial_intersection = rank(both, n) == kernel.size() + perp_kernel.size();
    return out;
  }

}  // namespace gbds
