#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "check.hpp"
#include "error.hpp"
#include "semigroup.hpp"
#include "system.hpp"
#include "word.hpp"

namespace gbds {

  //! A finitely supported element ⊔ [B_i]_i of the level sum. Level i holds
  //! the representative B_i \ max(X_i); trailing empty levels are dropped.
  struct LevelSet {
    std::vector<Member> levels;

    bool empty() const noexcept {
      return levels.empty();
    }
    Member at(std::size_t i) const noexcept {
      return i < levels.size() ? levels[i] : Member();
    }
    //! Index of the only nonempty level, if there is exactly one.
    std::optional<std::size_t> single_level() const {
      std::optional<std::size_t> out;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!levels[i].empty()) {
          if (out) {
            return std::nullopt;
          }
          out = i;
        }
      }
      return out;
    }
    bool subset_of(LevelSet const& o) const {
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!levels[i].subset_of(o.at(i))) {
          return false;
        }
      }
      return true;
    }
    friend LevelSet operator&(LevelSet const& x, LevelSet const& y) {
      LevelSet r;
      r.levels.resize(std::min(x.levels.size(), y.levels.size()));
      for (std::size_t i = 0; i < r.levels.size(); ++i) {
        r.levels[i] = x.levels[i] & y.levels[i];
      }
      r.trim();
      return r;
    }
    friend LevelSet operator|(LevelSet const& x, LevelSet const& y) {
      LevelSet r;
      r.levels.resize(std::max(x.levels.size(), y.levels.size()));
      for (std::size_t i = 0; i < r.levels.size(); ++i) {
        r.levels[i] = x.at(i) | y.at(i);
      }
      r.trim();
      return r;
    }
    friend bool operator==(LevelSet const& x, LevelSet const& y) = default;

    void trim() {
      while (!levels.empty() && levels.back().empty()) {
        levels.pop_back();
      }
    }
  };

  //! The desingularized system over B^F = ⊕ B/X_i with alphabet L ∪ {b_1, b_2, …}.
  //! Letter indices: a_i (the i-th base letter) is i - 1; b_j is n - 1 + j.
  class DesingularizedSystem {
   public:
    using set_type = LevelSet;

    explicit DesingularizedSystem(SystemPtr base) : _base(std::move(base)) {
      if (_base->is_relative()) {
        throw Error(ErrorKind::RelativeSystemUnsupported, "desingularization needs J = B_reg");
      }
      _n = _base->num_letters();
      _x.assign(_n + 2, Member());
      for (std::size_t i = 2; i <= _n + 1; ++i) {
        for (Member c : _base->algebra().atoms()) {
          auto d = _base->delta(c);
          if (!d.empty() && static_cast<std::size_t>(d.back()) < i - 1) {
            _x[i] |= c;
          }
        }
      }
    }

    DynamicalSystem const& base() const noexcept {
      return *_base;
    }
    std::size_t num_base_letters() const noexcept {
      return _n;
    }

    //! Top of X_i.
    Member x_top(std::size_t i) const noexcept {
      return _x[std::min(i, _n + 1)];
    }

    bool is_b(int l) const noexcept {
      return static_cast<std::size_t>(l) >= _n;
    }
    int b_letter(std::size_t j) const noexcept {
      return static_cast<int>(_n + j - 1);
    }
    std::size_t b_index(int l) const noexcept {
      return static_cast<std::size_t>(l) - _n + 1;
    }
    std::string letter_name(int l) const {
      if (l < 0) {
        throw Error(ErrorKind::UnknownLetter, "#" + std::to_string(l));
      }
      return is_b(l) ? "b_" + std::to_string(b_index(l)) : _base->letter_name(l);
    }

    //! [A]_i.
    LevelSet level(std::size_t i, Member A) const {
      LevelSet r;
      r.levels.assign(i + 1, Member());
      r.levels[i] = A - x_top(i);
      r.trim();
      return r;
    }
    LevelSet normalize(LevelSet s) const {
      for (std::size_t i = 0; i < s.levels.size(); ++i) {
        s.levels[i] = s.levels[i] - x_top(i);
      }
      s.trim();
      return s;
    }

    //! θ^F_{a_i}([A]_i) = [θ_{a_i}(A)]_0 and θ^F_{b_j}([A]_{j-1}) = [A]_j.
    LevelSet theta(int l, LevelSet const& B) const {
      if (l < 0) {
        throw Error(ErrorKind::UnknownLetter, "#" + std::to_string(l));
      }
      if (is_b(l)) {
        std::size_t j = b_index(l);
        return level(j, B.at(j - 1));
      }
      return level(0, _base->theta(l, B.at(static_cast<std::size_t>(l) + 1)));
    }
    LevelSet theta_word(Word const& w, LevelSet A) const {
      for (int l : w) {
        A = theta(l, A);
      }
      return A;
    }

    //! I^F_{a_i} = [I_{a_i}]_0 and I^F_{b_j} = B_j, as tops.
    LevelSet ideal_top(int l) const {
      if (is_b(l)) {
        return level(b_index(l), _base->algebra().universe());
      }
      return level(0, _base->ideal_top(l));
    }
    //! Top of I^F_w for nonempty w.
    LevelSet ideal_top(Word const& w) const {
      if (w.empty()) {
        throw Error(ErrorKind::NotAMember, "the empty word has the whole algebra as ideal");
      }
      LevelSet top = ideal_top(w.front());
      for (std::size_t i = 1; i < w.size(); ++i) {
        top = theta(w[i], top);
      }
      return top;
    }
    bool in_ideal(Word const& w, LevelSet const& A) const {
      return w.empty() || A.subset_of(ideal_top(w));
    }

    //! Δ^F_B, ascending letter index.
    std::vector<int> delta(LevelSet const& B) const {
      std::set<int> out;
      for (std::size_t i = 0; i < B.levels.size(); ++i) {
        if (B.levels[i].empty()) {
          continue;
        }
        if (i >= 1 && i <= _n && !_base->theta(static_cast<int>(i - 1), B.levels[i]).empty()) {
          out.insert(static_cast<int>(i - 1));
        }
        if (!(B.levels[i] - x_top(i + 1)).empty()) {
          out.insert(b_letter(i + 1));
        }
      }
      return {out.begin(), out.end()};
    }

    //! The letter the regularity argument picks for a nonzero [A]_i:
    //! b_{i+1} when [A]_{i+1} ≠ ∅, otherwise a_i.
    int certificate(std::size_t i, Member A) const {
      if (!(A - x_top(i + 1)).empty()) {
        return b_letter(i + 1);
      }
      return static_cast<int>(i) - 1;
    }

    //! a_i ↦ b_1 … b_i a_i.
    Word h(Word const& w) const {
      Word out;
      for (int l : w) {
        if (l < 0 || static_cast<std::size_t>(l) >= _n) {
          throw Error(ErrorKind::UnknownLetter, "#" + std::to_string(l));
        }
        for (std::size_t j = 1; j <= static_cast<std::size_t>(l) + 1; ++j) {
          out.push_back(b_letter(j));
        }
        out.push_back(l);
      }
      return out;
    }

    //! The base word whose h-image is w, if any.
    std::optional<Word> h_inverse(Word const& w) const {
      Word        out;
      std::size_t pos = 0;
      while (pos < w.size()) {
        std::size_t j = 1;
        while (pos < w.size() && is_b(w[pos]) && b_index(w[pos]) == j) {
          ++pos;
          ++j;
        }
        if (pos == w.size() || is_b(w[pos]) || static_cast<std::size_t>(w[pos]) + 2 != j) {
          return std::nullopt;
        }
        out.push_back(w[pos]);
        ++pos;
      }
      return out;
    }

    //! Splits w = h(α') b_1 … b_m; nullopt when w has no such form.
    std::optional<std::pair<Word, std::size_t>> split_tail(Word const& w) const {
      std::size_t m = 0;
      std::size_t k = w.size();
      while (k > 0 && is_b(w[k - 1])) {
        --k;
        ++m;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (b_index(w[k + i]) != i + 1) {
          return std::nullopt;
        }
      }
      auto head = h_inverse(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
      if (!head) {
        return std::nullopt;
      }
      return std::make_pair(*head, m);
    }

    std::string format(LevelSet const& s) const {
      if (s.empty()) {
        return "∅";
      }
      std::string out;
      for (std::size_t i = 0; i < s.levels.size(); ++i) {
        if (s.levels[i].empty()) {
          continue;
        }
        if (!out.empty()) {
          out += " ⊔ ";
        }
        out += _base->format(s.levels[i]) + "_" + std::to_string(i);
      }
      return out;
    }
    std::string format(Word const& w) const {
      if (w.empty()) {
        return "ω";
      }
      std::string out;
      for (int l : w) {
        out += letter_name(l);
      }
      return out;
    }

   private:
    SystemPtr           _base;
    std::size_t         _n = 0;
    std::vector<Member> _x;
  };

  static_assert(SemigroupSystem<DesingularizedSystem>);

  struct LevelCertificate {
    std::size_t level;
    Member      set;
    int         letter;
    bool        ok;
  };

  //! One certificate per nonzero single-level element at levels 0..max_level.
  //! Every nonzero element contains a nonzero single-level one, so these
  //! suffice for regularity.
  inline std::vector<LevelCertificate> certify_levels(DesingularizedSystem const& F, std::size_t max_level) {
    std::vector<LevelCertificate> out;
    for (std::size_t i = 0; i <= max_level; ++i) {
      for (Member A : F.base().algebra().members()) {
        if (A.empty() || A.meets(F.x_top(i))) {
          continue;
        }
        int  l  = F.certificate(i, A);
        auto d  = F.delta(F.level(i, A));
        bool ok = l >= 0 && std::find(d.begin(), d.end(), l) != d.end()
                  && !F.theta(l, F.level(i, A)).empty();
        out.push_back({i, A, l, ok});
      }
    }
    return out;
  }

  //! Nonzero elements of the desingularized semigroup with |α| + |β| <= bound,
  //! using b_1 … b_max_b. Pairs of empty words take single-level sets at
  //! levels 0..max_b and two-level sets on levels 0 and 1.
  inline std::vector<SemigroupElement<LevelSet>> enumerate_desingularized(
      InverseSemigroup<DesingularizedSystem> const& S, std::size_t bound, std::size_t max_b) {
    auto const&       F = S.system();
    auto const&       g = F.base().algebra();
    std::vector<Word> words{Word{}};
    std::vector<Word> frontier{Word{}};
    std::vector<int>  letters;
    for (std::size_t l = 0; l < F.num_base_letters(); ++l) {
      letters.push_back(static_cast<int>(l));
    }
    for (std::size_t j = 1; j <= max_b; ++j) {
      letters.push_back(F.b_letter(j));
    }
    for (std::size_t len = 1; len <= bound; ++len) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (int l : letters) {
          Word v = w;
          v.push_back(l);
          if (!F.ideal_top(v).empty()) {
            next.push_back(std::move(v));
          }
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }

    std::vector<SemigroupElement<LevelSet>> out;
    auto                                    add_below = [&](Word const& a, Word const& b, LevelSet const& top) {
      auto lvl = top.single_level();
      if (!lvl) {
        return;
      }
      for (Member A : g.down_set(top.at(*lvl))) {
        if (!A.empty()) {
          out.push_back(S.raw(a, F.level(*lvl, A), b));
        }
      }
    };
    for (auto const& a : words) {
      for (auto const& b : words) {
        if (a.size() + b.size() > bound) {
          continue;
        }
        if (a.empty() && b.empty()) {
          for (std::size_t i = 0; i <= max_b; ++i) {
            add_below(a, b, F.level(i, g.universe()));
          }
          for (Member A : g.members()) {
            for (Member B : g.members()) {
              LevelSet s = F.level(0, A) | F.level(1, B);
              if (!s.single_level() && !s.empty()) {
                out.push_back(S.raw(a, s, b));
              }
            }
          }
          continue;
        }
        LevelSet top = a.empty() ? F.ideal_top(b) : b.empty() ? F.ideal_top(a) : F.ideal_top(a) & F.ideal_top(b);
        add_below(a, b, top);
      }
    }
    return out;
  }

  struct EmbeddingReport {
    std::size_t              bound = 0;
    std::vector<CheckFamily> families;

    bool passed() const {
      return std::all_of(families.begin(), families.end(), [](auto const& f) { return f.passed(); });
    }
    std::size_t counterexamples() const {
      std::size_t n = 0;
      for (auto const& f : families) {
        n += f.failures.size();
      }
      return n;
    }
  };

  enum class LetterEmbedding { h, identity };

  //! Bounded checks of the conditions that make S_1 ⊆ S_2 (via h) a Morita
  //! context: morphism, membership characterization, the "above" lemma,
  //! cover preservation, tightness, the sandwich property and level
  //! reachability.
  inline EmbeddingReport check_embedding_conditions(DesingularizedSystem const& F,
                                                    std::size_t                 bound,
                                                    LetterEmbedding             mode = LetterEmbedding::h) {
    if (bound < 2) {
      throw Error(ErrorKind::BoundTooSmall, "bound " + std::to_string(bound) + " cannot reach h(a_1)");
    }
    auto const&                             base = F.base();
    auto const&                             g    = base.algebra();
    std::size_t const                       n    = F.num_base_letters();
    InverseSemigroup<DynamicalSystem>       S1(base);
    InverseSemigroup<DesingularizedSystem>  S2(F);
    using E1 = SemigroupElement<Member>;
    using E2 = SemigroupElement<LevelSet>;

    auto map_word = [&](Word const& w) { return mode == LetterEmbedding::h ? F.h(w) : w; };
    auto emb      = [&](E1 const& s) -> E2 {
      if (s.zero) {
        return E2::make_zero();
      }
      return S2.raw(map_word(s.alpha), F.level(0, s.set), map_word(s.beta));
    };

    EmbeddingReport report;
    report.bound = bound;

    // Base elements whose images fit in the bound.
    std::vector<E1> s1;
    for (auto const& s : enumerate_elements(S1, bound)) {
      if (map_word(s.alpha).size() + map_word(s.beta).size() <= bound) {
        s1.push_back(s);
      }
    }

    {
      CheckFamily fam{"morphism"};
      std::map<std::tuple<Word, std::vector<Member::bits_type>, Word>, std::size_t> seen;
      for (std::size_t i = 0; i < s1.size(); ++i) {
        auto e = emb(s1[i]);
        ++fam.checked;
        if (!S2.valid(e)) {
          fam.fail("image " + S2.format(e) + " of " + S1.format(s1[i]) + " is not an element");
        }
        std::vector<Member::bits_type> bits;
        for (Member m : e.set.levels) {
          bits.push_back(m.bits());
        }
        auto key = std::make_tuple(e.alpha, bits, e.beta);
        if (auto it = seen.find(key); it != seen.end()) {
          fam.fail("not injective: " + S1.format(s1[it->second]) + " and " + S1.format(s1[i]));
        } else {
          seen.emplace(key, i);
        }
      }
      // The identity control stops at its first witness.
      bool const stop_early = mode == LetterEmbedding::identity;
      for (std::size_t i = 0; i < s1.size() && !(stop_early && !fam.passed()); ++i) {
        for (std::size_t j = 0; j < s1.size() && !(stop_early && !fam.passed()); ++j) {
          ++fam.checked;
          auto lhs = emb(S1.multiply(s1[i], s1[j]));
          auto rhs = S2.multiply(emb(s1[i]), emb(s1[j]));
          if (!(lhs == rhs)) {
            fam.fail(S1.format(s1[i]) + "·" + S1.format(s1[j]) + ": " + S2.format(lhs) + " ≠ " + S2.format(rhs));
          }
        }
      }
      report.families.push_back(std::move(fam));
    }
    if (mode == LetterEmbedding::identity) {
      return report;
    }

    std::size_t const max_b = bound + 1;
    auto              s2    = enumerate_desingularized(S2, bound, max_b);

    auto starts_b1 = [&](Word const& w) { return !w.empty() && F.is_b(w[0]) && F.b_index(w[0]) == 1; };

    // Image elements (h(p), [C]_0, h(q)) with h(p), h(q) prefixes of a, b and
    // equal leftover lengths: the only candidates for s' with x ≤ s'.
    auto above_in_image = [&](E2 const& x, bool idempotent_only) -> std::optional<E2> {
      for (std::size_t i = 0; i <= x.alpha.size(); ++i) {
        Word pa(x.alpha.begin(), x.alpha.begin() + static_cast<std::ptrdiff_t>(i));
        auto p = F.h_inverse(pa);
        if (!p) {
          continue;
        }
        std::size_t rest = x.alpha.size() - i;
        if (rest > x.beta.size()) {
          continue;
        }
        Word qb(x.beta.begin(), x.beta.end() - static_cast<std::ptrdiff_t>(rest));
        auto q = F.h_inverse(qb);
        if (!q || (idempotent_only && *p != *q)) {
          continue;
        }
        Member top = base.ideal_top(*p) & base.ideal_top(*q);
        for (Member C : g.down_set(top)) {
          if (C.empty()) {
            continue;
          }
          E2 cand = emb(S1.raw(*p, C, *q));
          if (S2.leq(x, cand)) {
            return cand;
          }
        }
      }
      return std::nullopt;
    };

    auto in_image = [&](E2 const& x) -> bool {
      auto a = F.h_inverse(x.alpha);
      auto b = F.h_inverse(x.beta);
      auto l = x.set.single_level();
      return a && b && l && *l == 0 && S1.valid(S1.raw(*a, x.set.at(0), *b));
    };

    {
      CheckFamily fam{"image-membership"};
      for (auto const& x : s2) {
        ++fam.checked;
        auto l       = x.set.single_level();
        bool claimed = l && *l == 0 && (x.alpha.empty() || starts_b1(x.alpha))
                       && (x.beta.empty() || starts_b1(x.beta));
        if (claimed != in_image(x)) {
          fam.fail(S2.format(x) + (claimed ? " satisfies the criterion but is not an image"
                                           : " is an image but fails the criterion"));
        }
      }
      report.families.push_back(std::move(fam));
    }

    {
      CheckFamily fam{"above-image"};
      for (auto const& x : s2) {
        if (x.is_idempotent()) {
          ++fam.checked;
          bool claimed = (x.alpha.empty() && x.set.single_level() == std::optional<std::size_t>(0))
                         || starts_b1(x.alpha);
          bool found   = above_in_image(x, true).has_value();
          if (claimed != found) {
            fam.fail(S2.format(x) + (claimed ? ": no idempotent image above" : ": unexpected image above"));
          }
        }
        if (starts_b1(x.alpha) && starts_b1(x.beta)) {
          ++fam.checked;
          if (!above_in_image(x, false)) {
            fam.fail(S2.format(x) + ": no image element above");
          }
        }
      }
      report.families.push_back(std::move(fam));
    }

    // All z = (γ β, C, γ β) ≤ (γ, A, γ) with |β| <= depth, walking Δ^F.
    auto below = [&](Word const& gamma, LevelSet const& A, std::size_t depth) {
      std::vector<E2>                            out;
      std::vector<std::pair<Word, LevelSet>>     frontier{{Word{}, A}};
      for (std::size_t d = 0; d <= depth && !frontier.empty(); ++d) {
        std::vector<std::pair<Word, LevelSet>> next;
        for (auto const& [beta, T] : frontier) {
          auto lvl = T.single_level();
          if (lvl) {
            for (Member C : g.down_set(T.at(*lvl))) {
              if (!C.empty()) {
                Word w = concat(gamma, beta);
                E2   z = S2.raw(w, F.level(*lvl, C), w);
                if (S2.valid(z)) {
                  out.push_back(z);
                }
              }
            }
          }
          if (d < depth) {
            for (int l : F.delta(T)) {
              Word b2 = beta;
              b2.push_back(l);
              next.emplace_back(std::move(b2), F.theta(l, T));
            }
          }
        }
        frontier = std::move(next);
      }
      return out;
    };

    {
      CheckFamily cover{"cover"};
      CheckFamily tight{"tight"};
      for (auto const& x : s2) {
        if (!x.is_idempotent() || in_image(x)) {
          continue;
        }
        if (!starts_b1(x.alpha)) {
          continue;
        }
        auto split = F.split_tail(x.alpha);
        auto lvl   = x.set.single_level();
        if (!split || !lvl || split->second == 0 || *lvl != split->second) {
          cover.fail(S2.format(x) + ": unexpected shape");
          continue;
        }
        Word const&       ap   = split->first;
        std::size_t const nn   = split->second;
        Member const      A    = x.set.at(nn);
        Word const        hap  = F.h(ap);

        ++cover.checked;
        std::optional<int> k;
        for (std::size_t i = nn; i <= n; ++i) {
          if (!base.theta(static_cast<int>(i - 1), A).empty()) {
            k = static_cast<int>(i - 1);
            break;
          }
        }
        if (k) {
          Word w = x.alpha;
          for (std::size_t j = nn + 1; j <= static_cast<std::size_t>(*k) + 1; ++j) {
            w.push_back(F.b_letter(j));
          }
          w.push_back(*k);
          E2 z = S2.raw(w, F.level(0, base.theta(*k, A)), w);
          if (z.zero || !S2.valid(z) || !S2.idempotent_leq(z, x)) {
            cover.fail(S2.format(x) + ": letter witness " + S2.format(z) + " fails");
          }
        } else {
          Member B = A & base.sink_top();
          E2     y = S2.raw(hap, F.level(0, B), hap);
          if (B.empty() || !S2.valid(y)) {
            cover.fail(S2.format(x) + ": no sink witness");
          } else {
            for (auto const& z : below(hap, F.level(0, B), bound)) {
              if (S2.multiply(z, x).zero) {
                cover.fail(S2.format(x) + ": " + S2.format(z) + " ≤ " + S2.format(y) + " misses it");
              }
            }
          }
        }

        ++tight.checked;
        E2 y = emb(S1.raw(ap, A, ap));
        if (!S1.valid(S1.raw(ap, A, ap)) || !S2.idempotent_leq(x, y)) {
          tight.fail(S2.format(x) + ": " + S2.format(y) + " is not above it");
          continue;
        }
        std::vector<E2> ys;
        for (std::size_t i = 1; i + 1 <= nn && i <= n; ++i) {
          int    a = static_cast<int>(i - 1);
          Member t = base.theta(a, A);
          if (t.empty()) {
            continue;
          }
          Word w = ap;
          w.push_back(a);
          E2 yi = emb(S1.raw(w, t, w));
          if (!S1.valid(S1.raw(w, t, w)) || !S2.idempotent_leq(yi, y) || !S2.multiply(yi, x).zero) {
            tight.fail(S2.format(x) + ": y_" + std::to_string(i) + " = " + S2.format(yi) + " misplaced");
          }
          ys.push_back(yi);
        }
        for (auto const& z : below(hap, F.level(0, A), bound)) {
          bool meets = !S2.multiply(z, x).zero;
          for (auto const& yi : ys) {
            meets = meets || !S2.multiply(z, yi).zero;
          }
          if (!meets) {
            tight.fail(S2.format(x) + ": " + S2.format(z) + " ≤ " + S2.format(y) + " meets no cover member");
          }
        }
      }
      report.families.push_back(std::move(cover));
      report.families.push_back(std::move(tight));
    }

    {
      CheckFamily     fam{"sandwich"};
      std::vector<E2> e1;
      for (auto const& s : s1) {
        if (s.is_idempotent() && 2 * map_word(s.alpha).size() <= bound) {
          e1.push_back(emb(s));
        }
      }
      std::size_t const budget = 2'000'000;
      std::size_t const total  = e1.size() * e1.size() * s2.size();
      std::size_t const stride = total > budget ? total / budget + 1 : 1;
      std::size_t       idx    = 0;
      for (auto const& s : s2) {
        for (auto const& x : e1) {
          auto xs = S2.multiply(x, s);
          for (auto const& y : e1) {
            if (idx++ % stride != 0) {
              continue;
            }
            ++fam.checked;
            auto xsy = S2.multiply(xs, y);
            if (!xsy.zero && !above_in_image(xsy, false)) {
              fam.fail(S2.format(x) + S2.format(s) + S2.format(y) + " = " + S2.format(xsy)
                       + " has no image element above");
            }
          }
        }
      }
      report.families.push_back(std::move(fam));
    }

    {
      CheckFamily fam{"reachability"};
      for (Member A : g.members()) {
        LevelSet cur = F.level(0, A);
        for (std::size_t i = 1; i <= n + 3; ++i) {
          cur = F.theta(F.b_letter(i), cur);
          ++fam.checked;
          if (!(cur == F.level(i, A))) {
            fam.fail("θ_{b_1…b_" + std::to_string(i) + "}(" + F.format(F.level(0, A)) + ") ≠ "
                     + F.format(F.level(i, A)));
          }
        }
      }
      report.families.push_back(std::move(fam));
    }
    return report;
  }

}  // namespace gbds
