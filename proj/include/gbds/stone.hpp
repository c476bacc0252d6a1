#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "gba.hpp"
#include "system.hpp"

namespace gbds {

  struct LabelledEdge {
    unsigned source;
    unsigned target;
    int      label;

    friend bool operator==(LabelledEdge const&, LabelledEdge const&) = default;
  };

  //! A labelled graph with a family of vertex sets and one ideal (as its top)
  //! per label. The family is kept raw so that closure can be diagnosed.
  struct LabelledSpace {
    std::vector<std::string>  vertices;
    std::vector<std::string>  labels;
    std::vector<LabelledEdge> edges;
    std::vector<Member>       family;
    std::vector<Member>       ideal_tops;

    int label_index(std::string const& name) const {
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == name) {
          return static_cast<int>(i);
        }
      }
      throw Error(ErrorKind::UnknownLabel, name);
    }
    bool in_family(Member A) const {
      return std::find(family.begin(), family.end(), A) != family.end();
    }
    std::string format(Member A) const {
      return format_member(A, vertices);
    }
  };

  //! r(A, a) over the raw edge list.
  inline Member range_raw(LabelledSpace const& sp, Member A, int a) {
    Member out;
    for (auto const& e : sp.edges) {
      if (e.label == a && A.contains(e.source)) {
        out |= Member::singleton(e.target);
      }
    }
    return out;
  }

  inline Member range(LabelledSpace const& sp, Member A, int a) {
    if (a < 0 || static_cast<std::size_t>(a) >= sp.labels.size()) {
      throw Error(ErrorKind::UnknownLabel, "#" + std::to_string(a));
    }
    if (!sp.in_family(A)) {
      throw Error(ErrorKind::NotAMember, sp.format(A));
    }
    return range_raw(sp, A, a);
  }

  //! Generators of the filters of a finite GBA: its nonempty members.
  inline std::vector<Member> filters(FiniteGBA const& g) {
    std::vector<Member> out;
    for (Member m : g.members()) {
      if (!m.empty()) {
        out.push_back(m);
      }
    }
    return out;
  }

  //! V_x as a set of filter indices.
  inline Member v_set(FiniteGBA const& g, Member x) {
    g.require_member(x);
    auto   fs = filters(g);
    Member out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].subset_of(x)) {
        out |= Member::singleton(static_cast<unsigned>(i));
      }
    }
    return out;
  }

  inline LabelledSpace stone_graph(DynamicalSystem const& sys) {
    auto const&   g  = sys.algebra();
    auto          fs = filters(g);
    LabelledSpace sp;
    if (fs.size() > 64) {
      throw Error(ErrorKind::ValidationFailure, "too many filters for a vertex set");
    }
    for (Member w : fs) {
      sp.vertices.push_back("F" + g.format(w));
    }
    sp.labels = sys.letters();
    for (unsigned i = 0; i < fs.size(); ++i) {
      for (std::size_t a = 0; a < sys.num_letters(); ++a) {
        Member t = sys.theta(static_cast<int>(a), fs[i]);
        for (unsigned j = 0; j < fs.size(); ++j) {
          if (fs[j].subset_of(t)) {
            sp.edges.push_back({i, j, static_cast<int>(a)});
          }
        }
      }
    }
    for (Member x : g.members()) {
      sp.family.push_back(v_set(g, x));
    }
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      sp.ideal_tops.push_back(v_set(g, sys.ideal_top(static_cast<int>(a))));
    }
    return sp;
  }

  //! Checks closure, normality, accommodation and weak left-resolution in
  //! that order, then builds the system with θ_a = r(·, a).
  inline DynamicalSystem labelled_to_gbds(LabelledSpace const& sp) {
    auto const& fam = sp.family;
    auto        fail = [&](std::string const& what, Member A, Member B, std::string const& extra = "") {
      throw Error(ErrorKind::ValidationFailure,
                  what + "," + sp.format(A) + "," + sp.format(B) + (extra.empty() ? "" : "," + extra));
    };
    if (!sp.in_family(Member())) {
      throw Error(ErrorKind::ValidationFailure, "family,empty set missing");
    }
    for (Member A : fam) {
      for (Member B : fam) {
        if (!sp.in_family(A | B)) {
          fail("family-union", A, B);
        }
        if (!sp.in_family(A & B)) {
          fail("family-intersection", A, B);
        }
      }
    }
    for (Member A : fam) {
      for (Member B : fam) {
        if (!sp.in_family(A - B)) {
          fail("normal", A, B);
        }
      }
    }
    for (std::size_t a = 0; a < sp.labels.size(); ++a) {
      for (Member A : fam) {
        if (!sp.in_family(range_raw(sp, A, static_cast<int>(a)))) {
          fail("accommodating", A, Member(), sp.labels[a]);
        }
      }
    }
    for (std::size_t a = 0; a < sp.labels.size(); ++a) {
      int l = static_cast<int>(a);
      for (Member A : fam) {
        for (Member B : fam) {
          if (range_raw(sp, A & B, l) != (range_raw(sp, A, l) & range_raw(sp, B, l))) {
            fail("WLR", A, B, sp.labels[a]);
          }
        }
      }
    }
    auto        g = make_gba(FiniteGBA::validate(sp.vertices, fam));
    SystemParts p;
    p.gba     = g;
    p.letters = sp.labels;
    for (std::size_t a = 0; a < sp.labels.size(); ++a) {
      std::vector<Member> images;
      for (Member c : g->atoms()) {
        images.push_back(range_raw(sp, c, static_cast<int>(a)));
      }
      p.theta.push_back(std::move(images));
    }
    p.ideal_tops = sp.ideal_tops;
    return DynamicalSystem::validate(std::move(p));
  }

  //! Whether the atom bijection f (atom i of x to atom f[i] of y) extends to
  //! an isomorphism of systems: letters by name, θ, ideals and J.
  inline bool is_isomorphism(DynamicalSystem const& x, DynamicalSystem const& y, std::vector<std::size_t> const& f) {
    auto const& ax = x.algebra().atoms();
    auto const& ay = y.algebra().atoms();
    if (ax.size() != ay.size() || f.size() != ax.size() || x.letters() != y.letters()) {
      return false;
    }
    auto image = [&](Member m) {
      Member out;
      for (std::size_t i = 0; i < ax.size(); ++i) {
        if (ax[i].subset_of(m)) {
          out |= ay[f[i]];
        }
      }
      return out;
    };
    for (std::size_t a = 0; a < x.num_letters(); ++a) {
      int l = static_cast<int>(a);
      for (Member c : ax) {
        if (image(x.theta(l, c)) != y.theta(l, image(c))) {
          return false;
        }
      }
      if (image(x.ideal_top(l)) != y.ideal_top(l)) {
        return false;
      }
    }
    return image(x.j_top()) == y.j_top();
  }

  //! Backtracking search over atom bijections, trying targets in canonical
  //! order and pruning on per-atom letter profiles.
  inline std::optional<std::vector<std::size_t>> find_isomorphism(DynamicalSystem const& x, DynamicalSystem const& y) {
    auto const& ax = x.algebra().atoms();
    auto const& ay = y.algebra().atoms();
    if (ax.size() != ay.size() || x.letters() != y.letters()) {
      return std::nullopt;
    }
    auto profile = [](DynamicalSystem const& s, Member c) {
      std::vector<int> out;
      for (std::size_t a = 0; a < s.num_letters(); ++a) {
        int l = static_cast<int>(a);
        out.push_back(static_cast<int>(s.algebra().atoms_below(s.theta(l, c)).size()));
        out.push_back(c.subset_of(s.ideal_top(l)) ? 1 : 0);
      }
      out.push_back(c.subset_of(s.j_top()) ? 1 : 0);
      return out;
    };
    std::vector<std::size_t>                f(ax.size());
    std::vector<bool>                       used(ay.size(), false);
    std::function<bool(std::size_t)>        go = [&](std::size_t i) {
      if (i == ax.size()) {
        return is_isomorphism(x, y, f);
      }
      auto pi = profile(x, ax[i]);
      for (std::size_t j = 0; j < ay.size(); ++j) {
        if (!used[j] && profile(y, ay[j]) == pi) {
          used[j] = true;
          f[i]    = j;
          if (go(i + 1)) {
            return true;
          }
          used[j] = false;
        }
      }
      return false;
    };
    if (go(0)) {
      return f;
    }
    return std::nullopt;
  }

  //! The bijection x ↦ V_x from sys onto labelled_to_gbds(stone_graph(sys)),
  //! on atoms.
  inline std::vector<std::size_t> v_map(DynamicalSystem const& sys, DynamicalSystem const& dual) {
    std::vector<std::size_t> f;
    auto const&              ad = dual.algebra().atoms();
    for (Member c : sys.algebra().atoms()) {
      Member v  = v_set(sys.algebra(), c);
      auto   it = std::find(ad.begin(), ad.end(), v);
      f.push_back(it == ad.end() ? ad.size() : static_cast<std::size_t>(it - ad.begin()));
    }
    return f;
  }

  inline std::string to_dot(LabelledSpace const& sp) {
    std::ostringstream os;
    os << "digraph stone {\n";
    for (auto const& v : sp.vertices) {
      os << "  \"" << v << "\";\n";
    }
    auto edges = sp.edges;
    std::stable_sort(edges.begin(), edges.end(), [](auto const& p, auto const& q) {
      return std::tie(p.source, p.target, p.label) < std::tie(q.source, q.target, q.label);
    });
    for (auto const& e : edges) {
      os << "  \"" << sp.vertices[e.source] << "\" -> \"" << sp.vertices[e.target] << "\" [label=\""
         << sp.labels[static_cast<std::size_t>(e.label)] << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace gbds
