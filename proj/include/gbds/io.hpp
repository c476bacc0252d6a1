#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "error.hpp"
#include "gba.hpp"
#include "stone.hpp"
#include "system.hpp"

namespace gbds {

  using json = nlohmann::json;

  namespace detail {

    inline Error parse_error(std::string const& path, std::string const& reason) {
      return Error(ErrorKind::ParseError, path + ": " + reason);
    }

    inline json const& field(json const& doc, char const* key, std::string const& path) {
      if (!doc.is_object() || !doc.contains(key)) {
        throw parse_error(path.empty() ? key : path + "." + key, "missing");
      }
      return doc.at(key);
    }

    inline std::vector<std::string> string_list(json const& j, std::string const& path) {
      if (!j.is_array()) {
        throw parse_error(path, "expected a list of names");
      }
      std::vector<std::string> out;
      for (auto const& x : j) {
        if (!x.is_string()) {
          throw parse_error(path, "expected a list of names");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    inline Member vertex_set(json const& j, std::vector<std::string> const& ground, std::string const& path) {
      Member out;
      for (auto const& name : string_list(j, path)) {
        auto it = std::find(ground.begin(), ground.end(), name);
        if (it == ground.end()) {
          throw parse_error(path, "unknown vertex " + name);
        }
        out |= Member::singleton(static_cast<unsigned>(it - ground.begin()));
      }
      return out;
    }

    //! "[v1 v2]" → member; nullopt when malformed.
    inline std::optional<Member> bracket_set(std::string const& s, std::vector<std::string> const& ground) {
      if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        return std::nullopt;
      }
      std::istringstream is(s.substr(1, s.size() - 2));
      Member             out;
      std::string        name;
      while (is >> name) {
        auto it = std::find(ground.begin(), ground.end(), name);
        if (it == ground.end()) {
          return std::nullopt;
        }
        out |= Member::singleton(static_cast<unsigned>(it - ground.begin()));
      }
      return out;
    }

    inline std::vector<Member> family(json const& j, std::vector<std::string> const& ground, std::string const& path) {
      std::vector<Member> out;
      if (j.is_string() && j.get<std::string>() == "powerset") {
        if (ground.size() > 20) {
          throw parse_error(path, "powerset of more than 20 vertices");
        }
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << ground.size()); ++b) {
          out.push_back(Member(b));
        }
        return out;
      }
      if (!j.is_array()) {
        throw parse_error(path, "expected \"powerset\" or a list of vertex lists");
      }
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(vertex_set(j[i], ground, path + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    inline Member generators(json const& j, std::vector<std::string> const& ground, std::string const& path) {
      auto const& gens = field(j, "generators", path);
      if (!gens.is_array()) {
        throw parse_error(path + ".generators", "expected a list of vertex lists");
      }
      Member top;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        top |= vertex_set(gens[i], ground, path + ".generators[" + std::to_string(i) + "]");
      }
      return top;
    }

    inline json member_json(Member m, std::vector<std::string> const& ground) {
      json out = json::array();
      for (unsigned i : m.elements()) {
        out.push_back(ground[i]);
      }
      return out;
    }

    inline bool is_powerset(FiniteGBA const& g) {
      return g.ground().size() < 64 && g.size() == (std::size_t{1} << g.ground().size());
    }

  }  // namespace detail

  inline DynamicalSystem system_from_json(json const& doc) {
    using namespace detail;
    auto ground = string_list(field(doc, "ground_set", ""), "ground_set");
    GbaPtr g;
    try {
      g = make_gba(FiniteGBA::validate(ground, family(field(doc, "sets", ""), ground, "sets")));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::ParseError) {
        throw;
      }
      throw Error(e.kind(), "sets: " + e.detail());
    }
    SystemParts p;
    p.gba     = g;
    p.letters = string_list(field(doc, "alphabet", ""), "alphabet");
    auto const& theta  = field(doc, "theta", "");
    auto const& ideals = field(doc, "ideals", "");
    for (auto const& a : p.letters) {
      std::string const   path = "theta." + a;
      std::vector<Member> images(g->atoms().size());
      if (theta.contains(a)) {
        auto const& m = theta.at(a);
        if (!m.is_object()) {
          throw parse_error(path, "expected a mapping from atoms to vertex lists");
        }
        for (auto const& [key, val] : m.items()) {
          auto A  = bracket_set(key, ground);
          auto it = A ? std::find(g->atoms().begin(), g->atoms().end(), *A) : g->atoms().end();
          if (it == g->atoms().end()) {
            throw parse_error(path, "key " + key + " is not an atom");
          }
          images[static_cast<std::size_t>(it - g->atoms().begin())] = vertex_set(val, ground, path + "." + key);
        }
      }
      p.theta.push_back(std::move(images));
      std::string const ipath = "ideals." + a;
      if (!ideals.contains(a)) {
        throw parse_error(ipath, "missing");
      }
      p.ideal_tops.push_back(generators(ideals.at(a), ground, ipath));
    }
    if (doc.contains("J")) {
      auto const& j = doc.at("J");
      if (j.is_string() && j.get<std::string>() == "all_regular") {
        p.j_top.reset();
      } else if (j.is_string() && j.get<std::string>() == "empty") {
        p.j_top = Member();
      } else if (j.is_object()) {
        p.j_top = generators(j, ground, "J");
      } else {
        throw parse_error("J", "expected \"all_regular\", \"empty\" or {generators}");
      }
    }
    return DynamicalSystem::validate(std::move(p));
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::ParseError, path + ": cannot open");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
  }

  inline DynamicalSystem parse_system(std::string const& path) {
    return system_from_json(read_json_file(path));
  }

  inline json system_to_json(DynamicalSystem const& sys) {
    using namespace detail;
    auto const& g      = sys.algebra();
    auto const& ground = g.ground();
    json        doc;
    doc["ground_set"] = ground;
    if (is_powerset(g)) {
      doc["sets"] = "powerset";
    } else {
      json sets = json::array();
      for (Member m : g.members()) {
        sets.push_back(member_json(m, ground));
      }
      doc["sets"] = sets;
    }
    doc["alphabet"] = sys.letters();
    json theta      = json::object();
    json ideals     = json::object();
    for (std::size_t a = 0; a < sys.num_letters(); ++a) {
      json m = json::object();
      for (Member c : g.atoms()) {
        m[g.format(c)] = member_json(sys.theta(static_cast<int>(a), c), ground);
      }
      theta[sys.letters()[a]]  = m;
      ideals[sys.letters()[a]] = {{"generators", json::array({member_json(sys.ideal_top(static_cast<int>(a)), ground)})}};
    }
    doc["theta"]  = theta;
    doc["ideals"] = ideals;
    if (sys.j_top() == sys.reg_top()) {
      doc["J"] = "all_regular";
    } else if (sys.j_top().empty()) {
      doc["J"] = "empty";
    } else {
      doc["J"] = {{"generators", json::array({member_json(sys.j_top(), ground)})}};
    }
    return doc;
  }

  inline LabelledSpace labelled_from_json(json const& doc) {
    using namespace detail;
    LabelledSpace sp;
    sp.vertices = string_list(field(doc, "vertices", ""), "vertices");
    sp.labels   = string_list(field(doc, "labels", ""), "labels");
    auto const& edges = field(doc, "edges", "");
    if (!edges.is_array()) {
      throw parse_error("edges", "expected a list of [source, target, label]");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string const path = "edges[" + std::to_string(i) + "]";
      auto              e    = string_list(edges[i], path);
      if (e.size() != 3) {
        throw parse_error(path, "expected [source, target, label]");
      }
      auto s = std::find(sp.vertices.begin(), sp.vertices.end(), e[0]);
      auto t = std::find(sp.vertices.begin(), sp.vertices.end(), e[1]);
      if (s == sp.vertices.end() || t == sp.vertices.end()) {
        throw parse_error(path, "unknown vertex");
      }
      int l;
      try {
        l = sp.label_index(e[2]);
      } catch (Error const&) {
        throw parse_error(path, "unknown label " + e[2]);
      }
      sp.edges.push_back({static_cast<unsigned>(s - sp.vertices.begin()), static_cast<unsigned>(t - sp.vertices.begin()), l});
    }
    sp.family         = family(field(doc, "family", ""), sp.vertices, "family");
    auto const& ideals = field(doc, "ideals", "");
    for (auto const& a : sp.labels) {
      if (!ideals.contains(a)) {
        throw parse_error("ideals." + a, "missing");
      }
      sp.ideal_tops.push_back(generators(ideals.at(a), sp.vertices, "ideals." + a));
    }
    return sp;
  }

  inline json labelled_to_json(LabelledSpace const& sp) {
    using namespace detail;
    json doc;
    doc["vertices"] = sp.vertices;
    doc["labels"]   = sp.labels;
    json edges      = json::array();
    for (auto const& e : sp.edges) {
      edges.push_back({sp.vertices[e.source], sp.vertices[e.target], sp.labels[static_cast<std::size_t>(e.label)]});
    }
    doc["edges"] = edges;
    json fam     = json::array();
    for (Member m : sp.family) {
      fam.push_back(member_json(m, sp.vertices));
    }
    doc["family"] = fam;
    json ideals   = json::object();
    for (std::size_t a = 0; a < sp.labels.size(); ++a) {
      ideals[sp.labels[a]] = {{"generators", json::array({member_json(sp.ideal_tops[a], sp.vertices)})}};
    }
    doc["ideals"] = ideals;
    return doc;
  }

  //! Parser for algebra expressions: p[v1], p{[v1 v2]}, q[..], s{a,[v2]},
  //! S{ab,[v2]} (adjoint), integer scalars, +, -, * and parentheses.
  //! Juxtaposed factors multiply. Words are letters separated by '.' or,
  //! without dots, the greedy longest letter names.
  template <CoefficientRing Ring>
  class ExpressionParser {
   public:
    using element = typename Algebra<Ring>::element;

    ExpressionParser(Algebra<Ring> const& alg, std::string text) : _alg(&alg), _s(std::move(text)) {}

    element parse() {
      auto x = expr();
      skip();
      if (_i != _s.size()) {
        fail("unexpected '" + _s.substr(_i, 1) + "'");
      }
      return x;
    }

   private:
    [[noreturn]] void fail(std::string const& why) const {
      throw Error(ErrorKind::ParseError, "expr@" + std::to_string(_i) + ": " + why);
    }
    void skip() {
      while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
        ++_i;
      }
    }
    bool eat(char c) {
      skip();
      if (_i < _s.size() && _s[_i] == c) {
        ++_i;
        return true;
      }
      return false;
    }
    void expect(char c) {
      if (!eat(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    element expr() {
      bool    negate = eat('-');
      element x      = term();
      if (negate) {
        x = _alg->neg(x);
      }
      while (true) {
        if (eat('+')) {
          x = _alg->add(x, term());
        } else if (eat('-')) {
          x = _alg->sub(x, term());
        } else {
          return x;
        }
      }
    }

    bool starts_factor() {
      skip();
      if (_i >= _s.size()) {
        return false;
      }
      char c = _s[_i];
      return c == 'p' || c == 'q' || c == 's' || c == 'S' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    element term() {
      auto const&                   ring = _alg->ring();
      typename Ring::value_type     coef = ring.one();
      std::optional<element>        acc;
      bool                          first = true;
      while (first || eat('*') || starts_factor()) {
        first = false;
        skip();
        if (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
          std::size_t j = _i;
          while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            ++_i;
          }
          std::int64_t v;
          try {
            v = std::stoll(_s.substr(j, _i - j));
          } catch (std::exception const&) {
            fail("scalar out of range");
          }
          coef = ring.mul(coef, ring.from_int(v));
          continue;
        }
        element f = factor();
        acc       = acc ? _alg->mul(*acc, f) : f;
      }
      if (!acc) {
        fail("scalar without a generator");
      }
      return _alg->scale(coef, *acc);
    }

    element factor() {
      skip();
      if (eat('(')) {
        auto x = expr();
        expect(')');
        return x;
      }
      if (_i >= _s.size()) {
        fail("expected a generator");
      }
      char c = _s[_i++];
      if (c == 'p' || c == 'q') {
        bool braced = eat('{');
        auto A      = set();
        if (braced) {
          expect('}');
        }
        return c == 'p' ? _alg->p(A) : _alg->q(A);
      }
      if (c == 's' || c == 'S') {
        expect('{');
        Word w = word();
        expect(',');
        Member A = set();
        expect('}');
        return _alg->s(w, A, c == 'S');
      }
      --_i;
      fail("expected a generator");
    }

    Member set() {
      skip();
      std::size_t j = _s.find(']', _i);
      if (_i >= _s.size() || _s[_i] != '[' || j == std::string::npos) {
        fail("expected a vertex list [..]");
      }
      auto const& g = _alg->system().algebra();
      auto        A = detail::bracket_set(_s.substr(_i, j + 1 - _i), g.ground());
      if (!A) {
        fail("unknown vertex in " + _s.substr(_i, j + 1 - _i));
      }
      _i = j + 1;
      return *A;
    }

    Word word() {
      skip();
      std::size_t j = _s.find(',', _i);
      if (j == std::string::npos) {
        fail("expected ','");
      }
      std::string text = _s.substr(_i, j - _i);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.pop_back();
      }
      _i               = j;
      auto const& sys = _alg->system();
      Word        w;
      if (text.empty() || text == "ω") {
        return w;
      }
      if (text.find('.') != std::string::npos) {
        std::istringstream is(text);
        std::string        name;
        while (std::getline(is, name, '.')) {
          w.push_back(sys.letter_index(name));
        }
        return w;
      }
      std::size_t pos = 0;
      while (pos < text.size()) {
        int         best     = -1;
        std::size_t best_len = 0;
        for (std::size_t a = 0; a < sys.num_letters(); ++a) {
          auto const& name = sys.letters()[a];
          if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
            best     = static_cast<int>(a);
            best_len = name.size();
          }
        }
        if (best < 0) {
          throw Error(ErrorKind::UnknownLetter, text.substr(pos));
        }
        w.push_back(best);
        pos += best_len;
      }
      return w;
    }

    Algebra<Ring> const* _alg;
    std::string          _s;
    std::size_t          _i = 0;
  };

  template <CoefficientRing Ring>
  typename Algebra<Ring>::element parse_expression(Algebra<Ring> const& alg, std::string const& text) {
    return ExpressionParser<Ring>(alg, text).parse();
  }

}  // namespace gbds
