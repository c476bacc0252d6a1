#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "check.hpp"
#include "desingularize.hpp"
#include "error.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "stone.hpp"
#include "tilde.hpp"
#include "verify.hpp"

namespace gbds::cli {

  inline constexpr int exit_ok             = 0;
  inline constexpr int exit_input_error    = 1;
  inline constexpr int exit_counterexample = 2;

  inline std::vector<std::string> const& commands() {
    static std::vector<std::string> const names{"validate", "info",    "semigroup",     "algebra", "tilde",
                                                "ideals",   "desingularize", "stone", "from-labelled", "verify"};
    return names;
  }

  struct RunOptions {
    std::string   command;
    std::string   input;
    std::size_t   bound  = 6;
    std::string   format = "text";
    std::string   ring   = "int";
    std::string   expr;
    std::uint64_t seed = 1;
  };

  struct RunResult {
    int         status = exit_ok;
    json        report;
    std::string output;
  };

  inline json family_json(CheckFamily const& f) {
    return {{"name", f.name}, {"checked", f.checked}, {"passed", f.passed()}, {"failures", f.failures}};
  }

  inline json suite_json(SuiteReport const& s) {
    json fams = json::array();
    for (auto const& f : s.families) {
      fams.push_back(family_json(f));
    }
    return {{"suite", s.name}, {"passed", s.passed()}, {"families", fams}};
  }

  namespace detail {

    inline void render_value(std::ostringstream& os, json const& v, std::string const& indent);

    inline bool is_flat(json const& v) {
      if (!v.is_array()) {
        return !v.is_object();
      }
      return std::all_of(v.begin(), v.end(), [](json const& x) { return !x.is_object() && !x.is_array(); });
    }

    inline std::string scalar(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_array()) {
        std::string out;
        for (auto const& x : v) {
          out += (out.empty() ? "" : ", ") + scalar(x);
        }
        return "[" + out + "]";
      }
      return v.dump();
    }

    inline void render_value(std::ostringstream& os, json const& v, std::string const& indent) {
      if (v.is_object()) {
        for (auto const& [k, x] : v.items()) {
          if (is_flat(x)) {
            os << indent << k << ": " << scalar(x) << "\n";
          } else {
            os << indent << k << ":\n";
            render_value(os, x, indent + "  ");
          }
        }
        return;
      }
      for (auto const& x : v) {
        if (is_flat(x)) {
          os << indent << "- " << scalar(x) << "\n";
        } else {
          os << indent << "-\n";
          render_value(os, x, indent + "  ");
        }
      }
    }

    inline void render_checks(std::ostringstream& os, json const& checks) {
      for (auto const& s : checks) {
        for (auto const& f : s.at("families")) {
          os << (f.at("passed").get<bool>() ? "PASS " : "FAIL ") << s.at("suite").get<std::string>() << "/"
             << f.at("name").get<std::string>() << " (" << f.at("checked").get<std::size_t>() << " checked)\n";
          for (auto const& msg : f.at("failures")) {
            os << "    " << msg.get<std::string>() << "\n";
          }
        }
      }
    }

  }  // namespace detail

  //! Text rendering of a report: the same fields as the JSON form.
  inline std::string render_text(json const& report) {
    std::ostringstream os;
    os << "command: " << report.at("command").get<std::string>() << "\n";
    os << "input: " << report.at("input").get<std::string>() << "\n";
    os << "bound: " << report.at("bound").get<std::size_t>() << "\n";
    os << "ring: " << report.at("ring").get<std::string>() << "\n";
    os << "seed: " << report.at("seed").get<std::uint64_t>() << "\n";
    if (report.contains("result")) {
      detail::render_value(os, report.at("result"), "");
    }
    if (report.contains("error")) {
      os << "error: " << report.at("error").get<std::string>() << "\n";
    }
    detail::render_checks(os, report.at("checks"));
    os << "status: " << report.at("status").get<std::string>() << "\n";
    os << "elapsed_ms: " << report.at("elapsed_ms").get<double>() << "\n";
    return os.str();
  }

  namespace detail {

    inline json member_names(DynamicalSystem const& sys, std::vector<Member> const& ms) {
      json out = json::array();
      for (Member m : ms) {
        out.push_back(sys.format(m));
      }
      return out;
    }

    inline json info(DynamicalSystem const& sys) {
      auto const& g = sys.algebra();
      json        atoms = json::array();
      for (Member c : g.atoms()) {
        json theta = json::object();
        for (std::size_t a = 0; a < sys.num_letters(); ++a) {
          theta[sys.letters()[a]] = sys.format(sys.theta(static_cast<int>(a), c));
        }
        atoms.push_back({{"atom", sys.format(c)}, {"class", to_string(sys.classify(c).kind)}, {"theta", theta}});
      }
      json ideals = json::object();
      for (std::size_t a = 0; a < sys.num_letters(); ++a) {
        ideals[sys.letters()[a]] = sys.format(sys.ideal_top(static_cast<int>(a)));
      }
      return {{"ground_set", g.ground()},
              {"members", g.members().size()},
              {"alphabet", sys.letters()},
              {"atoms", atoms},
              {"ideal_tops", ideals},
              {"regular_top", sys.format(sys.reg_top())},
              {"sink_top", sys.format(sys.sink_top())},
              {"J_top", sys.format(sys.j_top())},
              {"relative", sys.is_relative()}};
    }

    inline VerifyOptions verify_options(RunOptions const& opt) {
      VerifyOptions v;
      v.bound = opt.bound;
      v.seed  = opt.seed;
      return v;
    }

    template <CoefficientRing Ring>
    void algebra_command(RunOptions const& opt, SystemPtr const& sys, Ring ring, json& result, json& checks) {
      Algebra<Ring> alg(sys, ring);
      if (!opt.expr.empty()) {
        auto x               = parse_expression(alg, opt.expr);
        result["expression"] = opt.expr;
        result["normal_form"] = alg.format(x);
        json parts           = json::object();
        for (auto const& [d, c] : alg.z_components(x)) {
          parts[std::to_string(d)] = alg.format(c);
        }
        result["degree_components"] = parts;
        return;
      }
      auto rep = verify_algebra(alg, verify_options(opt));
      std::vector<typename Ring::value_type> scalars;
      if constexpr (std::is_same_v<Ring, ModularRing>) {
        for (std::int64_t r = 1; r < ring.modulus(); ++r) {
          scalars.push_back(r);
        }
      } else {
        scalars = {1, -1, 2, -3, 7};
      }
      rep.families.push_back(verify_nonzero(alg, scalars, std::min<std::size_t>(opt.bound, 4)));
      result["monomials"] = alg.monomials(std::min<std::size_t>(opt.bound, 4)).size();
      checks.push_back(suite_json(rep));
      if (!sys->is_relative()) {
        checks.push_back(suite_json(verify_annihilators(alg)));
      }
    }

    inline void semigroup_command(RunOptions const& opt, DynamicalSystem const& sys, json& result, json& checks) {
      InverseSemigroup<DynamicalSystem> S(sys);
      auto                              elems = enumerate_elements(S, opt.bound);
      std::size_t                       idem  = 0;
      json                              listed = json::array();
      for (auto const& e : elems) {
        idem += e.is_idempotent();
        if (listed.size() < 200) {
          listed.push_back(S.format(e));
        }
      }
      result["elements"]    = elems.size();
      result["idempotents"] = idem;
      result["listed"]      = listed;
      checks.push_back(suite_json(verify_semigroup(sys, verify_options(opt))));
    }

    inline void tilde_command(SystemPtr const& sys, json& result, json& checks) {
      TildeSystem t(sys);
      json        members = json::array();
      for (Member x : t.system().algebra().members()) {
        members.push_back(t.format(x));
      }
      json regular = json::array();
      for (Member x : t.regular_members()) {
        regular.push_back(t.format(x));
      }
      result["members"] = members;
      result["regular"] = regular;
      checks.push_back(suite_json(verify_tilde(sys)));
    }

    inline void ideals_command(SystemPtr const& sys, json& result, json& checks) {
      auto                 lat = admissible_pairs(*sys);
      Algebra<IntegerRing> alg(sys, IntegerRing{});
      json                 pairs = json::array();
      for (auto const& p : lat.pairs) {
        json gens = json::array();
        for (auto const& [A, x] : ideal_generators(alg, p)) {
          gens.push_back(alg.format(x));
        }
        pairs.push_back({{"H", sys->format(p.h)}, {"S", sys->format(p.s)}, {"generators", gens}});
      }
      json hasse = json::array();
      for (auto const& [lo, hi] : lat.hasse) {
        hasse.push_back(json::array({lo, hi}));
      }
      result["pairs"] = pairs;
      result["hasse"] = hasse;
      checks.push_back(suite_json(verify_ideals(*sys)));
    }

    inline void desingularize_command(RunOptions const& opt, SystemPtr const& sys, json& result, json& checks) {
      if (sys->is_relative()) {
        throw Error(ErrorKind::RelativeSystemUnsupported, "J differs from B_reg");
      }
      DesingularizedSystem F(sys);
      std::size_t const    n     = sys->num_letters();
      json                 chain = json::array();
      for (std::size_t i = 0; i <= n + 1; ++i) {
        chain.push_back(sys->format(F.x_top(i)));
      }
      json certs = json::array();
      for (auto const& c : certify_levels(F, n + 3)) {
        certs.push_back({{"element", F.format(F.level(c.level, c.set))}, {"letter", F.letter_name(c.letter)}, {"ok", c.ok}});
      }
      auto summary = verify_desingularization(*sys, verify_options(opt));
      result["x_chain"]         = chain;
      result["certificates"]    = certs;
      result["restricted_to_f"] = summary.restricted_to_f;
      result["control_failures"] = summary.control.counterexamples();
      checks.push_back(suite_json(summary.suite));
    }

    inline void stone_command(DynamicalSystem const& sys, json& result, json& checks) {
      auto sp = stone_graph(sys);
      json edges = json::array();
      for (auto const& e : sp.edges) {
        edges.push_back(sp.vertices[e.source] + " -" + sp.labels[static_cast<std::size_t>(e.label)] + "-> "
                        + sp.vertices[e.target]);
      }
      result["vertices"] = sp.vertices;
      result["edges"]    = edges;
      result["space"]    = labelled_to_json(sp);
      checks.push_back(suite_json(verify_stone(sys)));
    }

    inline ModularRing parse_modulus(std::string const& ring) {
      std::string digits = ring.substr(4);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorKind::ParseError, "--ring " + ring);
      }
      return ModularRing(std::stoll(digits.substr(0, 12)));
    }

  }  // namespace detail

  //! Runs one subcommand. User errors become exit 1 with the error in the
  //! report; failed checks give exit 2.
  inline RunResult run(RunOptions const& opt) {
    auto      start = std::chrono::steady_clock::now();
    RunResult out;
    json      checks = json::array();
    json      result = json::object();
    bool      dot_only = false;
    out.report       = {{"command", opt.command}, {"input", opt.input}, {"bound", opt.bound}, {"ring", opt.ring},
                        {"seed", opt.seed}};
    try {
      if (std::find(commands().begin(), commands().end(), opt.command) == commands().end()) {
        throw Error(ErrorKind::ParseError, "unknown command " + opt.command);
      }
      if (opt.format != "text" && opt.format != "json" && opt.format != "dot") {
        throw Error(ErrorKind::ParseError, "--format " + opt.format);
      }
      if (opt.format == "dot" && opt.command != "stone") {
        throw Error(ErrorKind::ParseError, "--format dot is only available for stone");
      }
      if (opt.ring != "int" && opt.ring.rfind("mod:", 0) != 0) {
        throw Error(ErrorKind::ParseError, "--ring " + opt.ring);
      }
      if (opt.command == "from-labelled") {
        auto sp  = labelled_from_json(read_json_file(opt.input));
        auto sys = labelled_to_gbds(sp);
        result   = detail::info(sys);
        result["system"] = system_to_json(sys);
      } else {
        auto sys = make_system(parse_system(opt.input));
        if (opt.command == "validate") {
          result["valid"]   = true;
          result["atoms"]   = sys->algebra().atoms().size();
          result["members"] = sys->algebra().members().size();
          result["letters"] = sys->num_letters();
        } else if (opt.command == "info") {
          result = detail::info(*sys);
        } else if (opt.command == "semigroup") {
          detail::semigroup_command(opt, *sys, result, checks);
        } else if (opt.command == "algebra") {
          if (opt.ring == "int") {
            detail::algebra_command(opt, sys, IntegerRing{}, result, checks);
          } else {
            detail::algebra_command(opt, sys, detail::parse_modulus(opt.ring), result, checks);
          }
        } else if (opt.command == "tilde") {
          detail::tilde_command(sys, result, checks);
        } else if (opt.command == "ideals") {
          detail::ideals_command(sys, result, checks);
        } else if (opt.command == "desingularize") {
          detail::desingularize_command(opt, sys, result, checks);
        } else if (opt.command == "stone") {
          if (opt.format == "dot") {
            out.output = to_dot(stone_graph(*sys));
            dot_only   = true;
          } else {
            detail::stone_command(*sys, result, checks);
          }
        } else {
          for (auto const& s : verify_all(sys, detail::verify_options(opt))) {
            checks.push_back(suite_json(s));
          }
        }
      }
      bool pass = std::all_of(checks.begin(), checks.end(), [](json const& s) { return s.at("passed").get<bool>(); });
      out.status = pass ? exit_ok : exit_counterexample;
      out.report["status"] = pass ? "pass" : "fail";
    } catch (Error const& e) {
      out.status           = exit_input_error;
      out.report["error"]  = e.what();
      out.report["status"] = "error";
    } catch (json::exception const& e) {
      out.status           = exit_input_error;
      out.report["error"]  = std::string("ParseError(") + e.what() + ")";
      out.report["status"] = "error";
    }
    out.report["result"] = result;
    out.report["checks"] = checks;
    out.report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!dot_only) {
      out.output = opt.format == "json" ? out.report.dump(2) + "\n" : render_text(out.report);
    }
    return out;
  }

}  // namespace gbds::cli
