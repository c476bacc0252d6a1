#pragma once

#include <initializer_list>
#include <string>

#include "gbds/io.hpp"
#include "gbds/system.hpp"

namespace gbds::testing {

  inline Member set(std::initializer_list<unsigned> vs) {
    Member m;
    for (unsigned v : vs) {
      m |= Member::singleton(v);
    }
    return m;
  }

  inline std::string fixture_path(std::string const& name) {
    return std::string(GBDS_FIXTURES) + "/" + name;
  }

  inline SystemPtr fixture(std::string const& name) {
    return make_system(parse_system(fixture_path(name)));
  }

  inline SystemPtr fix1() {
    return fixture("fix1.json");
  }
  inline SystemPtr fix1_jempty() {
    return fixture("fix1_jempty.json");
  }
  inline SystemPtr fix2() {
    return fixture("fix2.json");
  }

  //! FIX1 built by hand: ground {v1,v2}, θ_a: v1 ↦ {v2}, v2 ↦ ∅, I_a = ↓{v2}.
  inline SystemParts fix1_parts() {
    SystemParts p;
    p.gba        = make_gba(FiniteGBA::powerset({"v1", "v2"}));
    p.letters    = {"a"};
    p.theta      = {{set({1}), Member()}};
    p.ideal_tops = {set({1})};
    return p;
  }

  template <typename F>
  ErrorKind error_kind(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    throw std::logic_error("no error raised");
  }

  template <typename F>
  std::string error_detail(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.detail();
    }
    throw std::logic_error("no error raised");
  }

}  // namespace gbds::testing
