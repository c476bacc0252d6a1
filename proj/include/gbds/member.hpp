#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gbds {

  //! A subset of a finite ground set, stored as a bit pattern (bit i is the
  //! i-th ground vertex). Ground sets are limited to 64 vertices.
  class Member {
   public:
    using bits_type = std::uint64_t;

    constexpr Member() noexcept = default;
    constexpr explicit Member(bits_type bits) noexcept : _bits(bits) {}

    static constexpr Member singleton(unsigned i) noexcept {
      return Member(bits_type{1} << i);
    }

    static constexpr Member full(unsigned n) noexcept {
      return Member(n >= 64 ? ~bits_type{0} : (bits_type{1} << n) - 1);
    }

    constexpr bits_type bits() const noexcept {
      return _bits;
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    constexpr int size() const noexcept {
      return std::popcount(_bits);
    }
    constexpr bool contains(unsigned i) const noexcept {
      return (_bits >> i) & 1U;
    }
    constexpr bool subset_of(Member other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    constexpr bool meets(Member other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    //! Indices of the vertices in this set, increasing.
    std::vector<unsigned> elements() const {
      std::vector<unsigned> out;
      for (bits_type b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<unsigned>(std::countr_zero(b)));
      }
      return out;
    }

    friend constexpr Member operator|(Member a, Member b) noexcept {
      return Member(a._bits | b._bits);
    }
    friend constexpr Member operator&(Member a, Member b) noexcept {
      return Member(a._bits & b._bits);
    }
    //! Relative complement a \ b.
    friend constexpr Member operator-(Member a, Member b) noexcept {
      return Member(a._bits & ~b._bits);
    }
    Member& operator|=(Member b) noexcept {
      _bits |= b._bits;
      return *this;
    }
    Member& operator&=(Member b) noexcept {
      _bits &= b._bits;
      return *this;
    }

    friend constexpr bool operator==(Member, Member) noexcept = default;

   private:
    bits_type _bits = 0;
  };

  //! Canonical order: by cardinality, then lexicographically on the sorted
  //! vertex-index lists.
  struct CanonicalLess {
    bool operator()(Member a, Member b) const {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      auto ea = a.elements();
      auto eb = b.elements();
      return ea < eb;
    }
  };

  //! Strict total order used for map keys; not the canonical order.
  struct BitsLess {
    constexpr bool operator()(Member a, Member b) const noexcept {
      return a.bits() < b.bits();
    }
  };

  //! "[v1 v2]" given vertex names.
  inline std::string format_member(Member m, std::vector<std::string> const& names) {
    std::string out = "[";
    bool        first = true;
    for (unsigned i : m.elements()) {
      if (!first) {
        out += ' ';
      }
      first = false;
      out += i < names.size() ? names[i] : ("#" + std::to_string(i));
    }
    out += ']';
    return out;
  }

}  // namespace gbds

template <>
struct std::hash<gbds::Member> {
  std::size_t operator()(gbds::Member m) const noexcept {
    return std::hash<std::uint64_t>()(m.bits());
  }
};
