#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace gbds {

  //! A unital commutative ring with exact equality. Rings are values passed
  //! to the algebra at construction; there is no global ring state.
  template <typename R>
  concept CoefficientRing = requires(R const& r, typename R::value_type a, std::int64_t n) {
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.from_int(n) } -> std::same_as<typename R::value_type>;
    { r.add(a, a) } -> std::same_as<typename R::value_type>;
    { r.sub(a, a) } -> std::same_as<typename R::value_type>;
    { r.mul(a, a) } -> std::same_as<typename R::value_type>;
    { r.neg(a) } -> std::same_as<typename R::value_type>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.to_string(a) } -> std::same_as<std::string>;
    { r.name() } -> std::same_as<std::string>;
  };

  //! The integers, as 64-bit values with overflow detection.
  struct IntegerRing {
    using value_type = std::int64_t;

    value_type zero() const noexcept {
      return 0;
    }
    value_type one() const noexcept {
      return 1;
    }
    value_type from_int(std::int64_t n) const noexcept {
      return n;
    }
    value_type add(value_type a, value_type b) const {
      value_type r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer addition");
      }
      return r;
    }
    value_type sub(value_type a, value_type b) const {
      value_type r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer subtraction");
      }
      return r;
    }
    value_type mul(value_type a, value_type b) const {
      value_type r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer multiplication");
      }
      return r;
    }
    value_type neg(value_type a) const {
      return sub(0, a);
    }
    bool is_zero(value_type a) const noexcept {
      return a == 0;
    }
    std::string to_string(value_type a) const {
      return std::to_string(a);
    }
    std::string name() const {
      return "int";
    }
    bool operator==(IntegerRing const&) const = default;
  };

  //! Integers modulo m (m >= 1); m = 1 is the zero ring.
  class ModularRing {
   public:
    using value_type = std::int64_t;

    explicit ModularRing(std::int64_t modulus) : _m(modulus) {
      if (modulus < 1 || modulus > (std::int64_t{1} << 31)) {
        throw Error(ErrorKind::ParseError, "modulus out of range: " + std::to_string(modulus));
      }
    }

    std::int64_t modulus() const noexcept {
      return _m;
    }
    value_type zero() const noexcept {
      return 0;
    }
    value_type one() const noexcept {
      return 1 % _m;
    }
    value_type from_int(std::int64_t n) const noexcept {
      auto r = n % _m;
      return r < 0 ? r + _m : r;
    }
    value_type add(value_type a, value_type b) const noexcept {
      return (a + b) % _m;
    }
    value_type sub(value_type a, value_type b) const noexcept {
      return ((a - b) % _m + _m) % _m;
    }
    value_type mul(value_type a, value_type b) const noexcept {
      return (a * b) % _m;
    }
    value_type neg(value_type a) const noexcept {
      return sub(0, a);
    }
    bool is_zero(value_type a) const noexcept {
      return a == 0;
    }
    std::string to_string(value_type a) const {
      return std::to_string(a);
    }
    std::string name() const {
      return "mod:" + std::to_string(_m);
    }
    bool operator==(ModularRing const&) const = default;

   private:
    std::int64_t _m;
  };

  static_assert(CoefficientRing<IntegerRing>);
  static_assert(CoefficientRing<ModularRing>);

}  // namespace gbds
