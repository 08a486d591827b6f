#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <type_traits>

#include "vogel/sinh_product.hpp"

namespace vogel::detail {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

template <class T>
T convert(const Rational& value) {
  if constexpr (std::is_same_v<T, double>) {
    return value.get_d();
  } else {
    return T(value.get_num().get_str()) / T(value.get_den().get_str());
  }
}

template <class T>
T eval_with(const InstantiatedProduct& e, const T& x) {
  T value = T(e.sign()) * convert<T>(e.scale());
  auto factor = [&](const Rational& a) {
    T arg = convert<T>(a);
    if (e.mode() == Mode::Rational) return arg;
    using std::sinh;
    return T(sinh(arg * x / T(4)));
  };
  for (const auto& [a, mult] : e.numerator()) {
    T f = factor(a);
    for (int i = 0; i < mult; ++i) value *= f;
  }
  for (const auto& [a, mult] : e.denominator()) {
    T f = factor(a);
    for (int i = 0; i < mult; ++i) value /= f;
  }
  return value;
}

}  // namespace vogel::detail
