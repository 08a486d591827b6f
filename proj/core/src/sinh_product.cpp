#include "vogel/sinh_product.hpp"

#include <algorithm>
#include <cmath>

#include "high_precision.hpp"

#include "vogel/errors.hpp"

namespace vogel {

namespace {

void add_factor(std::map<LinForm, int>& bucket, int& sign, const LinForm& form, int multiplicity) {
  if (multiplicity <= 0) return;
  auto canon = form.canonical();
  if (canon.sign < 0 && multiplicity % 2 == 1) sign = -sign;
  bucket[canon.form] += multiplicity;
}

void add_value(std::map<Rational, int>& bucket, int& sign, const Rational& value, int multiplicity) {
  if (multiplicity <= 0) return;
  if (value < 0) {
    if (multiplicity % 2 == 1) sign = -sign;
    bucket[-value] += multiplicity;
  } else {
    bucket[value] += multiplicity;
  }
}

template <class Map>
std::size_t total(const Map& factors) {
  std::size_t n = 0;
  for (const auto& [key, mult] : factors) n += static_cast<std::size_t>(mult);
  return n;
}

std::string with_power(std::string base, int mult) {
  if (mult != 1) base += "^" + std::to_string(mult);
  return base;
}

std::string sinh_of(const Rational& value) {
  if (is_integer(value)) return "sinh(" + to_string(value) + "x/4)";
  return "sinh((" + to_string(value) + ")x/4)";
}

std::string prefix_of(int sign, const Rational& scale, bool has_body) {
  Rational s = scale * sign;
  if (!has_body) return to_string(s);
  if (s == 1) return "";
  if (s == -1) return "-";
  return to_string(s) + "*";
}

}  // namespace

void SinhProduct::mul_numerator(const LinForm& form, int multiplicity) {
  add_factor(num_, sign_, form, multiplicity);
}

void SinhProduct::mul_denominator(const LinForm& form, int multiplicity) {
  add_factor(den_, sign_, form, multiplicity);
}

SinhProduct SinhProduct::with_mode(Mode mode) const {
  SinhProduct out = *this;
  out.mode_ = mode;
  return out;
}

std::size_t SinhProduct::numerator_count() const { return total(num_); }
std::size_t SinhProduct::denominator_count() const { return total(den_); }

bool SinhProduct::has_zero_form_in_denominator() const {
  for (const auto& [form, mult] : den_) {
    if (form.is_zero()) return true;
  }
  return false;
}

SinhProduct SinhProduct::reduced() const {
  SinhProduct out(mode_);
  out.sign_ = sign_;
  out.scale_ = scale_;
  out.num_ = num_;
  out.den_ = den_;
  for (auto it = out.num_.begin(); it != out.num_.end();) {
    auto match = out.den_.find(it->first);
    if (it->first.is_zero() || match == out.den_.end()) {
      ++it;
      continue;
    }
    int common = std::min(it->second, match->second);
    it->second -= common;
    match->second -= common;
    if (match->second == 0) out.den_.erase(match);
    if (it->second == 0) {
      it = out.num_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

SinhProduct SinhProduct::permuted(const Permutation& sigma) const {
  SinhProduct out(mode_);
  out.sign_ = sign_;
  out.scale_ = scale_;
  for (const auto& [form, mult] : num_) out.mul_numerator(sigma.apply(form), mult);
  for (const auto& [form, mult] : den_) out.mul_denominator(sigma.apply(form), mult);
  return out;
}

InstantiatedProduct SinhProduct::instantiate(const Vec3& point) const {
  InstantiatedProduct out(mode_);
  if (sign_ < 0) out.negate();
  out.mul_scale(scale_);
  for (const auto& [form, mult] : num_) out.mul_numerator(eval_form(form, point), mult);
  for (const auto& [form, mult] : den_) out.mul_denominator(eval_form(form, point), mult);
  return out;
}

InstantiatedProduct SinhProduct::instantiate(const PPoint& point) const {
  return instantiate(point.coords());
}

std::string SinhProduct::to_string() const {
  auto list = [](const Factors& factors) {
    std::string out;
    for (const auto& [form, mult] : factors) out += with_power("(" + form.to_string() + ")", mult);
    return out.empty() ? std::string("1") : out;
  };
  bool body = !num_.empty() || !den_.empty();
  std::string out = prefix_of(sign_, scale_, body);
  if (!body) return out;
  std::string inner = list(num_);
  if (!den_.empty()) inner += "/" + list(den_);
  if (mode_ == Mode::Quantum) return out + "sinh[x/4: " + inner + "]";
  return out + inner;
}

void InstantiatedProduct::mul_numerator(const Rational& value, int multiplicity) {
  add_value(num_, sign_, value, multiplicity);
}

void InstantiatedProduct::mul_denominator(const Rational& value, int multiplicity) {
  add_value(den_, sign_, value, multiplicity);
}

std::size_t InstantiatedProduct::numerator_count() const { return total(num_); }
std::size_t InstantiatedProduct::denominator_count() const { return total(den_); }

int InstantiatedProduct::zero_numerator_count() const {
  auto it = num_.find(Rational(0));
  return it == num_.end() ? 0 : it->second;
}

int InstantiatedProduct::zero_denominator_count() const {
  auto it = den_.find(Rational(0));
  return it == den_.end() ? 0 : it->second;
}

InstantiatedProduct InstantiatedProduct::reduced() const {
  InstantiatedProduct out = *this;
  for (auto it = out.num_.begin(); it != out.num_.end();) {
    auto match = out.den_.find(it->first);
    if (it->first == 0 || match == out.den_.end()) {
      ++it;
      continue;
    }
    int common = std::min(it->second, match->second);
    it->second -= common;
    match->second -= common;
    if (match->second == 0) out.den_.erase(match);
    if (it->second == 0) {
      it = out.num_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

Rational InstantiatedProduct::classical_limit() const {
  if (zero_denominator_count() > 0) {
    throw SingularAtPoint("denominator factor vanishes at the point");
  }
  if (zero_numerator_count() > 0) return Rational(0);
  if (mode_ == Mode::Quantum) {
    std::size_t n = numerator_count();
    std::size_t d = denominator_count();
    if (n > d) return Rational(0);
    if (d > n) throw SingularAtPoint("more sinh factors below than above; no finite x->0 limit");
  }
  Rational value = scale_ * sign_;
  for (const auto& [a, mult] : num_) {
    for (int i = 0; i < mult; ++i) value *= a;
  }
  for (const auto& [a, mult] : den_) {
    for (int i = 0; i < mult; ++i) value /= a;
  }
  return value;
}

double InstantiatedProduct::eval_numeric(double x) const {
  if (zero_denominator_count() > 0) {
    throw SingularAtPoint("denominator factor vanishes at the point");
  }
  if (zero_numerator_count() > 0) return 0.0;
  if (mode_ == Mode::Rational) return detail::eval_with<double>(*this, x);
  double largest = 0.0;
  double top = 0.0;
  double bottom = 0.0;
  for (const auto& [a, mult] : num_) {
    double arg = std::fabs(a.get_d() * x / 4.0);
    largest = std::max(largest, arg);
    top += arg * mult;
  }
  for (const auto& [a, mult] : den_) {
    double arg = std::fabs(a.get_d() * x / 4.0);
    largest = std::max(largest, arg);
    bottom += arg * mult;
  }
  if (largest > 300.0 || top > 600.0 || bottom > 600.0) {
    return static_cast<double>(detail::eval_with<detail::BigFloat>(*this, detail::BigFloat(x)));
  }
  return detail::eval_with<double>(*this, x);
}

std::string InstantiatedProduct::to_string() const {
  auto render = [&](const Factors& factors) {
    std::string out;
    for (const auto& [a, mult] : factors) {
      if (!out.empty()) out += "*";
      if (mode_ == Mode::Quantum) {
        out += with_power(sinh_of(a), mult);
      } else {
        out += with_power(vogel::to_string(a), mult);
      }
    }
    return out;
  };
  bool body = !num_.empty() || !den_.empty();
  std::string out = prefix_of(sign_, scale_, body);
  if (!body) return out;
  out += num_.empty() ? std::string("1") : render(num_);
  if (!den_.empty()) {
    std::string below = render(den_);
    out += den_.size() > 1 ? "/(" + below + ")" : "/" + below;
  }
  return out;
}

}  // namespace vogel
