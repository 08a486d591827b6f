#include "vogel/formulas.hpp"

#include "vogel/errors.hpp"

namespace vogel {

namespace {

LinForm f(long a, long b, long c) { return LinForm::from_ints(a, b, c); }

void check_nonnegative(int k, int l, const char* what) {
  if (k < 0 || l < 0) throw InvalidFamilyParameter(std::string(what) + " needs non-negative parameters");
}

}  // namespace

SinhProduct adjoint_qdim() {
  SinhProduct e;
  e.negate();
  e.mul_numerator(f(2, 2, 1));
  e.mul_numerator(f(2, 1, 2));
  e.mul_numerator(f(1, 2, 2));
  e.mul_denominator(f(1, 0, 0));
  e.mul_denominator(f(0, 1, 0));
  e.mul_denominator(f(0, 0, 1));
  return e;
}

SinhProduct y2_beta_dim() {
  SinhProduct e(Mode::Rational);
  e.negate();
  e.mul_numerator(f(2, -1, 2));
  e.mul_numerator(f(1, 2, 2));
  e.mul_numerator(f(2, 2, 1));
  e.mul_numerator(f(1, 1, 1));
  e.mul_numerator(f(2, 1, 1));
  e.mul_numerator(f(1, 1, 2));
  e.mul_denominator(f(0, 1, 0), 2);
  e.mul_denominator(f(1, 0, 0));
  e.mul_denominator(f(0, 0, 1));
  e.mul_denominator(f(1, -1, 0));
  e.mul_denominator(f(0, 1, -1));
  return e;
}

SinhProduct adj2_y2_cartan_dim() {
  SinhProduct e(Mode::Rational);
  for (const LinForm& form : {f(1, 0, 2), f(0, 1, 1), f(0, 2, 1), f(1, -1, -2), f(1, 1, 1),
                              f(2, 1, 1), f(1, 2, 1), f(2, 2, 1), f(2, -1, 2), f(1, 1, 2),
                              f(2, 1, 2), f(3, -2, -2), f(1, 2, 2)}) {
    e.mul_numerator(form);
  }
  e.mul_denominator(f(1, 0, 0), 3);
  e.mul_denominator(f(0, 1, 0), 2);
  e.mul_denominator(f(0, 0, 1));
  e.mul_denominator(f(1, -1, 0), 2);
  e.mul_denominator(f(3, -1, 0));
  e.mul_denominator(f(1, 0, -2));
  e.mul_denominator(f(1, 0, -1));
  e.mul_denominator(f(2, 0, -1));
  e.mul_denominator(f(0, 1, -1));
  return e;
}

SinhProduct build_Z(int k, int l, const Permutation& sigma) {
  check_nonnegative(k, l, "Z");
  SinhProduct e;
  auto up = [&](const LinForm& form) { e.mul_numerator(sigma.apply(form)); };
  auto down = [&](const LinForm& form) { e.mul_denominator(sigma.apply(form)); };

  for (long i = 1; i <= k + l; ++i) {
    up(f(3 - i, 0, 2));
    up(f(4 - i, 1, 2));
    up(f(3 - i, 2, 1));
    down(f(1 - i, 2, 0));
    down(f(-i, 1, 0));
    down(f(1 - i, 0, 1));
  }
  for (long i = 1; i <= k; ++i) {
    up(f(i - 1, -2, 0));
    down(f(i, 0, 0));
  }
  for (long i = 1; i <= k + 2 * l; ++i) {
    up(f(4 - i, 2, 2));
    down(f(3 - i, 0, 2));
  }
  for (long i = 1; i <= l; ++i) {
    up(f(3 - i, -1, 2));
    up(f(3 - i, 1, 1));
    up(f(4 - i, 0, 2));
    down(f(1 - i, -1, 1));
    down(f(1 - i, 1, 0));
    down(f(-i, 0, 0));
  }
  up(f(3 - 2 * k - 2 * l, 2, 2));
  up(f(3 - 2 * l, 0, 2));
  up(f(3 - k - 2 * l, 1, 2));
  up(f(-k, 1, 0));
  down(f(0, 1, 0));
  down(f(3, 2, 2));
  down(f(3, 0, 2));
  down(f(3, 1, 2));
  return e;
}

SinhProduct build_X(int k, int n, const Permutation& sigma) {
  check_nonnegative(k, n, "X");
  SinhProduct e;
  auto up = [&](const LinForm& form, int mult = 1) { e.mul_numerator(sigma.apply(form), mult); };
  auto down = [&](const LinForm& form, int mult = 1) { e.mul_denominator(sigma.apply(form), mult); };

  for (long i = 0; i < k; ++i) {
    up(f(i - 2, -2, 0), 2);
    up(f(i - 2, 0, -2), 2);
    up(f(2 - i, 1, 1), 2);
    down(f(i + 1, 0, 0), 2);
    down(f(1 - i, 1, 0), 2);
    down(f(1 - i, 0, 1), 2);
  }
  for (long i = 0; i <= n; ++i) {
    long j = i + k;
    up(f(j - 2, -2, 0));
    up(f(j - 2, 0, -2));
    up(f(2 - j, 1, 1));
    down(f(j + 1, 0, 0));
    down(f(1 - j, 1, 0));
    down(f(1 - j, 0, 1));
  }
  for (long i = 1; i <= 2 * k + n; ++i) {
    up(f(i - 3, -1, -2));
    up(f(i - 3, -2, -1));
    up(f(i - 5, -2, -2));
    down(f(i - 2, -2, 0));
    down(f(i - 2, 0, -2));
    down(f(2 - i, 1, 1));
  }
  up(f(1, 1, 0));
  up(f(1, 0, 1));
  up(f(n + 1, 0, 0));
  down(f(2, 2, 0));
  down(f(2, 0, 2));
  down(f(2, 1, 1));
  up(f(3 * k + n - 4, -2, -2));
  up(f(3 * k + 2 * n - 3, -2, -2));
  down(f(3, 2, 2));
  down(f(4, 2, 2));
  return e;
}

}  // namespace vogel
