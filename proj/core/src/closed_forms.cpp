#include "vogel/closed_forms.hpp"

#include <functional>

#include "vogel/errors.hpp"

namespace vogel {

namespace {

using Ints = std::vector<long>;

// first, second, ... up to last inclusive, stride second - first.
Ints prog(long first, long second, long last) {
  long step = second - first;
  if (step == 0) return {first};
  Ints out;
  for (long x = first; step > 0 ? x <= last : x >= last; x += step) out.push_back(x);
  return out;
}

void append(Ints& to, const Ints& from, int times = 1) {
  for (long x : from) {
    for (int i = 0; i < times; ++i) to.push_back(x);
  }
}

struct CaseDef {
  const char* id;
  std::function<bool(int, int)> covers;
};

const std::vector<CaseDef>& cases(Family family) {
  static const std::vector<CaseDef> a = {
      {"A1", [](int k, int l) { return k == 1 && l == 0; }},
      {"A2", [](int k, int l) { return l == 0 && k > 1; }},
      {"A3", [](int k, int l) { return l == 1 && k == 0; }},
      {"A4", [](int k, int l) { return l == 1 && k >= 1; }},
      {"A5", [](int k, int l) { return l == 2 && k == 0; }},
      {"A6", [](int k, int l) { return l == 2 && k >= 1; }},
      {"A7", [](int k, int l) { return l >= 3 && k == 0; }},
      {"A8", [](int k, int l) { return l >= 3 && k >= 1; }},
  };
  static const std::vector<CaseDef> b = {
      {"B1", [](int k, int l) { return l == 1 && k == 0; }},
      {"B2", [](int k, int l) { return l == 1 && k >= 1; }},
      {"B3", [](int k, int l) { return l == 2 && k == 0; }},
      {"B4", [](int k, int l) { return l == 2 && k >= 1; }},
      {"B5", [](int k, int l) { return l >= 3 && k == 0; }},
      {"B6", [](int k, int l) { return l >= 3 && k >= 1; }},
  };
  static const std::vector<CaseDef> c = {
      {"C1", [](int k, int l) { return l == 0 && k >= 1; }},
      {"C2", [](int k, int l) { return l >= 1 && k == 0; }},
      {"C3", [](int k, int l) { return l >= 1 && k >= 1; }},
  };
  static const std::vector<CaseDef> d = {
      {"D1", [](int k, int l) { return k + l > 4 && k >= 1 && l >= 1; }},
      {"D2", [](int k, int l) { return k + l == 4 && k >= 1 && l >= 1; }},
      {"D3", [](int k, int l) { return k == 0 && l == 4; }},
      {"D4", [](int k, int l) { return k == 4 && l == 0; }},
      {"D5", [](int k, int l) { return k + l == 3 && k >= 1 && l >= 1; }},
      {"D6", [](int k, int l) { return k == 0 && l == 3; }},
      {"D7", [](int k, int l) { return k == 3 && l == 0; }},
      {"D8", [](int k, int l) { return k == 1 && l == 1; }},
      {"D9", [](int k, int l) { return k == 0 && l == 2; }},
      {"D10", [](int k, int l) { return k == 2 && l == 0; }},
      {"D11", [](int k, int l) { return k == 1 && l == 0; }},
      {"D12", [](int k, int l) { return k == 0 && l == 1; }},
  };
  switch (family) {
    case Family::A: return a;
    case Family::B: return b;
    case Family::C: return c;
    case Family::D: return d;
  }
  return a;
}

void build_a(ClosedForm& f, const std::string& id, long k, long l, long N) {
  Ints& n = f.numerator;
  Ints& d = f.denominator;
  if (id == "A1") {
    n = {2 * N + 4};
    d = {2, 2};
  } else if (id == "A2") {
    n = {2 * N, 2 * N + 4 * k};
    d = {2 * k, 2 * k};
    append(n, prog(2 * N + 2, 2 * N + 4, 2 * N + 2 * k - 2), 2);
    append(d, prog(2, 4, 2 * k - 2), 2);
  } else if (id == "A3") {
    n = {2 * N, 2 * N + 4};
    d = {2, 2};
  } else if (id == "A4") {
    n = {2 * N, 2 * N + 4 * k + 4};
    d = {2 * k + 2, 2 * k + 2};
    append(n, prog(2 * N + 2, 2 * N + 4, 2 * N + 2 * k), 2);
    append(d, prog(2, 4, 2 * k), 2);
  } else if (id == "A5") {
    f.flags = 1;
    n = {N - 1, N, N + 1, N + 1, N + 7, 2 * N + 2, 2 * N + 6, 2 * N + 8};
    d = {2, 2, 4, 4, 4, N - 3, N + 3, N + 3, N + 5};
  } else if (id == "A6") {
    f.flags = 1;
    n = {6, 2 * N, N + 1, N - 1, 2 * N + 4 * k + 8, N + 2 * k + 7, N + 2 * k + 1, 2 * N + 2 * k + 2, 2 * N + 2 * k + 6};
    d = {2, 4, 2 * k + 4, N + 2 * k + 3, N + 2 * k + 5, N + 3, N - 3, 2 * k + 2, 2 * k + 4, 2 * k + 6};
    append(n, prog(2 * N + 2, 2 * N + 4, 2 * N + 2 * k), 2);
    append(d, prog(2, 4, 2 * k), 2);
  } else if (id == "A7") {
    f.flags = 1;
    n = {2 * N, N + 1, N + 1, N - 1, 2 * N + 4 * l, N + 4 * l - 1, 4 * l - 2};
    d = {2 * l - 2, 2 * l, 2 * l, N - 2 * l + 1, 2 * N + 2 * l, N + 2 * l - 1, N + 2 * l - 1, N + 2 * l + 1};
    append(n, prog(2 * N + 2, 2 * N + 4, 2 * N + 4 * l - 2));
    append(d, prog(2, 4, 4 * l - 2));
  } else if (id == "A8") {
    f.flags = 1;
    n = {N + 1, N - 1, 2 * N + 4 * k + 4 * l, N + 2 * k + 4 * l - 1, N + 2 * k + 1, 4 * l - 2};
    d = {2 * l - 2, 2 * l, 2 * k + 2 * l, N + 2 * l - 1, N - 2 * l + 1, 2 * N + 2 * k + 2 * l,
         N + 2 * k + 2 * l - 1, N + 2 * k + 2 * l + 1};
    append(n, prog(2 * N + 2, 2 * N + 4, 2 * N + 2 * k));
    append(n, prog(2 * N, 2 * N + 2, 2 * N + 2 * k + 4 * l - 2));
    append(d, prog(2, 4, 2 * k));
    append(d, prog(2, 4, 2 * k + 4 * l - 2));
  }
}

void build_b(ClosedForm& f, const std::string& id, long k, long l, long N) {
  Ints& n = f.numerator;
  Ints& d = f.denominator;
  if (id == "B1") {
    n = {4 * N, 4 * N - 2, 2 * N + 3};
    d = {2, 4, 2 * N - 1};
  } else if (id == "B2") {
    f.flags = 1;
    append(n, prog(4, 8, 4 * k - 4));
    append(d, prog(6, 10, 4 * k + 2));
    append(n, prog(2 * N + 5, 2 * N + 1, 2 * N - 4 * k + 5));
    append(d, prog(2 * N - 7, 2 * N - 11, 2 * N - 4 * k - 7));
    append(n, prog(4 * N, 4 * N - 4, 4 * N - 4 * k));
    append(d, prog(4 * N - 6, 4 * N - 10, 4 * N - 4 * k - 6));
    append(n, prog(4 * N - 6, 4 * N - 10, 4 * N - 4 * k - 2), 2);
    append(d, prog(4, 8, 4 * k), 2);
    append(n, {4 * N - 2, 2 * N - 4 * k - 3, 2 * N - 4 * k - 3, 4 * N - 8 * k - 6, 2 * N - 7, 2 * N + 3});
    append(d, {2, 4, 2 * N - 3, 2 * N - 3, 2 * N + 5, 1 - 2 * N});
  } else if (id == "B3") {
    f.sign = -1;
    n = {4 * N, 4 * N - 4, 4 * N - 2, 2 * N + 1, 4 * N - 14};
    d = {2, 4, 6, 8, 2 * N - 7};
  } else if (id == "B4") {
    f.sign = -1;
    append(n, prog(4, 8, 4 * k));
    append(d, prog(10, 14, 4 * k + 6));
    append(n, prog(2 * N + 5, 2 * N + 1, 2 * N - 4 * k + 1));
    append(d, prog(2 * N - 7, 2 * N - 11, 2 * N - 4 * k - 11));
    append(n, prog(4 * N, 4 * N - 4, 4 * N - 4 * k - 4));
    append(d, prog(4 * N - 6, 4 * N - 10, 4 * N - 4 * k - 10));
    append(n, prog(4 * N - 6, 4 * N - 10, 4 * N - 4 * k - 2));
    append(d, prog(4, 8, 4 * k));
    append(n, prog(4 * N + 2, 4 * N - 2, 4 * N - 4 * k - 10));
    append(d, {2, 6});
    append(d, prog(4, 8, 4 * k + 8));
    append(n, {2 * N - 4 * k - 3, 2 * N - 4 * k - 11, 4 * N - 8 * k - 14});
    append(d, {2 * N - 3, 2 * N + 5, 4 * N + 2});
  } else if (id == "B5") {
    f.flags = 1;
    append(n, prog(4 * N, 4 * N - 4, 4 * N + 4 - 4 * l));
    append(d, prog(2, 6, 4 * l - 2));
    append(n, prog(2 * N + 5, 2 * N + 1, 2 * N + 9 - 4 * l));
    append(d, prog(2 * N - 7, 2 * N - 11, 2 * N - 4 * l - 3));
    append(n, prog(4 * N - 2 - 4 * (l + 1), 4 * N - 2 - 4 * (l + 2), 4 * N - 2 - 4 * (2 * l - 2)));
    append(d, prog(4 * (l - 1), 4 * l, 4 * (2 * l - 2)));
    append(n, {4});
    append(d, {4 * l - 8, 4 * l - 4, 4 * l});
    append(n, prog(2 * N + 1, 2 * N + 5, 2 * N + 4 * l - 11));
    append(d, prog(2 * N + 7, 2 * N + 11, 2 * N + 4 * l - 5));
    append(n, prog(2 * N - 5, 2 * N - 9, 2 * N + 7 - 4 * l));
    append(d, prog(2 * N - 11, 2 * N - 15, 2 * N + 1 - 4 * l));
    append(n, {4 * N - 2, 2 * N - 4 * k - 3, 2 * N - 8 * l + 5, 8 * l - 8, 4 * N - 8 * l + 2});
    append(d, {2 * N - 3, 2 * N + 5});
  } else if (id == "B6") {
    f.flags = 1;
    append(n, prog(4 * N, 4 * N - 4, 4 * N + 4 - 4 * k - 4 * l));
    append(d, prog(2, 6, 4 * k + 4 * l - 2));
    append(n, prog(2 * N + 5, 2 * N + 1, 2 * N + 9 - 4 * k - 4 * l));
    append(d, prog(2 * N - 7, 2 * N - 11, 2 * N - 4 * k - 4 * l - 3));
    append(n, prog(4 * N - 2 - 4 * (k + l + 1), 4 * N - 2 - 4 * (k + l + 2), 4 * N - 2 - 4 * (k + 2 * l - 2)));
    append(d, prog(4, 8, 4 * k));
    append(n, {4});
    append(d, {4 * l - 8, 4 * l - 4, 4 * l});
    append(n, prog(2 * N + 1, 2 * N + 5, 2 * N + 4 * l - 11));
    append(d, prog(2 * N + 7, 2 * N + 11, 2 * N + 4 * l - 5));
    append(n, prog(4 * N + 2, 4 * N - 2, 4 * N - 2 - 4 * k));
    append(d, prog(4 * (k + l - 1), 4 * (k + l), 4 * (k + 2 * l - 2)));
    append(n, prog(2 * N - 5, 2 * N - 9, 2 * N + 7 - 4 * l));
    append(d, prog(2 * N - 11, 2 * N - 15, 2 * N + 1 - 4 * l));
    append(n, {2 * N - 4 * k - 3, 2 * N - 4 * k - 8 * l + 5, 8 * l - 8, 4 * N - 8 * k - 8 * l + 2});
    append(d, {2 * N - 3, 2 * N + 5, 4 * N + 2});
  }
}

void build_c(ClosedForm& f, const std::string& id, long k, long l, long N) {
  Ints& n = f.numerator;
  Ints& d = f.denominator;
  long run = id == "C1" ? k : (id == "C2" ? l : k + l);
  append(n, prog(2 * N + 5, 2 * N + 4, 2 * N + 6 - run));
  append(d, prog(3, 4, run + 2));
  append(n, prog(2 * N + 6, 2 * N + 5, 2 * N + 7 - run));
  append(d, prog(4, 5, run + 3));
  if (id != "C1") {
    append(n, prog(2 * N + 7, 2 * N + 6, 2 * N + 8 - l));
    append(d, prog(1, 2, l));
    append(n, prog(2 * N + 8, 2 * N + 7, 2 * N + 9 - l));
    append(d, prog(2, 3, l + 1));
  }
  if (id != "C2") {
    append(n, {k + 1, k + 2, k + 2, k + 3});
    append(d, {1, 2, 2, 3});
  }
  const Ints tail_den = {2 * N + 3, 2 * N + 4, 2 * N + 5, 2 * N + 5, 2 * N + 6, 2 * N + 7};
  if (id == "C1") {
    append(n, {N - k + 2, N - k + 1, 2 * N + 6 - k, 2 * N + 5 - k, 2 * N + 4 - k});
    append(d, tail_den);
    append(n, {2 * N + 5 - k, 2 * N + 7, 2 * N + 3 - 2 * k});
    append(d, {N + 1, N + 2});
  } else if (id == "C2") {
    append(n, {N - l + 2, N - l + 1, 2 * N + 6 - 2 * l, 2 * N + 5 - 2 * l, 2 * N + 4 - 2 * l});
    append(d, tail_den);
    append(n, {N + 4 - l, N + 3 - l, 2 * N + 5 - 2 * l, 2 * N + 7 - 2 * l, 2 * N + 3 - 2 * l});
    append(d, {N + 1, N + 2, N + 3, N + 4});
  } else {
    append(n, {N - k - l + 2, N - k - l + 1, 2 * N + 6 - k - 2 * l, 2 * N + 5 - k - 2 * l, 2 * N + 4 - k - 2 * l});
    append(d, tail_den);
    append(n, {N + 4 - l, N + 3 - l, 2 * N + 5 - k - 2 * l, 2 * N + 7 - 2 * l, 2 * N + 3 - 2 * k - 2 * l});
    append(d, {N + 1, N + 2, N + 3, N + 4});
  }
}

void build_d(ClosedForm& f, const std::string& id, long k, long l, long N) {
  const long T = 2 * N - 4;
  Ints& n = f.numerator;
  Ints& d = f.denominator;
  if (id == "D1") {
    const long s = k + l;
    f.flags = 1;
    append(n, {4 + T});
    append(d, {4 - 3 * T, 4 - 4 * T});
    append(n, prog(4 + 2 * T, 4 + 3 * T, 4 + (s - 3) * T));
    append(d, prog(4 - 5 * T, 4 - 6 * T, 4 - s * T));
    append(n, {2 * T, T});
    append(d, {8, 8 - T, 8 - 2 * T, 8 - 3 * T});
    append(n, prog(T, 2 * T, (s - 4) * T));
    append(d, prog(8 - 4 * T, 8 - 5 * T, 8 - (s - 1) * T));
    append(n, {6 + 2 * T, 6 + T, 6, 6 - T});
    append(d, {2, 2 + T, 2 + 2 * T, 2 + 3 * T});
    append(n, prog(6 - 2 * T, 6 - 3 * T, 6 - (s - 3) * T));
    append(d, prog(2 + 4 * T, 2 + 5 * T, 2 + (s - 1) * T));
    append(n, prog(8, 8 - T, 8 - (k - 1) * T));
    append(d, prog(T, 2 * T, k * T));
    append(d, {4 - 2 * T});
    append(n, prog(4 - 2 * T, 4 - 3 * T, 4 - (k + 2 * l - 4) * T));
    append(d, prog(4 + 3 * T, 4 + 4 * T, 4 + (k + 2 * l - 3) * T));
    append(n, prog(8 - 2 * T, 8 - T, 8 + (l - 3) * T));
    append(d, prog(4, 4 - T, 4 - (l - 1) * T));
    append(n, prog(2 + 2 * T, 2 + T, 2 - (l - 3) * T));
    append(d, prog(6, 6 + T, 6 + (l - 1) * T));
    append(n, prog(4 - 3 * T, 4 - 2 * T, 4 + (l - 4) * T));
    append(d, prog(T, 2 * T, l * T));
    append(n, {4 + (3 - 2 * k - 2 * l) * T, 4 + (2 * l - 3) * T, (2 * l + k - 3) * T, k * T - 4});
    append(d, {4 - 3 * T});
  } else if (id == "D2") {
    f.flags = 1;
    append(n, {4, 4 + T});
    append(d, {4 - 3 * T, 4 - 4 * T});
    append(n, {3 * T, 2 * T, T});
    append(d, {8, 8 - T, 8 - 2 * T, 8 - 3 * T});
    append(n, {6 + 2 * T, 6 + T, 6, 6 - T});
    append(d, {2, 2 + T, 2 + 2 * T, 2 + 3 * T});
    append(n, prog(8, 8 - T, 8 - (3 - l) * T));
    append(d, prog(T, 2 * T, (4 - l) * T));
    append(n, prog(4 + 3 * T, 4 + 2 * T, 4 - l * T));
    append(d, prog(4 - 2 * T, 4 - T, 4 + (l + 1) * T));
    append(n, prog(8 - 2 * T, 8 - T, 8 + (l - 3) * T));
    append(d, prog(4, 4 - T, 4 - (l - 1) * T));
    append(n, prog(2 + 2 * T, 2 + T, 2 - (l - 3) * T));
    append(d, prog(6, 6 + T, 6 + (l - 1) * T));
    append(n, prog(4 - 3 * T, 4 - 2 * T, 4 + (l - 4) * T));
    append(d, prog(T, 2 * T, l * T));
    append(n, {4 - 5 * T, 4 + (2 * l - 3) * T, (l + 1) * T, 4 - (4 - l) * T});
    append(d, {4, 3 * T, 3 * T - 4, 3 * T + 4});
  } else if (id == "D3") {
    f.flags = 1;
    n = {4, 5 * T, 2 - T, 6 - T, 8 + T, 4 - 5 * T, 4 + T};
    d = {3 * T, 4 * T, 8 - 3 * T, 2 + 3 * T, 4 + 4 * T, 4 - 3 * T, 4 + 3 * T, 6 + 3 * T};
  } else if (id == "D4") {
    f.sign = -1;
    f.flags = 1;
    n = {6, T, 4 + T, 6 + 2 * T, 6 + T, 6 - T, 4 + 2 * T, 4 - 5 * T};
    d = {2, 3 * T, 4 * T, 4 - 3 * T, 2 + T, 2 + 2 * T, 2 + 3 * T, 4 - 2 * T, 4 - T};
  } else if (id == "D5") {
    append(n, {2 * T, T});
    append(d, {8, 8 - T, 8 - 2 * T});
    append(n, {6 + 2 * T, 6 + T, 6});
    append(d, {2, 2 + T, 2 + 2 * T});
    append(n, prog(8, 8 - T, 8 - (2 - l) * T));
    append(d, prog(T, 2 * T, (3 - l) * T));
    append(n, prog(4 + 3 * T, 4 + 2 * T, 4 - (l - 1) * T));
    append(d, prog(4 - 2 * T, 4 - T, 4 + l * T));
    append(n, prog(8 - 2 * T, 8 - T, 8 + (l - 3) * T));
    append(d, prog(4, 4 - T, 4 - (l - 1) * T));
    append(n, prog(2 + 2 * T, 2 + T, 2 - (l - 3) * T));
    append(d, prog(6, 6 + T, 6 + (l - 1) * T));
    append(n, prog(4 - 3 * T, 4 - 2 * T, 4 + (l - 4) * T));
    append(d, prog(T, 2 * T, l * T));
    append(n, {4, 4 + (2 * l - 3) * T, l * T, 4 - (3 - l) * T});
    append(d, {3 * T - 4, 3 * T - 4, 3 * T + 4});
  } else if (id == "D6") {
    f.sign = -1;
  } else if (id == "D7") {
    f.flags = 1;
    n = {6, 6 + T, 6 + 2 * T, 4 + T, 4 + 2 * T, 4 - 3 * T};
    d = {2, 4, 3 * T, 2 + T, 2 + 2 * T, 4 - T, 4 - 2 * T};
  } else if (id == "D8") {
    f.sign = -1;
    f.flags = 1;
    n = {2 * T, 6 + 2 * T, 6 + T, 4 + 2 * T, 4 + T, 4 + T, 8 - 2 * T, 2 + 2 * T, 4 - T};
    d = {2, 4, 4, 4, 6, T, T, 8 - T, 2 + T, 4 - 2 * T};
  } else if (id == "D9") {
    n = {4 + T, 2 + 2 * T, 4 + 2 * T, 6 + 2 * T, 8 - 2 * T};
    d = {2, 4, 6, 8, 4 - T};
  } else if (id == "D10") {
    n = {6 + T, 6 + 2 * T, 4 + 2 * T};
    d = {2, 4, 2 + T};
  } else if (id == "D11") {
    n = {2 * T, 6 + 2 * T, 4 + T};
    d = {2, 4, T};
  } else if (id == "D12") {
    n = {2 + 2 * T, 4 + 2 * T, 6 + 2 * T, 8 - 2 * T, 4 + T};
    d = {2, 4, 6, 8, 4 - T};
  }
}

}  // namespace

std::string_view family_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

const FamilySetup& family_setup(Family family) {
  static const FamilySetup a{Permutation::from_word("acb"), PLine::named(LineName::sl),
                             LinForm::from_ints(2, 2, 0), 1};
  static const FamilySetup b{Permutation::from_word("bca"), PLine::named(LineName::so),
                             LinForm::from_ints(2, 1, 0), 1};
  static const FamilySetup c{Permutation::from_word("bac"), PLine::named(LineName::sp), std::nullopt, 1};
  static const FamilySetup d{Permutation::from_word("cba"), PLine::named(LineName::so),
                             LinForm::from_ints(2, 1, 0), 4};
  switch (family) {
    case Family::A: return a;
    case Family::B: return b;
    case Family::C: return c;
    case Family::D: return d;
  }
  return a;
}

PPoint family_point(Family family, long N) {
  switch (family) {
    case Family::A: return PPoint::from_ints(-2, 2, N + 1);
    case Family::B: return PPoint::from_ints(-2, 4, 2 * N - 3);
    case Family::C: return PPoint::from_ints(-2, 1, N + 2);
    case Family::D: return PPoint::from_ints(-2, 4, 2 * N - 4);
  }
  return PPoint::from_ints(1, 0, 0);
}

InstantiatedProduct ClosedForm::nonzero_part() const {
  InstantiatedProduct out;
  if (sign < 0) out.negate();
  for (long v : numerator) out.mul_numerator(Rational(v));
  for (long v : denominator) out.mul_denominator(Rational(v));
  return out;
}

std::string case_for(Family family, int k, int l) {
  for (const CaseDef& c : cases(family)) {
    if (c.covers(k, l)) return c.id;
  }
  throw OutOfCaseRange("no closed form for " + std::string(family_string(family)) + " with k=" +
                       std::to_string(k) + ", l=" + std::to_string(l));
}

std::vector<std::string> case_ids(Family family) {
  std::vector<std::string> out;
  for (const CaseDef& c : cases(family)) out.emplace_back(c.id);
  return out;
}

namespace {

const CaseDef& find_case(Family family, std::string_view case_id) {
  for (const CaseDef& c : cases(family)) {
    if (case_id == c.id) return c;
  }
  throw OutOfCaseRange("unknown case " + std::string(case_id));
}

}  // namespace

ClosedForm closed_form(Family family, std::string_view case_id, int k, int l, long N) {
  const CaseDef& found = find_case(family, case_id);
  if (!found.covers(k, l) || N < family_setup(family).min_rank) {
    throw OutOfCaseRange("case " + std::string(case_id) + " does not cover k=" + std::to_string(k) +
                         ", l=" + std::to_string(l) + ", N=" + std::to_string(N));
  }
  return display_reading(family, case_id, k, l, N);
}

ClosedForm display_reading(Family family, std::string_view case_id, int k, int l, long N) {
  find_case(family, case_id);
  ClosedForm f;
  f.case_id = std::string(case_id);
  switch (family) {
    case Family::A: build_a(f, f.case_id, k, l, N); break;
    case Family::B: build_b(f, f.case_id, k, l, N); break;
    case Family::C: build_c(f, f.case_id, k, l, N); break;
    case Family::D: build_d(f, f.case_id, k, l, N); break;
  }
  return f;
}

}  // namespace vogel
