#include "vogel/projective.hpp"

#include <sstream>
#include <utility>

#include "vogel/errors.hpp"

namespace vogel {

PPoint::PPoint(Vec3 coords) : coords_(std::move(coords)) {
  if (is_zero(coords_)) throw Error("projective point with all coordinates zero");
}

PPoint::PPoint(Rational alpha, Rational beta, Rational gamma)
    : PPoint(Vec3{std::move(alpha), std::move(beta), std::move(gamma)}) {}

PPoint PPoint::from_ints(long alpha, long beta, long gamma) {
  return PPoint(Rational(alpha), Rational(beta), Rational(gamma));
}

PPoint PPoint::parse(std::string_view text) {
  Vec3 coords;
  std::size_t slot = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (slot >= 3) throw ParseError("point needs exactly three coordinates: " + std::string(text));
    coords[slot++] = parse_rational(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (slot != 3) throw ParseError("point needs exactly three coordinates: " + std::string(text));
  if (is_zero(coords)) throw ParseError("point (0,0,0) is not projective");
  return PPoint(coords);
}

PPoint PPoint::scaled(const Rational& lambda) const {
  return PPoint(coords_[0] * lambda, coords_[1] * lambda, coords_[2] * lambda);
}

bool PPoint::is_integral() const {
  return is_integer(coords_[0]) && is_integer(coords_[1]) && is_integer(coords_[2]);
}

std::string PPoint::to_string() const {
  return "(" + vogel::to_string(coords_[0]) + "," + vogel::to_string(coords_[1]) + "," +
         vogel::to_string(coords_[2]) + ")";
}

bool operator==(const PPoint& a, const PPoint& b) { return proportional(a.coords_, b.coords_); }

PPoint act(const Permutation& sigma, const PPoint& p) {
  return PPoint(sigma.act(p.coords()));
}

PPoint pullback(const Permutation& sigma, const PPoint& p) {
  return PPoint(sigma.pullback(p.coords()));
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

bool proportional(const Vec3& a, const Vec3& b) {
  if (is_zero(a) || is_zero(b)) return false;
  return is_zero(cross(a, b));
}

Vec3 shifted(const Vec3& p, const Rational& t, const Vec3& v) {
  return {p[0] + t * v[0], p[1] + t * v[1], p[2] + t * v[2]};
}

Rational eval_form(const LinForm& form, const Vec3& point) {
  return form[0] * point[0] + form[1] * point[1] + form[2] * point[2];
}

Rational eval_form(const LinForm& form, const PPoint& point) {
  return eval_form(form, point.coords());
}

std::string_view line_name_string(LineName name) {
  switch (name) {
    case LineName::sl: return "sl";
    case LineName::so: return "so";
    case LineName::sp: return "sp";
    case LineName::exc: return "exc";
  }
  return "?";
}

std::optional<LineName> parse_line_name(std::string_view text) {
  if (text == "sl") return LineName::sl;
  if (text == "so") return LineName::so;
  if (text == "sp") return LineName::sp;
  if (text == "exc") return LineName::exc;
  return std::nullopt;
}

LinForm line_base_form(LineName name) {
  switch (name) {
    case LineName::sl: return LinForm::from_ints(1, 1, 0);
    case LineName::so: return LinForm::from_ints(2, 1, 0);
    case LineName::sp: return LinForm::from_ints(1, 2, 0);
    case LineName::exc: return LinForm::from_ints(2, 2, -1);
  }
  return LinForm();
}

PLine::PLine(LinForm form) : form_(std::move(form)) {
  if (form_.is_zero()) throw Error("a line needs a nonzero form");
}

PLine PLine::named(LineName name, const Permutation& perm) {
  PLine line(perm.apply(line_base_form(name)));
  line.name_ = name;
  line.perm_ = perm;
  return line;
}

std::string PLine::label() const {
  if (!name_) return form_.to_string();
  std::string out(line_name_string(*name_));
  if (!perm_.is_identity()) out += ":" + perm_.word();
  return out;
}

Vec3 line_direction(const PLine& line, const PPoint& p) {
  if (!line.contains(p)) {
    throw NotOnLine("point " + p.to_string() + " is not on line " + line.form().to_string());
  }
  const Rational& a = line.form()[0];
  const Rational& b = line.form()[1];
  const Rational& c = line.form()[2];
  const std::array<Vec3, 3> candidates = {Vec3{b, -a, 0}, Vec3{c, 0, -a}, Vec3{0, c, -b}};
  for (const Vec3& v : candidates) {
    if (is_zero(v)) continue;
    if (!is_zero(cross(v, p.coords()))) return v;
  }
  throw Error("no direction found for line " + line.form().to_string());
}

}  // namespace vogel
