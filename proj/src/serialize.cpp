#include "x1/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace x1 {

std::string poly_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= p.degree(); ++j) {
    const Rational c = p.coeff(j);
    if (c == 0) continue;
    const Rational ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (ac == 1);
    if (j == 0) {
      os << ac.str();
    } else {
      if (!unit) os << ac.str() << "*";
      os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  explicit Scanner(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

Rational parse_number(Scanner& sc) {
  sc.skip_ws();
  size_t start = sc.i;
  while (sc.i < sc.s.size() &&
         (std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))))
    ++sc.i;
  if (sc.i == start) throw std::invalid_argument("polynomial: expected digit");
  std::string num = sc.s.substr(start, sc.i - start);
  if (sc.peek() == '/') {
    sc.take();
    sc.skip_ws();
    size_t dstart = sc.i;
    while (sc.i < sc.s.size() &&
           std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
      ++sc.i;
    if (sc.i == dstart)
      throw std::invalid_argument("polynomial: expected denominator");
    num += "/" + sc.s.substr(dstart, sc.i - dstart);
  }
  return parse_rational(num);
}

}  // namespace

Polynomial parse_poly_text(const std::string& s) {
  Scanner sc(s);
  Polynomial out;
  bool any = false;
  while (!sc.done()) {
    int sign = 1;
    while (sc.peek() == '+' || sc.peek() == '-') {
      if (sc.take() == '-') sign = -sign;
    }
    if (sc.done())
      throw std::invalid_argument("polynomial: dangling sign in '" + s + "'");
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coef = parse_number(sc);
      have_coef = true;
    }
    unsigned power = 0;
    if (sc.peek() == '*') {
      sc.take();
      if (sc.peek() != 'x')
        throw std::invalid_argument("polynomial: expected x after '*'");
    }
    if (sc.peek() == 'x') {
      sc.take();
      power = 1;
      if (sc.peek() == '^') {
        sc.take();
        const Rational e = parse_number(sc);
        if (denominator(e) != 1 || e < 0)
          throw std::invalid_argument("polynomial: bad exponent");
        power = static_cast<unsigned>(numerator(e).convert_to<long>());
      }
    } else if (!have_coef) {
      throw std::invalid_argument("polynomial: expected term in '" + s + "'");
    }
    out += Polynomial::monomial(power, sign < 0 ? -coef : coef);
    any = true;
  }
  if (!any) throw std::invalid_argument("polynomial: empty input");
  return out;
}

Json poly_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int j = 0; j <= p.degree(); ++j) arr.push_back(p.coeff(j).str());
  return arr;
}

Polynomial poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly_text(j.get<std::string>());
  if (!j.is_array())
    throw std::invalid_argument("polynomial json: expected string or array");
  std::vector<Rational> coeffs;
  for (const auto& e : j) {
    if (e.is_string())
      coeffs.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      coeffs.push_back(Rational(e.get<long long>()));
    else
      throw std::invalid_argument("polynomial json: bad coefficient");
  }
  return Polynomial(std::move(coeffs));
}

Json ratfunc_json(const RationalFunction& f) {
  return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RationalFunction ratfunc_from_json(const Json& j) {
  if (j.is_string() || j.is_array())
    return RationalFunction(poly_from_json(j));
  return RationalFunction(poly_from_json(j.at("num")),
                          j.contains("den")
                              ? poly_from_json(j.at("den"))
                              : Polynomial::constant(Rational(1)));
}

Json diffop_json(const DiffOp2& T) {
  return Json{{"p", ratfunc_json(T.p)},
              {"q", ratfunc_json(T.q)},
              {"r", ratfunc_json(T.r)}};
}

DiffOp2 diffop_from_json(const Json& j) {
  return DiffOp2(ratfunc_from_json(j.at("p")), ratfunc_from_json(j.at("q")),
                 ratfunc_from_json(j.at("r")));
}

Json subspace_json(const Subspace& M) {
  Json basis = Json::array();
  for (const Polynomial& p : M.basis()) basis.push_back(poly_text(p));
  return Json{{"n", M.ambient_degree()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  const unsigned n = j.at("n").get<unsigned>();
  std::vector<Polynomial> basis;
  for (const auto& e : j.at("basis")) basis.push_back(poly_from_json(e));
  return Subspace(n, std::move(basis));
}

Subspace read_subspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open subspace file: " + path);
  Json j;
  in >> j;
  return subspace_from_json(j);
}

void write_subspace_file(const std::string& path, const Subspace& M) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write subspace file: " + path);
  out << subspace_json(M).dump(2) << "\n";
}

}  // namespace x1
