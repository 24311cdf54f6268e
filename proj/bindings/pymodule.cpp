// Python bindings for the main operations. Exact data crosses the boundary
// as strings (rationals, polynomial text) or lists of coefficient strings;
// quadrature results come back as floats with error estimates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "x1/opsolve.hpp"
#include "x1/orthopoly.hpp"
#include "x1/projective.hpp"
#include "x1/serialize.hpp"
#include "x1/verify.hpp"
#include "x1/x1core.hpp"

namespace py = pybind11;
using namespace x1;

namespace {

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (int j = 0; j <= p.degree(); ++j) out.push_back(p.coeff(j).str());
  return out;
}

Polynomial poly_from_any(const py::object& obj) {
  if (py::isinstance<py::str>(obj))
    return parse_poly_text(obj.cast<std::string>());
  std::vector<Rational> coeffs;
  for (const auto& item : obj.cast<py::sequence>())
    coeffs.push_back(parse_rational(py::str(item).cast<std::string>()));
  return Polynomial(std::move(coeffs));
}

Subspace subspace_from_any(unsigned n, const py::sequence& basis) {
  std::vector<Polynomial> polys;
  for (const auto& item : basis) polys.push_back(poly_from_any(item.cast<py::object>()));
  return Subspace(n, std::move(polys));
}

Family family_from(const std::string& family, const std::string& alpha,
                   const std::string& beta) {
  if (family == "jacobi")
    return Family(JacobiParams{parse_rational(alpha), parse_rational(beta)});
  if (family == "laguerre")
    return Family(LaguerreParams{parse_rational(alpha)});
  throw std::invalid_argument("family must be 'jacobi' or 'laguerre'");
}

py::dict params_dict(const X1Params& p) {
  py::dict d;
  d["a"] = p.a.str();
  d["b"] = p.b.str();
  d["c"] = p.c.str();
  d["k0"] = p.k0.str();
  d["k1"] = p.k1.str();
  d["k2"] = p.k2.str();
  return d;
}

py::dict op_dict(const DiffOp2& T) {
  auto rf = [](const RationalFunction& f) {
    py::dict d;
    d["num"] = coeff_strings(f.num());
    d["den"] = coeff_strings(f.den());
    return d;
  };
  py::dict d;
  d["p"] = rf(T.p);
  d["q"] = rf(T.q);
  d["r"] = rf(T.r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exceptional (X1) polynomial subspaces, preserving operators, and the "
      "X1-Jacobi / X1-Laguerre orthogonal families (exact rational core)";

  m.def("set_precision_bits", &set_precision_bits, py::arg("bits"),
        "Set the working precision for the numeric layer (>= 64 bits).");
  m.def("precision_bits", &precision_bits);

  m.def(
      "x1_jacobi",
      [](unsigned n, const std::string& alpha, const std::string& beta) {
        const JacobiParams jp{parse_rational(alpha), parse_rational(beta)};
        const Polynomial p = x1_jacobi(n, jp);
        py::dict d;
        d["n"] = n;
        d["coefficients"] = coeff_strings(p);
        d["text"] = poly_text(p);
        d["lambda"] = x1_family_eigenvalue(n, Family(jp)).str();
        return d;
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"),
      "Exact X1-Jacobi polynomial with its eigenvalue.");

  m.def(
      "x1_laguerre",
      [](unsigned n, const std::string& alpha) {
        const LaguerreParams lp{parse_rational(alpha)};
        const Polynomial p = x1_laguerre(n, lp);
        py::dict d;
        d["n"] = n;
        d["coefficients"] = coeff_strings(p);
        d["text"] = poly_text(p);
        d["lambda"] = x1_family_eigenvalue(n, Family(lp)).str();
        return d;
      },
      py::arg("n"), py::arg("alpha"));

  m.def(
      "x1_eigenpoly",
      [](unsigned n, const std::string& a, const std::string& b,
         const std::string& k0, const std::string& k1, const std::string& k2) {
        const X1Params p =
            X1Params::from_abk(parse_rational(a), parse_rational(b),
                               parse_rational(k0), parse_rational(k1),
                               parse_rational(k2));
        const EigenPair e = x1_eigenpoly(n, p);
        py::dict d;
        d["n"] = n;
        d["coefficients"] = coeff_strings(e.P);
        d["text"] = poly_text(e.P);
        d["lambda"] = e.lambda.str();
        d["params"] = params_dict(p);
        return d;
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("k0"), py::arg("k1"),
      py::arg("k2"), "Exact eigenpolynomial of the X1 operator; c = b + 1/a.");

  m.def(
      "make_x1_operator",
      [](const std::string& a, const std::string& b, const std::string& k0,
         const std::string& k1, const std::string& k2) {
        const X1Params p =
            X1Params::from_abk(parse_rational(a), parse_rational(b),
                               parse_rational(k0), parse_rational(k1),
                               parse_rational(k2));
        return op_dict(make_x1_operator(p));
      },
      py::arg("a"), py::arg("b"), py::arg("k0"), py::arg("k1"), py::arg("k2"));

  m.def(
      "fundamental_covariant",
      [](unsigned n, const py::sequence& basis) {
        return poly_text(fundamental_covariant(subspace_from_any(n, basis)));
      },
      py::arg("n"), py::arg("basis"),
      "Monic fundamental covariant of a codimension-one subspace.");

  m.def(
      "classify_subspace",
      [](unsigned n, const py::sequence& basis) {
        const Subspace M = subspace_from_any(n, basis);
        const Polynomial q = fundamental_covariant(M);
        const NormalForm nf = normal_form(q, n);
        const ExceptionalReport ex = is_exceptional(M);
        const EquivalenceResult eq = subspace_equivalent(
            M, x1_flag_basis(n, Rational(1), Rational(0)));
        py::dict d;
        d["covariant"] = poly_text(q);
        py::list sig;
        for (const auto& [mult, count] : nf.signature.entries) {
          py::dict entry;
          entry["multiplicity"] = mult;
          entry["rootCount"] = count;
          sig.append(entry);
        }
        d["signature"] = sig;
        d["infinityMultiplicity"] = nf.signature.infinity_multiplicity;
        d["equivalentToE10"] = (eq.status == EquivalenceStatus::Equivalent);
        d["exceptional"] = (ex.cls == ExceptionalClass::Exceptional);
        d["triviallyExceptional"] =
            (ex.cls == ExceptionalClass::TriviallyExceptionalPn1);
        d["solverDimension"] = ex.solver_dimension;
        if (ex.witness) d["witness"] = op_dict(*ex.witness);
        return d;
      },
      py::arg("n"), py::arg("basis"));

  m.def(
      "d2_dimension",
      [](unsigned n, const py::sequence& basis, const py::object& denominator,
         int bound) {
        const Subspace M = subspace_from_any(n, basis);
        Polynomial d = denominator.is_none()
                           ? [&M] {
                               const Polynomial q = fundamental_covariant(M);
                               return q * q;
                             }()
                           : poly_from_any(denominator);
        const unsigned B =
            bound >= 0 ? static_cast<unsigned>(bound)
                       : n + static_cast<unsigned>(d.degree()) + 2;
        return preserving_operators(M, d, B).dimension();
      },
      py::arg("n"), py::arg("basis"), py::arg("denominator") = py::none(),
      py::arg("bound") = -1,
      "Dimension of D2(M) within the ansatz (default denominator q_M^2).");

  m.def(
      "bochner_classify",
      [](const py::object& p, const py::object& q, const py::object& r,
         unsigned nmax) {
        auto rf = [](const py::object& obj) -> RationalFunction {
          if (py::isinstance<py::dict>(obj)) {
            const py::dict d = obj.cast<py::dict>();
            return RationalFunction(poly_from_any(d["num"]),
                                    d.contains("den")
                                        ? poly_from_any(d["den"])
                                        : Polynomial::constant(Rational(1)));
          }
          return RationalFunction(poly_from_any(obj));
        };
        const DiffOp2 T(rf(p), rf(q), rf(r));
        const BochnerReport rep = verify_bochner_converse(T, nmax);
        py::dict d;
        d["class"] = rep.cls == BochnerClass::Classical
                         ? "classical"
                         : (rep.cls == BochnerClass::X1 ? "x1" : "neither");
        d["solvableDegrees"] = rep.solvable_degrees;
        d["detail"] = rep.detail;
        if (rep.params) d["params"] = params_dict(*rep.params);
        if (rep.additive_constant)
          d["additiveConstant"] = rep.additive_constant->str();
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("nmax") = 6,
      "Classify a second-order operator by its polynomial eigenproblem.");

  m.def(
      "gram_matrix",
      [](const std::string& family, const std::string& alpha,
         const std::string& beta, unsigned nmax, unsigned order) {
        const Family fam = family_from(family, alpha, beta);
        std::vector<Polynomial> ps;
        for (unsigned n = 1; n <= nmax; ++n)
          ps.push_back(x1_family_polynomial(n, fam));
        py::list matrix;
        double max_err = 0;
        for (unsigned i = 0; i < nmax; ++i) {
          py::list row;
          for (unsigned j = 0; j < nmax; ++j) {
            const Quad qd = inner_product(ps[i], ps[j], fam, order);
            row.append(qd.value.convert_to<double>());
            max_err = std::max(max_err, qd.error.convert_to<double>());
          }
          matrix.append(row);
        }
        py::dict d;
        d["matrix"] = matrix;
        d["errorEstimate"] = max_err;
        return d;
      },
      py::arg("family"), py::arg("alpha"), py::arg("beta") = std::string(),
      py::arg("nmax") = 4, py::arg("order") = 120,
      "Gram matrix of the first nmax X1 polynomials under the family weight.");

  m.def(
      "norm_squared",
      [](const std::string& family, const std::string& alpha,
         const std::string& beta, unsigned n) {
        const Family fam = family_from(family, alpha, beta);
        const NormValue nv = norm_formula(n, fam);
        py::dict d;
        d["value"] = nv.value.convert_to<double>();
        d["ratioToClassical"] = nv.ratio_to_classical.str();
        return d;
      },
      py::arg("family"), py::arg("alpha"), py::arg("beta") = std::string(),
      py::arg("n") = 1);
}
