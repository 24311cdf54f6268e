// x1: construct and verify X1 polynomial subspaces, the operators preserving
// them, and the X1-Jacobi / X1-Laguerre families.
//
// Verbs: jacobi, laguerre, eigen, classify, d2, verify, plotdata.
// Exit codes: 0 success, 1 criterion failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "x1/opsolve.hpp"
#include "x1/orthopoly.hpp"
#include "x1/projective.hpp"
#include "x1/serialize.hpp"
#include "x1/verify.hpp"
#include "x1/x1core.hpp"

namespace {

using namespace x1;

struct GlobalOpts {
  std::string format = "json";  // json|csv|text
  unsigned precision_bits = 256;
  unsigned quad_order = 200;
  std::uint64_t seed = 20260810;
};

std::string fmt_real(const Real& v, unsigned digits = 20) {
  return v.str(digits, std::ios_base::scientific);
}

Json config_json(const GlobalOpts& g) {
  return Json{{"precisionBits", g.precision_bits},
              {"quadOrder", g.quad_order},
              {"seed", g.seed},
              {"format", g.format}};
}

Json params_json(const X1Params& p) {
  return Json{{"a", p.a.str()},   {"b", p.b.str()},   {"c", p.c.str()},
              {"k0", p.k0.str()}, {"k1", p.k1.str()}, {"k2", p.k2.str()}};
}

void emit(const Json& j, const GlobalOpts& g,
          const std::function<void(std::ostream&)>& text_writer,
          const std::function<void(std::ostream&)>& csv_writer = nullptr) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv" && csv_writer) {
    csv_writer(std::cout);
  } else {
    text_writer(std::cout);
  }
}

Family parse_family(const std::string& family, const std::string& alpha,
                    const std::string& beta) {
  if (family == "jacobi")
    return Family(JacobiParams{parse_rational(alpha), parse_rational(beta)});
  if (family == "laguerre")
    return Family(LaguerreParams{parse_rational(alpha)});
  throw std::invalid_argument("--family must be jacobi or laguerre");
}

int run_family(const std::string& name, const Family& fam, unsigned nmax,
               bool with_gram, bool with_bc, const GlobalOpts& g) {
  const X1Params params = family_param_map(fam);
  const DiffOp2 T = make_x1_operator(params);

  Json rows = Json::array();
  std::vector<Polynomial> ps;
  for (unsigned n = 1; n <= nmax; ++n) {
    const Polynomial p = x1_family_polynomial(n, fam);
    ps.push_back(p);
    const NormValue nv = norm_formula(n, fam);
    rows.push_back(Json{{"n", n},
                        {"lambda", x1_family_eigenvalue(n, fam).str()},
                        {"coefficients", poly_json(p)},
                        {"text", poly_text(p)},
                        {"normSquaredFormula", fmt_real(nv.value)}});
  }

  Json out{{"command", name},
           {"config", config_json(g)},
           {"params", params_json(params)},
           {"operator", diffop_json(T)},
           {"rows", rows}};

  if (with_gram) {
    Json gram = Json::array();
    Real max_off(0);
    for (unsigned i = 1; i <= nmax; ++i) {
      Json row = Json::array();
      for (unsigned j = 1; j <= nmax; ++j) {
        const Quad q = inner_product(ps[i - 1], ps[j - 1], fam, g.quad_order);
        row.push_back(Json{{"value", fmt_real(q.value)},
                           {"error", fmt_real(q.error, 5)}});
        if (i != j) max_off = std::max(max_off, abs(q.value));
      }
      gram.push_back(row);
    }
    out["gram"] =
        Json{{"matrix", gram}, {"maxOffDiagonal", fmt_real(max_off, 5)}};
  }
  if (with_bc) {
    Json bc = Json::array();
    for (unsigned n = 1; n <= nmax; ++n) {
      const BoundaryReport rep = check_boundary_conditions(ps[n - 1], fam);
      Json ends = Json::array();
      for (const auto& e : rep.endpoints)
        ends.push_back(Json{{"endpoint", e.endpoint},
                            {"pass", e.pass},
                            {"fittedExponent", e.fitted_exponent},
                            {"predictedExponent", e.predicted_exponent},
                            {"finalMagnitude", e.final_magnitude}});
      bc.push_back(Json{{"n", n}, {"endpoints", ends}});
    }
    out["boundaryConditions"] = bc;
  }

  emit(out, g,
       [&](std::ostream& os) {
         os << name << " family, params a=" << params.a.str()
            << " b=" << params.b.str() << " c=" << params.c.str() << "\n";
         for (const auto& r : out["rows"])
           os << "n=" << r["n"] << "  lambda=" << r["lambda"].get<std::string>()
              << "  P = " << r["text"].get<std::string>() << "\n";
         if (out.contains("gram"))
           os << "max |off-diagonal Gram entry| = "
              << out["gram"]["maxOffDiagonal"].get<std::string>() << "\n";
       },
       [&](std::ostream& os) {
         os << "n,lambda,coefficients\n";
         for (const auto& r : out["rows"]) {
           os << r["n"] << "," << r["lambda"].get<std::string>() << ",\"";
           bool first = true;
           for (const auto& c : r["coefficients"]) {
             if (!first) os << ";";
             os << c.get<std::string>();
             first = false;
           }
           os << "\"\n";
         }
       });
  return 0;
}

int run_eigen(unsigned n, const std::string& params_csv, const GlobalOpts& g) {
  std::vector<Rational> vals;
  std::string cur;
  std::istringstream is(params_csv);
  while (std::getline(is, cur, ',')) vals.push_back(parse_rational(cur));
  if (vals.size() != 5)
    throw std::invalid_argument("--params expects a,b,k0,k1,k2");
  const X1Params p =
      X1Params::from_abk(vals[0], vals[1], vals[2], vals[3], vals[4]);
  const EigenPair e = x1_eigenpoly(n, p);
  Json out{{"command", "eigen"},
           {"config", config_json(g)},
           {"params", params_json(p)},
           {"n", n},
           {"lambda", e.lambda.str()},
           {"coefficients", poly_json(e.P)},
           {"text", poly_text(e.P)}};
  emit(out, g, [&](std::ostream& os) {
    os << "P_" << n << " = " << poly_text(e.P) << "\nlambda_" << n << " = "
       << e.lambda.str() << "\n";
  });
  return 0;
}

int run_classify(const std::string& input, const GlobalOpts& g) {
  const Subspace M = read_subspace_file(input);
  const unsigned n = M.ambient_degree();
  if (!M.is_codimension_one())
    throw std::invalid_argument(
        "classify: subspace is not codimension one (dimension " +
        std::to_string(M.dimension()) + " in P_" + std::to_string(n) + ")");

  const Polynomial q = fundamental_covariant(M);
  const NormalForm nf = normal_form(q, n);
  const ExceptionalReport ex = is_exceptional(M);

  Json signature = Json::array();
  for (const auto& [mult, count] : nf.signature.entries)
    signature.push_back(Json{{"multiplicity", mult}, {"rootCount", count}});
  Json roots = Json::array();
  for (const auto& [z, mult] : nf.normalized_roots)
    roots.push_back(Json{{"re", fmt_real(z.re, 17)},
                         {"im", fmt_real(z.im, 17)},
                         {"multiplicity", mult}});

  const Subspace e10 = x1_flag_basis(n, Rational(1), Rational(0));
  const EquivalenceResult eq = subspace_equivalent(M, e10);

  const char* cls = ex.cls == ExceptionalClass::Exceptional
                        ? "exceptional"
                        : (ex.cls == ExceptionalClass::TriviallyExceptionalPn1
                               ? "trivially exceptional (P_{n-1} class)"
                               : "not exceptional");

  Json out{{"command", "classify"},
           {"config", config_json(g)},
           {"n", n},
           {"covariant", poly_text(q)},
           {"signature", signature},
           {"infinityMultiplicity", nf.signature.infinity_multiplicity},
           {"normalizedInfinityMultiplicity",
            nf.normalized_infinity_multiplicity},
           {"normalizedRoots", roots},
           {"equivalentToE10", eq.status == EquivalenceStatus::Equivalent},
           {"exceptional",
            Json{{"class", cls},
                 {"solverDimension", ex.solver_dimension},
                 {"saturated", ex.saturated},
                 {"ansatzDenominator", poly_text(ex.ansatz_denominator)},
                 {"ansatzBound", ex.ansatz_bound}}}};
  if (ex.witness) out["exceptional"]["witness"] = diffop_json(*ex.witness);
  if (eq.status == EquivalenceStatus::Equivalent && eq.witness)
    out["equivalenceWitness"] =
        Json{{"alpha", eq.witness->alpha().str()},
             {"beta", eq.witness->beta().str()},
             {"gamma", eq.witness->gamma().str()},
             {"delta", eq.witness->delta().str()}};
  if (eq.status == EquivalenceStatus::Inconclusive)
    out["equivalenceNote"] = "inconclusive: " + eq.detail;

  emit(out, g, [&](std::ostream& os) {
    os << "subspace of P_" << n << ": covariant q = " << poly_text(q) << "\n"
       << "infinity multiplicity " << nf.signature.infinity_multiplicity
       << ", verdict: " << cls << "\n"
       << "equivalent to E^{1,0}: "
       << (eq.status == EquivalenceStatus::Equivalent ? "yes" : "no") << "\n";
  });
  return 0;
}

int run_d2(const std::string& input, const std::string& denom_text,
           int bound_opt, const GlobalOpts& g) {
  const Subspace M = read_subspace_file(input);
  const unsigned n = M.ambient_degree();
  Polynomial denom;
  if (denom_text == "auto") {
    const Polynomial q = fundamental_covariant(M);
    denom = q * q;
  } else {
    denom = parse_poly_text(denom_text);
  }
  const unsigned bound =
      bound_opt >= 0 ? static_cast<unsigned>(bound_opt)
                     : n + static_cast<unsigned>(denom.degree()) + 2;
  const OperatorSpace ops = preserving_operators(M, denom, bound);
  Json basis = Json::array();
  for (const DiffOp2& T : ops.basis) basis.push_back(diffop_json(T));
  Json out{{"command", "d2"},
           {"config", config_json(g)},
           {"n", n},
           {"denominator", poly_text(denom)},
           {"numeratorDegreeBound", bound},
           {"dimension", ops.dimension()},
           {"basis", basis}};
  emit(out, g, [&](std::ostream& os) {
    os << "dim D2(M) within ansatz = " << ops.dimension() << "\n";
  });
  return 0;
}

int run_verify(const std::vector<std::string>& suites,
               const std::string& alpha, const std::string& beta,
               const GlobalOpts& g) {
  VerifyConfig cfg;
  cfg.seed = g.seed;
  cfg.quad_order = g.quad_order;
  cfg.precision_bits = g.precision_bits;
  cfg.suites = suites;
  if (!alpha.empty()) cfg.gram_alpha = parse_rational(alpha);
  if (!beta.empty()) cfg.gram_beta = parse_rational(beta);

  const VerifyReport rep = run_acceptance(cfg);
  Json results = Json::array();
  for (const auto& r : rep.results)
    results.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
  Json out{{"command", "verify"},
           {"config", config_json(g)},
           {"results", results},
           {"allPass", rep.all_pass()}};
  emit(out, g, [&](std::ostream& os) {
    for (const auto& r : rep.results)
      os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name << " ("
         << r.seconds << "s) " << r.detail << "\n";
    os << (rep.all_pass() ? "all criteria passed" : "FAILURES present") << "\n";
  });
  return rep.all_pass() ? 0 : 1;
}

int run_plotdata(const std::string& family, const std::string& alpha,
                 const std::string& beta, unsigned nmax, unsigned samples,
                 double xmin_opt, double xmax_opt, bool have_range) {
  const Family fam = parse_family(family, alpha, beta);
  double xmin = -1, xmax = 1;
  if (std::holds_alternative<LaguerreParams>(fam)) {
    xmin = 0;
    xmax = 20;
  }
  if (have_range) {
    xmin = xmin_opt;
    xmax = xmax_opt;
  }
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  std::vector<Polynomial> ps;
  for (unsigned n = 1; n <= nmax; ++n)
    ps.push_back(x1_family_polynomial(n, fam));
  std::cout << "x";
  for (unsigned n = 1; n <= nmax; ++n) std::cout << ",P" << n;
  std::cout << "\n";
  std::cout.precision(17);
  for (unsigned i = 0; i < samples; ++i) {
    const double x =
        xmin + (xmax - xmin) * static_cast<double>(i) / (samples - 1);
    std::cout << x;
    for (const Polynomial& p : ps) {
      const Real v = p.evaluate_real(Real(x));
      std::cout << "," << v.convert_to<double>();
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "x1: exceptional (X1) polynomial subspaces, their preserving operators, "
      "and the X1-Jacobi / X1-Laguerre families"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("X1_PRECISION_BITS"))
    g.precision_bits = static_cast<unsigned>(std::atoi(env));
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--precision-bits", g.precision_bits,
                 "working precision in bits (>= 64)")
      ->capture_default_str();
  app.add_option("--quad-order", g.quad_order, "quadrature order (>= 16)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized suites")
      ->capture_default_str();

  std::string alpha, beta;
  unsigned nmax = 6;
  bool with_gram = false, with_bc = false;
  auto* jac = app.add_subcommand("jacobi", "X1-Jacobi family");
  jac->add_option("--alpha", alpha)->required();
  jac->add_option("--beta", beta)->required();
  jac->add_option("--nmax", nmax)->capture_default_str();
  jac->add_flag("--gram", with_gram, "emit the Gram matrix by quadrature");
  jac->add_flag("--check-bc", with_bc, "emit boundary-condition reports");

  auto* lag = app.add_subcommand("laguerre", "X1-Laguerre family");
  lag->add_option("--alpha", alpha)->required();
  lag->add_option("--nmax", nmax)->capture_default_str();
  lag->add_flag("--gram", with_gram);
  lag->add_flag("--check-bc", with_bc);

  unsigned eigen_n = 2;
  std::string eigen_params;
  auto* eig = app.add_subcommand("eigen", "exact X1 eigenpolynomial");
  eig->add_option("--n", eigen_n)->required();
  eig->add_option("--params", eigen_params, "a,b,k0,k1,k2 (c = b + 1/a)")
      ->required();

  std::string input;
  auto* cls = app.add_subcommand(
      "classify", "signature, normal form, exceptional verdict");
  cls->add_option("--input", input, "subspace JSON file")->required();

  std::string denom = "auto";
  int bound = -1;
  auto* d2 = app.add_subcommand("d2", "solve for D2(M) within an ansatz");
  d2->add_option("--input", input, "subspace JSON file")->required();
  d2->add_option("--denominator", denom,
                 "ansatz denominator polynomial, or 'auto' for q_M^2");
  d2->add_option("--bound", bound, "numerator degree bound");

  std::vector<std::string> suites;
  std::string valpha, vbeta;
  auto* ver = app.add_subcommand("verify", "run acceptance criteria");
  ver->add_option("--suite", suites,
                  "criterion ids (dims, flag, bochner, allsl2, covariant, "
                  "gamma, jacobi, laguerre, gramschmidt, boundary, "
                  "equivalence, gram); default all");
  ver->add_option("--alpha", valpha, "parameters for --suite gram");
  ver->add_option("--beta", vbeta);

  std::string family;
  unsigned samples = 200;
  double xmin = 0, xmax = 0;
  auto* plot = app.add_subcommand("plotdata", "CSV samples of the family");
  plot->add_option("--family", family)->required();
  plot->add_option("--alpha", alpha);
  plot->add_option("--beta", beta);
  plot->add_option("--nmax", nmax)->capture_default_str();
  plot->add_option("--samples", samples)->capture_default_str();
  auto* oxmin = plot->add_option("--xmin", xmin);
  auto* oxmax = plot->add_option("--xmax", xmax);

  for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.precision_bits < 64 || g.quad_order < 16)
      throw std::invalid_argument(
          "precision must be >= 64 bits and quadrature order >= 16");
    set_precision_bits(g.precision_bits);

    if (jac->parsed())
      return run_family(
          "jacobi",
          Family(JacobiParams{parse_rational(alpha), parse_rational(beta)}),
          nmax, with_gram, with_bc, g);
    if (lag->parsed())
      return run_family("laguerre",
                        Family(LaguerreParams{parse_rational(alpha)}), nmax,
                        with_gram, with_bc, g);
    if (eig->parsed()) return run_eigen(eigen_n, eigen_params, g);
    if (cls->parsed()) return run_classify(input, g);
    if (d2->parsed()) return run_d2(input, denom, bound, g);
    if (ver->parsed()) return run_verify(suites, valpha, vbeta, g);
    if (plot->parsed())
      return run_plotdata(family, alpha, beta, nmax, samples, xmin, xmax,
                          oxmin->count() > 0 && oxmax->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
