#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shtk/classification.hpp"
#include "shtk/hcparam.hpp"
#include "shtk/restricted.hpp"
#include "shtk/shintani.hpp"
#include "shtk/sphericity.hpp"

namespace py = pybind11;
using namespace shtk;

namespace {

// Scalars cross the boundary as text: "3/2", "2+i", or anything whose str() parses.
Scalar to_scalar(const py::handle& h) { return parse_scalar(py::str(h).cast<std::string>()); }

std::vector<Scalar> to_scalars(const py::iterable& xs) {
  std::vector<Scalar> out;
  for (const auto& x : xs) out.push_back(to_scalar(x));
  return out;
}

py::list texts(const std::vector<Scalar>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_string(x));
  return out;
}

py::object optional_text(const std::optional<Scalar>& s) {
  return s ? py::object(py::str(to_string(*s))) : py::object(py::none());
}

py::object optional_bool(const std::optional<bool>& b) { return b ? py::object(py::bool_(*b)) : py::object(py::none()); }

WeylType weyl_type(const std::string& s) {
  if (s == "A") return WeylType::A;
  if (s == "B") return WeylType::B;
  throw DomainError("weyl_type must be 'A' or 'B'");
}

OrbitCheckConfig config(std::uint64_t seed, std::size_t samples, int bound) {
  OrbitCheckConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.bound = bound;
  return cfg;
}

py::dict verdict(const OrbitVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["best_codim"] = v.best_codim;
  d["deterministic"] = v.deterministic;
  d["samples"] = v.samples;
  d["seed"] = v.seed;
  d["dim_g"] = v.dim_g;
  d["dim_p"] = v.dim_p;
  d["dim_p_prime"] = v.dim_p_prime;
  return d;
}

py::dict permutation(const SignedPermutation& w) {
  py::dict d;
  d["perm"] = w.perm;
  d["signs"] = w.signs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_shtk, m) {
  m.doc() = "Finiteness and boundedness criteria for Shintani spaces";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  m.def("normalize_descriptor", [](const std::string& s) { return to_string(parse_descriptor(s)); });

  m.def("classify", [](const std::string& s) {
    const auto v = classify(parse_descriptor(s));
    py::dict d;
    d["finite"] = optional_bool(v.finite);
    d["bounded"] = optional_bool(v.bounded);
    py::list cases;
    for (const auto& sv : v.summands)
      for (const auto& c : sv.matched) cases.append(to_string(c));
    d["matched_cases"] = cases;
    return d;
  }, py::arg("descriptor"));

  m.def("cross_validate", [](const std::string& s, std::uint64_t seed, std::size_t samples, int bound) {
    const auto cv = cross_validate(parse_descriptor(s), config(seed, samples, bound));
    py::dict d;
    d["finite"] = optional_bool(cv.table.finite);
    d["bounded"] = optional_bool(cv.table.bounded);
    d["pp"] = optional_bool(cv.pp);
    d["bb"] = optional_bool(cv.bb);
    d["agreement"] = cv.agreement;
    return d;
  }, py::arg("descriptor"), py::arg("seed") = 0, py::arg("samples") = 5, py::arg("bound") = 5);

  m.def("check_pp", [](const std::string& s, std::uint64_t seed, std::size_t samples, int bound) {
    return verdict(check_pp(realize(parse_descriptor(s)), config(seed, samples, bound)));
  }, py::arg("descriptor"), py::arg("seed") = 0, py::arg("samples") = 5, py::arg("bound") = 5);

  m.def("check_bb", [](const std::string& s, std::uint64_t seed, std::size_t samples, int bound) {
    const auto e = realize(parse_descriptor(s));
    const auto cfg = config(seed, samples, bound);
    return verdict(is_complex_pair(e) ? check_bb(e, cfg) : check_bb(complexify(e), cfg));
  }, py::arg("descriptor"), py::arg("seed") = 0, py::arg("samples") = 5, py::arg("bound") = 5);

  m.def("check_triple", [](const std::string& algebra, std::uint64_t seed, std::size_t samples, int bound) {
    return verdict(check_triple(construct_classical(parse_algebra_name(algebra)), config(seed, samples, bound)));
  }, py::arg("algebra"), py::arg("seed") = 0, py::arg("samples") = 5, py::arg("bound") = 5);

  m.def("explain", [](const std::string& s, std::uint64_t seed, std::size_t samples, int bound) {
    return explain(parse_descriptor(s), config(seed, samples, bound));
  }, py::arg("descriptor"), py::arg("seed") = 0, py::arg("samples") = 5, py::arg("bound") = 5);

  m.def("restricted_roots", [](const std::string& algebra) {
    const auto dat = restricted_roots(construct_classical(parse_algebra_name(algebra)));
    py::dict d;
    d["real_rank"] = dat.real_rank();
    d["dim_m"] = dat.m_basis.size();
    py::list roots;
    for (const auto& r : dat.roots) {
      if (!r.positive) continue;
      py::list alpha;
      for (const auto& x : r.alpha) alpha.append(to_string(x));
      roots.append(py::make_tuple(alpha, r.mult));
    }
    d["positive_roots"] = roots;
    py::list rho;
    for (const auto& x : dat.rho_n) rho.append(to_string(x));
    d["rho_n"] = rho;
    return d;
  }, py::arg("algebra"));

  m.def("rho", [](const std::string& algebra) {
    const auto r = rho_g(algebra);
    return py::make_tuple(texts(r.entries), to_string(r.weyl_type));
  }, py::arg("algebra"));

  m.def("canonical_infchar", [](const py::iterable& v, const std::string& type) {
    return texts(canonical_infchar({to_scalars(v), weyl_type(type)}).entries);
  }, py::arg("entries"), py::arg("weyl_type") = "B");

  m.def("infchar_equal", [](const py::iterable& v, const py::iterable& w, const std::string& type) {
    return infchar_equal({to_scalars(v), weyl_type(type)}, {to_scalars(w), weyl_type(type)});
  }, py::arg("v"), py::arg("w"), py::arg("weyl_type") = "B");

  m.def("affine_membership", [](const py::iterable& v, const py::iterable& tail, const std::string& type) -> py::object {
    const auto match = affine_membership({to_scalars(v), weyl_type(type)}, {to_scalars(tail), Scalar(0)});
    if (!match) return py::none();
    return py::make_tuple(to_string(match->c), permutation(match->witness));
  }, py::arg("entries"), py::arg("tail"), py::arg("weyl_type") = "B");

  m.def("dominant_a_param", [](const py::handle& c, const py::handle& rho, const std::string& side) {
    if (side != "plus" && side != "minus") throw DomainError("side must be 'plus' or 'minus'");
    return to_string(dominant_a_param(to_scalar(c), parse_rational(py::str(rho).cast<std::string>()),
                                      side == "plus" ? ParamSide::Plus : ParamSide::Minus));
  }, py::arg("c"), py::arg("rho"), py::arg("side") = "plus");

  m.def("dgk_surjective", [](const std::string& algebra) { return dgk_surjective(algebra); }, py::arg("algebra"));

  m.def("shintani", [](int n, const py::iterable& lambda, const py::iterable& nu) {
    const ShintaniQuery q{n, {to_scalars(lambda), WeylType::B}, {to_scalars(nu), WeylType::B}};
    const auto a = shintani_nonvanishing(q);
    py::dict d;
    d["nonvanishing"] = a.nonvanishing;
    d["dim_mod"] = a.dim_mod;
    d["t"] = optional_text(a.t);
    d["s"] = optional_text(a.s);
    d["c_lambda"] = optional_text(a.c_lambda);
    d["c_nu"] = optional_text(a.c_nu);
    d["lambda_plus"] = optional_text(a.lambda_plus);
    d["nu_minus"] = optional_text(a.nu_minus);
    return d;
  }, py::arg("n"), py::arg("lam"), py::arg("nu"));

  m.def("bridge_consistency", [](int n, const py::iterable& lambda, const py::iterable& nu) {
    return bridge_consistency({n, {to_scalars(lambda), WeylType::B}, {to_scalars(nu), WeylType::B}});
  }, py::arg("n"), py::arg("lam"), py::arg("nu"));

  m.def("l_even_member", [](const py::handle& a, const py::handle& b) { return l_even_member(to_scalar(a), to_scalar(b)); });
  m.def("sbo_dim", [](const py::handle& a, const py::handle& b) { return sbo_dim(to_scalar(a), to_scalar(b)); });
}
