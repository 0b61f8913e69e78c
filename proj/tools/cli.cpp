#include "cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shtk/classification.hpp"
#include "shtk/hcparam.hpp"
#include "shtk/restricted.hpp"
#include "shtk/shintani.hpp"
#include "shtk/sphericity.hpp"

namespace shtk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Request {
  std::string pair;
  std::string algebra;
  int n = 2;
  std::string lambda;
  std::string nu;
  std::string c;
  std::string rho;
  std::string side = "plus";
  std::uint64_t seed = 0;
  std::size_t samples = 5;
  int bound = 5;
  std::string format = "json";
};

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }
Json optional_scalar(const std::optional<Scalar>& s) { return s ? Json(to_string(*s)) : Json(nullptr); }

Json scalars(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json rationals(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json matrix(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json permutation(const std::optional<SignedPermutation>& w) {
  if (!w) return nullptr;
  return Json{{"perm", w->perm}, {"signs", w->signs}};
}

Json verdict(const OrbitVerdict& v) {
  return Json{{"holds", v.holds},
              {"best_codim", v.best_codim},
              {"deterministic", v.deterministic},
              {"samples", v.samples},
              {"seed", v.seed},
              {"witness", matrix(v.witness)},
              {"dim_g", v.dim_g},
              {"dim_p", v.dim_p},
              {"dim_p_prime", v.dim_p_prime},
              {"swapped", v.swapped}};
}

OrbitCheckConfig config(const Request& r) {
  OrbitCheckConfig cfg;
  cfg.seed = r.seed;
  cfg.samples = r.samples;
  cfg.bound = r.bound;
  cfg.validate();
  return cfg;
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += text_value(v[i]);
    }
    return out + "]";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render_text(item, out, indent + 4);
      }
    } else {
      out << pad << key << ": " << text_value(value) << "\n";
    }
  }
}

Json cmd_pp(const Request& r) {
  const auto e = realize(parse_descriptor(r.pair));
  Json j{{"pair", r.pair}};
  j.update(verdict(check_pp(e, config(r))));
  return j;
}

Json cmd_bb(const Request& r) {
  const auto e = realize(parse_descriptor(r.pair));
  const bool complexified = !is_complex_pair(e);
  Json j{{"pair", r.pair}};
  j.update(verdict(complexified ? check_bb(complexify(e), config(r)) : check_bb(e, config(r))));
  j["complexified"] = complexified;
  return j;
}

Json cmd_triple(const Request& r) {
  const auto l = construct_classical(parse_algebra_name(r.algebra));
  Json j{{"algebra", to_string(parse_algebra_name(r.algebra))}};
  j.update(verdict(check_triple(l, config(r))));
  return j;
}

Json cmd_classify(const Request& r) {
  const auto d = parse_descriptor(r.pair);
  const auto cv = cross_validate(d, config(r));
  Json cases = Json::array();
  Json summands = Json::array();
  for (const auto& s : cv.table.summands) {
    Json matched = Json::array();
    for (const auto& c : s.matched) {
      matched.push_back(to_string(c));
      cases.push_back(to_string(c));
    }
    summands.push_back(Json{{"summand", s.summand},
                            {"matched", matched},
                            {"finite", optional_bool(s.finite)},
                            {"bounded", optional_bool(s.bounded)},
                            {"note", s.note}});
  }
  Json checks = Json::array();
  for (const auto& c : cv.summands)
    checks.push_back(Json{{"summand", c.summand},
                          {"pp", c.pp ? Json(c.pp->holds) : Json(nullptr)},
                          {"bb", c.bb ? Json(c.bb->holds) : Json(nullptr)},
                          {"agree", optional_bool(c.agree)},
                          {"note", c.note}});
  return Json{{"descriptor", to_string(d)},
              {"finite", optional_bool(cv.table.finite)},
              {"bounded", optional_bool(cv.table.bounded)},
              {"matched_cases", cases},
              {"checker", Json{{"pp", optional_bool(cv.pp)}, {"bb", optional_bool(cv.bb)}}},
              {"agreement", cv.agreement},
              {"summands", summands},
              {"checks", checks}};
}

Json cmd_shintani(const Request& r) {
  const ShintaniQuery q{r.n, parse_infchar(r.lambda), parse_infchar(r.nu)};
  const auto a = shintani_nonvanishing(q);
  Json j{{"n", q.n},
         {"lambda", scalars(canonical_infchar(q.lambda).entries)},
         {"nu", scalars(canonical_infchar(q.nu).entries)},
         {"nonvanishing", a.nonvanishing},
         {"dim_mod", a.dim_mod},
         {"t", optional_scalar(a.t)},
         {"s", optional_scalar(a.s)},
         {"c_lambda", optional_scalar(a.c_lambda)},
         {"c_nu", optional_scalar(a.c_nu)},
         {"lambda_plus", optional_scalar(a.lambda_plus)},
         {"nu_minus", optional_scalar(a.nu_minus)},
         {"witnesses", Json{{"lambda", permutation(a.witness_lambda)}, {"nu", permutation(a.witness_nu)}}}};
  if (a.nonvanishing) {
    j["sbo_dim"] = sbo_dim(*a.lambda_plus, *a.nu_minus);
    j["bridge_consistent"] = bridge_consistency(q);
  } else {
    j["sbo_dim"] = nullptr;
    j["bridge_consistent"] = nullptr;
  }
  return j;
}

Json cmd_roots(const Request& r) {
  const auto name = parse_algebra_name(r.algebra);
  const auto d = restricted_roots(construct_classical(name));
  Json roots = Json::array();
  for (const auto& root : d.roots)
    roots.push_back(Json{{"alpha", rationals(root.alpha)}, {"mult", root.mult}, {"positive", root.positive}});
  return Json{{"algebra", to_string(name)},
              {"real_rank", d.real_rank()},
              {"roots", roots},
              {"dim_m", d.m_basis.size()},
              {"rho_n", rationals(d.rho_n)}};
}

Json cmd_rho(const Request& r) {
  const auto rho = rho_g(r.algebra);
  return Json{{"algebra", r.algebra}, {"weyl_type", to_string(rho.weyl_type)}, {"rho", scalars(rho.entries)}};
}

Json cmd_dominant(const Request& r) {
  const Scalar c = parse_scalar(r.c);
  const Rational rho = parse_rational(r.rho);
  const ParamSide side = r.side == "plus" ? ParamSide::Plus : ParamSide::Minus;
  return Json{{"c", to_string(c)},
              {"rho", to_string(rho)},
              {"side", r.side},
              {"value", to_string(dominant_a_param(c, rho, side))}};
}

Json cmd_explain(const Request& r) {
  const auto d = parse_descriptor(r.pair);
  return Json{{"descriptor", to_string(d)}, {"explanation", explain(d, config(r))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Finiteness and boundedness criteria for Shintani spaces", "shtk"};
  app.require_subcommand(1, 1);

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", req.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_sampling = [&](CLI::App* s) {
    s->add_option("--seed", req.seed, "seed for generic-point sampling");
    s->add_option("--samples", req.samples, "number of generic points");
    s->add_option("--bound", req.bound, "coordinate bound for generic points");
  };

  struct Entry {
    CLI::App* app;
    Json (*fn)(const Request&);
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* help, Json (*fn)(const Request&)) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s);
    entries.push_back({s, fn});
    return s;
  };

  auto* pp = sub("pp", "(PP): open P P' orbit test for a pair", cmd_pp);
  pp->add_option("--pair", req.pair, "pair descriptor")->required();
  add_sampling(pp);
  auto* bb = sub("bb", "(BB): open B B' orbit test, complexifying a real pair", cmd_bb);
  bb->add_option("--pair", req.pair, "pair descriptor")->required();
  add_sampling(bb);
  auto* triple = sub("triple", "open orbit test for (l + l + l) > diag l", cmd_triple);
  triple->add_option("--algebra", req.algebra, "algebra name, e.g. su(2,1)")->required();
  add_sampling(triple);
  auto* classify_cmd = sub("classify", "table verdicts cross-checked against the orbit tests", cmd_classify);
  classify_cmd->add_option("--pair", req.pair, "pair descriptor")->required();
  add_sampling(classify_cmd);
  auto* explain_cmd = sub("explain", "human-readable account of a pair", cmd_explain);
  explain_cmd->add_option("--pair", req.pair, "pair descriptor")->required();
  add_sampling(explain_cmd);
  auto* shintani = sub("shintani", "Shintani spaces for (O(n+1,1), O(n,1))", cmd_shintani);
  shintani->add_option("--n", req.n, "n >= 2")->required();
  shintani->add_option("--lambda", req.lambda, "comma-separated scalars")->required();
  shintani->add_option("--nu", req.nu, "comma-separated scalars")->required();
  auto* roots = sub("roots", "restricted root datum", cmd_roots);
  roots->add_option("--algebra", req.algebra, "algebra name")->required();
  auto* rho = sub("rho", "rho of the complexified algebra", cmd_rho);
  rho->add_option("--algebra", req.algebra, "algebra name")->required();
  auto* dominant = sub("dominant", "dominant a-parameter rho + sigma c", cmd_dominant);
  dominant->add_option("--c", req.c, "free coordinate")->required();
  dominant->add_option("--rho", req.rho, "rho coefficient")->required();
  dominant->add_option("--side", req.side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& entry : entries) {
      if (!entry.app->parsed()) continue;
      const Json j = entry.fn(req);
      if (req.format == "json") {
        out << j.dump() << "\n";
      } else if (j.contains("explanation")) {
        out << j["explanation"].get<std::string>();
      } else {
        render_text(j, out);
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace shtk::cli
