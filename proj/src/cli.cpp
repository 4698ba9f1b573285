#include "hillpoly/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hillpoly/euler.hpp"
#include "hillpoly/families.hpp"
#include "hillpoly/hills.hpp"
#include "hillpoly/identities.hpp"
#include "hillpoly/rootloc.hpp"
#include "hillpoly/serialize.hpp"
#include "hillpoly/sweep.hpp"
#include "hillpoly/weyl.hpp"

namespace hillpoly {

namespace {

enum class Format { json, csv, table };

/// Thrown for bad parameters detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_coeff_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw UsageError("--coeffs: expected a comma-separated list such as 1,5/2");
  return out;
}

void emit_poly(std::ostream& out, Format fmt, const Poly& p, char var) {
  switch (fmt) {
    case Format::table:
      out << to_string(p, var) << '\n';
      break;
    case Format::json:
      out << poly_to_json(p, var).dump() << '\n';
      break;
    case Format::csv:
      out << "degree,coefficient\n";
      for (std::size_t k = 0; k < p.size(); ++k) out << k << ',' << to_string(p.coeffs()[k]) << '\n';
      break;
  }
}

/// Key/value output for the composite subcommands.
void emit_fields(std::ostream& out, Format fmt, const Json& fields) {
  switch (fmt) {
    case Format::json:
      out << fields.dump() << '\n';
      break;
    case Format::csv:
      out << "field,value\n";
      for (const auto& [k, v] : fields.items()) out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      break;
    case Format::table: {
      std::size_t width = 0;
      for (const auto& [k, v] : fields.items()) width = std::max(width, k.size());
      for (const auto& [k, v] : fields.items())
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << (v.is_string() ? v.get<std::string>() : v.dump())
            << '\n';
      break;
    }
  }
}

/// Poly as a string for table/csv and as the schema object for JSON.
Json poly_field(Format fmt, const Poly& p, char var) {
  if (fmt == Format::json) return poly_to_json(p, var);
  return fmt == Format::csv ? Json(poly_to_csv_cell(p)) : Json(to_string(p, var));
}

Json line_field(Format fmt, const LineCertificate& c) {
  if (fmt == Format::json) return to_json(c);
  return c.on_line() ? "on-line" : "off-line: " + c.witness.value_or("");
}

Json roots_field(Format fmt, const NegativeRootsResult& r) {
  if (fmt == Format::json) return to_json(r);
  return r.pass ? "pass" : "fail: " + r.witness.value_or("");
}

struct FamilyArgs {
  std::string name;
  int m = 0;
  std::string alpha = "1";
  std::string beta = "1";
  std::string n_param = "-2";
};

int cmd_family(const FamilyArgs& a, Format fmt, std::ostream& out) {
  if (a.m < 0) throw UsageError("--m must be >= 0");
  const Rational alpha = parse_rational(a.alpha);
  const Rational beta = parse_rational(a.beta);
  if (a.name == "jacobi") {
    emit_poly(out, fmt, jacobi(a.m, alpha, beta), 'x');
  } else if (a.name == "hahn") {
    emit_poly(out, fmt, hahn_explicit(a.m, alpha, beta, parse_rational(a.n_param)), 'n');
  } else if (a.name == "f") {
    emit_poly(out, fmt, f_poly(a.m), 't');
  } else if (a.name == "g") {
    emit_poly(out, fmt, g_poly(a.m), 't');
  } else if (a.name == "h") {
    emit_poly(out, fmt, h_poly(a.m), 's');
  } else if (a.name == "q") {
    emit_poly(out, fmt, q_poly(a.m), 's');
  } else if (a.name == "eulerian") {
    emit_poly(out, fmt, eulerian_family(a.m).p, 't');
  } else {
    throw UsageError("unknown family '" + a.name + "' (jacobi, hahn, f, g, h, q, eulerian)");
  }
  return kExitPass;
}

int cmd_euler(const std::string& coeffs, Format fmt, std::ostream& out) {
  const Poly q(parse_coeff_list(coeffs));
  if (q.is_zero() || q.coeff(0) != 1) throw UsageError("euler: Q(0) must be 1");
  const EulerPair pair = euler_transform(q);
  emit_fields(out, fmt,
              Json{{"Q", poly_field(fmt, pair.q, 's')},
                   {"P", poly_field(fmt, pair.p, 't')},
                   {"d", pair.d},
                   {"e", pair.e},
                   {"defect", pair.defect}});
  return kExitPass;
}

int cmd_inverse_euler(const std::string& coeffs, Format fmt, std::ostream& out) {
  const Poly p(parse_coeff_list(coeffs));
  if (p.is_zero() || p.coeff(0) != 1) throw UsageError("inverse-euler: P(0) must be 1");
  if (p(Rational(1)) == 0) throw UsageError("inverse-euler: P(1) must be nonzero");
  emit_poly(out, fmt, inverse_euler(p), 's');
  return kExitPass;
}

int cmd_hill(const std::string& text, Format fmt, std::ostream& out) {
  const Hill hill = parse_hill(text);
  if (hill.empty()) throw UsageError("hill: the empty hill has no dual polynomials");
  const HillPolys hp = hill_poly(hill);
  const Poly q = hill_q(hill);
  const Poly p = hill_dual(hill);
  const PhiFactors phi = phi_factors(hill);
  const auto [lambda, parity] = undouble(hill);
  std::string young = "young:";
  for (std::size_t i = 0; i < lambda.lambda().size(); ++i) young += (i ? "," : "") + std::to_string(lambda.lambda()[i]);
  young += parity == Parity::even ? "+" : "-";

  const LineCertificate thm44 = critical_line_check(q, 1);
  const NegativeRootsResult conj47 = negative_simple_roots_check(p);
  emit_fields(out, fmt,
              Json{{"hill", to_string(hill)},
                   {"young", young},
                   {"volume", hill.volume()},
                   {"width", hill.width()},
                   {"height", hill.height()},
                   {"h", poly_field(fmt, hp.h, 's')},
                   {"h_tilde", poly_field(fmt, hp.h_tilde, 's')},
                   {"Q", poly_field(fmt, q, 's')},
                   {"P", poly_field(fmt, p, 't')},
                   {"boundary", to_string(boundary(hill))},
                   {"phi_plus", poly_field(fmt, phi.plus, 'x')},
                   {"phi_minus", poly_field(fmt, phi.minus, 'x')},
                   {"critical_line", line_field(fmt, thm44)},
                   {"negative_simple_roots", roots_field(fmt, conj47)}});
  return thm44.on_line() && conj47.pass ? kExitPass : kExitMathFailure;
}

int cmd_diffeq(const std::string& hill_text, const std::string& coeffs, int order, Format fmt, std::ostream& out) {
  if (hill_text.empty() == coeffs.empty()) throw UsageError("diffeq: give exactly one of --hill or --coeffs");
  const Poly q = hill_text.empty() ? Poly(parse_coeff_list(coeffs)) : hill_q(parse_hill(hill_text));
  const DiffEqSolution sol = diffeq_search(q, order);
  Json fields{{"Q", poly_field(fmt, q, 's')},
              {"order", sol.order},
              {"nullspace_dimension", sol.nullspace_dimension},
              {"found", sol.coefficients.has_value()},
              {"degenerate", sol.degenerate}};
  if (sol.coefficients)
    for (std::size_t i = 0; i < sol.coefficients->size(); ++i)
      fields["p" + std::to_string(i)] = poly_field(fmt, (*sol.coefficients)[i], 's');
  emit_fields(out, fmt, fields);
  return kExitPass;
}

int cmd_weyl(int ell, Format fmt, std::ostream& out) {
  const Poly dim = weyl_dim_poly(ell);
  const bool matches = dim == h_poly(ell - 2);
  emit_fields(out, fmt,
              Json{{"ell", ell},
                   {"weight", "n varpi_2"},
                   {"dimension", poly_field(fmt, dim, 'n')},
                   {"plucker_dimension", plucker_dimension(ell - 2)},
                   {"equals_h", matches}});
  return matches ? kExitPass : kExitMathFailure;
}

int cmd_verify(const std::string& name, bool all, int range, Format fmt, std::ostream& out) {
  if (all == !name.empty()) throw UsageError("verify: give an identity name or --all");
  std::vector<IdentityReport> reports;
  if (all) {
    for (const auto& info : identity_registry()) reports.push_back(verify_identity(info.name, range));
  } else {
    reports.push_back(verify_identity(name, range));
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  switch (fmt) {
    case Format::json: {
      Json j{{"pass", pass}, {"range", range}, {"reports", Json::array()}};
      for (const auto& r : reports) j["reports"].push_back(to_json(r));
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "name,pass,range,cases,failing_case,lhs,rhs\n";
      for (const auto& r : reports)
        out << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.range << ',' << r.cases << ','
            << r.failing_case.value_or("") << ',' << r.lhs << ',' << r.rhs << '\n';
      break;
    case Format::table:
      for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(34) << r.name << std::right << std::setw(7)
            << r.cases << " cases " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
        if (!r.pass) out << "     at " << *r.failing_case << "\n     lhs: " << r.lhs << "\n     rhs: " << r.rhs << '\n';
        for (const auto& n : r.notes) out << "     " << n << '\n';
      }
      out << (pass ? "all identities pass" : "FAILURES present") << '\n';
      break;
  }
  return pass ? kExitPass : kExitMathFailure;
}

int cmd_sweep(SweepConfig config, Format fmt, std::ostream& out, std::ostream& err) {
  if (config.log.empty()) config.log = default_sweep_log(config.v_max);
  if (fmt == Format::csv) out << "index,hill,volume,width,deg_q,deg_p,thm44,conj47,diffeq_order_found\n";
  auto row = [&](const Json& j) {
    const std::string diffeq = j["diffeq_order_found"].is_null() ? "" : j["diffeq_order_found"].dump();
    if (fmt == Format::csv) {
      out << j["index"] << ",\"" << j["hill"].get<std::string>() << "\"," << j["volume"] << ',' << j["width"] << ','
          << j["deg_q"] << ',' << j["deg_p"] << ',' << j["thm44"]["verdict"].get<std::string>() << ','
          << j["conj47"]["verdict"].get<std::string>() << ',' << diffeq << '\n';
    } else if (fmt == Format::table) {
      out << std::setw(5) << j["index"].get<int>() << "  " << std::left << std::setw(24) << j["hill"].get<std::string>()
          << std::right << " v=" << std::setw(2) << j["volume"].get<int>() << " deg=" << std::setw(2)
          << j["deg_q"].get<int>() << "  " << j["thm44"]["verdict"].get<std::string>() << "  "
          << j["conj47"]["verdict"].get<std::string>() << '\n';
    }
  };
  const SweepOutcome res = run_sweep(config, row);

  std::ostringstream summary;
  summary << "hills checked: " << res.records.size() << " (computed " << res.computed << ", resumed " << res.resumed
          << "), failures: " << res.failures << ", max degree: " << res.max_degree << ", wall time: " << std::fixed
          << std::setprecision(2) << res.wall_seconds << "s, log: " << config.log.string();
  if (fmt == Format::json) {
    Json j{{"hills_checked", res.records.size()},
           {"computed", res.computed},
           {"resumed", res.resumed},
           {"failures", res.failures},
           {"max_degree", res.max_degree},
           {"wall_seconds", res.wall_seconds},
           {"log", config.log.string()},
           {"counterexamples", Json::array()}};
    for (const auto& r : res.records)
      if (!r.value("pass", false)) j["counterexamples"].push_back(r);
    out << j.dump() << '\n';
  } else {
    for (const auto& r : res.records)
      if (!r.value("pass", false)) err << "COUNTEREXAMPLE " << r.dump() << '\n';
    (fmt == Format::table ? out : err) << summary.str() << '\n';
  }
  return res.failures == 0 ? kExitPass : kExitMathFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial calculus for Euler transforms, orthogonal families and hill polynomials", "hillpoly"};
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::table;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  app.add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|csv|table (default table)");

  FamilyArgs family;
  auto* fam = app.add_subcommand("family", "Print a member of a polynomial family");
  fam->add_option("name", family.name, "jacobi, hahn, f, g, h, q or eulerian")->required();
  fam->add_option("--m", family.m, "Index (degree parameter; k for eulerian)");
  fam->add_option("--alpha", family.alpha, "alpha for jacobi/hahn");
  fam->add_option("--beta", family.beta, "beta for jacobi/hahn");
  fam->add_option("--N", family.n_param, "N for hahn");

  std::string coeffs;
  auto* eul = app.add_subcommand("euler", "Euler transform of Q (coefficients ascending, Q(0) = 1)");
  eul->add_option("--coeffs", coeffs, "e.g. 1,5/2")->required();
  auto* inv = app.add_subcommand("inverse-euler", "Inverse Euler transform of P");
  inv->add_option("--coeffs", coeffs, "e.g. 1,1")->required();

  std::string hill_text;
  auto* hill = app.add_subcommand("hill", "Polynomials and certificates of one hill");
  hill->add_option("hill", hill_text, "1,2,2,1 or young:1,2+")->required();

  SweepConfig sweep;
  std::string log_path;
  auto* swp = app.add_subcommand("sweep", "Check every hill up to a volume bound");
  swp->add_option("--v-max", sweep.v_max, "Volume bound")->required()->check(CLI::PositiveNumber);
  swp->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);
  swp->add_option("--log", log_path, "NDJSON log path (default $HILLPOLY_LOG_DIR/sweep-v<N>.ndjson)");
  swp->add_flag("--resume", sweep.resume, "Skip hills already in the log");

  std::string identity;
  bool all = false;
  int range = 20;
  auto* ver = app.add_subcommand("verify", "Run registered identity checkers");
  ver->add_option("name", identity, "Identity name");
  ver->add_flag("--all", all, "Run every checker");
  ver->add_option("--range", range, "Index bound")->check(CLI::PositiveNumber);
  bool list = false;
  ver->add_flag("--list", list, "List identity names");

  int order = 1;
  std::string diffeq_hill;
  auto* deq = app.add_subcommand("diffeq", "Search for a difference equation annihilating Q");
  deq->add_option("--hill", diffeq_hill, "Hill whose Q_mu is used");
  deq->add_option("--coeffs", coeffs, "Q coefficients ascending");
  deq->add_option("--order", order, "Order h")->check(CLI::PositiveNumber);

  int ell = 2;
  auto* wey = app.add_subcommand("weyl", "dim L(n varpi_2) for A_ell");
  wey->add_option("--ell", ell, "Rank, >= 2")->check(CLI::Range(2, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*fam) return cmd_family(family, fmt, out);
    if (*eul) return cmd_euler(coeffs, fmt, out);
    if (*inv) return cmd_inverse_euler(coeffs, fmt, out);
    if (*hill) return cmd_hill(hill_text, fmt, out);
    if (*swp) {
      sweep.log = log_path;
      return cmd_sweep(sweep, fmt, out, err);
    }
    if (*ver) {
      if (list) {
        for (const auto& info : identity_registry()) out << info.name << "  " << info.description << '\n';
        return kExitPass;
      }
      return cmd_verify(identity, all, range, fmt, out);
    }
    if (*deq) return cmd_diffeq(diffeq_hill, coeffs, order, fmt, out);
    if (*wey) return cmd_weyl(ell, fmt, out);
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorruptLog& e) {
    err << "error: " << e.what() << " (refusing to resume; the log was not modified)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hillpoly
