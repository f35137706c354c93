#include "commsub/cli.hpp"

#include "commsub/json_io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace commsub {

namespace {

struct Emit {
  std::ostream& out;
  std::string path;

  void operator()(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + path + "'");
    f << text;
  }
};

int error_line(std::ostream& out, const std::string& msg) {
  Json j;
  j["error"] = msg;
  out << j.dump() << "\n";
  return 1;
}

PrimeField field_arg(std::uint64_t p) {
  if (p > kMaxModulus) throw DomainError("modulus " + std::to_string(p) + " out of range");
  return PrimeField(static_cast<std::uint32_t>(p));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutative subalgebras of finite-dimensional algebras over GF(p)", "commsub"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "Worker threads (default: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  std::string output;

  auto* params = app.add_subcommand("params", "Parameters (n, t, k) for a given s");
  std::size_t s = 0;
  params->add_option("--s", s, "Abelian dimension bound")->required();

  auto* certify = app.add_subcommand("certify", "Sample form tuples until one has no k-dim common isotropic subspace");
  std::size_t n = 0, t = 0, k = 0;
  std::uint64_t p = 2, seed = 0, attempts = 1000;
  std::uint64_t budget = 0;
  std::string kind_s = "alternating";
  certify->add_option("--n", n)->required();
  certify->add_option("--t", t)->required();
  certify->add_option("--k", k)->required();
  certify->add_option("--p", p, "Prime modulus")->capture_default_str();
  certify->add_option("--seed", seed, "Seed of the first attempt")->required();
  certify->add_option("--max-attempts", attempts)->capture_default_str();
  certify->add_option("--kind", kind_s, "alternating|symmetric|general")->capture_default_str();
  certify->add_option("--budget", budget, "Subspace enumeration budget");
  certify->add_option("-o,--output", output);

  auto* construct = app.add_subcommand("construct", "Build the algebra of a certified form tuple");
  std::string from, alg_kind = "lie";
  construct->add_option("--from", from, "Certificate or form tuple file")->required();
  construct->add_option("--kind", alg_kind, "lie|assoc")->capture_default_str();
  construct->add_option("-o,--output", output);

  auto* search = app.add_subcommand("search", "Maximal abelian subalgebra dimension");
  std::string alg_path, mode_s = "exact";
  search->add_option("--alg", alg_path)->required();
  search->add_option("--mode", mode_s, "exact|class2|greedy")->capture_default_str();
  search->add_option("--budget", budget);
  search->add_option("-o,--output", output);

  auto* bounds = app.add_subcommand("bounds", "Growth bounds for a given n");
  std::string field_s = "any", c_s, format = "json";
  bounds->add_option("--n", n)->required();
  bounds->add_option("--field", field_s, "C|R|closed|char0|any")->capture_default_str();
  bounds->add_option("--c", c_s, "Constant c >= 9/2 as a rational");
  bounds->add_option("--format", format, "json|table")->capture_default_str();
  bounds->add_option("-o,--output", output);

  auto* table = app.add_subcommand("simple-table", "Simple complex Lie algebras: dim and max abelian dim");
  std::string type_s;
  std::optional<std::size_t> rank;
  std::size_t max_rank = 8;
  table->add_option("--type", type_s);
  table->add_option("--rank", rank);
  table->add_option("--max-rank", max_rank, "Largest classical rank listed")->capture_default_str();
  table->add_option("-o,--output", output);

  auto* mcomm = app.add_subcommand("matrix-comm", "Commutative subalgebra of M_r(GF(p))");
  std::size_t r = 0;
  std::string construction_s = "corner";
  mcomm->add_option("--r", r)->required();
  mcomm->add_option("--p", p)->capture_default_str();
  mcomm->add_option("--construction", construction_s, "diagonal|corner")->capture_default_str();
  mcomm->add_option("-o,--output", output);

  auto* unital = app.add_subcommand("unitalize", "Adjoin an identity to an associative algebra");
  unital->add_option("--alg", alg_path)->required();
  unital->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Check the algebra axioms");
  verify->add_option("--alg", alg_path)->required();
  verify->add_option("-o,--output", output);

  auto* reverify = app.add_subcommand("reverify", "Reproduce a genericity certificate");
  std::string cert_path;
  reverify->add_option("--cert", cert_path)->required();
  reverify->add_option("--budget", budget);
  reverify->add_option("-o,--output", output);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_line(out, e.what());
  }

  if (jobs > 0) omp_set_num_threads(jobs);
  const Emit emit{out, output};
  const std::uint64_t enum_budget = budget ? budget : kDefaultEnumerationBudget;

  try {
    if (params->parsed()) {
      emit(dump(to_json(extremal_params(s))));
      return 0;
    }
    if (certify->parsed()) {
      if (!genericity_condition(n, t, k))
        err << "warning: 2n < t(k-1) fails for n=" << n << ", t=" << t << ", k=" << k
            << "; a good tuple is not guaranteed to exist\n";
      auto cert = certify_no_isotropic(n, t, k, field_arg(p), seed, attempts,
                                       form_kind_from_string(kind_s), enum_budget);
      err << "certified at seed " << cert.seed() << " after " << (cert.seed() - seed + 1)
          << " attempt(s), " << cert.subspaces_checked.str() << " subspaces checked\n";
      emit(dump(to_json(cert)));
      return 0;
    }
    if (construct->parsed()) {
      const FormTuple forms = forms_from_json(read_json_file(from));
      if (alg_kind == "lie") emit(dump(to_json(build_lie_from_forms(forms))));
      else if (alg_kind == "assoc") emit(dump(to_json(build_assoc_from_forms(forms))));
      else throw DomainError("--kind must be lie or assoc, got '" + alg_kind + "'");
      return 0;
    }
    if (search->parsed()) {
      const auto a = algebra_from_json(read_json_file(alg_path));
      const SearchMode mode = search_mode_from_string(mode_s);
      SearchResult res = mode == SearchMode::exact
                             ? max_abelian_exact(a, budget ? budget : kDefaultSearchBudget)
                         : mode == SearchMode::class2 ? max_abelian_class2_exact(a, enum_budget)
                                                      : greedy_abelian_class2(a);
      emit(dump(to_json(res)));
      if (mode == SearchMode::exact && !res.exact) {
        err << "search budget exhausted after " << res.nodes << " nodes; dim is a lower bound\n";
        return 2;
      }
      return 0;
    }
    if (bounds->parsed()) {
      std::optional<Rational> c;
      if (!c_s.empty()) c = parse_rational(c_s);
      const BoundReport rep = bound_table(n, field_class_from_string(field_s), c);
      if (format == "json") emit(dump(to_json(rep)));
      else if (format == "table") emit(format_bound_table(rep));
      else throw DomainError("--format must be json or table");
      return 0;
    }
    if (table->parsed()) {
      std::vector<SimpleTypeEntry> entries;
      if (!type_s.empty()) entries.push_back(simple_lie_data(simple_type_from_string(type_s), rank));
      else if (rank) throw DomainError("--rank needs --type");
      else entries = simple_lie_table(max_rank);
      Json j = Json::array();
      for (const auto& e : entries) j.push_back(to_json(e));
      emit(dump(j));
      return 0;
    }
    if (mcomm->parsed()) {
      const auto c = matrix_construction_from_string(construction_s);
      emit(dump(to_json(matrix_commutative_subalgebra(r, field_arg(p), c), r, c)));
      return 0;
    }
    if (unital->parsed()) {
      emit(dump(to_json(unitalize(algebra_from_json(read_json_file(alg_path))))));
      return 0;
    }
    if (verify->parsed()) {
      const AxiomReport rep = verify_axioms(algebra_from_json(read_json_file(alg_path)));
      emit(dump(to_json(rep)));
      return rep.ok() ? 0 : 1;
    }
    if (reverify->parsed()) {
      const auto cert = certificate_from_json(read_json_file(cert_path));
      const bool ok = reverify_certificate(cert, enum_budget);
      Json j;
      j["reproduced"] = ok;
      j["seed"] = cert.seed();
      j["subspaces_checked"] = cert.subspaces_checked.str();
      emit(dump(j));
      return ok ? 0 : 1;
    }
  } catch (const EnumerationTooLarge& e) {
    error_line(out, e.what());
    return 2;
  } catch (const std::exception& e) {
    return error_line(out, e.what());
  }
  return error_line(out, "no subcommand");
}

} // namespace commsub
