#include "iipm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "iipm/explorer.hpp"
#include "iipm/io.hpp"

namespace iipm {

namespace {

/// Anything wrong with the inputs themselves (exit 2), as opposed to a
/// well-formed input that fails a check (exit 1).
struct InputError : Error {
  using Error::Error;
};

struct RingFlags {
  std::string kind = "gf2k";
  unsigned k = 1;
  std::string modulus_hex = "2";
  std::string star = "identity";

  void attach(CLI::App* cmd) {
    cmd->add_option("--ring", kind, "ring kind: gf2k or quotient")
        ->check(CLI::IsMember({"gf2k", "quotient"}));
    cmd->add_option("--k", k, "extension degree k");
    cmd->add_option("--modulus", modulus_hex,
                    "modulus polynomial, hex mask (bit i = coeff of x^i)");
    cmd->add_option("--star", star, "involution: identity or frobenius:<m>");
  }

  Ring build() const {
    try {
      RingSpec spec;
      spec.kind = kind == "gf2k" ? RingKind::gf2k : RingKind::quotient;
      spec.degree = k;
      size_t used = 0;
      spec.modulus = std::stoull(modulus_hex, &used, 16);
      if (used != modulus_hex.size()) throw InputError("bad --modulus hex value");
      if (star == "identity") {
        spec.star = StarKind::identity;
      } else if (star.rfind("frobenius:", 0) == 0) {
        spec.star = StarKind::frobenius;
        spec.frobenius_power = unsigned(std::stoul(star.substr(10)));
      } else {
        throw InputError("star must be identity or frobenius:<m>");
      }
      return make_ring(spec);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(std::string("bad ring flags: ") + e.what());
    }
  }
};

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_document(in);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write '" + out_path + "'");
  f << text;
}

const Operator& pick_operator(const Document& doc, const std::string& name) {
  if (doc.operators.empty()) throw InputError("document has no operator blocks");
  if (name.empty()) return doc.operators.front().second;
  const Operator* op = doc.find(name);
  if (!op) throw InputError("no operator named '" + name + "'");
  return *op;
}

void print_report(const DilationReport& report, const std::string& op_name, std::ostream& out) {
  out << "verify kind=" << to_string(report.kind);
  if (report.kind == DilationKind::egervary) out << " n=" << report.egervary_n;
  out << " operator=" << op_name << '\n';
  const bool main_identity =
      report.kind == DilationKind::isometric ? report.isometry_ok : report.unitary_ok;
  out << (report.kind == DilationKind::isometric ? "isometry " : "unitary ")
      << (main_identity ? "ok" : "FAIL") << '\n';

  const int binding = report.kind == DilationKind::halmos     ? 1
                      : report.kind == DilationKind::egervary ? report.egervary_n
                                                              : int(report.power_checks.size());
  auto print_checks = [&](const char* label, const std::vector<PowerCheck>& checks) {
    for (const auto& pc : checks) {
      out << label << " k=" << pc.power << ' ' << (pc.holds ? "ok" : "FAIL");
      if (!pc.holds && pc.power > binding) out << " (informational: beyond guaranteed range)";
      out << '\n';
    }
  };
  print_checks("power", report.power_checks);
  print_checks("adjoint-power", report.adjoint_power_checks);
  if (report.witness) out << "witness: " << *report.witness << '\n';

  std::ostringstream powers, adjoint_powers;
  for (const auto& pc : report.power_checks)
    powers << (powers.tellp() > 0 ? "," : "") << pc.power << ':' << int(pc.holds);
  for (const auto& pc : report.adjoint_power_checks)
    adjoint_powers << (adjoint_powers.tellp() > 0 ? "," : "") << pc.power << ':' << int(pc.holds);
  out << "RESULT kind=" << to_string(report.kind) << " unitary=" << int(report.unitary_ok)
      << " isometry=" << int(report.isometry_ok) << " powers=" << powers.str()
      << " adjoint_powers=" << adjoint_powers.str() << " pass=" << int(report.ok()) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dilations of self-adjoint operators on indefinite inner product modules"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a seeded random self-adjoint operator");
  RingFlags gen_ring;
  gen_ring.attach(gen);
  std::string gen_input, gen_out, gen_name = "T";
  unsigned gen_dim = 1;
  uint64_t gen_seed = 0;
  bool gen_nonzero = false;
  gen->add_option("input", gen_input, "optional document supplying ring and space");
  gen->add_option("--dim", gen_dim, "space dimension (identity gram)");
  gen->add_option("--seed", gen_seed, "RNG seed (INDEF_SEED overrides)");
  gen->add_option("--name", gen_name, "operator name");
  gen->add_flag("--nonzero", gen_nonzero, "redraw until the sample is nonzero");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  auto* dilate = app.add_subcommand("dilate", "construct a dilation");
  std::string dil_kind, dil_input, dil_out, dil_opname;
  int dil_n = 1, dil_power = 8;
  dilate->add_option("--kind", dil_kind, "halmos|egervary|sznagy|isometric")->required();
  dilate->add_option("--n", dil_n, "Egervary parameter N");
  dilate->add_option("--power", dil_power, "compress-power bound for the lazy kinds");
  dilate->add_option("--operator", dil_opname, "operator name (default: first)");
  dilate->add_option("input", dil_input, "input document")->required();
  dilate->add_option("-o,--out", dil_out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "construct and check a dilation");
  std::string ver_kind, ver_input, ver_opname;
  int ver_n = 1, ver_power = 0, ver_window = 8;
  verify->add_option("--kind", ver_kind, "halmos|egervary|sznagy|isometric")->required();
  verify->add_option("--n", ver_n, "Egervary parameter N");
  verify->add_option("--power", ver_power, "power-check bound");
  verify->add_option("--window", ver_window, "certification window for lazy kinds");
  verify->add_option("--operator", ver_opname, "operator name (default: first)");
  verify->add_option("input", ver_input, "input document")->required();

  auto* explore = app.add_subcommand("explore", "exhaustive census of all four dilations");
  RingFlags exp_ring;
  exp_ring.attach(explore);
  std::string exp_input, exp_out;
  int exp_max_dim = 2, exp_max_n = 3, exp_power = 6;
  explore->add_option("input", exp_input, "optional document fixing the space");
  explore->add_option("--max-dim", exp_max_dim, "largest dimension (identity gram spaces)");
  explore->add_option("--max-n", exp_max_n, "largest Egervary N");
  explore->add_option("--power", exp_power, "power bound for the lazy kinds");
  explore->add_option("-o,--out", exp_out, "CSV output file (default stdout)");

  auto* ando = app.add_subcommand("ando", "search for a commuting unitary dilation pair");
  std::string ando_input, ando_t1, ando_t2;
  uint64_t ando_budget = uint64_t(1) << 22;
  ando->add_option("--pair", ando_input, "document with the two operators")->required();
  ando->add_option("--t1", ando_t1, "first operator name (default: first block)");
  ando->add_option("--t2", ando_t2, "second operator name (default: second block)");
  ando->add_option("--budget", ando_budget, "max candidate dilations to enumerate");

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      Space space;
      Ring ring;
      if (!gen_input.empty()) {
        const Document doc = load_document(gen_input);
        if (!doc.space) throw InputError("input document has no space");
        ring = doc.ring;
        space = *doc.space;
      } else {
        ring = gen_ring.build();
        space = standard_space(ring, Index(gen_dim));
      }
      uint64_t seed = gen_seed;
      if (const char* env = std::getenv("INDEF_SEED")) seed = std::strtoull(env, nullptr, 10);
      const Operator t = random_self_adjoint(space, seed, gen_nonzero);
      Document doc;
      doc.ring = ring;
      doc.space = space;
      doc.operators.emplace_back(gen_name, t);
      emit(serialize_document(doc), gen_out, out);
      return 0;
    }

    if (dilate->parsed() || verify->parsed()) {
      const bool verifying = verify->parsed();
      const std::string kind_name = verifying ? ver_kind : dil_kind;
      const auto kind = dilation_kind_from_string(kind_name);
      if (!kind) throw InputError("unknown dilation kind '" + kind_name + "'");

      const Document doc = load_document(verifying ? ver_input : dil_input);
      const std::string requested = verifying ? ver_opname : dil_opname;
      const Operator& t = pick_operator(doc, requested);
      const std::string op_name = requested.empty() ? doc.operators.front().first : requested;

      if (verifying) {
        VerifyOptions opt;
        opt.egervary_n = ver_n;
        opt.max_power = ver_power;
        opt.window = ver_window;
        const DilationReport report = verify_dilation(t, *kind, opt);
        print_report(report, op_name, out);
        return report.ok() ? 0 : 1;
      }

      Document result;
      result.ring = doc.ring;
      if (*kind == DilationKind::halmos || *kind == DilationKind::egervary) {
        const Operator u =
            *kind == DilationKind::halmos ? halmos_dilate(t) : egervary_dilate(t, dil_n);
        result.space = u.space;
        result.operators.emplace_back("U", u);
      } else {
        const LazyBandedOp op =
            *kind == DilationKind::sznagy ? sznagy_dilate(t) : isometric_sznagy_dilate(t);
        result.space = t.space;
        for (int p = 1; p <= dil_power; ++p)
          result.operators.emplace_back("pow" + std::to_string(p), lazy_compress_power(op, p));
      }
      emit(serialize_document(result), dil_out, out);
      return 0;
    }

    if (explore->parsed()) {
      std::vector<Space> spaces;
      if (!exp_input.empty()) {
        const Document doc = load_document(exp_input);
        if (!doc.space) throw InputError("input document has no space");
        spaces.push_back(*doc.space);
      } else {
        const Ring ring = exp_ring.build();
        for (int d = 1; d <= exp_max_dim; ++d) spaces.push_back(standard_space(ring, d));
      }
      std::vector<CensusRow> rows;
      for (const Space& s : spaces) {
        auto part = exhaustive_verify(s, exp_max_n, exp_power);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      const bool all_ok = std::all_of(rows.begin(), rows.end(),
                                      [](const CensusRow& r) { return r.all_theorems_ok(); });
      emit(census_csv(std::move(rows)), exp_out, out);
      return all_ok ? 0 : 1;
    }

    if (ando->parsed()) {
      const Document doc = load_document(ando_input);
      if (doc.operators.size() < 2 && (ando_t1.empty() || ando_t2.empty()))
        throw InputError("ando needs two operator blocks (or --t1/--t2 names)");
      const Operator& t1 = ando_t1.empty() ? doc.operators[0].second : pick_operator(doc, ando_t1);
      const Operator& t2 = ando_t2.empty() ? doc.operators[1].second : pick_operator(doc, ando_t2);

      const AndoResult result = ando_search(t1, t2, ando_budget);
      out << "ando search_space=" << result.search_space << " found=" << int(result.found)
          << '\n';
      if (result.found) {
        const bool verified = ando_verify(result);
        out << "witness verified=" << int(verified) << '\n';
        Document wdoc;
        wdoc.ring = t1.space.ring();
        wdoc.space = result.witness->first.space;
        wdoc.operators.emplace_back("U1", result.witness->first);
        wdoc.operators.emplace_back("U2", result.witness->second);
        out << serialize_document(wdoc);
        return verified ? 0 : 1;
      }
      out << "no commuting unitary pair at Halmos size (search restricted to dimension 2d)\n";
      return 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace iipm
