#include "gradex/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "gradex/concordance.hpp"
#include "gradex/homological.hpp"
#include "gradex/io.hpp"
#include "gradex/oracles.hpp"
#include "gradex/samples.hpp"

namespace gradex::cli {

namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 0x5eed;

const char* kUsage =
    "usage: gradex <subcommand> [inputs...] [options]\n"
    "subcommands: classify coarsen restrict corestrict adjoint-check module resolve pd id fd\n"
    "             schanuel coarsen-compare spec oracle-diff\n"
    "options: --field Q|Fp:<p>  --seed <n>  --cutoff <n>  --length <n>  --pad <degree>\n"
    "         --psi <hom>  --phi <hom>  --oracle  --json|--text\n"
    "inputs are JSON files or inline JSON documents\n";

struct Options {
  std::vector<std::string> inputs;
  std::string field, psi, phi, pad;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cutoff = 8, length = 1;
  bool oracle = false, text = false;
};

struct Report {
  json data;
  std::string text;  // preferred rendering for --text, when set
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  if (o.field == "Q") return Field::rationals();
  if (o.field.rfind("Fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      unsigned long p = std::stoul(o.field.substr(3), &used);
      Integer z(p);
      if (used == o.field.size() - 3 && p >= 2 && mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) return Field::prime(p);
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("field", "expected Q or Fp:<prime>, got " + o.field);
}

json input(const Options& o, std::size_t i = 0) {
  if (i >= o.inputs.size()) throw UsageError("missing input document");
  return io::load(o.inputs[i]);
}

GroupHom hom_option(const std::string& arg, const char* name) {
  if (arg.empty()) throw UsageError(std::string("--") + name + " is required");
  return io::hom_from_json(io::load(arg));
}

GroupHom psi_or_trivial(const Options& o, const FGAbelianGroup& G) {
  return o.psi.empty() ? samples::to_trivial(G) : hom_option(o.psi, "psi");
}

AlgebraPtr ring_input(const Options& o, const json& doc) {
  if (io::kind_of(doc) != io::DocKind::ring) throw ValidationError("input", "expected a ring document");
  return io::algebra_from_json(doc, field_override(o));
}

GradedModule module_input(const Options& o, const json& doc) {
  if (io::kind_of(doc) != io::DocKind::module) throw ValidationError("input", "expected a module document");
  return io::module_from_json(doc, field_override(o));
}

void require_finite(const Field& f) {
  if (!f.is_finite()) throw ValidationError("field", "oracles run over finite fields only");
}

json betti_rows(const std::vector<BettiRow>& rows) {
  json o = json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) o[std::to_string(i)] = io::to_json(rows[i]);
  return o;
}

json diff_json(const OracleDiff& d) {
  return json{{"checks", d.checks}, {"agree", d.agree()}};
}

json class_json(const RingClass& c) {
  return json{{"simple", io::to_json(c.simple)}, {"entire", io::to_json(c.entire)}, {"reduced", io::to_json(c.reduced)}};
}

Report cmd_classify(const Options& o) {
  json doc = input(o);
  if (io::kind_of(doc) == io::DocKind::monoid_algebra)
    return {class_json(io::monoid_algebra_from_json(doc, field_override(o)).classify()), ""};
  AlgebraPtr R = ring_input(o, doc);
  json out = class_json(classify_ring(*R));
  if (o.oracle) {
    require_finite(R->field());
    oracle::ClassifyTable t = oracle::exhaustive_classify(*R);
    json theirs{{"simple", t.simple}, {"entire", t.entire}, {"reduced", t.reduced}};
    bool agree = true;
    for (const char* k : {"simple", "entire", "reduced"})
      if (out[k] != "undecided" && out[k] != theirs[k]) agree = false;
    theirs["agree"] = agree;
    out["oracle"] = theirs;
  }
  return {out, ""};
}

Report cmd_coarsen(const Options& o) {
  json doc = input(o);
  if (io::kind_of(doc) == io::DocKind::module) {
    GradedModule M = module_input(o, doc);
    return {io::to_json(coarsen(M, psi_or_trivial(o, M.group()))), ""};
  }
  AlgebraPtr R = ring_input(o, doc);
  return {io::to_json(*coarsen(R, psi_or_trivial(o, R->group()))), ""};
}

Report cmd_restrict(const Options& o) {
  AlgebraPtr R = ring_input(o, input(o));
  return {io::to_json(*restrict_along(R, hom_option(o.phi, "phi"))), ""};
}

Report cmd_corestrict(const Options& o) {
  json doc = input(o);
  GroupHom phi = hom_option(o.phi, "phi");
  if (io::kind_of(doc) == io::DocKind::monoid_algebra) {
    MonoidCorestriction c = corestrict_monoid(io::monoid_algebra_from_json(doc, field_override(o)), phi);
    if (c.zero) return {json{{"corestriction", "zero ring"}}, ""};
    const char* verdict = c.equals_restriction == Truth::yes  ? "restriction"
                          : c.equals_restriction == Truth::no ? "proper quotient of restriction"
                                                              : "undecided";
    return {json{{"corestriction", verdict}, {"method", c.method}}, ""};
  }
  AlgebraPtr R = ring_input(o, doc);
  Corestriction c = corestrict(R, phi);
  if (c.ring->dim() == 0) return {json{{"corestriction", "zero ring"}}, ""};
  return {json{{"corestriction", io::to_json(*c.ring)},
               {"a_phi", io::to_json(c.a_phi.space)},
               {"equals_restriction", *c.ring == *restrict_along(R, phi)}},
          ""};
}

json witness_json(const TensorWitness& w) {
  return json{{"bounds", w.bounds}, {"full_counts", w.full_counts}, {"restricted_counts", w.restricted_counts},
              {"witness", w.witness}, {"mismatch", w.mismatch}, {"note", w.note}};
}

Report cmd_adjoint_check(const Options& o) {
  GroupHom phi = hom_option(o.phi, "phi");
  std::vector<AlgebraPtr> f_samples, g_samples;
  json witnesses = json::array();
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    json doc = input(o, i);
    if (io::kind_of(doc) == io::DocKind::monoid_algebra) {
      MonoidAlgebra R = io::monoid_algebra_from_json(doc, field_override(o));
      MonoidCorestriction c = corestrict_monoid(R, phi);
      json w = witness_json(tensor_witness(R, phi));
      w["corestriction_zero"] = c.zero;
      witnesses.push_back(w);
      continue;
    }
    AlgebraPtr R = ring_input(o, doc);
    if (R->group() == phi.source()) f_samples.push_back(R);
    if (R->group() == phi.target()) g_samples.push_back(R);
    if (R->group() != phi.source() && R->group() != phi.target())
      throw ValidationError("input", "sample " + std::to_string(i) + " is graded by neither end of phi");
  }
  if (o.inputs.empty()) {
    const Field f = field_override(o).value_or(Field::rationals());
    f_samples.push_back(samples::ground(f, phi.source()));
    g_samples.push_back(samples::ground(f, phi.target()));
  }
  AdjunctionReport r = adjunction_check(phi, f_samples, g_samples);
  json out{{"triangles", r.triangles_ok}, {"naturality", r.naturality_ok}, {"bijections_checked", r.bijections_checked},
           {"bijections", r.bijections_ok}, {"samples", r.samples}, {"failures", r.failures}, {"ok", r.ok()}};
  if (!witnesses.empty()) out["tensor_witness"] = witnesses;
  return {out, ""};
}

json superfluous_json(const SuperfluousCounterexample& s) {
  return json{{"graded", s.graded_superfluous}, {"certificate", s.graded_certificate},
              {"coarse", s.coarse_superfluous}, {"witness", s.witness ? json(s.witness->to_string()) : json(nullptr)},
              {"note", s.note}};
}

Report principal_report(const Options& o, const json& doc) {
  PrincipalPresentation P = io::principal_from_json(doc, field_override(o));
  PrincipalSuiteReport r = principal_suite(P, psi_or_trivial(o, P.group));
  json summands = json::array();
  for (const auto& s : r.decomposition.summands)
    summands.push_back(json{{"shift", io::to_json(s.shift)}, {"exponent", s.exponent}, {"pivot_row", s.pivot_row}});
  json out{{"summands", summands},
           {"rank", r.decomposition.rank},
           {"generators", r.decomposition.generators},
           {"free", r.decomposition.free},
           {"coarse", json{{"free", r.coarse.free}, {"rank", r.coarse.rank},
                           {"fine_basis_homogeneous", r.coarse.fine_basis_homogeneous}}},
           {"freeness_agrees", r.freeness_agrees},
           {"rank_bound", r.rank_bound}};
  if (r.superfluous) out["superfluous"] = superfluous_json(*r.superfluous);
  return {out, ""};
}

Report cmd_module(const Options& o) {
  json doc = input(o);
  if (io::kind_of(doc) == io::DocKind::principal) return principal_report(o, doc);
  GradedModule M = module_input(o, doc);
  FreenessResult fr = freeness(M, o.seed);
  json out{{"dim", M.dim()},
           {"hilbert", io::to_json(hilbert(M))},
           {"free", io::to_json(fr.free)},
           {"rank", fr.rank ? json(*fr.rank) : json(nullptr)},
           {"freeness_method", fr.method},
           {"monogeneous", io::to_json(is_monogeneous(M, o.seed))},
           {"radical_dim", graded_radical(M).dim()},
           {"socle_dim", graded_socle(M).dim()},
           {"projective", is_projective(M)},
           {"injective", is_injective(M)}};
  if (o.oracle) {
    require_finite(M.field());
    out["oracle"] = diff_json(oracle_diff(M));
  }
  return {out, ""};
}

Report cmd_resolve(const Options& o) {
  FreeResolution r = resolution(module_input(o, input(o)), o.cutoff);
  return {io::betti_json(r), betti_table_text(r)};
}

Report cmd_dimension(const Options& o, DimensionKind kind) {
  GradedModule M = module_input(o, input(o));
  DimensionReport d = dimension(M, kind, o.cutoff);
  json out = io::to_json(d);
  if (o.oracle && kind == DimensionKind::injective) {
    DimensionReport direct = injective_dimension_direct(M, o.cutoff);
    out["oracle"] = json{{"value", io::to_json(direct)["value"]}, {"agree", direct == d}};
  }
  return {out, ""};
}

Report cmd_schanuel(const Options& o) {
  if (o.length == 0) throw UsageError("--length must be at least 1");
  GradedModule M = module_input(o, input(o));
  ExactSequence a = truncate(resolution(M, o.length, true), o.length);
  ExactSequence b = truncate(resolution(M, o.length, false), o.length);
  if (!o.pad.empty()) b = pad(b, io::element_from_json(M.group(), json::parse(o.pad), "--pad"));
  SchanuelResult s = schanuel_glue(a, b);
  return {json{{"length", o.length},
               {"verified", s.verified},
               {"dimension", s.iso.matrix.rows()},
               {"source_hilbert", io::to_json(s.source_hilbert)},
               {"target_hilbert", io::to_json(s.target_hilbert)}},
          ""};
}

Report cmd_coarsen_compare(const Options& o) {
  GradedModule M = module_input(o, input(o));
  DimensionComparison c = coarsen_dimension_compare(M, psi_or_trivial(o, M.group()), o.cutoff);
  auto pair = [](const DimensionReport& f, const DimensionReport& g, bool eq) {
    return json{{"fine", io::to_json(f)["value"]}, {"coarse", io::to_json(g)["value"]}, {"equal", eq}};
  };
  json out{{"pd", pair(c.pd_fine, c.pd_coarse, c.pd_equal)},
           {"fd", pair(c.fd_fine, c.fd_coarse, c.fd_equal)},
           {"id", c.id_fine ? pair(*c.id_fine, *c.id_coarse, *c.id_equal) : json(nullptr)},
           {"betti_fine", betti_rows(c.betti_fine_pushed)},
           {"betti_coarse", betti_rows(c.betti_coarse)},
           {"betti_equal", c.betti_equal},
           {"cutoff", o.cutoff},
           {"ok", c.ok()}};
  if (!c.note.empty()) out["note"] = c.note;
  return {out, ""};
}

Report cmd_spec(const Options& o) {
  AlgebraPtr R = ring_input(o, input(o));
  std::vector<GradedIdeal> primes = spec_enumerate(R);
  Subspace meet = Subspace::full(R->field(), R->dim());
  json listed = json::array();
  for (const auto& P : primes) {
    meet = meet.intersect(P.space);
    listed.push_back(io::to_json(P.space));
  }
  GradedIdeal nil = nilradical(*R);
  json out{{"primes", listed},
           {"nilradical", io::to_json(nil.space)},
           {"nilradical_is_intersection", meet == nil.space},
           {"radical_idempotent", radical(R, radical(R, GradedIdeal{Subspace::zero(R->field(), R->dim())})) ==
                                      radical(R, GradedIdeal{Subspace::zero(R->field(), R->dim())})}};
  if (o.oracle) {
    require_finite(R->field());
    std::vector<oracle::Basis> mine, theirs = oracle::graded_primes(*R);
    for (const auto& P : primes) mine.push_back(oracle::to_basis(P.space));
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    out["oracle"] = json{{"primes", mine == theirs}, {"nilradical", oracle::to_basis(nil.space) == oracle::nilradical(*R)}};
  }
  return {out, ""};
}

Report cmd_oracle_diff(const Options& o) {
  json doc = input(o);
  if (io::kind_of(doc) == io::DocKind::module) {
    GradedModule M = module_input(o, doc);
    require_finite(M.field());
    return {diff_json(oracle_diff(M)), ""};
  }
  AlgebraPtr R = ring_input(o, doc);
  require_finite(R->field());
  return {diff_json(oracle_diff(R)), ""};
}

std::string render_text(const json& data) {
  std::ostringstream s;
  if (!data.is_object()) return data.dump() + "\n";
  for (const auto& [k, v] : data.items()) s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return s.str();
}

using Handler = std::function<Report(const Options&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"classify", cmd_classify},
      {"coarsen", cmd_coarsen},
      {"restrict", cmd_restrict},
      {"corestrict", cmd_corestrict},
      {"adjoint-check", cmd_adjoint_check},
      {"module", cmd_module},
      {"resolve", cmd_resolve},
      {"pd", [](const Options& o) { return cmd_dimension(o, DimensionKind::projective); }},
      {"id", [](const Options& o) { return cmd_dimension(o, DimensionKind::injective); }},
      {"fd", [](const Options& o) { return cmd_dimension(o, DimensionKind::flat); }},
      {"schanuel", cmd_schanuel},
      {"coarsen-compare", cmd_coarsen_compare},
      {"spec", cmd_spec},
      {"oracle-diff", cmd_oracle_diff},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 1;
  }
  const std::string& cmd = args[0];
  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    out << kUsage;
    return 0;
  }
  auto it = handlers().find(cmd);
  if (it == handlers().end()) {
    err << "unknown subcommand: " << cmd << "\n" << kUsage;
    return 1;
  }

  Options o;
  CLI::App app{"gradex " + cmd, "gradex " + cmd};
  app.add_option("inputs", o.inputs, "JSON files or inline documents");
  app.add_option("--field", o.field, "Q or Fp:<p>");
  auto* seed = app.add_option("--seed", o.seed, "random seed (default: GRADEX_SEED, then 0x5eed)");
  app.add_option("--cutoff", o.cutoff, "resolution cutoff")->check(CLI::Range(0, 32));
  app.add_option("--length", o.length, "truncation length for schanuel");
  app.add_option("--pad", o.pad, "schanuel: extra generator degree for the second sequence, as a JSON array");
  app.add_option("--psi", o.psi, "coarsening epimorphism");
  app.add_option("--phi", o.phi, "monomorphism for restriction");
  app.add_flag("--oracle", o.oracle, "re-run with the brute-force oracles and diff");
  auto* as_json = app.add_flag("--json", "JSON output (default)");
  auto* as_text = app.add_flag("--text", o.text, "text output");
  as_json->excludes(as_text);

  std::vector<std::string> argv_store(args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (const char* env = std::getenv("GRADEX_SEED"); env && seed->count() == 0) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "usage error: GRADEX_SEED is not a number\n";
      return 2;
    }
  }

  try {
    Report r = it->second(o);
    if (o.text) out << (r.text.empty() ? render_text(r.data) : r.text);
    else out << r.data.dump() << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "invalid input: malformed-json: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gradex::cli
