#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mixmult/corpus.hpp"
#include "mixmult/dispatch.hpp"
#include "mixmult/errors.hpp"
#include "mixmult/instance.hpp"
#include "mixmult/primes.hpp"
#include "mixmult/report.hpp"
#include "mixmult/verify.hpp"

namespace {

using namespace mixmult;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct Common {
  std::string path;
  std::optional<unsigned> offset;
  std::optional<unsigned> cap;
  std::optional<unsigned> window;
  bool json_out = false;
  bool tsv_out = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_path = true) {
  if (with_path) cmd->add_option("instance", c.path, "instance JSON file")->required();
  cmd->add_option("--offset", c.offset, "initial grid offset of the polynomial fit");
  cmd->add_option("--cap", c.cap, "largest grid offset tried before giving up");
  cmd->add_option("--window", c.window, "side of the stability windows");
  auto* j = cmd->add_flag("--json", c.json_out, "JSON output (default)");
  auto* t = cmd->add_flag("--tsv", c.tsv_out, "tab-separated output");
  j->excludes(t);
}

InstanceDocument load(const Common& c) {
  InstanceDocument doc = load_instance(c.path);
  if (c.offset) doc.fit.initial_offset = *c.offset;
  if (c.cap) doc.fit.offset_cap = *c.cap;
  if (c.window) {
    if (*c.window == 0) throw InputError("--window must be positive");
    doc.window.side = *c.window;
  }
  return doc;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_compute(const Common& c) {
  const auto doc = load(c);
  const auto system = build_system(doc);
  const auto result = fit_bhattacharya(system, doc.fit);
  if (c.tsv_out) {
    std::cout << "type\tmixed_multiplicity\n";
    for (const auto& [k, v] : result.mixed) std::cout << grade_key(k) << '\t' << v << '\n';
    std::cout << "tilde_e\t" << result.tilde_e << '\n';
  } else {
    json out = to_json(result);
    out["version"] = MIXMULT_VERSION;
    if (system.d() == 0) out["samuel_multiplicity"] = integer_json(result.mixed.begin()->second);
    print_json(out);
  }
  return kOk;
}

int cmd_hilbert(const Common& c, unsigned side) {
  const auto doc = load(c);
  const auto system = build_system(doc);
  const auto table = length_table(system, doc.fit.initial_offset, side);
  if (c.tsv_out) {
    std::cout << "grade\tlength\n";
    for (const auto& [g, v] : table.entries) std::cout << grade_key(g) << '\t' << v << '\n';
  } else {
    print_json(to_json(table));
  }
  return kOk;
}

int cmd_primes(const Common& c) {
  const auto doc = load(c);
  const auto system = build_system(doc);
  const auto& ctx = system.context();
  const auto ann = annihilator(system.module());
  json out;
  out["annihilator"] = format_ideal(ctx, ann);
  out["dimension"] = dimension(system.module());
  out["saturated_dimension"] = dimension(system.saturated_module());
  out["minimal_primes"] = ann.is_unit() ? json::array() : to_json(ctx, minimal_primes(ann));
  if (!system.is_degenerate())
    out["pi"] = to_json(ctx, build_pi(system));
  else
    out["pi"] = nullptr;
  if (c.tsv_out) {
    std::cout << "prime\tlocal_length\n";
    if (!system.is_degenerate())
      for (const auto& p : build_pi(system)) {
        std::string names;
        for (const auto& n : p.prime.names(ctx)) names += (names.empty() ? "" : ",") + n;
        std::cout << '(' << names << ")\t" << p.local_length << '\n';
      }
  } else {
    print_json(out);
  }
  return kOk;
}

int cmd_verify(const Common& c, const VerifyRequest& request) {
  const auto report = verify_document(load(c), request);
  if (c.tsv_out) {
    std::cout << "label\tlhs\trhs\n";
    for (std::size_t k = 0; k < report.lhs.size(); ++k)
      std::cout << report.lhs[k].first << '\t' << report.lhs[k].second << '\t' << report.rhs[k].second << '\n';
    std::cout << "verdict\t" << to_string(report.verdict) << '\n';
  } else {
    json out = to_json(report);
    out["version"] = MIXMULT_VERSION;
    print_json(out);
  }
  switch (report.verdict) {
    case Verdict::verified: return kOk;
    case Verdict::violated: return kViolated;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_corpus(std::uint64_t seed, std::size_t size, const std::string& out_dir, bool json_out) {
  std::vector<InstanceDocument> docs;
  const auto summary = run_corpus(seed, size, thread_budget(), &docs);
  const std::string tsv = summary_tsv(summary);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < docs.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "inst-%04zu.json", k + 1);
      std::ofstream(std::filesystem::path(out_dir) / name) << serialize_instance(docs[k]).dump(2) << '\n';
    }
    std::ofstream(std::filesystem::path(out_dir) / "summary.tsv") << tsv;
  }
  if (json_out) {
    json rows = json::array();
    for (const auto& r : summary.rows)
      rows.push_back({{"instance_id", r.instance_id}, {"theorem", r.theorem}, {"verdict", to_string(r.verdict)},
                      {"lhs", r.lhs}, {"rhs", r.rhs}});
    print_json({{"version", MIXMULT_VERSION},
                {"seed", seed},
                {"size", size},
                {"verified", summary.count(Verdict::verified)},
                {"violated", summary.count(Verdict::violated)},
                {"inconclusive", summary.count(Verdict::inconclusive)},
                {"rows", rows}});
  } else {
    std::cout << tsv;
  }
  return summary.count(Verdict::violated) == 0 ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed multiplicities of monomial ideal systems"};
  app.set_version_flag("--version", std::string(MIXMULT_VERSION));
  app.require_subcommand(1);

  Common compute_c, verify_c, primes_c, hilbert_c;
  auto* compute = app.add_subcommand("compute", "fit the Hilbert polynomial and print mixed multiplicities");
  add_common(compute, compute_c);

  auto* verify = app.add_subcommand("verify", "check a multiplicity formula on an instance");
  VerifyRequest va;
  verify->add_option("theorem", va.theorem, "additivity | scaling | exactseq | recursion | chain")
      ->required()
      ->check(CLI::IsMember({"additivity", "scaling", "exactseq", "recursion", "chain"}));
  add_common(verify, verify_c);
  verify->add_option("--u", va.u, "scaling exponents, one per ideal")->delimiter(',');
  verify->add_option("--candidate", va.candidates, "candidate monomial, optionally prefixed by its index (2:x*y)");
  verify->add_option("--v", va.v, "power of the dropped ideal");
  verify->add_option("--lprime", va.lower_prime, "generators of L' for exactseq")->delimiter(',');

  auto* primes = app.add_subcommand("primes", "minimal primes, dimensions and the top-dimensional components");
  add_common(primes, primes_c);

  auto* hilbert = app.add_subcommand("hilbert", "dump the raw length table");
  add_common(hilbert, hilbert_c);
  unsigned side = 3;
  hilbert->add_option("--side", side, "side of the sampled box");

  auto* corpus = app.add_subcommand("corpus", "generate a seeded corpus and run every verifier");
  std::uint64_t seed = 1;
  std::size_t size = 20;
  std::string out_dir;
  bool corpus_json = false, corpus_tsv = false;
  corpus->add_option("--seed", seed, "generator seed");
  corpus->add_option("--size", size, "number of instances");
  corpus->add_option("--out", out_dir, "directory for instance files and summary.tsv");
  corpus->add_flag("--json", corpus_json, "JSON summary")->excludes(corpus->add_flag("--tsv", corpus_tsv, "TSV summary (default)"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*compute) return cmd_compute(compute_c);
    if (*verify) return cmd_verify(verify_c, va);
    if (*primes) return cmd_primes(primes_c);
    if (*hilbert) return cmd_hilbert(hilbert_c, side);
    if (*corpus) return cmd_corpus(seed, size, out_dir, corpus_json);
  } catch (const NonStabilizedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconclusive;
  } catch (const DegenerateSystemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
