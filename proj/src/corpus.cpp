#include "mixmult/corpus.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "mixmult/errors.hpp"

namespace mixmult {

CorpusGenerator::CorpusGenerator(std::uint64_t seed) : state_(seed) {}

// splitmix64: fully specified, so the stream is identical on every platform.
std::uint64_t CorpusGenerator::draw(std::uint64_t bound) {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return bound == 0 ? z : z % bound;
}

namespace {

const std::vector<std::string> kNames{"x", "y", "z"};

std::string random_monomial(CorpusGenerator& g, const VariableContext& ctx, unsigned min_deg, unsigned max_deg) {
  ExponentVector m(ctx.size());
  const unsigned deg = min_deg + static_cast<unsigned>(g.draw(max_deg - min_deg + 1));
  for (unsigned t = 0; t < deg; ++t) ++m[g.draw(ctx.size())];
  return format_monomial(ctx, m);
}

std::vector<std::string> random_ideal(CorpusGenerator& g, const VariableContext& ctx, unsigned max_gens,
                                      unsigned min_deg, unsigned max_deg) {
  std::vector<std::string> gens;
  const auto count = 1 + g.draw(max_gens);
  for (std::uint64_t t = 0; t < count; ++t) gens.push_back(random_monomial(g, ctx, min_deg, max_deg));
  return format_ideal(ctx, parse_ideal(ctx, gens));
}

}  // namespace

InstanceDocument CorpusGenerator::next(std::size_t min_ideals, std::size_t max_ideals) {
  if (max_ideals < min_ideals) throw InputError("max_ideals is below min_ideals");
  for (;;) {
    InstanceDocument doc;
    const std::size_t s = 2 + draw(2);
    doc.variables.assign(kNames.begin(), kNames.begin() + static_cast<long>(s));
    const VariableContext ctx(doc.variables);

    std::vector<std::string> j;
    for (std::size_t v = 0; v < s; ++v) {
      ExponentVector m(s);
      m[v] = 1 + static_cast<Exponent>(draw(2));
      j.push_back(format_monomial(ctx, m));
    }
    if (draw(2) == 0) j.push_back(random_monomial(*this, ctx, 2, 2));
    doc.j = format_ideal(ctx, parse_ideal(ctx, j));

    const std::size_t d = min_ideals + draw(max_ideals - min_ideals + 1);
    for (std::size_t k = 0; k < d; ++k) doc.ideals.push_back(random_ideal(*this, ctx, 2, 1, 3));
    if (draw(4) == 0) doc.upper = {random_monomial(*this, ctx, 1, 1)};
    if (draw(2) == 0) doc.lower = random_ideal(*this, ctx, 2, 2, 4);

    std::vector<unsigned> u;
    for (std::size_t k = 0; k < d; ++k) u.push_back(1 + static_cast<unsigned>(draw(3)));
    doc.scaling = u;
    doc.v = 2;

    const auto system = build_system(doc);
    if (system.is_degenerate()) continue;
    doc.lower_prime = lower_prime_for(doc);
    return doc;
  }
}

std::vector<std::string> CorpusGenerator::lower_prime_for(const InstanceDocument& doc) {
  const VariableContext ctx(doc.variables);
  std::vector<std::string> gens = doc.lower;
  if (!gens.empty() && draw(2) == 0) {
    // Dividing a generator of L by one of its variables keeps L' close to L.
    ExponentVector g = parse_monomial(ctx, gens[draw(gens.size())]);
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v] > 0) support.push_back(v);
    --g[support[draw(support.size())]];
    gens.push_back(format_monomial(ctx, g));
  } else {
    gens.push_back(random_monomial(*this, ctx, 1, 2));
  }
  return format_ideal(ctx, parse_ideal(ctx, gens));
}

std::size_t CorpusSummary::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.verdict == v;
  return n;
}

std::size_t CorpusSummary::count(const std::string& theorem, Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.theorem == theorem && r.verdict == v;
  return n;
}

namespace {

std::string flatten(const LabeledValues& values) {
  std::string out;
  for (const auto& [label, v] : values) {
    if (!out.empty()) out += ';';
    out += label + "=" + v.str();
  }
  return out;
}

CorpusRow row_of(const std::string& id, const VerificationReport& r) {
  return {id, r.theorem_id, r.verdict, flatten(r.lhs), flatten(r.rhs)};
}

}  // namespace

std::vector<CorpusRow> verify_instance(const std::string& id, const InstanceDocument& doc) {
  std::vector<CorpusRow> rows;
  const MultiIdealSystem system = build_system(doc);
  const VerifyOptions opts{doc.fit, doc.window};
  auto attempt = [&](const std::string& theorem, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows.push_back({id, theorem, Verdict::inconclusive, "error", e.what()});
    }
  };

  attempt("degree", [&] { rows.push_back(row_of(id, verify_degree_law(system, opts))); });
  attempt("saturation", [&] { rows.push_back(row_of(id, verify_saturation_invariance(system, opts))); });
  attempt("additivity", [&] { rows.push_back(row_of(id, verify_additivity(system, opts))); });
  attempt("scaling", [&] {
    const auto u = doc.scaling.value_or(std::vector<unsigned>(system.d(), 2));
    rows.push_back(row_of(id, verify_scaling(system, u, opts)));
  });
  if (doc.lower_prime) {
    attempt("exactseq", [&] {
      const auto& ctx = system.context();
      rows.push_back(row_of(
          id, verify_exact_sequence(system, parse_ideal(ctx, doc.lower), parse_ideal(ctx, *doc.lower_prime), opts)));
    });
  }
  attempt("recursion", [&] {
    std::optional<ElementCandidate> cand;
    if (doc.candidates && !doc.candidates->empty())
      cand = ElementCandidate{parse_monomial(system.context(), doc.candidates->front()), doc.candidate_index.value_or(1)};
    else
      cand = first_weak_fc(system, 1, opts.window);
    if (cand) rows.push_back(row_of(id, verify_recursion(system, *cand, doc.v.value_or(2), opts)));
  });
  if (system.d() == 1) {
    attempt("chain", [&] {
      if (auto chain = find_chain(system, opts)) rows.push_back(row_of(id, verify_chain(system, *chain, opts)));
    });
  }
  return rows;
}

CorpusSummary run_corpus(std::uint64_t seed, std::size_t size, unsigned threads,
                         std::vector<InstanceDocument>* instances) {
  CorpusGenerator gen(seed);
  std::vector<InstanceDocument> docs;
  for (std::size_t k = 0; k < size; ++k) docs.push_back(gen.next());

  std::vector<std::vector<CorpusRow>> rows(size);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < size;) {
      char id[32];
      std::snprintf(id, sizeof id, "inst-%04zu", k + 1);
      rows[k] = verify_instance(id, docs[k]);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(size, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CorpusSummary summary;
  summary.seed = seed;
  for (auto& r : rows) summary.rows.insert(summary.rows.end(), r.begin(), r.end());
  if (instances) *instances = std::move(docs);
  return summary;
}

std::string summary_tsv(const CorpusSummary& summary) {
  std::ostringstream out;
  out << "# mixmult " << MIXMULT_VERSION << " seed=" << summary.seed << '\n';
  out << "instance_id\ttheorem\tverdict\tlhs\trhs\n";
  for (const auto& r : summary.rows)
    out << r.instance_id << '\t' << r.theorem << '\t' << to_string(r.verdict) << '\t' << r.lhs << '\t' << r.rhs
        << '\n';
  return out.str();
}

unsigned thread_budget() {
  if (const char* env = std::getenv("MIXMULT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace mixmult
