#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixmult/corpus.hpp"
#include "mixmult/dispatch.hpp"
#include "mixmult/errors.hpp"
#include "mixmult/primes.hpp"
#include "mixmult/report.hpp"

namespace py = pybind11;
using namespace mixmult;

namespace {

// Documents cross the boundary as JSON text; the Python layer wraps them in dicts.
InstanceDocument doc_of(const std::string& text) { return parse_instance_text(text); }

std::string compute(const std::string& text) {
  const auto doc = doc_of(text);
  return to_json(fit_bhattacharya(build_system(doc), doc.fit)).dump();
}

std::string verify(const std::string& theorem, const std::string& text, std::vector<unsigned> u,
                   std::vector<std::string> candidates, std::optional<unsigned> v,
                   std::vector<std::string> lower_prime) {
  VerifyRequest request{theorem, std::move(u), std::move(candidates), v, std::move(lower_prime)};
  return to_json(verify_document(doc_of(text), request)).dump();
}

std::string primes(const std::string& text) {
  const auto system = build_system(doc_of(text));
  const auto& ctx = system.context();
  const auto ann = annihilator(system.module());
  nlohmann::json out;
  out["annihilator"] = format_ideal(ctx, ann);
  out["dimension"] = dimension(system.module());
  out["saturated_dimension"] = dimension(system.saturated_module());
  out["minimal_primes"] = ann.is_unit() ? nlohmann::json::array() : to_json(ctx, minimal_primes(ann));
  out["pi"] = system.is_degenerate() ? nlohmann::json(nullptr) : to_json(ctx, build_pi(system));
  return out.dump();
}

std::string lengths(const std::string& text, unsigned offset, unsigned side) {
  return to_json(length_table(build_system(doc_of(text)), offset, side)).dump();
}

std::string corpus(std::uint64_t seed, std::size_t size, std::optional<unsigned> threads) {
  return summary_tsv(run_corpus(seed, size, threads.value_or(thread_budget())));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mixed multiplicities of monomial ideal systems";
  m.attr("__version__") = MIXMULT_VERSION;

  // InputError derives from std::invalid_argument and surfaces as ValueError.
  py::register_exception<NonStabilizedError>(m, "NonStabilizedError", PyExc_RuntimeError);

  m.def("compute", &compute, py::arg("instance"));
  m.def("verify", &verify, py::arg("theorem"), py::arg("instance"), py::arg("u") = std::vector<unsigned>{},
        py::arg("candidates") = std::vector<std::string>{}, py::arg("v") = std::nullopt,
        py::arg("lower_prime") = std::vector<std::string>{});
  m.def("primes", &primes, py::arg("instance"));
  m.def("length_table", &lengths, py::arg("instance"), py::arg("offset") = 1, py::arg("side") = 3);
  m.def("corpus", &corpus, py::arg("seed"), py::arg("size"), py::arg("threads") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
}
