// Python bindings. Exact values cross the boundary as strings ("p/q") or Python ints.

#include "tensorann/matrix.hpp"
#include "tensorann/order.hpp"
#include "tensorann/partitions.hpp"
#include "tensorann/sl2.hpp"
#include "tensorann/uea.hpp"
#include "tensorann/verify.hpp"
#include "tensorann/weights.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tensorann;

namespace {

LiePresentation algebra_named(const std::string& name) {
    if (name.size() < 3) throw std::invalid_argument("unknown algebra '" + name + "'");
    const std::size_t digits = name.find_first_of("0123456789");
    if (digits == std::string::npos) throw std::invalid_argument("unknown algebra '" + name + "'");
    auto family = parse_family(name.substr(0, digits));
    if (!family) throw std::invalid_argument("unknown algebra '" + name + "'");
    const std::size_t n = std::stoul(name.substr(digits));
    if (*family == Family::sl && n == 2) return sl2_algebra();
    return build_algebra(*family, n).presentation();
}

std::vector<std::string> pair_texts(const PairSet& s) {
    std::vector<std::string> out;
    for (auto& p : s) out.push_back(to_string(p));
    return out;
}

std::string ideal_text(const Sl2PrimitiveIdeal& ideal) { return to_string(ideal); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations with annihilators of tensor modules";

    m.def("leq", [](const std::string& a, const std::string& b) { return leq(parse_pair(a), parse_pair(b)); },
          "a <= b in the Gelfand-Tsetlin order; pairs are written 'lambda|mu'", py::arg("a"), py::arg("b"));
    m.def("ann_contained", [](const std::string& a, const std::string& b) { return ann_contained(parse_pair(a), parse_pair(b)); },
          "Ann V_b inside Ann V_a", py::arg("a"), py::arg("b"));
    m.def("gt_pair", [](const std::string& p) { return pair_texts(gt_pair(parse_pair(p))); }, py::arg("pair"));
    m.def("gt_iterated", [](const std::string& p, std::size_t i) { return pair_texts(gt_iterated(parse_pair(p), i)); },
          py::arg("pair"), py::arg("iterations"));
    m.def("downset", [](const std::string& p) { return pair_texts(downset(parse_pair(p))); }, py::arg("pair"));
    m.def("dual", [](const std::vector<Entry>& parts) { return dual(Partition(parts)).parts(); }, py::arg("partition"));
    m.def("std_tableaux_count", [](const std::vector<Entry>& parts) { return std_tableaux_count(Partition(parts)); },
          py::arg("partition"));

    m.def("branch", &branch, "Interlacing restriction of a gl(n+1) weight to gl(n)", py::arg("weight"));
    m.def("weyl_dim", [](const Sequence& w) { return to_string(weyl_dim(w)); }, py::arg("weight"));
    m.def("kostant_partition", [](const std::string& nu) {
              FiniteWeight w = parse_weight(nu);
              return to_string(kostant_partition(w, RootSystemA(w.rank())));
          },
          py::arg("nu"));
    m.def("sc_set", [](const std::string& pair, std::size_t n, bool sl) {
              SCSet s = sc_set(parse_pair(pair), n);
              auto weights = sl ? s.sl_classes() : s.weights;
              return py::make_tuple(std::vector<Sequence>(weights.begin(), weights.end()), s.depth, s.stabilized);
          },
          "(weights, depth, stabilized)", py::arg("pair"), py::arg("n"), py::arg("sl") = false);
    m.def("sc_contained", [](const std::string& a, const std::string& b, std::size_t n_max) {
              return sc_contained(parse_pair(a), parse_pair(b), n_max);
          },
          py::arg("a"), py::arg("b"), py::arg("n_max"));

    m.def("normal_form", [](const std::string& algebra, const std::string& expr) {
              LiePresentation p = algebra_named(algebra);
              return to_string(parse_element(expr, p), p);
          },
          "PBW normal form of an expression", py::arg("algebra"), py::arg("expr"));
    m.def("casimir", [](const std::string& algebra) {
              LiePresentation p = algebra_named(algebra);
              return to_string(casimir(p), p);
          },
          py::arg("algebra"));
    m.def("is_central", [](const std::string& algebra, const std::string& expr) {
              LiePresentation p = algebra_named(algebra);
              return is_central(parse_element(expr, p), p);
          },
          py::arg("algebra"), py::arg("expr"));

    m.def("sl2_classify", [](const std::string& hw) { return ideal_text(classify_annihilator(parse_rational(hw))); },
          "Annihilator of the simple sl(2)-module with highest weight hw", py::arg("hw"));
    m.def("sl2_member", [](const std::string& ideal, const std::string& expr) {
              return member(parse_element(expr, sl2_algebra()), parse_ideal(ideal));
          },
          py::arg("ideal"), py::arg("element"));
    m.def("sl2_witnesses", [](const std::string& ideal) {
              std::vector<std::string> out;
              for (auto& u : witnesses(parse_ideal(ideal))) out.push_back(to_string(u, sl2_algebra()));
              return out;
          },
          py::arg("ideal"));

    m.def("tensor_decomposition", [](std::size_t n, std::size_t p, std::size_t q, std::size_t cap) {
              TensorRep rep(build_algebra(Family::gl, n), p, q, cap);
              std::vector<std::pair<Sequence, std::size_t>> out;
              for (auto& [w, mult] : decompose(kernel_space(p, q, n), gl_frame(rep))) out.emplace_back(w.integers(), mult);
              return out;
          },
          "gl(n) highest weights and multiplicities of the traceless tensors", py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("cap") = kDefaultTensorCap);
    m.def("module_dim", [](std::size_t n, const std::string& pair) { return module_V_lambda_mu(n, parse_pair(pair)).dimension(); },
          py::arg("n"), py::arg("pair"));

    m.def("verify", [](const std::string& group) {
              std::vector<py::dict> out;
              for (auto& r : run_criteria(group)) {
                  py::dict d;
                  d["id"] = r.id;
                  d["group"] = r.group;
                  d["title"] = r.title;
                  d["passed"] = r.passed();
                  d["seconds"] = r.seconds;
                  d["detail"] = r.detail;
                  out.push_back(d);
              }
              return out;
          },
          py::arg("group") = "all");
}
