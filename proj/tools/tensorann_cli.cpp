// Command-line front end for the tensorann library.

#include "tensorann/matrix.hpp"
#include "tensorann/order.hpp"
#include "tensorann/partitions.hpp"
#include "tensorann/sl2.hpp"
#include "tensorann/uea.hpp"
#include "tensorann/verify.hpp"
#include "tensorann/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

using namespace tensorann;
using nlohmann::json;

namespace {

struct Common {
    bool json = false;
    std::size_t cap = kDefaultTensorCap;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "Emit JSON instead of a table");
    sub->add_option("--cap", c.cap, "Size cap for tensor spaces")->check(CLI::PositiveNumber);
}

json to_json(const Sequence& s) { return json(s); }

json to_json(const PartitionPair& p) {
    return {{"text", to_string(p)}, {"lambda", p.lambda.parts()}, {"mu", p.mu.parts()}};
}

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (auto& r : v) out.push_back(to_string(r));
    return out;
}

std::string pretty(const Sequence& s) { return "(" + to_string(s) + ")"; }

struct AlgebraName {
    Family family;
    std::size_t n;
};

AlgebraName parse_algebra_name(const std::string& text) {
    static const std::regex re("^(gl|sl|so|o|sp)([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("unknown algebra '" + text + "' (try sl2, gl3, o4, sp4)");
    return {*parse_family(m[1].str()), std::stoul(m[2].str())};
}

std::string algebra_label(const AlgebraName& a) { return to_string(a.family) + "(" + std::to_string(a.n) + ")"; }

LiePresentation presentation_of(const AlgebraName& a) {
    if (a.family == Family::sl && a.n == 2) return sl2_algebra();
    return build_algebra(a.family, a.n).presentation();
}

int cmd_order(const Common& c, const std::string& a_text, const std::string& b_text, std::size_t oracle, bool sl) {
    PartitionPair a = parse_pair(a_text), b = parse_pair(b_text);
    const bool decision = ann_contained(a, b);
    json j{{"a", to_json(a)}, {"b", to_json(b)}, {"contained", decision}, {"order_decision", leq(a, b)}};
    std::optional<ContainmentReport> report;
    if (oracle > 0) {
        if (oracle < 2) throw std::invalid_argument("--oracle needs n_max >= 2");
        report = sc_containment(a, b, oracle, sl ? Convention::sl : Convention::gl);
        j["sc_contained"] = report->contained;
        j["sc_checked_levels"] = report->levels;
        j["stabilization_depths"] = report->stabilization_depths;
        j["stabilized"] = report->all_stabilized;
        j["agrees"] = report->contained == decision;
        j["strict"] = decision && report->separating_witness.has_value();
        if (report->separating_witness)
            j["separating_witness"] = {{"level", report->separating_witness->first},
                                       {"weight", report->separating_witness->second}};
    }
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Ann V[" << to_string(b) << "] inside Ann V[" << to_string(a) << "]: " << (decision ? "yes" : "no")
                  << "  (" << to_string(a) << (decision ? " <= " : " is not <= ") << to_string(b) << ")\n";
        if (report) {
            std::cout << "SC containment up to gl(" << oracle << "): " << (report->contained ? "yes" : "no")
                      << (report->all_stabilized ? ", stabilized (heuristic)" : ", NOT stabilized") << "\n";
            std::cout << "  depths per level:";
            for (std::size_t i = 0; i < report->levels.size(); ++i)
                std::cout << " n=" << report->levels[i] << ":" << report->stabilization_depths[i];
            std::cout << "\n";
            if (decision && report->separating_witness)
                std::cout << "  strict: " << pretty(report->separating_witness->second) << " occurs only for "
                          << to_string(b) << " at level " << report->separating_witness->first << "\n";
            if (report->contained != decision) std::cout << "  WARNING: order and SC containment disagree\n";
        }
    }
    return report && report->contained != decision ? 1 : 0;
}

int cmd_gt(const Common& c, const std::string& pair_text, std::size_t iter) {
    PartitionPair p = parse_pair(pair_text);
    PairSet out = gt_iterated(p, iter);
    if (c.json) {
        json list = json::array();
        for (auto& x : out) list.push_back(to_json(x));
        std::cout << json{{"pair", to_json(p)}, {"iterations", iter}, {"count", out.size()}, {"pairs", list}}.dump(2) << "\n";
    } else {
        std::cout << out.size() << " pairs after " << iter << " GT step(s) from " << to_string(p) << "\n";
        for (auto& x : out) std::cout << "  " << to_string(x) << "\n";
    }
    return 0;
}

int cmd_branch(const Common& c, const std::string& w_text, std::size_t n) {
    Sequence w;
    for (auto& r : parse_rational_list(w_text)) {
        if (!is_integer(r)) throw std::invalid_argument("branch needs integer entries");
        w.push_back(r.get_num().get_si());
    }
    if (w.size() != n + 1)
        throw std::invalid_argument("weight has length " + std::to_string(w.size()) + ", expected n+1 = " + std::to_string(n + 1));
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) throw std::invalid_argument("weight must be weakly decreasing");
    auto parts = branch(w);
    Integer total = 0;
    json list = json::array();
    for (auto& u : parts) {
        Integer d = weyl_dim(u);
        total += d;
        list.push_back({{"weight", u}, {"dim", to_string(d)}});
    }
    const Integer whole = weyl_dim(w);
    if (c.json) {
        std::cout << json{{"weight", w}, {"n", n}, {"constituents", list}, {"count", parts.size()}, {"dim", to_string(whole)},
                          {"dim_sum", to_string(total)}, {"consistent", total == whole}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "gl(" << n + 1 << ") " << pretty(w) << " restricted to gl(" << n << "): " << parts.size()
                  << " constituents\n";
        for (auto& u : parts) std::cout << "  " << pretty(u) << "  dim " << to_string(weyl_dim(u)) << "\n";
        std::cout << "dimension " << to_string(whole) << " = sum " << to_string(total) << (total == whole ? "" : "  MISMATCH")
                  << "\n";
    }
    return total == whole ? 0 : 1;
}

int cmd_sc(const Common& c, const std::string& pair_text, std::size_t n, std::optional<std::size_t> depth, bool sl) {
    PartitionPair p = parse_pair(pair_text);
    SCSet s = depth ? sc_set_at_depth(p, n, *depth) : sc_set(p, n);
    std::set<Sequence> shown = sl ? s.sl_classes() : s.weights;
    if (c.json) {
        std::cout << json{{"pair", to_json(p)},   {"n", n},
                          {"depth", s.depth},     {"stabilized", s.stabilized},
                          {"convention", sl ? "sl" : "gl"}, {"weights", shown}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "SC(V[" << to_string(p) << "], " << (sl ? "sl(" : "gl(") << n << ")): " << shown.size()
                  << (sl ? " classes" : " weights") << ", depth " << s.depth;
        if (!depth) std::cout << (s.stabilized ? ", stabilized (heuristic)" : ", NOT stabilized");
        std::cout << "\n";
        for (auto& w : shown) std::cout << "  " << pretty(w) << "\n";
    }
    return 0;
}

int cmd_casimir(const Common& c, const std::string& algebra) {
    AlgebraName a = parse_algebra_name(algebra);
    LiePresentation p = presentation_of(a);
    std::string form = "killing";
    UEAElement z;
    try {
        z = casimir(p);
    } catch (const std::domain_error&) {
        // gl has a center, so fall back to the trace form of the defining representation.
        MatrixAlgebra alg = build_algebra(a.family, a.n);
        Matrix b(p.dim(), p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = 0; j < p.dim(); ++j) b(i, j) = (alg.basis()[i] * alg.basis()[j]).trace();
        z = casimir_for_form(p, b);
        form = "trace";
    }
    const bool central = is_central(z, p);
    if (c.json) {
        std::cout << json{{"algebra", algebra}, {"dim", p.dim()}, {"basis", p.names()}, {"form", form},
                          {"casimir", to_string(z, p)}, {"central", central}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << algebra_label(a) << " (dim " << p.dim() << "), " << form << " form\n";
        std::cout << "  basis: ";
        for (std::size_t i = 0; i < p.dim(); ++i) std::cout << (i ? " " : "") << p.names()[i];
        std::cout << "\n  C = " << to_string(z, p) << "\n  central: " << (central ? "yes" : "no") << "\n";
    }
    return central ? 0 : 1;
}

int cmd_pbw(const Common& c, const std::string& algebra, const std::string& expr) {
    AlgebraName a = parse_algebra_name(algebra);
    LiePresentation p = presentation_of(a);
    UEAElement u = parse_element(expr, p);
    if (c.json)
        std::cout << json{{"algebra", algebra}, {"input", expr}, {"normal_form", to_string(u, p)}, {"degree", u.degree()}}
                         .dump(2)
                  << "\n";
    else
        std::cout << to_string(u, p) << "\n";
    return 0;
}

int cmd_verma_mult(const Common& c, const std::string& algebra, const std::string& lambda_text, const std::string& mu_text) {
    AlgebraName a = parse_algebra_name(algebra);
    if (a.family != Family::gl && a.family != Family::sl)
        throw std::invalid_argument("verma-mult supports gl and sl only");
    FiniteWeight lambda = parse_weight(lambda_text), mu = parse_weight(mu_text);
    if (lambda.rank() != a.n || mu.rank() != a.n)
        throw std::invalid_argument("weights need " + std::to_string(a.n) + " coordinates");
    RootSystemA rs(a.n);
    Integer m = verma_weight_mult(lambda, mu, rs);
    if (c.json)
        std::cout << json{{"algebra", algebra}, {"lambda", to_string(lambda)}, {"mu", to_string(mu)},
                          {"highest_weight", to_string(lambda - rs.rho())}, {"multiplicity", to_string(m)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "dim M(" << to_string(lambda) << ")_(" << to_string(mu) << ") = " << to_string(m)
                  << "  (highest weight " << to_string(lambda - rs.rho()) << ")\n";
    return 0;
}

json ideal_json(const Sl2PrimitiveIdeal& ideal) {
    const LiePresentation& p = sl2_algebra();
    json w = json::array();
    for (auto& u : witnesses(ideal)) w.push_back(to_string(u, p));
    if (auto* f = std::get_if<FiniteType>(&ideal))
        return {{"tag", "I"}, {"name", to_string(ideal)}, {"parameter", std::to_string(f->k)}, {"witnesses", w}};
    return {{"tag", "J"},
            {"name", to_string(ideal)},
            {"parameter", to_string(std::get<VermaType>(ideal).lambda)},
            {"witnesses", w}};
}

int cmd_sl2_classify(const Common& c, const std::string& hw) {
    Rational nu = parse_rational(hw);
    Sl2PrimitiveIdeal ideal = classify_annihilator(nu);
    json j = ideal_json(ideal);
    j["hw"] = to_string(nu);
    j["lambda"] = to_string(Rational(nu + 1));
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Ann L(hw " << to_string(nu) << ") = " << to_string(ideal) << "  (lambda = " << to_string(Rational(nu + 1))
                  << ")\n  witnesses:\n";
        for (auto& w : j["witnesses"]) std::cout << "    " << w.get<std::string>() << "\n";
    }
    return 0;
}

int cmd_sl2_member(const Common& c, const std::string& ideal_text, const std::string& expr) {
    Sl2PrimitiveIdeal ideal = parse_ideal(ideal_text);
    UEAElement u = parse_element(expr, sl2_algebra());
    const bool in = member(u, ideal);
    json j = ideal_json(ideal);
    j["element"] = to_string(u, sl2_algebra());
    j["member"] = in;
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << to_string(u, sl2_algebra()) << (in ? " is in " : " is not in ") << to_string(ideal) << "\n";
    return 0;
}

json weight_multiset_json(const WeightMultiset& m) {
    json out = json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        out.push_back({{"weight", to_string(it->first)}, {"multiplicity", it->second}, {"dim", to_string(weyl_dim(it->first))}});
    return out;
}

int cmd_tensor(const Common& c, const std::string& family_text, std::size_t n, std::size_t p, std::size_t q,
               const std::string& pair_text, bool dump) {
    auto family = parse_family(family_text);
    if (!family) throw std::invalid_argument("unknown family '" + family_text + "'");
    MatrixAlgebra alg = build_algebra(*family, n);
    TensorRep rep(alg, p, q, c.cap);
    const bool typeA = *family == Family::gl || *family == Family::sl;
    json j{{"family", family_text}, {"n", n}, {"p", p}, {"q", q}, {"algebra_dim", alg.dim()},
           {"spanning_size", alg.spanning_size()}, {"tensor_dim", rep.dim()}};
    int status = 0;
    if (!is_homomorphism(alg.presentation(), rep.action())) status = 1;
    j["homomorphism"] = status == 0;

    Subspace kernel = kernel_space(p, q, n);
    j["kernel_dim"] = kernel.dimension();
    std::optional<Subspace> module;
    if (!pair_text.empty()) {
        PartitionPair pair = parse_pair(pair_text);
        if (static_cast<std::size_t>(pair.lambda.size()) != p || static_cast<std::size_t>(pair.mu.size()) != q)
            throw std::invalid_argument("pair sizes must equal p and q");
        module = module_V_lambda_mu(n, pair, c.cap);
        j["pair"] = to_json(pair);
        j["module_dim"] = module->dimension();
    }
    WeightMultiset kernel_parts, module_parts;
    bool law = true;
    if (typeA) {
        WeightFrame frame = gl_frame(rep);
        kernel_parts = decompose(kernel, frame);
        j["kernel_constituents"] = weight_multiset_json(kernel_parts);
        // Multiplicity of V_{lambda mu} in the kernel is the number of standard tableaux pairs.
        json check = json::array();
        for (auto& [w, mult] : kernel_parts) {
            Sequence s = w.integers();
            Sequence lam, mu;
            for (auto x : s)
                if (x > 0) lam.push_back(x);
            for (auto it = s.rbegin(); it != s.rend(); ++it)
                if (*it < 0) mu.push_back(-*it);
            const std::uint64_t expected = std_tableaux_count(Partition(lam)) * std_tableaux_count(Partition(mu));
            law = law && expected == mult;
            check.push_back({{"weight", to_string(w)}, {"multiplicity", mult}, {"tableaux", expected}});
        }
        j["tableaux_law"] = law;
        j["tableaux_check"] = check;
        if (module) {
            module_parts = decompose(*module, frame);
            j["module_constituents"] = weight_multiset_json(module_parts);
        }
    }
    if (!law) status = 1;
    if (c.json) {
        if (dump) j["kernel_basis"] = dump_basis(kernel);
        std::cout << j.dump(2) << "\n";
        return status;
    }
    std::cout << to_string(*family) << "(" << n << "), dim " << alg.dim() << " (from " << alg.spanning_size()
              << " spanning matrices)\n";
    std::cout << "V^(" << p << "," << q << "): dim " << rep.dim() << ", action is " << (status == 0 ? "" : "NOT ")
              << "a homomorphism\n";
    std::cout << "contraction kernel: dim " << kernel.dimension() << "\n";
    if (typeA) {
        for (auto it = kernel_parts.rbegin(); it != kernel_parts.rend(); ++it)
            std::cout << "  (" << to_string(it->first) << ") x" << it->second << "  dim " << to_string(weyl_dim(it->first))
                      << "\n";
        std::cout << "  multiplicities match standard tableaux counts: " << (law ? "yes" : "no") << "\n";
    }
    if (module) {
        std::cout << "V[" << pair_text << "]: dim " << module->dimension() << "\n";
        for (auto& [w, mult] : module_parts) std::cout << "  highest weight (" << to_string(w) << ") x" << mult << "\n";
    }
    if (dump) std::cout << "kernel basis:\n" << dump_basis(kernel);
    return status;
}

int cmd_verify(const Common& c, const std::string& group) {
    auto results = run_criteria(group);
    bool all = true;
    json list = json::array();
    for (auto& r : results) {
        all = all && r.passed();
        list.push_back({{"id", r.id}, {"group", r.group}, {"title", r.title}, {"passed", r.passed()},
                        {"seconds", r.seconds}, {"time_limit", r.time_limit}, {"detail", r.detail}});
        if (!c.json) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
            std::cout << (r.passed() ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "  " << buf << "  "
                      << r.detail << "\n";
        }
    }
    if (c.json)
        std::cout << json{{"group", group}, {"passed", all}, {"criteria", list}}.dump(2) << "\n";
    else
        std::cout << (all ? "all passed" : "FAILURES") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Annihilators of tensor modules: orders, branching, enveloping algebras and sl(2) ideals"};
    app.require_subcommand(1);
    Common common;

    std::string a_text, b_text, pair_text, expr, algebra, family = "gl", group = "all", ideal, hw, lambda, mu;
    std::size_t oracle = 0, iter = 1, n = 0, p = 0, q = 0;
    std::optional<std::size_t> depth;
    bool sl = false, dump = false;
    int status = 0;
    std::function<int()> action;

    auto* order = app.add_subcommand("order", "Is Ann V_B inside Ann V_A? Decided by the order A <= B");
    order->add_option("A", a_text, "Pair lambda|mu")->required();
    order->add_option("B", b_text, "Pair lambda|mu")->required();
    order->add_option("--oracle", oracle, "Cross-check with SC containment up to gl(n_max)");
    order->add_flag("--sl", sl, "Compare SC sets as sl classes");
    add_common(order, common);
    order->callback([&] { action = [&] { return cmd_order(common, a_text, b_text, oracle, sl); }; });

    auto* gt = app.add_subcommand("gt", "Gelfand-Tsetlin steps of a pair");
    gt->add_option("PAIR", pair_text, "Pair lambda|mu")->required();
    gt->add_option("--iter", iter, "Number of steps");
    add_common(gt, common);
    gt->callback([&] { action = [&] { return cmd_gt(common, pair_text, iter); }; });

    auto* br = app.add_subcommand("branch", "Restrict a gl(n+1) weight to gl(n)");
    br->add_option("WEIGHT", expr, "Weakly decreasing integers, comma separated")->required();
    br->add_option("--n", n, "Target rank n")->required();
    add_common(br, common);
    br->callback([&] { action = [&] { return cmd_branch(common, expr, n); }; });

    auto* sc = app.add_subcommand("sc", "Simple constituents of V_{lambda mu} restricted to gl(n)");
    sc->add_option("PAIR", pair_text, "Pair lambda|mu")->required();
    sc->add_option("--n", n, "Level n")->required();
    sc->add_option("--depth", depth, "Fixed number of restriction steps (default: until stable)");
    sc->add_flag("--sl", sl, "Report sl classes (difference vectors)");
    add_common(sc, common);
    sc->callback([&] { action = [&] { return cmd_sc(common, pair_text, n, depth, sl); }; });

    auto* cas = app.add_subcommand("casimir", "Casimir element in PBW normal form");
    cas->add_option("--algebra", algebra, "sl2, sl3, gl2, o4, sp4, ...")->required();
    add_common(cas, common);
    cas->callback([&] { action = [&] { return cmd_casimir(common, algebra); }; });

    auto* pbw = app.add_subcommand("pbw", "Normal form of an enveloping algebra expression");
    pbw->add_option("--algebra", algebra, "sl2, sl3, gl2, o4, sp4, ...")->required();
    pbw->add_option("EXPR", expr, "e.g. \"e*f - f*e\" or \"[e,f]^2\"")->required();
    add_common(pbw, common);
    pbw->callback([&] { action = [&] { return cmd_pbw(common, algebra, expr); }; });

    auto* vm = app.add_subcommand("verma-mult", "Weight multiplicity in a Verma module");
    vm->add_option("--algebra", algebra, "glN or slN")->required();
    vm->add_option("LAMBDA", lambda, "Parameter (highest weight is lambda - rho)")->required();
    vm->add_option("MU", mu, "Weight")->required();
    add_common(vm, common);
    vm->callback([&] { action = [&] { return cmd_verma_mult(common, algebra, lambda, mu); }; });

    auto* s2 = app.add_subcommand("sl2", "Primitive ideals of U(sl2)");
    s2->require_subcommand(1);
    auto* classify = s2->add_subcommand("classify", "Annihilator of the simple module with a given highest weight");
    classify->add_option("--hw", hw, "Highest weight (rational)")->required();
    add_common(classify, common);
    classify->callback([&] { action = [&] { return cmd_sl2_classify(common, hw); }; });
    auto* mem = s2->add_subcommand("member", "Membership of an element in a primitive ideal");
    mem->add_option("--ideal", ideal, "I:k or J:lambda")->required();
    mem->add_option("--element", expr, "Element in h, e, f")->required();
    add_common(mem, common);
    mem->callback([&] { action = [&] { return cmd_sl2_member(common, ideal, expr); }; });

    auto* tensor = app.add_subcommand("tensor", "Mixed tensor module report");
    tensor->add_option("--family", family, "gl, sl, o or sp");
    tensor->add_option("--n", n, "Number of indices")->required();
    tensor->add_option("--p", p, "Copies of V");
    tensor->add_option("--q", q, "Copies of V_*");
    tensor->add_option("--pair", pair_text, "Cut out V_{lambda mu}");
    tensor->add_flag("--dump", dump, "Print the contraction kernel basis");
    add_common(tensor, common);
    tensor->callback([&] { action = [&] { return cmd_tensor(common, family, n, p, q, pair_text, dump); }; });

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("GROUP", group, "order, branching, casimir, annihilators, sl2 or all")
        ->check(CLI::IsMember({"order", "branching", "casimir", "annihilators", "sl2", "all"}));
    add_common(verify, common);
    verify->callback([&] { action = [&] { return cmd_verify(common, group); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    try {
        status = action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
