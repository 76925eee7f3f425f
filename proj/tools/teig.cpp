#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "teig/io/json.hpp"
#include "teig/teig.hpp"

namespace {

using json = nlohmann::json;
using teig::cplx;
namespace io = teig::io;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

/// A failure reported as {"error": {...}} with the given exit code.
struct CliFailure {
    int code;
    std::string kind;
    std::string message;
    json details = json::object();
};

struct Options {
    std::string input = "-";
    std::string output;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<std::uint64_t> seed;
    int trials = 5;
    std::optional<int> restarts;
    std::optional<double> tol;
    std::optional<double> step;
    std::string method = "analytic";
    bool force = false;
    std::string label;
    std::string point;
    bool golden = false;
};

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw CliFailure{exit_usage, "io", "cannot open input file '" + path + "'"};
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw CliFailure{exit_usage, "malformed-json", e.what(), {{"byte", e.byte}}};
    }
}

std::uint64_t seed_of(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("TEIG_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw CliFailure{exit_usage, "usage", "TEIG_SEED must be a non-negative integer"};
        return v;
    }
    return 0;
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw CliFailure{exit_usage, "usage", std::string("missing required option ") + flag};
    return *v;
}

std::vector<cplx> sorted(std::vector<cplx> v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}

teig::JacobianOptions jacobian_options(const Options& o) {
    teig::JacobianOptions j;
    if (o.method == "analytic") j.method = teig::JacobianMethod::analytic;
    else if (o.method == "fd" || o.method == "central-difference") j.method = teig::JacobianMethod::central_difference;
    else throw CliFailure{exit_usage, "usage", "unknown --method '" + o.method + "'; expected analytic or fd"};
    j.step = o.step;
    if (o.tol) j.rank.absolute_tolerance = *o.tol;
    return j;
}

json rank_json(const teig::RankReport& r) {
    return {{"rank", r.rank},
            {"tolerance", r.tolerance},
            {"gap_ratio", io::real_or_null(r.gap_ratio)},
            {"singular_values", r.singular_values}};
}

json inverse_json(const teig::InverseResult& r) {
    json j = {{"status", r.status},
              {"a", io::to_json(r.a)},
              {"b", io::to_json(r.b)},
              {"residual", io::real_or_null(r.residual)},
              {"eig_match", io::real_or_null(r.eig_match)},
              {"iterations", r.iterations},
              {"restarts_used", r.restarts_used}};
    if (r.tensor) j["tensor"] = io::to_json(*r.tensor);
    return j;
}

json checked_inverse(const teig::InverseResult& r) {
    json j = inverse_json(r);
    if (r.status != "success")
        throw CliFailure{exit_domain, r.status, "no candidate met the residual and eigenvalue-match tolerances", {{"result", j}}};
    return j;
}

json cmd_charpoly(const Options& o) {
    const teig::TensorTS t = io::tensor_from_json(read_input(o.input));
    const teig::CharpolyReport r = teig::charpoly_report(t);
    double err = 0.0;
    for (double e : r.errors) err = std::max(err, e);
    return {{"n", t.n()}, {"m", t.m()}, {"degree", r.poly.degree()}, {"coeffs", io::to_json(r.poly.coeffs())},
            {"max_error_estimate", err}};
}

json cmd_eig(const Options& o) {
    const json in = read_input(o.input);
    if (in.is_object() && in.contains("coeffs") && !in.contains("slices")) {
        const teig::UniPoly p = io::poly_from_json(in);
        return {{"degree", p.degree()}, {"values", io::to_json(sorted(teig::roots(p).values))}};
    }
    const teig::TensorTS t = io::tensor_from_json(in);
    return {{"n", t.n()}, {"m", t.m()}, {"values", io::to_json(sorted(teig::eigenvalues(t).values))}};
}

json cmd_sym_eig(const Options& o) {
    const teig::BinaryForm f = io::form_from_json(read_input(o.input));
    return {{"m", f.degree() - 1}, {"values", io::to_json(sorted(teig::sym_eigenvalues(f).values))}};
}

json cmd_wedge_eig(const Options& o) {
    const teig::BinaryForm f = io::form_from_json(read_input(o.input));
    return {{"m", f.degree() + 1}, {"values", io::to_json(teig::wedge_eigenvalues(f).values)}};
}

json cmd_classify(const Options& o) {
    const teig::Classification c = teig::classify(require(o.n, "--n"), require(o.m, "--m"));
    return {{"n", c.n},
            {"m", c.m},
            {"dominant", c.dominant},
            {"reason", c.reason},
            {"dim_ts", c.dim_ts},
            {"num_eigenvalues", c.num_eigenvalues},
            {"size_inequality", c.size_inequality}};
}

json cmd_expected_dim(const Options& o) {
    const int n = require(o.n, "--n");
    const int m = require(o.m, "--m");
    return {{"n", n}, {"m", m}, {"expected_dim", teig::expected_image_dim(n, m)}, {"conjecture", true}};
}

json cmd_jacobian(const Options& o) {
    teig::TensorTS t = teig::TensorTS::zero(1, 1);
    std::vector<teig::TensorTS> dirs;
    if (!o.point.empty()) {
        const teig::PaperPoint p = teig::paper_point(o.point);
        t = p.tensor;
        dirs = teig::coordinate_directions(t.n(), t.m(), p.free_coordinates);
    } else {
        t = io::tensor_from_json(read_input(o.input));
        dirs = teig::standard_directions(t.n(), t.m());
    }
    const teig::JacobianReport r = teig::coefficient_jacobian(t, dirs, jacobian_options(o));
    return {{"rows", r.matrix.rows()},
            {"cols", r.matrix.cols()},
            {"method", teig::to_string(r.method)},
            {"step", r.step},
            {"rank", r.rank},
            {"tolerance", r.tolerance},
            {"gap_ratio", io::real_or_null(r.gap_ratio)},
            {"singular_values", r.singular_values},
            {"matrix", io::to_json(r.matrix)}};
}

json cmd_rank(const Options& o) {
    Eigen::MatrixXcd m;
    if (o.golden) {
        const auto& g = teig::golden_jacobian_p32();
        m.resize(12, 14);
        for (Eigen::Index i = 0; i < 12; ++i)
            for (Eigen::Index j = 0; j < 14; ++j) m(i, j) = static_cast<double>(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    } else {
        m = io::matrix_from_json(read_input(o.input));
    }
    teig::RankPolicy policy;
    if (o.tol) policy.absolute_tolerance = *o.tol;
    return rank_json(teig::numerical_rank(m, policy));
}

json cmd_certify(const Options& o) {
    teig::CertifyOptions c;
    c.force = o.force;
    c.jacobian = jacobian_options(o);
    const auto r = teig::certify_dominance(require(o.n, "--n"), require(o.m, "--m"), o.trials, seed_of(o), c);
    json points = json::array();
    for (const auto& p : r.points)
        points.push_back({{"label", p.label},
                          {"rows", p.rows},
                          {"cols", p.cols},
                          {"rank", p.rank},
                          {"gap_ratio", io::real_or_null(p.gap_ratio)},
                          {"margin", io::real_or_null(p.margin)}});
    return {{"n", r.n},           {"m", r.m},
            {"status", r.status}, {"max_rank", r.max_rank},
            {"target_rank", r.target_rank}, {"points", std::move(points)}};
}

json cmd_invert(const Options& o) {
    const teig::EigenMultiset s = io::multiset_from_json(read_input(o.input));
    if (s.size() < 2 || s.size() % 2 != 0)
        throw CliFailure{exit_usage, "dimension-mismatch", "invert needs an even number 2m >= 2 of values, got " + std::to_string(s.size())};
    const int m = static_cast<int>(s.size() / 2);
    return checked_inverse(teig::invert_generic(s, m, seed_of(o), o.restarts.value_or(20)));
}

json cmd_invert_sylvester(const Options& o) {
    const teig::EigenMultiset s = io::multiset_from_json(read_input(o.input));
    return checked_inverse(
        teig::invert_sylvester(s, require(o.p, "--p"), require(o.q, "--q"), seed_of(o), o.restarts.value_or(20)));
}

json cmd_invert_l(const Options& o) {
    const teig::EigenMultiset s = io::multiset_from_json(read_input(o.input));
    return checked_inverse(teig::invert_on_subspace_L(s, seed_of(o), o.restarts.value_or(100)));
}

json cmd_invert_wedge(const Options& o) {
    const teig::EigenMultiset s = io::multiset_from_json(read_input(o.input));
    const teig::WedgeInverseResult r = teig::invert_wedge(s.values);
    if (r.status != "success")
        throw CliFailure{exit_domain, "infeasible", "the wedge system has no solution for these targets",
                         {{"residual", r.residual}}};
    return {{"status", r.status},
            {"coeffs", io::to_json(r.form->coeffs())},
            {"residual", r.residual},
            {"eig_match", io::real_or_null(r.eig_match)}};
}

json cmd_block_verify(const Options& o) {
    const teig::BlockSpec spec = io::block_spec_from_json(read_input(o.input));
    const auto r = teig::verify_block_spectrum(spec, o.tol.value_or(1e-6));
    return {{"n", spec.target_dimension()}, {"p", r.p}, {"q", r.q}, {"matched", r.matched}, {"distance", io::real_or_null(r.distance)}};
}

json cmd_paper_point(const Options& o) {
    if (o.label.empty()) throw CliFailure{exit_usage, "usage", "paper-point needs a label"};
    const teig::PaperPoint p = teig::paper_point(o.label);
    json j = io::to_json(p.tensor);
    j["label"] = p.label;
    j["note"] = p.note;
    j["restriction"] = p.restriction;
    j["free_coordinates"] = p.free_coordinates;
    return j;
}

json cmd_random_tensor(const Options& o) {
    return io::to_json(teig::random_tensor(require(o.n, "--n"), require(o.m, "--m"), seed_of(o)));
}

void emit(const json& j, const std::string& output) {
    const std::string text = j.dump() + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw CliFailure{exit_usage, "io", "cannot open output file '" + output + "'"};
    out << text;
}

void emit_error(const CliFailure& f) {
    json e = {{"kind", f.kind}, {"message", f.message}};
    for (auto it = f.details.begin(); it != f.details.end(); ++it) e[it.key()] = it.value();
    std::cout << json{{"error", e}}.dump() << "\n";
}

int domain_or_usage(const teig::Error& e) {
    const std::string kind = e.kind();
    if (kind == "dimension-mismatch" || kind == "unknown-label") return exit_usage;
    return exit_domain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor eigenvalues via resultants, dominance certification and inverse eigenvalue problems", "teig"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("-o,--output", o.output, "Write the JSON result to this file instead of stdout");

    using Handler = json (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* c = app.add_subcommand(name, help);
        commands.emplace_back(c, h);
        return c;
    };
    auto input = [&](CLI::App* c, const char* what) { c->add_option("-i,--input", o.input, what)->capture_default_str(); };
    auto shape = [&](CLI::App* c) {
        c->add_option("--n", o.n, "Dimension n")->required();
        c->add_option("--m", o.m, "Degree m (tensor order m+1)")->required();
    };
    auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed (default: $TEIG_SEED or 0)"); };

    input(add("charpoly", "Characteristic polynomial of a tensor", cmd_charpoly), "Tensor JSON file or - for stdin");
    input(add("eig", "Eigenvalues of a tensor, or roots of a {\"coeffs\"} polynomial", cmd_eig), "Tensor or polynomial JSON");
    input(add("sym-eig", "Eigenvalues of F_x = lambda x^m, F_y = lambda y^m for a binary form F", cmd_sym_eig), "Binary form JSON");
    input(add("wedge-eig", "Eigenvalues of the wedge tensor of a binary form f", cmd_wedge_eig), "Binary form JSON");
    shape(add("classify", "Dominance classification of (n, m)", cmd_classify));
    shape(add("expected-dim", "Conjectured dimension of the eigenvalue image", cmd_expected_dim));

    CLI::App* jac = add("jacobian", "Jacobian of the coefficient map and its numerical rank", cmd_jacobian);
    input(jac, "Tensor JSON");
    jac->add_option("--point", o.point, "Use a fixed point (p32, p33, p42, p34a, p34b) and its coordinates");
    jac->add_option("--method", o.method, "analytic or fd")->capture_default_str();
    jac->add_option("--step", o.step, "Central-difference step");
    jac->add_option("--tol", o.tol, "Absolute singular-value tolerance");

    CLI::App* rank = add("rank", "Numerical rank of a {\"matrix\"} input", cmd_rank);
    input(rank, "Matrix JSON");
    rank->add_flag("--golden", o.golden, "Use the embedded 12 x 14 reference Jacobian");
    rank->add_option("--tol", o.tol, "Absolute singular-value tolerance");

    CLI::App* cert = add("certify", "Certify dominance by Jacobian rank", cmd_certify);
    shape(cert);
    seed(cert);
    cert->add_option("--trials", o.trials, "Random points to evaluate")->capture_default_str()->check(CLI::PositiveNumber);
    cert->add_flag("--force", o.force, "Evaluate even when the necessary condition fails");
    cert->add_option("--method", o.method, "analytic or fd")->capture_default_str();
    cert->add_option("--step", o.step, "Central-difference step");
    cert->add_option("--tol", o.tol, "Absolute singular-value tolerance");

    for (auto [name, help, h] : {std::tuple{"invert", "Tensor in TS(C^2, m+1) with a prescribed spectrum", cmd_invert},
                                 std::tuple{"invert-sylvester", "Sylvester matrix with a prescribed spectrum", cmd_invert_sylvester},
                                 std::tuple{"invert-L", "Tensor in the subspace L (m = 2) with a prescribed spectrum", cmd_invert_l}}) {
        CLI::App* c = add(name, help, h);
        input(c, "Multiset JSON {\"values\": [...]}");
        seed(c);
        c->add_option("--restarts", o.restarts, "Restart budget");
        if (std::string(name) == "invert-sylvester") {
            c->add_option("--p", o.p, "Degree p")->required();
            c->add_option("--q", o.q, "Degree q")->required();
        }
    }
    input(add("invert-wedge", "Binary form f whose wedge tensor has the given m+1 nonzero eigenvalues", cmd_invert_wedge),
          "Multiset JSON, values in node order");

    CLI::App* block = add("block-verify", "Find p, q relating block-diagonal and block spectra", cmd_block_verify);
    input(block, "Block spec JSON {\"blocks\": [...], \"scalar\": [re, im]}");
    block->add_option("--tol", o.tol, "Coefficient tolerance");

    CLI::App* pp = add("paper-point", "Emit a fixed evaluation point", cmd_paper_point);
    pp->add_option("label", o.label, "p32, p33, p42, p34a or p34b")->required();

    CLI::App* rt = add("random-tensor", "Random tensor with entries uniform on [-1, 1] + i[-1, 1]", cmd_random_tensor);
    shape(rt);
    seed(rt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error({exit_usage, "usage", e.what()});
        return exit_usage;
    }

    try {
        for (auto& [cmd, handler] : commands) {
            if (cmd->parsed()) {
                emit(handler(o), o.output);
                return exit_ok;
            }
        }
        emit_error({exit_usage, "usage", "no subcommand given"});
        return exit_usage;
    } catch (const CliFailure& f) {
        emit_error(f);
        return f.code;
    } catch (const teig::ProbeFailure& e) {
        emit_error({exit_domain, e.kind(), e.what(), {{"direction", e.direction()}}});
        return exit_domain;
    } catch (const teig::Error& e) {
        const int code = domain_or_usage(e);
        emit_error({code, e.kind(), e.what()});
        return code;
    } catch (const std::exception& e) {
        emit_error({exit_domain, "internal", e.what()});
        return exit_domain;
    }
}
