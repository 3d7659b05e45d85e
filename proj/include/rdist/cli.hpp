#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdist/error.hpp"
#include "rdist/graph.hpp"
#include "rdist/io.hpp"
#include "rdist/linalg.hpp"
#include "rdist/products.hpp"
#include "rdist/resistance.hpp"

namespace rdist::cli {

enum ExitCode : int { ok = 0, input_error = 1, verify_failed = 2 };

struct Options {
    std::string product;
    std::string g1, g2, g;
    std::string format = "table";
    std::string values = "exact";
    unsigned decimals = 6;
    std::string matrix = "laplacian";
    std::string out;
    bool verify = false;
    bool require_regular = false;
};

/// Outcome of certifying one product instance through the block route.
struct Certificate {
    bool schur_group_inverse = false;
    bool one_inverse = false;
    bool oracle_equivalence = false;

    bool passed() const noexcept { return schur_group_inverse && one_inverse && oracle_equivalence; }
};

inline Certificate certify(Product kind, const Graph& g1, const Graph& g2, Regularity policy = Regularity::any) {
    const auto steps = product_inverse(kind, g1, g2, policy);
    const auto product = product_graph(kind, g1, g2);
    const auto lap = laplacian(product);
    Certificate c;
    c.schur_group_inverse = verify_group_inverse(steps.schur, steps.schur_sharp);
    c.one_inverse = steps.blocks.assembled() == lap && verify_one_inverse(lap, steps.inverse.h);
    c.oracle_equivalence = resistance_from_ginverse(steps.inverse) == resistance_direct(product);
    return c;
}

namespace detail {

inline RenderOptions render_options(const Options& o) {
    static const std::map<std::string, Format> formats{
        {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
    return {formats.at(o.format), o.values == "exact" ? ValueMode::exact : ValueMode::decimal, o.decimals};
}

inline Product product_of(const std::string& name) {
    return name == "corona" ? Product::corona : Product::ncorona;
}

inline void add_render_flags(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--values", o.values, "Value rendering")
        ->check(CLI::IsMember({"exact", "decimal"}))
        ->capture_default_str();
    sub->add_option("--decimals", o.decimals, "Fractional digits in decimal mode")->capture_default_str();
    sub->add_option("--out", o.out, "Write output to a file instead of standard output");
}

inline void add_pair_flags(CLI::App* sub, Options& o, bool required) {
    auto* a = sub->add_option("--g1", o.g1, "Host graph G1 (P<n>, C<n>, K<n>, edges:<n>:<i>-<j>,..., or @file.dot)");
    auto* b = sub->add_option("--g2", o.g2, "Attached graph G2 (same grammar)");
    if (required) {
        a->required();
        b->required();
    }
    sub->add_flag("--require-regular", o.require_regular, "Reject a non-regular G1");
}

inline std::vector<std::pair<std::string, std::string>> pair_inputs(const Options& o) {
    return {{"g1", o.g1}, {"g2", o.g2}};
}

inline int emit(const OutputDocument& doc, const Options& o, std::ostream& out, std::ostream& err) {
    const auto text = serialize(doc, render_options(o));
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.out << "'\n";
            return input_error;
        }
        file << text;
    }
    if (doc.verified) {
        if (o.format != "table") err << "verify: " << (*doc.verified ? "PASS" : "FAIL") << "\n";
        if (!*doc.verified) return verify_failed;
    }
    return ok;
}

/// `corona` / `ncorona`: matrices of the product graph itself.
inline int run_product(Product kind, const Options& o, std::ostream& out, std::ostream& err) {
    const auto g1 = load_graph(o.g1);
    const auto g2 = load_graph(o.g2);
    if (o.require_regular && !is_regular(g1)) throw Error(Errc::not_regular, "G1 is not regular");
    const auto product = product_graph(kind, g1, g2);
    OutputDocument doc;
    doc.operation = std::string(product_name(kind)) + " " + o.matrix;
    doc.inputs = pair_inputs(o);
    doc.labels = product_labels(g1.order(), g2.order());
    doc.matrix = o.matrix == "adjacency" ? adjacency_matrix(product) : laplacian(product);
    return emit(doc, o, out, err);
}

/// `resist` / `ginv`, either on a product (block route) or on a plain graph
/// (whole-Laplacian route).
inline int run_inverse(bool resist, const Options& o, std::ostream& out, std::ostream& err) {
    const bool plain = !o.g.empty();
    if (plain == (!o.product.empty() || !o.g1.empty() || !o.g2.empty()))
        throw CLI::ValidationError("use either --g <spec> or <corona|ncorona> --g1 <spec> --g2 <spec>");
    const std::string verb = resist ? "resist" : "ginv";

    OutputDocument doc;
    GInverse h;
    std::optional<bool> verified;
    if (plain) {
        const auto g = load_graph(o.g);
        h = direct_group_inverse(g);
        doc.operation = verb;
        doc.inputs = {{"g", o.g}};
        for (std::size_t i = 1; i <= g.order(); ++i) doc.labels.push_back("v" + std::to_string(i));
        if (o.verify) verified = verify_group_inverse(laplacian(g), h.h);
    } else {
        if (o.product.empty() || o.g1.empty() || o.g2.empty())
            throw CLI::ValidationError("product form needs <corona|ncorona>, --g1 and --g2");
        const auto kind = product_of(o.product);
        const auto g1 = load_graph(o.g1);
        const auto g2 = load_graph(o.g2);
        const auto policy = o.require_regular ? Regularity::require : Regularity::any;
        h = product_inverse(kind, g1, g2, policy).inverse;
        doc.operation = verb + " " + o.product;
        doc.inputs = pair_inputs(o);
        doc.labels = product_labels(g1.order(), g2.order());
        if (o.verify) verified = resistance_from_ginverse(h) == resistance_direct(product_graph(kind, g1, g2));
    }

    if (resist) {
        auto r = resistance_from_ginverse(h);
        doc.kirchhoff_index = kirchhoff_index(r);
        doc.matrix = std::move(r.r);
    } else {
        doc.matrix = std::move(h.h);
    }
    doc.verified = verified;
    return emit(doc, o, out, err);
}

inline int run_verify(const Options& o, std::ostream& out) {
    const auto kind = product_of(o.product);
    const auto c = certify(kind, load_graph(o.g1), load_graph(o.g2),
                           o.require_regular ? Regularity::require : Regularity::any);
    auto line = [&](const char* name, bool pass) { out << name << ": " << (pass ? "PASS" : "FAIL") << "\n"; };
    line("schur group inverse", c.schur_group_inverse);
    line("one-inverse of product Laplacian", c.one_inverse);
    line("oracle equivalence", c.oracle_equivalence);
    line("verify", c.passed());
    return c.passed() ? ok : verify_failed;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 input or usage error, 2 verification failure.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact resistance distances of corona and neighborhood-corona graphs", "rdist"};
    app.require_subcommand(1, 1);

    auto* corona_cmd = app.add_subcommand("corona", "Print the Laplacian or adjacency matrix of G1 o G2");
    auto* ncorona_cmd = app.add_subcommand("ncorona", "Print the Laplacian or adjacency matrix of G1 <> G2");
    for (auto* sub : {corona_cmd, ncorona_cmd}) {
        detail::add_pair_flags(sub, o, true);
        detail::add_render_flags(sub, o);
        sub->add_option("--matrix", o.matrix, "Which matrix to print")
            ->check(CLI::IsMember({"laplacian", "adjacency"}))
            ->capture_default_str();
    }

    auto* resist_cmd = app.add_subcommand("resist", "Resistance-distance matrix");
    auto* ginv_cmd = app.add_subcommand("ginv", "Symmetric {1}-inverse of the Laplacian");
    for (auto* sub : {resist_cmd, ginv_cmd}) {
        sub->add_option("product", o.product, "corona or ncorona")->check(CLI::IsMember({"corona", "ncorona"}));
        detail::add_pair_flags(sub, o, false);
        sub->add_option("--g", o.g, "Any connected graph, solved through its whole Laplacian");
        sub->add_flag("--verify", o.verify, "Compare against the whole-Laplacian oracle");
        detail::add_render_flags(sub, o);
    }

    auto* verify_cmd = app.add_subcommand("verify", "Certify the block route against the oracle");
    verify_cmd->add_option("product", o.product, "corona or ncorona")
        ->required()
        ->check(CLI::IsMember({"corona", "ncorona"}));
    detail::add_pair_flags(verify_cmd, o, true);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (corona_cmd->parsed()) return detail::run_product(Product::corona, o, out, err);
        if (ncorona_cmd->parsed()) return detail::run_product(Product::ncorona, o, out, err);
        if (resist_cmd->parsed()) return detail::run_inverse(true, o, out, err);
        if (ginv_cmd->parsed()) return detail::run_inverse(false, o, out, err);
        return detail::run_verify(o, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

}  // namespace rdist::cli
