#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rdist/error.hpp"
#include "rdist/graph.hpp"
#include "rdist/matrix.hpp"
#include "rdist/rational.hpp"

namespace rdist {

namespace detail {

/// Non-whitespace characters paired with their offsets in the original text.
class SpecCursor {
public:
    explicit SpecCursor(std::string_view text) : source_(text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.emplace_back(text[i], i);
    }

    bool done() const noexcept { return at_ == chars_.size(); }
    char peek() const noexcept { return done() ? '\0' : chars_[at_].first; }
    std::size_t position() const noexcept { return done() ? source_.size() : chars_[at_].second; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse_error, what + " at position " + std::to_string(position()), position());
    }

    void expect(char c) {
        if (std::tolower(static_cast<unsigned char>(peek())) != c) fail(std::string("expected '") + c + "'");
        ++at_;
    }

    bool accept(char c) {
        if (done() || peek() != c) return false;
        ++at_;
        return true;
    }

    std::size_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::size_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::size_t>(peek() - '0');
            if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) fail("number too large");
            value = value * 10 + digit;
            ++at_;
        }
        return value;
    }

private:
    std::string_view source_;
    std::vector<std::pair<char, std::size_t>> chars_;
    std::size_t at_ = 0;
};

}  // namespace detail

/// Parses `P<n>`, `C<n>`, `K<n>` or `edges:<n>:<i>-<j>[,<i>-<j>...]`.
/// Whitespace is ignored and the family letter (and `edges`) is
/// case-insensitive. Syntax errors throw ParseError with the offending
/// offset; semantic problems surface as the graph constructors' errors.
inline Graph parse_graph_spec(std::string_view text) {
    detail::SpecCursor in(text);
    if (in.done()) in.fail("empty graph spec");

    const char family = static_cast<char>(std::tolower(static_cast<unsigned char>(in.peek())));
    if (family == 'e') {
        for (char c : std::string_view("edges")) in.expect(c);
        in.expect(':');
        const std::size_t n = in.number();
        in.expect(':');
        std::vector<Edge> edges;
        if (!in.done()) {
            do {
                const std::size_t u = in.number();
                in.expect('-');
                edges.emplace_back(u, in.number());
            } while (in.accept(','));
        }
        if (!in.done()) in.fail("unexpected character");
        return graph_from_edges(n, edges);
    }

    if (family != 'p' && family != 'c' && family != 'k') in.fail("unknown graph family");
    in.expect(family);
    const std::size_t n = in.number();
    if (!in.done()) in.fail("unexpected character");
    switch (family) {
        case 'p': return path_graph(n);
        case 'c': return cycle_graph(n);
        default: return complete_graph(n);
    }
}

/// Canonical edge-list spec; parse_graph_spec(to_graph_spec(g)) == g.
inline std::string to_graph_spec(const Graph& g) {
    std::string out = "edges:" + std::to_string(g.order()) + ":";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

namespace detail {

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    /// Next token: an identifier/number/quoted string, "--", or a single
    /// punctuation character. Empty at end of input.
    std::string next() {
        skip_trivia();
        start_ = at_;
        if (at_ >= text_.size()) return {};
        const char c = text_[at_];
        if (c == '"') {
            std::string out;
            for (++at_; at_ < text_.size() && text_[at_] != '"'; ++at_) {
                if (text_[at_] == '\\' && at_ + 1 < text_.size()) ++at_;
                out.push_back(text_[at_]);
            }
            if (at_ >= text_.size()) fail("unterminated string");
            ++at_;
            quoted_ = true;
            return out;
        }
        quoted_ = false;
        if (c == '-' && at_ + 1 < text_.size() && (text_[at_ + 1] == '-' || text_[at_ + 1] == '>')) {
            at_ += 2;
            return std::string(text_.substr(start_, 2));
        }
        if (is_id_char(c)) {
            while (at_ < text_.size() && is_id_char(text_[at_])) ++at_;
            return std::string(text_.substr(start_, at_ - start_));
        }
        ++at_;
        return std::string(1, c);
    }

    bool last_was_id(const std::string& tok) const {
        return quoted_ || (!tok.empty() && is_id_char(tok.front()));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse_error, "DOT: " + what + " at position " + std::to_string(start_), start_);
    }

private:
    static bool is_id_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    }

    void skip_trivia() {
        while (at_ < text_.size()) {
            const char c = text_[at_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++at_;
            } else if (c == '#' || text_.substr(at_, 2) == "//") {
                while (at_ < text_.size() && text_[at_] != '\n') ++at_;
            } else if (text_.substr(at_, 2) == "/*") {
                const auto end = text_.find("*/", at_ + 2);
                at_ = end == std::string_view::npos ? text_.size() : end + 2;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t at_ = 0;
    std::size_t start_ = 0;
    bool quoted_ = false;
};

inline bool is_positive_integer(const std::string& s) {
    return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
           std::stoull(s) > 0;
}

}  // namespace detail

/// Reads the undirected DOT subset `[strict] graph [name] { a -- b -- c; d; }`.
/// Attributes, subgraphs and directed edges are rejected. When every node
/// name is a positive integer the vertices are numbered in ascending numeric
/// order; otherwise in order of first appearance.
inline Graph parse_dot(std::string_view text) {
    detail::DotLexer lex(text);
    std::string tok = lex.next();
    auto lower = [](std::string s) {
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    if (lower(tok) == "strict") tok = lex.next();
    if (lower(tok) == "digraph") lex.fail("directed graphs are not supported");
    if (lower(tok) != "graph") lex.fail("expected 'graph'");
    tok = lex.next();
    if (tok != "{") {
        if (!lex.last_was_id(tok)) lex.fail("expected graph name or '{'");
        tok = lex.next();
    }
    if (tok != "{") lex.fail("expected '{'");

    std::vector<std::string> names;
    std::map<std::string, std::size_t> seen;
    std::vector<std::pair<std::size_t, std::size_t>> raw_edges;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = seen.emplace(name, names.size());
        if (inserted) names.push_back(name);
        return it->second;
    };

    tok = lex.next();
    while (tok != "}") {
        if (tok.empty()) lex.fail("missing '}'");
        if (tok == ";" || tok == ",") {
            tok = lex.next();
            continue;
        }
        if (!lex.last_was_id(tok)) lex.fail("unexpected '" + tok + "'");
        if (lower(tok) == "node" || lower(tok) == "edge" || lower(tok) == "subgraph")
            lex.fail("'" + tok + "' statements are not supported");
        std::size_t from = intern(tok);
        tok = lex.next();
        if (tok == "=" || tok == "[") lex.fail("attributes are not supported");
        while (tok == "--" || tok == "->") {
            if (tok == "->") lex.fail("directed edges are not supported");
            tok = lex.next();
            if (!lex.last_was_id(tok)) lex.fail("expected a node name after '--'");
            const std::size_t to = intern(tok);
            raw_edges.emplace_back(from, to);
            from = to;
            tok = lex.next();
            if (tok == "[") lex.fail("attributes are not supported");
        }
    }
    if (names.empty()) throw Error(Errc::empty_graph, "DOT graph has no nodes");

    std::vector<std::size_t> vertex_of(names.size());
    const bool numeric = std::all_of(names.begin(), names.end(), detail::is_positive_integer);
    std::vector<std::size_t> order(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (numeric)
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return std::stoull(names[a]) < std::stoull(names[b]); });
    for (std::size_t rank = 0; rank < order.size(); ++rank) vertex_of[order[rank]] = rank + 1;

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [a, b] : raw_edges) edges.emplace_back(vertex_of[a], vertex_of[b]);
    return graph_from_edges(names.size(), edges);
}

/// `@path` reads a DOT file; anything else is a graph spec.
inline Graph load_graph(std::string_view spec) {
    if (!spec.empty() && spec.front() == '@') {
        const std::string path(spec.substr(1));
        std::ifstream file(path);
        if (!file) throw Error(Errc::parse_error, "cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        return parse_dot(buffer.str());
    }
    return parse_graph_spec(spec);
}

enum class Format { table, csv, json };
enum class ValueMode { exact, decimal };

struct RenderOptions {
    Format format = Format::table;
    ValueMode values = ValueMode::exact;
    unsigned decimals = 6;
};

/// A labelled matrix result plus the metadata echoed into every format.
struct OutputDocument {
    std::string operation;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::string> labels;
    Matrix<Rational> matrix;
    std::optional<Rational> kirchhoff_index;
    std::optional<bool> verified;
};

namespace detail {

inline std::string render_value(const Rational& q, const RenderOptions& opt) {
    return opt.values == ValueMode::exact ? to_string(q) : to_decimal(q, opt.decimals);
}

inline std::string serialize_csv(const OutputDocument& doc, const RenderOptions& opt) {
    std::string out;
    for (std::size_t c = 0; c < doc.labels.size(); ++c) {
        if (c) out += ',';
        out += doc.labels[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < doc.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < doc.matrix.cols(); ++c) {
            if (c) out += ',';
            out += render_value(doc.matrix(r, c), opt);
        }
        out += '\n';
    }
    return out;
}

inline std::string serialize_json(const OutputDocument& doc, const RenderOptions& opt) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["operation"] = doc.operation;
    ordered_json inputs = ordered_json::object();
    for (const auto& [key, value] : doc.inputs) inputs[key] = value;
    j["inputs"] = inputs;
    j["values"] = opt.values == ValueMode::exact ? "exact" : "decimal";
    if (opt.values == ValueMode::decimal) j["decimals"] = opt.decimals;
    j["labels"] = doc.labels;

    auto value = [&](const Rational& q) -> ordered_json {
        if (opt.values == ValueMode::exact) return to_string(q);
        return std::stod(to_decimal(q, opt.decimals));
    };
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < doc.matrix.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < doc.matrix.cols(); ++c) row.push_back(value(doc.matrix(r, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    if (doc.kirchhoff_index) j["kirchhoff_index"] = value(*doc.kirchhoff_index);
    if (doc.verified) j["verified"] = *doc.verified;
    return j.dump(2) + "\n";
}

inline std::string serialize_table(const OutputDocument& doc, const RenderOptions& opt) {
    const std::size_t n = doc.matrix.rows();
    std::vector<std::string> cells;
    cells.reserve(n * doc.matrix.cols());
    std::size_t width = 0, label_width = 0;
    for (const auto& l : doc.labels) {
        width = std::max(width, l.size());
        label_width = std::max(label_width, l.size());
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < doc.matrix.cols(); ++c) {
            cells.push_back(render_value(doc.matrix(r, c), opt));
            width = std::max(width, cells.back().size());
        }

    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::string out = "# " + doc.operation;
    for (const auto& [key, value] : doc.inputs) out += "  " + key + "=" + value;
    out += "\n" + std::string(label_width, ' ');
    for (std::size_t c = 0; c < doc.matrix.cols() && c < doc.labels.size(); ++c) out += "  " + pad(doc.labels[c], width);
    out += '\n';
    for (std::size_t r = 0; r < n; ++r) {
        out += pad(r < doc.labels.size() ? doc.labels[r] : std::string(), label_width);
        for (std::size_t c = 0; c < doc.matrix.cols(); ++c) out += "  " + pad(cells[r * doc.matrix.cols() + c], width);
        out += '\n';
    }
    if (doc.kirchhoff_index) out += "Kirchhoff index: " + render_value(*doc.kirchhoff_index, opt) + "\n";
    if (doc.verified) out += std::string("verify: ") + (*doc.verified ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace detail

/// CSV: label header then one row per vertex. JSON: operation, inputs,
/// labels, matrix (strings when exact, numbers when decimal), optional
/// kirchhoff_index and verified. Table: aligned grid for reading.
inline std::string serialize(const OutputDocument& doc, const RenderOptions& opt) {
    switch (opt.format) {
        case Format::csv: return detail::serialize_csv(doc, opt);
        case Format::json: return detail::serialize_json(doc, opt);
        case Format::table: break;
    }
    return detail::serialize_table(doc, opt);
}

/// Reads back the matrix of a CSV document (header row skipped).
inline Matrix<Rational> parse_csv_matrix(std::string_view csv) {
    std::vector<std::vector<Rational>> rows;
    std::size_t line_start = 0;
    bool header = true;
    while (line_start < csv.size()) {
        auto line_end = csv.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = csv.size();
        const auto line = csv.substr(line_start, line_end - line_start);
        line_start = line_end + 1;
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::size_t cell_start = 0;
        while (true) {
            const auto comma = line.find(',', cell_start);
            row.push_back(parse_rational(line.substr(cell_start, comma - cell_start)));
            if (comma == std::string_view::npos) break;
            cell_start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw Error(Errc::parse_error, "ragged CSV row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace rdist
