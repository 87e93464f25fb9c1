#include "hypercent/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

double parse_weight(std::string_view text, int line) {
    text = trim(text);
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ParseError(line, "invalid weight '" + std::string(text) + "'");
    return value;
}

// Runs fn and reattaches the line number to any invariant violation it
// raises (parsers report every failure with its input line).
template <typename Fn>
void with_line(int line, Fn&& fn) {
    try {
        fn();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(line, err.what());
    }
}

std::vector<std::string> label_list(std::string_view csv, int line) {
    std::vector<std::string> labels;
    for (std::string_view token : split(csv, ",")) {
        token = trim(token);
        if (token.empty()) throw ParseError(line, "empty node label");
        labels.emplace_back(token);
    }
    return labels;
}

// One line per (label, score) row ordered score-descending, ties by label.
std::vector<int> csv_row_order(const std::vector<double>& scores,
                               const std::vector<std::string>& labels) {
    std::vector<int> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
        return labels[lhs] < labels[rhs];
    });
    return order;
}

void require_converged(const CentralityResult& r, bool allow_unconverged) {
    if (!r.converged && !allow_unconverged)
        fail(errc::not_converged, "result did not converge (" + std::to_string(r.iterations) +
                                      " iterations, residual " + format_double(r.residual) + ")");
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

Hypergraph parse_hyperedges(const std::string& text) {
    Hypergraph h;
    int line_no = 0;
    for (std::string_view raw : split(text, "\n")) {
        ++line_no;
        std::string_view line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;

        double weight = 1.0;
        if (std::size_t colon = line.rfind(':'); colon != std::string_view::npos) {
            weight = parse_weight(line.substr(colon + 1), line_no);
            line = trim(line.substr(0, colon));
        }

        bool cyclic = false;
        if (line.size() > 3 && line.substr(0, 3) == "cyc" && (line[3] == ' ' || line[3] == '\t')) {
            cyclic = true;
            line = trim(line.substr(4));
        }

        std::vector<std::string_view> sides = split(line, "->");
        if (sides.size() > 2) throw ParseError(line_no, "more than one '->'");
        with_line(line_no, [&] {
            if (sides.size() == 2) {
                if (cyclic) throw ParseError(line_no, "cyclic edge cannot be directed");
                std::vector<NodeId> tail, head;
                for (const std::string& label : label_list(sides[0], line_no))
                    tail.push_back(h.intern(label));
                for (const std::string& label : label_list(sides[1], line_no))
                    head.push_back(h.intern(label));
                h.add_edge(Hyperedge::directed(std::move(tail), std::move(head), weight));
            } else {
                std::vector<NodeId> nodes;
                for (const std::string& label : label_list(line, line_no))
                    nodes.push_back(h.intern(label));
                if (cyclic)
                    h.add_edge(Hyperedge::cyclic(std::move(nodes), false, weight));
                else
                    h.add_edge(Hyperedge::undirected(std::move(nodes), weight));
            }
        });
    }
    return h;
}

std::string serialize_hyperedges(const Hypergraph& h) {
    std::string out;
    auto join = [&h](const std::vector<NodeId>& ids) {
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) s += ",";
            s += h.nodes().label(ids[i]);
        }
        return s;
    };
    for (const Hyperedge& e : h.edges()) {
        switch (e.kind) {
            case EdgeKind::undirected: out += join(e.nodes); break;
            case EdgeKind::cyclic: out += "cyc " + join(e.nodes); break;
            case EdgeKind::directed: out += join(e.tail) + " -> " + join(e.head); break;
        }
        if (e.weight != 1.0) out += " : " + format_double(e.weight);
        out += "\n";
    }
    return out;
}

Hypergraph parse_reactions(const std::string& text) {
    Hypergraph h;
    int line_no = 0;
    for (std::string_view raw : split(text, "\n")) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        std::vector<std::string_view> sides = split(line, "->");
        if (sides.size() != 2) throw ParseError(line_no, "reaction needs exactly one '->'");

        auto species_of = [line_no](std::string_view side) {
            std::vector<std::string> species;
            for (std::string_view chunk : split(side, "+")) {
                chunk = trim(chunk);
                if (chunk.empty()) throw ParseError(line_no, "empty species");
                // Drop a leading integer stoichiometric coefficient.
                std::size_t digits = 0;
                while (digits < chunk.size() && chunk[digits] >= '0' && chunk[digits] <= '9')
                    ++digits;
                if (digits > 0 && digits < chunk.size() &&
                    (chunk[digits] == ' ' || chunk[digits] == '\t'))
                    chunk = trim(chunk.substr(digits));
                if (chunk.empty()) throw ParseError(line_no, "empty species after coefficient");
                if (chunk.find(',') != std::string_view::npos)
                    throw ParseError(line_no, "species name contains ','");
                species.emplace_back(chunk);
            }
            std::sort(species.begin(), species.end());
            species.erase(std::unique(species.begin(), species.end()), species.end());
            return species;
        };

        std::string_view left = trim(sides[0]);
        std::string_view right = trim(sides[1]);
        if (left.empty())
            fail(errc::empty_side, "line " + std::to_string(line_no) + ": missing reactants");
        if (right.empty())
            fail(errc::empty_side, "line " + std::to_string(line_no) + ": missing products");

        with_line(line_no, [&] {
            std::vector<NodeId> tail, head;
            for (const std::string& label : species_of(left)) tail.push_back(h.intern(label));
            for (const std::string& label : species_of(right)) head.push_back(h.intern(label));
            h.add_edge(Hyperedge::directed(std::move(tail), std::move(head), 1.0));
        });
    }
    return h;
}

LabeledDigraph parse_edgelist(const std::string& text, bool undirected) {
    NodeRegistry registry;
    struct Row {
        NodeId from, to;
        double weight;
    };
    std::vector<Row> rows;
    int line_no = 0;
    for (std::string_view raw : split(text, "\n")) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
            if (pos > start) fields.push_back(line.substr(start, pos - start));
        }
        if (fields.size() < 2) throw ParseError(line_no, "missing destination node");
        if (fields.size() > 3) throw ParseError(line_no, "expected 'src dst [w]'");
        double weight = fields.size() == 3 ? parse_weight(fields[2], line_no) : 1.0;
        if (!(weight > 0.0))
            fail(errc::non_positive_weight,
                 "line " + std::to_string(line_no) + ": weight must be > 0");
        rows.push_back({registry.intern(std::string(fields[0])),
                        registry.intern(std::string(fields[1])), weight});
    }
    Digraph g(registry.size());
    for (const Row& row : rows) {
        g.add_arc(row.from, row.to, row.weight);
        if (undirected && row.from != row.to) g.add_arc(row.to, row.from, row.weight);
    }
    return {std::move(g), std::move(registry)};
}

std::string rankings_csv(const CentralityResult& r, const Ranking& ranking,
                         const std::vector<std::string>& labels, bool allow_unconverged) {
    require_converged(r, allow_unconverged);
    if (r.scores.size() != labels.size() || r.scores.size() != ranking.ranks.size())
        fail(errc::length_mismatch, "scores/ranks/labels size mismatch");
    std::string out = "node,score,rank\n";
    for (int id : csv_row_order(r.scores, labels))
        out += labels[id] + "," + format_double(r.scores[id]) + "," +
               format_double(ranking.ranks[id]) + "\n";
    return out;
}

std::string rankings_json(const CentralityResult& r, const Ranking& ranking,
                          const std::vector<std::string>& labels, bool allow_unconverged) {
    require_converged(r, allow_unconverged);
    if (r.scores.size() != labels.size() || r.scores.size() != ranking.ranks.size())
        fail(errc::length_mismatch, "scores/ranks/labels size mismatch");
    nlohmann::ordered_json doc;
    doc["lambda"] = r.lambda;
    doc["iterations"] = r.iterations;
    if (std::isfinite(r.residual))
        doc["residual"] = r.residual;
    else
        doc["residual"] = nullptr;
    doc["converged"] = r.converged;
    auto rows = nlohmann::ordered_json::array();
    for (int id : csv_row_order(r.scores, labels)) {
        nlohmann::ordered_json row;
        row["node"] = labels[id];
        row["score"] = r.scores[id];
        row["rank"] = ranking.ranks[id];
        rows.push_back(std::move(row));
    }
    doc["rankings"] = std::move(rows);
    return doc.dump(2) + "\n";
}

RankingsDoc parse_rankings_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, std::string("invalid JSON: ") + err.what());
    }
    RankingsDoc out;
    try {
        out.lambda = doc.at("lambda").get<double>();
        out.iterations = doc.at("iterations").get<int>();
        out.residual = doc.at("residual").is_null()
                           ? std::numeric_limits<double>::infinity()
                           : doc.at("residual").get<double>();
        out.converged = doc.at("converged").get<bool>();
        for (const auto& row : doc.at("rankings")) {
            out.nodes.push_back(row.at("node").get<std::string>());
            out.scores.push_back(row.at("score").get<double>());
            out.ranks.push_back(row.at("rank").get<double>());
        }
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, std::string("unexpected rankings document: ") + err.what());
    }
    return out;
}

std::vector<std::pair<std::string, double>> parse_scores_csv(const std::string& text) {
    std::vector<std::pair<std::string, double>> out;
    int line_no = 0;
    for (std::string_view raw : split(text, "\n")) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line_no == 1 && line.substr(0, 5) == "node,") continue;  // header
        std::vector<std::string_view> fields = split(line, ",");
        if (fields.size() < 2) throw ParseError(line_no, "expected 'node,score[,rank]'");
        out.emplace_back(std::string(trim(fields[0])), parse_weight(fields[1], line_no));
    }
    return out;
}

std::string comparison_csv(const RankComparison& cmp) {
    std::string out = "K,rho_ab,rho_ba\n";
    for (std::size_t i = 0; i < cmp.curve_ab.size(); ++i)
        out += std::to_string(cmp.curve_ab[i].first) + "," +
               format_double(cmp.curve_ab[i].second) + "," +
               format_double(cmp.curve_ba[i].second) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io_error, "read failure on '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) fail(errc::io_error, "write failure on '" + path + "'");
}

}  // namespace hypercent
