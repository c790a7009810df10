#pragma once

#include <sstream>

#include "json.hpp"  // vendored nlohmann/json

#include "socrank/verify.hpp"

namespace socrank {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// The ranking file format
// ---------------------------------------------------------------------------
// Line 1:  n=<int>
// Then one line per equivalence class, best class first. A coalition is a
// brace-delimited, comma-separated list of 1-indexed individuals; "{}" is
// the empty coalition. Whitespace is free within a line.
//
//   n=3
//   {1} {3} {1,2}
//   {2}
//   {1,3} {2,3} {1,2,3} {}

struct RankingDocument {
    int n = 0;
    std::vector<std::vector<Coalition>> classes;
};

namespace detail {

struct LineScanner {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }
    bool eol() {
        skip_ws();
        return pos >= s.size();
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(line, column(), std::string("expected ") + what);
        ++pos;
    }
    int integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError(line, column(), "expected a number");
        return std::stoi(s.substr(start, pos - start));
    }
};

}  // namespace detail

inline RankingDocument parse_ranking(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    auto blank = [](const std::string& s) {
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\r') return false;
        return true;
    };

    std::size_t row = 0;
    while (row < lines.size() && blank(lines[row])) ++row;
    if (row >= lines.size()) throw ParseError(1, 1, "empty document; expected n=<int>");

    RankingDocument doc;
    {
        detail::LineScanner sc{lines[row], static_cast<int>(row) + 1};
        sc.expect('n', "'n'");
        sc.expect('=', "'='");
        doc.n = sc.integer();
        if (!sc.eol()) throw ParseError(sc.line, sc.column(), "trailing input after n=<int>");
        if (doc.n < 1 || doc.n > 8)
            throw ParseError(sc.line, 1, "n must be in 1..8");
    }
    ++row;

    for (; row < lines.size(); ++row) {
        if (blank(lines[row])) continue;
        detail::LineScanner sc{lines[row], static_cast<int>(row) + 1};
        std::vector<Coalition> cls;
        while (!sc.eol()) {
            sc.expect('{', "'{'");
            Coalition c;
            sc.skip_ws();
            if (sc.peek() != '}') {
                while (true) {
                    const int col = sc.column();
                    const int member = sc.integer();
                    if (member < 1 || member > doc.n)
                        throw ParseError(sc.line, col,
                                         "individual " + std::to_string(member) +
                                             " outside 1.." + std::to_string(doc.n));
                    if (c.contains(member - 1))
                        throw ParseError(sc.line, col, "duplicate individual in coalition");
                    c = c.with(member - 1);
                    sc.skip_ws();
                    if (sc.peek() == ',') {
                        ++sc.pos;
                        continue;
                    }
                    break;
                }
            }
            sc.expect('}', "'}'");
            cls.push_back(c);
        }
        if (cls.empty())
            throw ParseError(static_cast<int>(row) + 1, 1, "class line without coalitions");
        doc.classes.push_back(std::move(cls));
    }
    if (doc.classes.empty()) throw ParseError(static_cast<int>(row), 1, "no class lines");
    return doc;
}

inline PowerRanking to_power_ranking(const RankingDocument& doc) {
    return make_power_ranking(Universe(doc.n), doc.classes);
}

inline PowerRanking parse_power_ranking(const std::string& text) {
    return to_power_ranking(parse_ranking(text));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string render_coalition(Coalition c) {
    std::string out = "{";
    bool first = true;
    for (Individual i : c.members()) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

/// Canonical file-format text: coalitions within a class ordered by size
/// then members.
inline std::string render_ranking(const PowerRanking& r) {
    std::string out = "n=" + std::to_string(r.universe().n) + "\n";
    for (const auto& cls : r.classes()) {
        std::vector<Coalition> sorted = cls;
        std::sort(sorted.begin(), sorted.end(), [](Coalition a, Coalition b) {
            return std::make_pair(a.size(), a.bits) < std::make_pair(b.size(), b.bits);
        });
        for (std::size_t i = 0; i < sorted.size(); ++i)
            out += (i ? " " : "") + render_coalition(sorted[i]);
        out += "\n";
    }
    return out;
}

inline std::string render_ranking(int n, const OrderedPartition& code) {
    return render_ranking(ranking_from_code(Universe(n), code));
}

/// "1 > 2 ~ 3": strict steps between classes, ties within a class.
inline std::string render_social(const SocialRanking& r) {
    std::string out;
    for (std::size_t k = 0; k < r.classes().size(); ++k) {
        if (k) out += " > ";
        std::vector<Individual> members = r.classes()[k];
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out += " ~ ";
            out += std::to_string(members[i] + 1);
        }
    }
    return out;
}

inline TieBreakOrder parse_tiebreak(const std::string& text, int n) {
    std::vector<Individual> order;
    detail::LineScanner sc{text, 1};
    while (!sc.eol()) {
        const int col = sc.column();
        const int v = sc.integer();
        if (v < 1 || v > n)
            throw ParseError(1, col, "tie-break individual outside 1.." + std::to_string(n));
        order.push_back(v - 1);
        sc.skip_ws();
        if (sc.peek() == '>') ++sc.pos;
    }
    if (static_cast<int>(order.size()) != n)
        throw ParseError(1, 1, "tie-break order must list all " + std::to_string(n) +
                                  " individuals");
    return TieBreakOrder(order);
}

// ---------------------------------------------------------------------------
// Machine-readable reports
// ---------------------------------------------------------------------------

inline json witness_to_json(const Witness& w) {
    json j;
    j["n"] = w.n;
    j["ranking"] = render_ranking(w.n, w.base);
    if (w.transformed) j["ranking_after"] = render_ranking(w.n, *w.transformed);
    if (w.permutation) {
        json images = json::array();
        for (int v : *w.permutation) images.push_back(v + 1);
        j["permutation"] = images;
    }
    if (w.delta != 0) {
        json delta = json::array();
        for (std::uint32_t b = w.delta; b != 0; b &= b - 1)
            delta.push_back(render_coalition(Coalition{(std::uint32_t)std::countr_zero(b)}));
        j["delta"] = delta;
    }
    if (w.k1 >= 0) j["k1"] = w.k1 + 1;
    if (w.k2 >= 0) j["k2"] = w.k2 + 1;
    j["x"] = w.x + 1;
    j["y"] = w.y + 1;
    j["before"] = to_string(w.before);
    j["after"] = to_string(w.after);
    j["note"] = w.note;
    return j;
}

inline json verdict_to_json(const AxiomVerdict& v, const std::string& srs) {
    json j;
    j["axiom"] = axiom_id(v.axiom);
    j["srs"] = srs;
    j["mode"] = to_string(v.mode);
    j["outcome"] = v.holds ? "holds" : "fails";
    j["universe_n"] = v.universe_n;
    j["instances"] = v.instances;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

inline json table3_to_json(const MatrixReport& report) {
    json j;
    j["n"] = report.n;
    j["seed"] = report.seed;
    j["matches"] = report.all_match();
    json cells = json::array();
    for (const auto& c : report.cells) {
        json cj = verdict_to_json(c.verdict, c.srs);
        cj["expected"] = c.expected;
        cj["evidence_n"] = c.evidence_n;
        cj["matches"] = c.matches;
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    return j;
}

inline std::string table3_to_csv(const MatrixReport& report) {
    std::string out = "srs";
    for (Axiom a : table_axioms()) out += std::string(",") + axiom_label(a);
    out += "\n";
    for (const auto& name : matrix_srs_names()) {
        out += name;
        for (Axiom a : table_axioms())
            out += report.cell(name, a).verdict.holds ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

/// Fixed-width text grid with per-cell evidence markers.
inline std::string table3_to_text(const MatrixReport& report) {
    std::ostringstream out;
    out << "satisfaction matrix at n=" << report.n << " (1 holds, 0 fails; 's' sampled, "
        << "'r' stored witness at n=3)\n\n";
    out << "                 ";
    for (Axiom a : table_axioms()) {
        std::string label = axiom_label(a);
        out << label;
        for (std::size_t i = label.size(); i < 7; ++i) out << ' ';
    }
    out << "\n";
    for (const auto& name : matrix_srs_names()) {
        out << name;
        for (std::size_t i = name.size(); i < 17; ++i) out << ' ';
        for (Axiom a : table_axioms()) {
            const Table3Cell& c = report.cell(name, a);
            std::string cell = c.verdict.holds ? "1" : "0";
            if (c.verdict.mode == EvidenceMode::sampled) cell += "s";
            if (c.verdict.mode == EvidenceMode::registry) cell += "r";
            if (!c.matches) cell += "!";
            out << cell;
            for (std::size_t i = cell.size(); i < 7; ++i) out << ' ';
        }
        out << "\n";
    }
    if (!report.all_match()) {
        out << "\ndiscrepancies:\n";
        for (const auto* c : report.discrepancies())
            out << "  " << c->srs << "/" << axiom_label(c->axiom) << ": expected " << c->expected
                << ", got " << (c->verdict.holds ? "holds" : "fails") << "\n";
    }
    return out.str();
}

}  // namespace socrank
