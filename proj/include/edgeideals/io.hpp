#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgeideals/betti.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

/// Raised on malformed graph files, family strings or field flags.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Graph text format: '#' starts a comment line; the first data line is
 * `n <count>`; every further data line is `<u> <v>` with 0 <= u,v < n
 * and u != v. Duplicate edges collapse.
 */
inline Graph parse_graph_stream(std::istream& in) {
    std::optional<int> n;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        std::string trimmed(sv);
        std::istringstream ls(trimmed);
        if (!n) {
            std::string key;
            if (!(ls >> key)) continue; // blank
            long long count;
            if (key != "n" || !(ls >> count))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header `n <count>`");
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
            if (count < 0 || count > 64)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertex count must be in [0, 64]");
            n = static_cast<int>(count);
        } else {
            long long u, v;
            if (!(ls >> u)) continue; // blank
            if (!(ls >> v))
                throw ParseError("line " + std::to_string(lineno) + ": expected `<u> <v>`");
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
            if (u < 0 || v < 0 || u >= *n || v >= *n)
                throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop edge");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (!n) throw ParseError("missing header line `n <count>`");
    return make_graph(*n, std::move(edges));
}

enum class FamilyKind { complete, bipartite, multipartite, star, cycle, line };

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

/**
 * Family shorthand strings: complete:4, bipartite:2,3, multipartite:2,2,3,
 * star:4, cycle:6, line:5.
 */
inline FamilySpec parse_family(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("family string needs `name:params`");
    std::string name = s.substr(0, colon);
    std::vector<int> params;
    std::string rest = s.substr(colon + 1);
    std::istringstream ps(rest);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("junk");
            params.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad family parameter `" + tok + "`");
        }
    }
    if (params.empty()) throw ParseError("family string needs parameters");
    FamilySpec f;
    if (name == "complete") f.kind = FamilyKind::complete;
    else if (name == "bipartite") f.kind = FamilyKind::bipartite;
    else if (name == "multipartite") f.kind = FamilyKind::multipartite;
    else if (name == "star") f.kind = FamilyKind::star;
    else if (name == "cycle") f.kind = FamilyKind::cycle;
    else if (name == "line") f.kind = FamilyKind::line;
    else throw ParseError("unknown family `" + name + "`");
    auto expect = [&](std::size_t k) {
        if (params.size() != k)
            throw ParseError("family `" + name + "` takes " + std::to_string(k) +
                             " parameter(s)");
    };
    switch (f.kind) {
    case FamilyKind::complete:
    case FamilyKind::star:
    case FamilyKind::cycle:
    case FamilyKind::line: expect(1); break;
    case FamilyKind::bipartite: expect(2); break;
    case FamilyKind::multipartite:
        if (params.size() < 2) throw ParseError("family `multipartite` takes >= 2 parameters");
        break;
    }
    f.params = std::move(params);
    return f;
}

inline Graph family_graph(const FamilySpec& f) {
    switch (f.kind) {
    case FamilyKind::complete: return complete_graph(f.params[0]);
    case FamilyKind::bipartite: return complete_bipartite_graph(f.params[0], f.params[1]);
    case FamilyKind::multipartite: return complete_multipartite_graph(f.params);
    case FamilyKind::star: return star_graph(f.params[0]);
    case FamilyKind::cycle: return cycle_graph(f.params[0]);
    case FamilyKind::line: return line_graph(f.params[0]);
    }
    throw std::logic_error("unreachable");
}

inline BettiTable family_betti(const FamilySpec& f) {
    switch (f.kind) {
    case FamilyKind::complete: return betti_complete(f.params[0]);
    case FamilyKind::bipartite: return betti_complete_bipartite(f.params[0], f.params[1]);
    case FamilyKind::multipartite: return betti_complete_multipartite(f.params);
    case FamilyKind::star: return betti_star(f.params[0]);
    case FamilyKind::cycle: return betti_cycle(f.params[0]);
    case FamilyKind::line: return betti_line(f.params[0]);
    }
    throw std::logic_error("unreachable");
}

/// Closed-form projective dimension per family.
inline int pd_closed_form(const FamilySpec& f) {
    switch (f.kind) {
    case FamilyKind::complete: return pd_complete(f.params[0]);
    case FamilyKind::bipartite: return pd_complete_bipartite(f.params[0], f.params[1]);
    case FamilyKind::multipartite: return pd_complete_multipartite(f.params);
    case FamilyKind::star: return pd_star(f.params[0]);
    case FamilyKind::cycle: return pd_cycle(f.params[0]);
    case FamilyKind::line: return pd_line(f.params[0]);
    }
    throw std::logic_error("unreachable");
}

/// Field flag grammar: `0` for the rationals, `2`, or `p:<prime>`.
inline FieldSpec parse_field_flag(const std::string& s) {
    try {
        std::string digits = s;
        if (s.rfind("p:", 0) == 0) digits = s.substr(2);
        std::size_t used = 0;
        long long v = std::stoll(digits, &used);
        if (used != digits.size() || v < 0 || v > 0x7fffffff)
            throw std::invalid_argument("junk");
        return make_field(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
        throw ParseError("bad field flag `" + s + "`: expected 0, a prime, or p:<prime>");
    }
}

inline FieldSpec parse_field_name(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "F2") return prime_field(2);
    if (s.rfind("Fp:", 0) == 0) {
        try {
            return prime_field(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
        } catch (const std::exception&) {
        }
    }
    throw ParseError("bad field name `" + s + "`");
}

inline nlohmann::json table_to_json(const BettiTable& t, FieldSpec field) {
    nlohmann::json j;
    j["convention"] = t.convention == Convention::quotient ? "quotient" : "ideal";
    j["field"] = field_name(field);
    j["n"] = t.n;
    nlohmann::json graded = nlohmann::json::array();
    for (const auto& [key, v] : t.graded)
        graded.push_back({{"i", key.first}, {"d", key.second}, {"value", v}});
    j["graded"] = std::move(graded);
    if (t.has_multigraded) {
        nlohmann::json multi = nlohmann::json::array();
        for (const auto& [key, v] : t.multigraded) {
            std::vector<int> b(static_cast<std::size_t>(t.n), 0);
            for (int c = 0; c < t.n; ++c)
                if (key.second & bit(c)) b[static_cast<std::size_t>(c)] = 1;
            multi.push_back({{"i", key.first}, {"b", b}, {"value", v}});
        }
        j["multigraded"] = std::move(multi);
    }
    j["pd"] = t.pd();
    return j;
}

struct ParsedTable {
    BettiTable table;
    FieldSpec field;
    int pd = 0;
};

inline ParsedTable table_from_json(const nlohmann::json& j) {
    ParsedTable out;
    std::string conv = j.at("convention").get<std::string>();
    if (conv == "quotient") out.table.convention = Convention::quotient;
    else if (conv == "ideal") out.table.convention = Convention::ideal;
    else throw ParseError("bad convention `" + conv + "`");
    out.field = parse_field_name(j.at("field").get<std::string>());
    out.table.n = j.at("n").get<int>();
    for (const auto& e : j.at("graded"))
        out.table.add(e.at("i").get<int>(), e.at("d").get<int>(), e.at("value").get<long long>());
    if (j.contains("multigraded")) {
        for (const auto& e : j.at("multigraded")) {
            VertexSet mask = 0;
            const auto& b = e.at("b");
            for (std::size_t c = 0; c < b.size(); ++c)
                if (b[c].get<int>() != 0) mask |= bit(static_cast<int>(c));
            out.table.add_multi(e.at("i").get<int>(), mask, e.at("value").get<long long>());
        }
    }
    out.pd = j.at("pd").get<int>();
    return out;
}

/// Macaulay-style diagram: rows indexed by i, columns by occurring degrees.
inline std::string render_table_text(const BettiTable& t) {
    std::vector<int> degrees;
    int max_i = 0;
    for (const auto& [key, v] : t.graded) {
        (void)v;
        degrees.push_back(key.second);
        max_i = std::max(max_i, key.first);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<std::size_t> width(degrees.size());
    for (std::size_t c = 0; c < degrees.size(); ++c) {
        width[c] = std::to_string(degrees[c]).size();
        for (int i = 0; i <= max_i; ++i) {
            long long v = t.at(i, degrees[c]);
            if (v != 0) width[c] = std::max(width[c], std::to_string(v).size());
        }
    }
    std::size_t label = std::to_string(max_i).size();
    std::ostringstream os;
    os << "  " << std::string(label + 2, ' ') << "d:";
    for (std::size_t c = 0; c < degrees.size(); ++c) {
        std::string h = std::to_string(degrees[c]);
        os << ' ' << std::string(width[c] - h.size(), ' ') << h;
    }
    os << '\n';
    for (int i = 0; i <= max_i; ++i) {
        std::string row = std::to_string(i);
        os << "  i=" << std::string(label - row.size(), ' ') << row << "  :";
        for (std::size_t c = 0; c < degrees.size(); ++c) {
            long long v = t.at(i, degrees[c]);
            std::string cell = v == 0 ? "." : std::to_string(v);
            os << ' ' << std::string(width[c] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    PdResult pd = t.pd_result();
    os << "pd = " << pd.value << "  (beta_{" << pd.cert_i << "," << pd.cert_d << "} != 0)\n";
    return os.str();
}

} // namespace edgeideals
