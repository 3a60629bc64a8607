#include "pcf/coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcf/errors.hpp"

namespace pcf {

ListAssignment ListAssignment::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<int, std::vector<int>> rows;
    int max_id = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(ParseError::Code::MalformedLine,
                             "missing ':' in list line: " + line);
        std::istringstream head(line.substr(0, colon));
        long v;
        std::string junk;
        if (!(head >> v) || (head >> junk) || v < 0)
            throw ParseError(ParseError::Code::MalformedLine,
                             "bad vertex in list line: " + line);
        std::istringstream tail(line.substr(colon + 1));
        std::vector<int> colors;
        long c;
        while (tail >> c) {
            if (c < 0)
                throw ParseError(ParseError::Code::MalformedLine,
                                 "negative color in list line: " + line);
            colors.push_back(static_cast<int>(c));
        }
        if (!tail.eof())
            throw ParseError(ParseError::Code::MalformedLine,
                             "bad color in list line: " + line);
        if (colors.empty())
            throw ParseError(ParseError::Code::MalformedLine,
                             "empty list for vertex " + std::to_string(v));
        if (rows.count(static_cast<int>(v)))
            throw ParseError(ParseError::Code::MalformedLine,
                             "duplicate list for vertex " + std::to_string(v));
        rows[static_cast<int>(v)] = std::move(colors);
        max_id = std::max(max_id, static_cast<int>(v));
    }
    ListAssignment out(max_id + 1);
    for (auto& [v, colors] : rows) out.set(v, std::move(colors));
    return out;
}

std::string ListAssignment::write() const {
    std::ostringstream out;
    for (int v = 0; v < universe(); ++v) {
        if (lists_[v].empty()) continue;
        out << v << ":";
        for (int c : lists_[v]) out << " " << c;
        out << "\n";
    }
    return out.str();
}

void ListAssignment::set(int v, std::vector<int> colors) {
    PCF_CHECK(v >= 0, "negative vertex id in list assignment");
    if (v >= universe()) lists_.resize(v + 1);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists_[v] = std::move(colors);
}

const std::vector<int>& ListAssignment::list(int v) const {
    if (v < 0 || v >= universe() || lists_[v].empty())
        throw UnknownVertexError(v);
    return lists_[v];
}

Coloring Coloring::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<int, int> rows;
    int max_id = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        long v, c;
        std::string junk;
        if (!(row >> v >> c) || (row >> junk) || v < 0 || c < 0)
            throw ParseError(ParseError::Code::MalformedLine,
                             "bad coloring line: " + line);
        if (rows.count(static_cast<int>(v)))
            throw ParseError(ParseError::Code::MalformedLine,
                             "duplicate color for vertex " + std::to_string(v));
        rows[static_cast<int>(v)] = static_cast<int>(c);
        max_id = std::max(max_id, static_cast<int>(v));
    }
    Coloring out(max_id + 1);
    for (auto [v, c] : rows) out.set(v, c);
    return out;
}

std::string Coloring::write() const {
    std::ostringstream out;
    for (int v = 0; v < universe(); ++v)
        if (color_[v] != kUncolored) out << v << " " << color_[v] << "\n";
    return out.str();
}

int Coloring::color(int v) const {
    if (!is_colored(v)) throw UnknownVertexError(v);
    return color_[v];
}

void Coloring::set(int v, int c) {
    PCF_CHECK(v >= 0 && c >= 0, "bad coloring entry");
    if (v >= universe()) color_.resize(v + 1, kUncolored);
    color_[v] = c;
}

void Coloring::unset(int v) {
    if (v >= 0 && v < universe()) color_[v] = kUncolored;
}

bool Coloring::total_on(const Graph& g) const {
    for (int v : g.vertices())
        if (!is_colored(v)) return false;
    return true;
}

void Coloring::merge(const Coloring& other) {
    for (int v = 0; v < other.universe(); ++v)
        if (other.is_colored(v)) set(v, other.color(v));
}

std::vector<int> unique_colors(const Graph& g, const Coloring& phi, int v) {
    std::map<int, int> count;
    for (int w : g.neighbors(v))
        if (phi.is_colored(w)) ++count[phi.color(w)];
    std::vector<int> out;
    for (auto [c, n] : count)
        if (n == 1) out.push_back(c);
    return out;
}

std::string PcfReport::describe() const {
    std::ostringstream out;
    for (auto [u, v] : proper_violations)
        out << "monochromatic edge " << u << " " << v << "\n";
    for (int v : conflict_violations)
        out << "no uniquely seen color at vertex " << v << "\n";
    for (int v : list_violations)
        out << "color outside list at vertex " << v << "\n";
    return out.str();
}

PcfReport verify_pcf(const Graph& g, const ListAssignment& l,
                     const Coloring& phi) {
    if (!phi.total_on(g))
        throw PreconditionError("verify_pcf requires a total coloring");
    PcfReport report;
    for (int v : g.vertices()) {
        const auto& lv = l.list(v);
        if (!std::binary_search(lv.begin(), lv.end(), phi.color(v)))
            report.list_violations.push_back(v);
        for (int w : g.neighbors(v))
            if (v < w && phi.color(v) == phi.color(w))
                report.proper_violations.emplace_back(v, w);
        if (g.degree(v) > 0 && unique_colors(g, phi, v).empty())
            report.conflict_violations.push_back(v);
    }
    return report;
}

SlackReport validate_slack(const Graph& g, const ListAssignment& l, int k) {
    PCF_CHECK(k >= 0, "negative slack");
    SlackReport report;
    for (int v : g.vertices()) {
        int have = (v < l.universe() && l.has(v))
                       ? static_cast<int>(l.list(v).size())
                       : 0;
        if (have < g.degree(v) + k) {
            report.ok = false;
            report.deficient.push_back(v);
        }
    }
    return report;
}

}  // namespace pcf
