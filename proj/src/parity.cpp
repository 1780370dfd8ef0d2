#include "mockgl/parity.hpp"

#include <cctype>

namespace mgl {

ParityKind ParityKind::mod(int n) {
    if (n < 2) throw PreconditionError("mod n parity needs n >= 2");
    return {Kind::ModN, n};
}

bool ParityKind::odd(int ind) const {
    if (kind == Kind::Total) return ind != 0;
    return ind % n != 0;
}

std::string to_string(const ParityKind& p) {
    return p.kind == ParityKind::Kind::Total ? "total" : "mod" + std::to_string(p.n);
}

ParityKind parse_parity(const std::string& text) {
    std::string s;
    for (char ch : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s == "total" || s == "0") return ParityKind::total();
    if (s.rfind("mod", 0) == 0) {
        s = s.substr(3);
        if (!s.empty() && s[0] == '_') s.erase(0, 1);
    }
    if (s.empty() || s.size() > 6) throw ParseError("unknown parity '" + text + "'");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("unknown parity '" + text + "'");
    const int n = std::stoi(s);
    if (n == 0) return ParityKind::total();
    if (n < 2) throw ParseError("mod n parity needs n >= 2");
    return ParityKind::mod(n);
}

Diagram project(const Diagram& d, const ParityKind& p) {
    const auto ind = crossing_indices(d);
    std::map<int, int> keep;
    for (const auto& c : d.crossings)
        if (!p.odd(ind.at(c.label))) keep[c.label] = c.sign;
    if (keep.size() == d.crossings.size()) return d;

    std::map<int, int> relabel;
    for (const auto& [label, s] : keep) relabel[label] = static_cast<int>(relabel.size()) + 1;
    std::vector<Passage> ps;
    std::map<int, int> signs;
    int base = 0;
    for (int i = 0; i < static_cast<int>(d.passages.size()); ++i) {
        const auto& q = d.passages[i];
        if (!keep.count(q.label)) continue;
        if (i < d.basepoint) ++base;
        ps.push_back({relabel[q.label], q.over});
    }
    for (const auto& [label, s] : keep) signs[relabel[label]] = s;
    return make_diagram(std::move(ps), signs, base);
}

std::pair<Diagram, int> stable_project(const Diagram& d, const ParityKind& p) {
    Diagram cur = d;
    int iterations = 0;
    for (;;) {
        Diagram next = project(cur, p);
        if (next.size() == cur.size()) return {cur, iterations};
        cur = std::move(next);
        ++iterations;
    }
}

}  // namespace mgl
