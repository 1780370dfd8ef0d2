#include "mockgl/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mgl {

int Diagram::sign_of(int label) const {
    auto it = std::lower_bound(crossings.begin(), crossings.end(), label,
                               [](const Crossing& c, int l) { return c.label < l; });
    if (it == crossings.end() || it->label != label) throw std::out_of_range("unknown crossing label");
    return it->sign;
}

std::pair<int, int> Diagram::positions(int label) const {
    int o = -1, u = -1;
    for (int i = 0; i < static_cast<int>(passages.size()); ++i)
        if (passages[i].label == label) (passages[i].over ? o : u) = i;
    if (o < 0 || u < 0) throw std::out_of_range("unknown crossing label");
    return {o, u};
}

Diagram make_diagram(std::vector<Passage> passages, const std::map<int, int>& signs, int basepoint) {
    std::map<int, std::pair<int, int>> seen;
    for (const auto& p : passages) {
        auto& s = seen[p.label];
        (p.over ? s.first : s.second)++;
    }
    for (const auto& [label, cnt] : seen) {
        if (cnt.first != 1 || cnt.second != 1)
            throw ParseError("crossing " + std::to_string(label) + " needs exactly one O and one U passage");
        if (!signs.count(label)) throw ParseError("crossing " + std::to_string(label) + " has no sign");
    }
    Diagram d;
    for (const auto& [label, s] : signs) {
        if (!seen.count(label)) throw ParseError("sign given for absent crossing " + std::to_string(label));
        if (s != 1 && s != -1) throw ParseError("crossing sign must be +1 or -1");
        d.crossings.push_back({label, s});
    }
    d.passages = std::move(passages);
    const int len = static_cast<int>(d.passages.size());
    d.basepoint = len ? ((basepoint % len) + len) % len : 0;
    return d;
}

Diagram parse_gauss(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch)) continue;
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 2;
            continue;
        }
        s += static_cast<char>(ch);
    }
    std::vector<Passage> passages;
    std::map<int, int> signs;
    std::size_t i = 0;
    while (i < s.size()) {
        const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        if (kind != 'O' && kind != 'U')
            throw ParseError("malformed token at offset " + std::to_string(i) + ": expected O or U");
        ++i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty() || digits.size() > 9)
            throw ParseError("malformed token at offset " + std::to_string(i) + ": expected crossing label");
        if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
            throw ParseError("malformed token at offset " + std::to_string(i) + ": expected sign");
        const int sign = s[i] == '+' ? 1 : -1;
        ++i;
        const int label = std::stoi(digits);
        auto it = signs.find(label);
        if (it != signs.end() && it->second != sign)
            throw ParseError("sign mismatch between the passages of crossing " + digits);
        signs[label] = sign;
        passages.push_back({label, kind == 'O'});
    }
    return make_diagram(std::move(passages), signs, 0);
}

std::string to_gauss(const Diagram& d) {
    std::ostringstream os;
    for (const auto& p : d.passages) os << (p.over ? 'O' : 'U') << p.label << (d.sign_of(p.label) > 0 ? '+' : '-');
    return os.str();
}

CrossingIndexTable crossing_indices(const Diagram& d) {
    const int len = static_cast<int>(d.passages.size());
    std::map<int, std::pair<int, int>> pos;
    for (int i = 0; i < len; ++i) {
        auto& pr = pos.try_emplace(d.passages[i].label, -1, -1).first->second;
        (d.passages[i].over ? pr.first : pr.second) = i;
    }
    auto inside = [len](int from, int to, int x) {
        // strictly after `from` and strictly before `to`, walking forward cyclically
        const int a = (x - from + len) % len;
        const int b = (to - from + len) % len;
        return a > 0 && a < b;
    };
    CrossingIndexTable out;
    for (const auto& c : d.crossings) {
        const auto [o, u] = pos[c.label];
        int index = 0;
        for (const auto& e : d.crossings) {
            if (e.label == c.label) continue;
            const auto [eo, eu] = pos[e.label];
            const bool over_in_first = inside(o, u, eo);
            const bool under_in_first = inside(o, u, eu);
            if (over_in_first && !under_in_first) index += e.sign;
            if (!over_in_first && under_in_first) index -= e.sign;
        }
        out[c.label] = index;
    }
    return out;
}

Colorability colorability(const Diagram& d) {
    bool all_zero = true, all_even = true;
    for (const auto& [label, ind] : crossing_indices(d)) {
        if (ind != 0) all_zero = false;
        if (ind % 2 != 0) all_even = false;
    }
    if (all_zero) return Colorability::AlmostClassical;
    if (all_even) return Colorability::CheckerboardColorable;
    return Colorability::Neither;
}

std::string to_string(Colorability c) {
    switch (c) {
        case Colorability::AlmostClassical: return "almost_classical";
        case Colorability::CheckerboardColorable: return "checkerboard_colorable";
        default: return "neither";
    }
}

int odd_writhe(const Diagram& d) {
    int w = 0;
    const auto ind = crossing_indices(d);
    for (const auto& c : d.crossings)
        if (ind.at(c.label) % 2 != 0) w += c.sign;
    return w;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

Diagram canonical_labels(const Diagram& d) {
    std::map<int, int> relabel;
    for (const auto& p : d.passages)
        if (!relabel.count(p.label)) relabel[p.label] = static_cast<int>(relabel.size()) + 1;
    std::vector<Passage> ps;
    std::map<int, int> signs;
    for (const auto& p : d.passages) ps.push_back({relabel[p.label], p.over});
    for (const auto& c : d.crossings) signs[relabel[c.label]] = c.sign;
    return make_diagram(std::move(ps), signs, d.basepoint);
}

Diagram rotate(const Diagram& d, int k) {
    const int len = static_cast<int>(d.passages.size());
    if (len == 0) return d;
    k = ((k % len) + len) % len;
    Diagram r = d;
    std::rotate(r.passages.begin(), r.passages.begin() + k, r.passages.end());
    r.basepoint = ((d.basepoint - k) % len + len) % len;
    return r;
}

}  // namespace mgl
