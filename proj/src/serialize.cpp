#include "mockgl/serialize.hpp"

#include <sstream>

namespace mgl {

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json rat_json(const Rat& v) {
    if (denominator(v) == 1) return int_json(numerator(v));
    return to_string(v);
}

json matrix_json(const IntMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(int_json(a(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const int n = static_cast<int>(j.size());
    int m = -1;
    IntMatrix a;
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array()) throw ParseError("matrix row must be an array");
        if (m < 0) {
            m = static_cast<int>(j[i].size());
            a = IntMatrix(n, m);
        }
        if (static_cast<int>(j[i].size()) != m) throw ParseError("ragged matrix rows");
        for (int k = 0; k < m; ++k) a(i, k) = int_from_json(j[i][k]);
    }
    return n == 0 ? IntMatrix(0, 0) : a;
}

IntMatrix parse_matrix(const std::string& text) {
    std::string t;
    for (char ch : text) t += ch == '\r' ? '\n' : ch;
    const auto first = t.find_first_not_of(" \t\n");
    if (first != std::string::npos && t[first] == '[') {
        try {
            return matrix_from_json(json::parse(t));
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed matrix: ") + e.what());
        }
    }
    std::vector<std::vector<Int>> rows;
    std::string line;
    std::istringstream in(t);
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream rs(line);
        std::string row;
        while (std::getline(rs, row, ';')) {
            for (char& ch : row)
                if (ch == ',') ch = ' ';
            std::istringstream es(row);
            std::vector<Int> r;
            std::string tok;
            while (es >> tok) {
                std::string clean;
                for (std::size_t i = 0; i < tok.size(); ++i) {
                    if (static_cast<unsigned char>(tok[i]) == 0xE2 && i + 2 < tok.size()) {
                        clean += '-';
                        i += 2;
                    } else {
                        clean += tok[i];
                    }
                }
                if (clean.empty() || clean.find_first_not_of("+-0123456789") != std::string::npos ||
                    clean.find_first_of("0123456789") == std::string::npos)
                    throw ParseError("malformed matrix entry '" + tok + "'");
                if (clean[0] == '+') clean.erase(0, 1);
                try {
                    r.emplace_back(clean);
                } catch (const std::exception&) {
                    throw ParseError("malformed matrix entry '" + tok + "'");
                }
            }
            if (!r.empty()) rows.push_back(std::move(r));
        }
    }
    const int n = static_cast<int>(rows.size());
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw ParseError("matrix must be square");
        for (int j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

void to_json(json& j, const Diagram& d) {
    const auto ind = crossing_indices(d);
    json cs = json::array();
    for (const auto& c : d.crossings) cs.push_back({{"label", c.label}, {"sign", c.sign}, {"index", ind.at(c.label)}});
    j = {{"code", to_gauss(d)},
         {"basepoint", d.basepoint},
         {"crossings", cs},
         {"colorability", to_string(colorability(d))},
         {"writhe", writhe(d)},
         {"odd_writhe", odd_writhe(d)}};
}

void to_json(json& j, const MockSeifertMatrix& a) {
    j = {{"matrix", matrix_json(a.entries)}, {"type", to_string(a.type())}};
    j["euler"] = a.euler ? int_json(*a.euler) : json(nullptr);
}

void to_json(json& j, const BandPresentation& b) {
    j = {{"n_bands", b.n_bands}, {"feet", to_string(b.feet)}};
    if (b.feet == FeetKind::Mixed) j["feet_order"] = b.feet_order;
    json tw = json::array();
    for (const auto& t : b.twists) tw.push_back(int_json(t));
    j["twists"] = tw;
    json cs = json::array();
    for (const auto& c : b.crossings) cs.push_back({{"over", c.over}, {"under", c.under}, {"sign", c.sign}});
    j["crossings"] = cs;
    j["basis"] = b.basis ? matrix_json(*b.basis) : json(nullptr);
}

void from_json(const json& j, BandPresentation& b) {
    try {
        b = BandPresentation{};
        b.n_bands = j.at("n_bands").get<int>();
        const std::string feet = j.value("feet", std::string("unlinked"));
        if (feet == "alternating_pairs")
            b.feet = FeetKind::AlternatingPairs;
        else if (feet == "unlinked")
            b.feet = FeetKind::Unlinked;
        else if (feet == "mixed")
            b.feet = FeetKind::Mixed;
        else
            throw ParseError("unknown feet pattern '" + feet + "'");
        if (j.contains("feet_order")) b.feet_order = j.at("feet_order").get<std::vector<int>>();
        for (const auto& t : j.at("twists")) b.twists.push_back(int_from_json(t));
        if (j.contains("crossings"))
            for (const auto& c : j.at("crossings"))
                b.crossings.push_back({c.at("over").get<int>(), c.at("under").get<int>(), c.value("sign", 1)});
        if (j.contains("basis") && !j.at("basis").is_null()) b.basis = matrix_from_json(j.at("basis"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed band presentation: ") + e.what());
    }
}

void to_json(json& j, const CirclePoint& p) {
    j = {{"text", p.to_text()}, {"a", int_json(p.a)}, {"b", int_json(p.b)}, {"c", int_json(p.c)}, {"angle", p.angle()}};
}

void to_json(json& j, const JumpPoint& p) {
    j = {{"text", p.to_text()}, {"minpoly", upoly::to_text(p.minpoly, "x")},
         {"x_interval", json::array({to_string(p.lo), to_string(p.hi)})},
         {"half", p.half}, {"multiplicity", p.multiplicity}};
    j["exact"] = p.exact ? json(*p.exact) : json(nullptr);
}

void to_json(json& j, const SignatureFunction& s) {
    j = {{"degenerate", s.degenerate}, {"jumps", s.jumps}, {"arc_values", s.arc_values}, {"samples", s.samples}};
    j["euler_correction"] = s.euler_correction ? rat_json(*s.euler_correction) : json(nullptr);
    j["all_zero"] = s.all_zero();
}

void to_json(json& j, const GLInvariants& g) {
    j = {{"sig_part", g.sig_part}};
    j["sigma"] = g.sigma ? rat_json(*g.sigma) : json(nullptr);
    j["det"] = rat_json(g.det);
    j["nullity"] = g.nullity;
}

void to_json(json& j, const Bounds& b) {
    j = {{"crosscap_lower", b.crosscap_lower}};
    j["genus_lower"] = b.genus_lower ? rat_json(*b.genus_lower) : json(nullptr);
    j["alexander_zero"] = b.alexander_zero;
}

void to_json(json& j, const DeltaOneCheck& d) { j = {{"kind", to_string(d.kind)}, {"value", int_json(d.value)}}; }

json polynomial_json(const LaurentPoly& p) {
    json j = {{"text", p.to_text()}};
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({k, int_json(c)});
    j["terms"] = terms;
    return j;
}

void to_json(json& j, const FoxMilnorResult& f) {
    j = {{"passes", f.passes}};
    j["witness"] = f.passes ? json(f.witness.to_text()) : json(nullptr);
    j["reason"] = f.reason;
}

void to_json(json& j, const AdmissibilityResult& a) {
    j = {{"verdict", to_string(a.verdict)}, {"detail", a.detail}};
    j["witness"] = a.witness ? matrix_json(*a.witness) : json(nullptr);
}

void to_json(json& j, const MetabolicVerdict& v) {
    j = {{"verdict", to_string(v.kind)}, {"reason", to_string(v.reason)}};
    j["basis"] = v.certificate() ? matrix_json(v.basis) : json(nullptr);
    j["omega"] = v.omega ? json(*v.omega) : json(nullptr);
    j["prime"] = v.prime ? int_json(*v.prime) : json(nullptr);
    j["detail"] = v.detail;
}

void to_json(json& j, const ObstructionBundle& b) {
    j = {{"alexander", polynomial_json(b.alexander)},
         {"alexander_normalized", b.alexander_core},
         {"fox_milnor", b.fox_milnor},
         {"signature_function", b.signature},
         {"det_symmetric", int_json(b.det_symmetric)},
         {"det_square_class", int_json(b.det_square_class)},
         {"metabolic", b.metabolic}};
}

void to_json(json& j, const ConcordanceClass& c) {
    j = {{"representative", c.representative},
         {"admissibility", c.admissibility},
         {"waived", c.waived},
         {"obstructions", c.bundle}};
}

void to_json(json& j, const OrderBound& o) {
    j = {{"order", to_string(o.kind)}, {"exact", o.exact()}, {"lower", o.lower}};
    j["not_dividing"] = o.not_dividing ? json(o.not_dividing) : json(nullptr);
    j["divides"] = o.divides ? json(*o.divides) : json(nullptr);
    json ev = json::array();
    for (const auto& e : o.evidence) ev.push_back({{"power", e.power}, {"metabolic", e.verdict}});
    j["evidence"] = ev;
}

namespace {

json rat_matrix_json(const RatMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < a.cols(); ++k) row.push_back(rat_json(a(i, k)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void to_json(json& j, const IsometricStructure& s) {
    j = {{"q", rat_matrix_json(s.q)},
         {"s", rat_matrix_json(s.s)},
         {"isometry_verified", s.isometry_verified},
         {"reconstructible", s.reconstructible},
         {"reconstruction_verified", s.reconstruction_verified}};
}

TableParse parse_table(const std::string& text) {
    TableParse out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string name, code, rest;
        if (!(ls >> name)) continue;
        while (ls >> rest) code += rest;
        if (code.empty()) {
            out.warnings.push_back("line " + std::to_string(no) + ": missing Gauss code");
            continue;
        }
        if (code == "-") code.clear();
        try {
            parse_gauss(code);
        } catch (const ParseError& e) {
            out.warnings.push_back("line " + std::to_string(no) + ": " + e.what());
            continue;
        }
        out.entries.push_back({name, code, no});
    }
    return out;
}

json invariants_json(const MockSeifertMatrix& a) {
    json j;
    j["matrix"] = a;
    const LaurentPoly d = alexander(a);
    j["alexander"] = polynomial_json(d);
    j["alexander_normalized"] = normalize_text(d);
    j["span"] = d.is_zero() ? json(nullptr) : json(span(d));
    j["gl"] = gl_invariants(a);
    j["signature_function"] = signature_function(a);
    j["bounds"] = bounds(a);
    j["delta_one"] = delta_one_check(a);
    return j;
}

}  // namespace mgl
