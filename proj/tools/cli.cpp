#include "cli.hpp"

#include "mockgl/serialize.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace mgl::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::string> read_file(const std::string& path) {
    std::error_code ec;
    if (path.empty() || !fs::is_regular_file(path, ec)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool looks_like_matrix(const std::string& s) {
    const auto i = s.find_first_not_of(" \t");
    if (i == std::string::npos) return false;
    const char c = s[i];
    return c == '[' || c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)) ||
           static_cast<unsigned char>(c) == 0xE2;
}

IntMatrix load_matrix(const std::string& arg) {
    if (auto text = read_file(arg)) return parse_matrix(*text);
    if (!looks_like_matrix(arg)) throw ParseError("'" + arg + "' is neither a matrix file nor an inline matrix");
    return parse_matrix(arg);
}

MockSeifertMatrix load_seifert(const std::string& arg, const std::optional<long long>& euler) {
    MockSeifertMatrix m(load_matrix(arg));
    if (euler) m.euler = Int(*euler);
    return m;
}

MockSeifertMatrix load_class_input(const std::string& arg) {
    const auto i = arg.find_first_not_of(" \t");
    if (!read_file(arg) && i != std::string::npos && std::string("OoUu").find(arg[i]) != std::string::npos)
        return levine_matrix(parse_gauss(arg));
    return load_seifert(arg, std::nullopt);
}

json envelope(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

void render(const json& j, const std::string& prefix, std::ostream& out);

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool is_matrix(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& r : j) {
        if (!r.is_array()) return false;
        for (const auto& e : r)
            if (!scalar(e)) return false;
    }
    return true;
}

void render_value(const std::string& key, const json& v, std::ostream& out) {
    if (scalar(v)) {
        out << key << ": " << scalar_text(v) << "\n";
    } else if (is_matrix(v)) {
        out << key << ":\n";
        std::size_t w = 1;
        for (const auto& r : v)
            for (const auto& e : r) w = std::max(w, scalar_text(e).size());
        for (const auto& r : v) {
            out << "  ";
            for (const auto& e : r) out << ' ' << std::setw(static_cast<int>(w)) << scalar_text(e);
            out << "\n";
        }
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return scalar(e); })) {
        out << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) render_value(key + "[" + std::to_string(i) + "]", v[i], out);
    } else {
        render(v, key, out);
    }
}

void render(const json& j, const std::string& prefix, std::ostream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (prefix.empty() && (it.key() == "schema")) continue;
        render_value(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), out);
    }
}

void render_batch(const json& j, std::ostream& out) {
    out << std::left << std::setw(16) << "name" << std::setw(4) << "n" << std::setw(24) << "colorability"
        << std::setw(6) << "ow" << std::setw(6) << "p2it" << std::setw(24) << "delta" << "sigma\n";
    for (const auto& e : j["entries"]) {
        out << std::setw(16) << e["name"].get<std::string>();
        if (e.contains("error")) {
            out << "error: " << e["error"].get<std::string>() << "\n";
            continue;
        }
        out << std::setw(4) << e["crossings"].get<int>() << std::setw(24) << e["colorability"].get<std::string>()
            << std::setw(6) << e["odd_writhe"].get<int>() << std::setw(6)
            << e["mod2_projection"]["iterations"].get<int>();
        if (e["checkerboard"].is_null()) {
            out << std::setw(24) << "-" << "-\n";
        } else {
            const auto& p = e["checkerboard"]["surfaces"][e["checkerboard"]["preferred"].get<int>()];
            out << std::setw(24) << p["alexander_normalized"].get<std::string>() << scalar_text(p["sigma"]) << "\n";
        }
    }
    out << std::right << "entries: " << j["entries"].size() << "  warnings: " << j["warnings"].size() << "\n";
}

json surface_json(const MockSeifertMatrix& m) {
    json s;
    s["matrix"] = matrix_json(m.entries);
    s["euler"] = m.euler ? int_json(*m.euler) : json(nullptr);
    s["alexander_normalized"] = normalize_text(alexander(m));
    const auto g = gl_invariants(m);
    s["det"] = int_json(m.det());
    s["sigma"] = g.sigma ? rat_json(*g.sigma) : json(nullptr);
    return s;
}

json checkerboard_json(const Diagram& d) {
    json surfaces = json::array();
    int preferred = 0, k = 0;
    for (const auto& s : checkerboard_surfaces(d)) {
        json sj = surface_json(s.matrix);
        sj["color"] = s.color;
        sj["faces"] = s.faces.size();
        sj["preferred"] = s.preferred;
        if (s.preferred) preferred = k;
        surfaces.push_back(sj);
        ++k;
    }
    return json{{"surfaces", surfaces}, {"preferred", preferred}};
}

json batch_entry(const std::string& code) {
    const Diagram d = parse_gauss(code);
    json e;
    e["code"] = to_gauss(d);
    e["crossings"] = d.size();
    json ind = json::object();
    for (const auto& [l, v] : crossing_indices(d)) ind[std::to_string(l)] = v;
    e["indices"] = ind;
    e["colorability"] = to_string(colorability(d));
    e["writhe"] = writhe(d);
    e["odd_writhe"] = odd_writhe(d);
    const auto [proj, it] = stable_project(d, ParityKind::mod(2));
    e["mod2_projection"] = {{"code", to_gauss(proj)}, {"crossings", proj.size()}, {"iterations", it},
                            {"fixed", project(d, ParityKind::mod(2)) == d}};
    e["checkerboard"] = colorability(d) != Colorability::Neither ? checkerboard_json(d) : json(nullptr);
    return e;
}

struct Cache {
    std::optional<fs::path> dir;

    std::optional<json> get(const std::string& key) const {
        if (!dir) return std::nullopt;
        auto text = read_file((*dir / (key + ".json")).string());
        if (!text) return std::nullopt;
        try {
            return json::parse(*text);
        } catch (const json::exception&) {
            return std::nullopt;
        }
    }

    void put(const std::string& key, const json& value) const {
        if (!dir) return;
        std::error_code ec;
        fs::create_directories(*dir, ec);
        const fs::path final_path = *dir / (key + ".json");
        std::ostringstream tid;
        tid << std::this_thread::get_id();
        const fs::path tmp = *dir / (key + ".tmp." + sha256_hex(tid.str()).substr(0, 8));
        {
            std::ofstream out(tmp, std::ios::binary);
            out << value.dump();
        }
        fs::rename(tmp, final_path, ec);
        if (ec) fs::remove(tmp, ec);
    }
};

std::string cache_key(const std::vector<std::string>& parts) {
    std::string s = std::string("mockgl ") + kVersion;
    for (const auto& p : parts) {
        s += '\0';
        s += p;
        if (auto text = read_file(p)) {
            s += '\0';
            s += *text;
        }
    }
    return sha256_hex(s);
}

std::string concordant_text(const MetabolicVerdict& v) {
    return v.certificate() ? "yes" : v.obstructed() ? "no" : "unknown";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mock Seifert matrices, Gordon-Litherland forms and concordance of virtual knots", "mockgl"};
    app.set_version_flag("--version", std::string("mockgl ") + kVersion);
    app.require_subcommand(1);
    bool as_json = false;
    std::string cache_dir;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_option("--cache", cache_dir, "cache directory (default: $MOCKGL_CACHE)");

    std::string code, parity = "mod2", input, input_b, table;
    int budget = kDefaultBudget, jobs = 1;
    std::optional<long long> euler;

    auto* c_parse = app.add_subcommand("parse", "parse a signed Gauss code");
    c_parse->add_option("code", code, "Gauss code")->required();
    auto* c_ind = app.add_subcommand("indices", "crossing indices and colorability");
    c_ind->add_option("code", code)->required();
    auto* c_proj = app.add_subcommand("project", "parity projection");
    c_proj->add_option("--parity", parity, "mod2, mod_n or total");
    c_proj->add_option("code", code)->required();
    auto* c_mat = app.add_subcommand("matrix", "mock Seifert matrices of a diagram or band presentation");
    c_mat->add_option("input", input, "Gauss code or bands.json")->required();
    auto* c_inv = app.add_subcommand("invariants", "invariants of a diagram or matrix");
    c_inv->add_option("input", input, "Gauss code, matrix.csv or inline matrix")->required();
    c_inv->add_option("--euler", euler, "Euler number for matrix input");
    auto* c_conc = app.add_subcommand("concordance", "algebraic concordance of two matrices or codes");
    c_conc->add_option("a", input)->required();
    c_conc->add_option("b", input_b)->required();
    c_conc->add_option("--budget", budget, "isotropic search height");
    auto* c_ord = app.add_subcommand("order", "order of a concordance class");
    c_ord->add_option("a", input)->required();
    c_ord->add_option("--budget", budget, "isotropic search height");
    auto* c_real = app.add_subcommand("realize", "band presentation realizing a matrix");
    c_real->add_option("matrix", input)->required();
    auto* c_batch = app.add_subcommand("batch", "process a knot table");
    c_batch->add_option("table", table)->required();
    c_batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    for (auto* sub : {c_parse, c_ind, c_proj, c_mat, c_inv, c_conc, c_ord, c_real, c_batch}) {
        sub->add_flag("--json", as_json, "emit JSON");
        sub->add_option("--cache", cache_dir, "cache directory");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    Cache cache;
    if (!cache_dir.empty())
        cache.dir = cache_dir;
    else if (const char* env = std::getenv("MOCKGL_CACHE"); env && *env)
        cache.dir = env;

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    auto emit = [&](const json& j) {
        if (as_json)
            out << j.dump(2) << "\n";
        else if (command == "batch")
            render_batch(j, out);
        else
            render(j, "", out);
    };

    try {
        if (command == "batch") {
            const auto text = read_file(table);
            if (!text) throw ParseError("cannot read table '" + table + "'");
            const TableParse tp = parse_table(*text);
            for (const auto& w : tp.warnings) err << "warning: " << w << "\n";
            std::vector<json> results(tp.entries.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < tp.entries.size(); i = next++) {
                    const auto& entry = tp.entries[i];
                    const std::string key = cache_key({"batch-entry", entry.code});
                    json e;
                    if (auto hit = cache.get(key)) {
                        e = *hit;
                    } else {
                        try {
                            e = batch_entry(entry.code);
                            cache.put(key, e);
                        } catch (const std::exception& ex) {
                            e = json{{"error", ex.what()}};
                        }
                    }
                    json named = {{"name", entry.name}, {"line", entry.line}};
                    named.update(e);
                    results[i] = std::move(named);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            json j = envelope(command);
            j["entries"] = results;
            j["warnings"] = tp.warnings;
            emit(j);
            return 0;
        }

        std::vector<std::string> key_parts = {command, code, parity, input, input_b, std::to_string(budget),
                                              euler ? std::to_string(*euler) : std::string("none")};
        const std::string key = cache_key(key_parts);
        if (auto hit = cache.get(key)) {
            emit(*hit);
            return 0;
        }

        json j = envelope(command);
        if (command == "parse") {
            j["diagram"] = parse_gauss(code);
        } else if (command == "indices") {
            const Diagram d = parse_gauss(code);
            json ind = json::object();
            for (const auto& [l, v] : crossing_indices(d)) ind[std::to_string(l)] = v;
            j["code"] = to_gauss(d);
            j["indices"] = ind;
            j["colorability"] = to_string(colorability(d));
            j["odd_writhe"] = odd_writhe(d);
        } else if (command == "project") {
            const Diagram d = parse_gauss(code);
            const ParityKind p = parse_parity(parity);
            const Diagram once = project(d, p);
            const auto [stable, it] = stable_project(d, p);
            j["parity"] = to_string(p);
            j["input"] = to_gauss(d);
            j["projected"] = to_gauss(once);
            j["stable"] = {{"code", to_gauss(stable)}, {"crossings", stable.size()}, {"iterations", it}};
        } else if (command == "matrix") {
            if (auto text = read_file(input); text && !looks_like_matrix(*text)) {
                BandPresentation b;
                try {
                    b = json::parse(*text).get<BandPresentation>();
                } catch (const json::exception& e) {
                    throw ParseError(std::string("malformed band presentation: ") + e.what());
                }
                j["bands"] = b;
                j["boundary_components"] = boundary_components(b);
                j["mock_seifert"] = matrix_of_band_presentation(b);
            } else {
                const Diagram d = parse_gauss(text ? *text : input);
                j["diagram"] = d;
                j["checkerboard"] = checkerboard_json(d);
            }
        } else if (command == "invariants") {
            const auto text = read_file(input);
            const bool matrix_input = text ? looks_like_matrix(*text) : looks_like_matrix(input);
            MockSeifertMatrix m;
            if (matrix_input) {
                m = load_seifert(input, euler);
                j["source"] = "matrix";
            } else {
                const Diagram d = parse_gauss(text ? *text : input);
                if (colorability(d) == Colorability::Neither)
                    throw PreconditionError("diagram is not checkerboard colorable");
                m = preferred_matrix(d);
                j["source"] = "diagram";
                j["diagram"] = d;
            }
            j.update(invariants_json(m));
        } else if (command == "concordance") {
            const MockSeifertMatrix a = load_class_input(input), b = load_class_input(input_b);
            j["a"] = {{"matrix", matrix_json(a.entries)}, {"admissibility", is_admissible(a)}};
            j["b"] = {{"matrix", matrix_json(b.entries)}, {"admissibility", is_admissible(b)}};
            const auto v = concordant(a, b, budget);
            j["concordant"] = concordant_text(v);
            j["difference"] = v;
        } else if (command == "order") {
            const MockSeifertMatrix a = load_class_input(input);
            j["matrix"] = matrix_json(a.entries);
            j["admissibility"] = is_admissible(a);
            j["order"] = order_bound(a, budget);
        } else if (command == "realize") {
            const IntMatrix a = load_matrix(input);
            const BandPresentation b = realize(a);
            const MockSeifertMatrix back = matrix_of_band_presentation(b);
            j["input"] = matrix_json(a);
            j["bands"] = b;
            j["boundary_components"] = boundary_components(b);
            j["round_trip"] = back.entries == a;
            j["euler"] = back.euler ? int_json(*back.euler) : json(nullptr);
        }
        cache.put(key, j);
        emit(j);
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        if (as_json) out << json{{"schema", kSchema}, {"command", command}, {"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        if (as_json) out << json{{"schema", kSchema}, {"command", command}, {"error", {{"kind", "precondition"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 3;
    }
}

}  // namespace mgl::cli
