#include "ccover/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>

namespace ccover::io {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw InputError("expected an integer for " + what);
    return j.get<std::int64_t>();
}

const json& get_array(const json& j, const std::string& key, std::size_t arity = 0) {
    if (!j.is_array()) throw InputError("expected an array for \"" + key + "\"");
    if (arity && j.size() != arity)
        throw InputError("\"" + key + "\" entries must have " + std::to_string(arity) +
                         " elements");
    return j;
}

std::vector<std::pair<VertexId, VertexId>> parse_pairs(const json& j, const std::string& key) {
    std::vector<std::pair<VertexId, VertexId>> out;
    get_array(j, key);
    out.reserve(j.size());
    for (const auto& e : j) {
        get_array(e, key, 2);
        out.emplace_back(static_cast<VertexId>(get_int(e[0], key)),
                         static_cast<VertexId>(get_int(e[1], key)));
    }
    return out;
}

std::vector<Interval> parse_interval_list(const json& j, const std::string& key) {
    std::vector<Interval> out;
    get_array(j, key);
    out.reserve(j.size());
    for (const auto& e : j) {
        get_array(e, key, 2);
        out.push_back({get_int(e[0], key), get_int(e[1], key)});
    }
    return out;
}

} // namespace

Instance parse_instance(const json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    if (!j.contains("v") || !j["v"].is_number_integer() || j["v"].get<int>() != 1)
        throw InputError("instance must carry version field \"v\":1");
    if (!j.contains("type") || !j["type"].is_string())
        throw InputError("instance must carry a string \"type\"");
    const std::string type = j["type"].get<std::string>();

    if (type == "rectangles") {
        RectangleInstance r;
        if (!j.contains("rects")) throw InputError("rectangles instance needs \"rects\"");
        for (const auto& e : get_array(j["rects"], "rects")) {
            get_array(e, "rects", 4);
            r.rects.push_back({get_int(e[0], "rects"), get_int(e[1], "rects"),
                               get_int(e[2], "rects"), get_int(e[3], "rects")});
        }
        return r;
    }
    if (type == "boxes") {
        BoxInstance b;
        if (!j.contains("dim")) throw InputError("boxes instance needs \"dim\"");
        b.dim = static_cast<int>(get_int(j["dim"], "dim"));
        if (b.dim < 2) throw InputError("boxes instance needs dim >= 2");
        if (!j.contains("boxes")) throw InputError("boxes instance needs \"boxes\"");
        for (const auto& e : get_array(j["boxes"], "boxes")) {
            get_array(e, "boxes", static_cast<std::size_t>(2 * b.dim));
            std::vector<Interval> axes(b.dim);
            for (int a = 0; a < b.dim; ++a)
                axes[a] = {get_int(e[2 * a], "boxes"), get_int(e[2 * a + 1], "boxes")};
            b.boxes.push_back(std::move(axes));
        }
        return b;
    }
    if (type == "chords") {
        ChordInstance c;
        if (!j.contains("chords")) throw InputError("chords instance needs \"chords\"");
        for (const auto& e : get_array(j["chords"], "chords")) {
            get_array(e, "chords", 2);
            std::int64_t a = get_int(e[0], "chords"), b = get_int(e[1], "chords");
            if (a > b) std::swap(a, b);
            c.chords.push_back({a, b});
        }
        return c;
    }
    if (type == "explicit") {
        ExplicitInstance e;
        if (!j.contains("n")) throw InputError("explicit instance needs \"n\"");
        e.n = static_cast<int>(get_int(j["n"], "n"));
        if (!j.contains("layers")) throw InputError("explicit instance needs \"layers\"");
        for (const auto& layer : get_array(j["layers"], "layers"))
            e.layers.push_back(parse_interval_list(layer, "layers"));
        if (j.contains("poset") && !j["poset"].is_null())
            e.poset_edges = parse_pairs(j["poset"], "poset");
        if (j.contains("g_edges") && !j["g_edges"].is_null())
            e.g_edges = parse_pairs(j["g_edges"], "g_edges");
        return e;
    }
    throw InputError("unknown instance type \"" + type + "\"");
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_instance(j);
}

nlohmann::json instance_to_json(const Instance& inst) {
    json j;
    j["v"] = 1;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RectangleInstance>) {
                j["type"] = "rectangles";
                auto& arr = j["rects"] = json::array();
                for (const auto& r : x.rects)
                    arr.push_back({r.x_lo, r.x_hi, r.y_lo, r.y_hi});
            } else if constexpr (std::is_same_v<T, BoxInstance>) {
                j["type"] = "boxes";
                j["dim"] = x.dim;
                auto& arr = j["boxes"] = json::array();
                for (const auto& b : x.boxes) {
                    json row = json::array();
                    for (const Interval& iv : b) {
                        row.push_back(iv.lo);
                        row.push_back(iv.hi);
                    }
                    arr.push_back(std::move(row));
                }
            } else if constexpr (std::is_same_v<T, ChordInstance>) {
                j["type"] = "chords";
                auto& arr = j["chords"] = json::array();
                for (const auto& c : x.chords) arr.push_back({c.a, c.b});
            } else {
                j["type"] = "explicit";
                j["n"] = x.n;
                auto& layers = j["layers"] = json::array();
                for (const auto& layer : x.layers) {
                    json row = json::array();
                    for (const Interval& iv : layer) row.push_back({iv.lo, iv.hi});
                    layers.push_back(std::move(row));
                }
                if (x.poset_edges) {
                    auto& p = j["poset"] = json::array();
                    for (auto [u, v] : *x.poset_edges) p.push_back({u, v});
                } else {
                    j["poset"] = nullptr;
                }
                if (x.g_edges) {
                    auto& ge = j["g_edges"] = json::array();
                    for (auto [u, v] : *x.g_edges) ge.push_back({u, v});
                } else {
                    j["g_edges"] = nullptr;
                }
            }
        },
        inst);
    return j;
}

IntersectionModel build_model(const Instance& inst) {
    return std::visit(
        [](const auto& x) -> IntersectionModel {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RectangleInstance>) return rectangles_to_model(x);
            else if constexpr (std::is_same_v<T, BoxInstance>) return boxes_to_model(x);
            else if constexpr (std::is_same_v<T, ChordInstance>) return chords_to_model(x);
            else return explicit_to_model(x);
        },
        inst);
}

std::string instance_type(const Instance& inst) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RectangleInstance>) return "rectangles";
            else if constexpr (std::is_same_v<T, BoxInstance>) return "boxes";
            else if constexpr (std::is_same_v<T, ChordInstance>) return "chords";
            else return "explicit";
        },
        inst);
}

nlohmann::json certificate_to_json(const CoverCertificate& cert, const VerifyReport* report) {
    json j;
    j["v"] = 1;
    auto& cover = j["cover"] = json::array();
    for (const auto& part : cert.cover.parts) cover.push_back(part.ids());
    j["independent"] = cert.independent.ids();
    j["alphas"] = cert.alphas;
    j["t"] = cert.t;
    j["phi"] = cert.phi;
    j["bound"] = cert.bound;
    j["stats"] = {{"base_calls", cert.stats.base_calls},
                  {"max_depth", cert.stats.max_depth},
                  {"split_nodes", cert.stats.split_nodes}};
    if (report)
        j["checks"] = {{"partition", report->partition},
                       {"cliques", report->cliques},
                       {"independent", report->independent},
                       {"bound", report->bound}};
    return j;
}

CoverCertificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    CoverCertificate cert;
    if (!j.contains("cover")) throw InputError("certificate needs \"cover\"");
    for (const auto& part : get_array(j["cover"], "cover")) {
        std::vector<VertexId> ids;
        for (const auto& e : get_array(part, "cover"))
            ids.push_back(static_cast<VertexId>(get_int(e, "cover")));
        cert.cover.parts.emplace_back(std::move(ids));
    }
    if (!j.contains("independent")) throw InputError("certificate needs \"independent\"");
    {
        std::vector<VertexId> ids;
        for (const auto& e : get_array(j["independent"], "independent"))
            ids.push_back(static_cast<VertexId>(get_int(e, "independent")));
        cert.independent = VertexSet(std::move(ids));
    }
    if (j.contains("alphas"))
        for (const auto& e : get_array(j["alphas"], "alphas"))
            cert.alphas.push_back(get_int(e, "alphas"));
    cert.t = j.contains("t") ? static_cast<int>(get_int(j["t"], "t"))
                             : static_cast<int>(cert.alphas.size()) + 1;
    if (!j.contains("phi") || !j["phi"].is_number())
        throw InputError("certificate needs numeric \"phi\"");
    cert.phi = j["phi"].get<double>();
    if (!j.contains("bound") || !j["bound"].is_number())
        throw InputError("certificate needs numeric \"bound\"");
    cert.bound = j["bound"].get<double>();
    return cert;
}

namespace {

// All draws go through the standard-specified mt19937_64 stream so that
// generated instances are reproducible across builds.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::int64_t bounded(std::int64_t m) { // uniform-ish in [0, m)
        return m <= 0 ? 0 : static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(m));
    }
};

Interval random_interval(Rng& rng, std::int64_t coord_max) {
    std::int64_t lo = rng.bounded(coord_max + 1);
    std::int64_t len = rng.bounded(std::max<std::int64_t>(coord_max / 6, 1) + 1);
    return {lo, std::min(coord_max, lo + len)};
}

} // namespace

Instance generate_instance(const std::string& type, int n, std::uint64_t seed,
                           std::int64_t coord_max, int dim) {
    if (n < 0) throw InputError("instance size must be nonnegative");
    if (coord_max < 1) throw InputError("coord_max must be >= 1");
    Rng rng(seed);

    if (type == "rectangles") {
        RectangleInstance r;
        r.rects.reserve(n);
        for (int i = 0; i < n; ++i) {
            Interval x = random_interval(rng, coord_max);
            Interval y = random_interval(rng, coord_max);
            r.rects.push_back({x.lo, x.hi, y.lo, y.hi});
        }
        return r;
    }
    if (type == "boxes") {
        if (dim < 2) throw InputError("boxes need dim >= 2");
        BoxInstance b;
        b.dim = dim;
        b.boxes.reserve(n);
        for (int i = 0; i < n; ++i) {
            std::vector<Interval> axes(dim);
            for (int a = 0; a < dim; ++a) axes[a] = random_interval(rng, coord_max);
            b.boxes.push_back(std::move(axes));
        }
        return b;
    }
    if (type == "chords") {
        // Random perfect matching of endpoints 0..2n-1.
        std::vector<std::int64_t> endpoints(2 * n);
        for (int i = 0; i < 2 * n; ++i) endpoints[i] = i;
        for (int i = 2 * n - 1; i > 0; --i)
            std::swap(endpoints[i], endpoints[rng.bounded(i + 1)]);
        ChordInstance c;
        c.chords.reserve(n);
        for (int i = 0; i < n; ++i) {
            std::int64_t a = endpoints[2 * i], b = endpoints[2 * i + 1];
            if (a > b) std::swap(a, b);
            c.chords.push_back({a, b});
        }
        return c;
    }
    if (type == "explicit") {
        ExplicitInstance e;
        e.n = n;
        e.layers.resize(2);
        for (auto& layer : e.layers) {
            layer.reserve(n);
            for (int i = 0; i < n; ++i) layer.push_back(random_interval(rng, coord_max));
        }
        return e;
    }
    throw InputError("unknown instance type \"" + type + "\"");
}

} // namespace ccover::io
