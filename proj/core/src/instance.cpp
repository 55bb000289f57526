#include "resonance/instance.hpp"

#include "resonance/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace resonance {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t positive_index(const json& v, std::size_t limit, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": index must be an integer");
    const auto i = v.get<long long>();
    if (i < 1 || static_cast<unsigned long long>(i) > limit)
        throw ParseError(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
    return static_cast<std::size_t>(i - 1);
}

Rational rational_value(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(BigInt(std::to_string(v.get<long long>())));
    throw ParseError(where + ": coefficient must be a \"num/den\" string or an integer");
}

Bivector parse_bivector(const json& terms, std::size_t n, const std::string& where) {
    if (!terms.is_array()) throw ParseError(where + ": bivector must be a list of [i, j, coefficient] terms");
    Bivector b = Bivector::zero(n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string at = where + " term " + std::to_string(t + 1);
        const json& term = terms[t];
        if (!term.is_array() || term.size() != 3) throw ParseError(at + ": expected [i, j, coefficient]");
        const std::size_t i = positive_index(term[0], n, at);
        const std::size_t j = positive_index(term[1], n, at);
        if (i >= j) throw ParseError(at + ": indices must satisfy i < j");
        if (!seen.insert({i, j}).second) throw ParseError(at + ": repeated pair");
        b.coords[pair_index(i, j, n)] = rational_value(term[2], at);
    }
    return b;
}

}  // namespace

std::string content_digest(std::string_view canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text, "instance");
    if (!doc.is_object()) throw ParseError("instance: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "dim" && key != "K" && key != "Kperp" && key != "components")
            throw ParseError("instance: unknown key \"" + key + "\"");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw ParseError("instance: \"dim\" must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
    if (n > 64) throw ParseError("instance: \"dim\" larger than 64");
    if (doc.contains("K") == doc.contains("Kperp"))
        throw ParseError("instance: supply exactly one of \"K\" and \"Kperp\"");
    const bool given_k = doc.contains("K");
    const json& side = given_k ? doc["K"] : doc["Kperp"];
    const std::string side_name = given_k ? "K" : "Kperp";
    if (!side.is_array()) throw ParseError("instance: \"" + side_name + "\" must be a list of bivectors");

    std::vector<Bivector> basis;
    for (std::size_t b = 0; b < side.size(); ++b)
        basis.push_back(parse_bivector(side[b], n, side_name + " bivector " + std::to_string(b + 1)));

    Instance inst;
    try {
        inst.spec = given_k ? PairSpec::from_k(n, basis) : PairSpec::from_kperp(n, basis);
    } catch (const std::invalid_argument&) {
        throw ParseError("instance: \"" + side_name + "\" bivectors are linearly dependent");
    }

    if (doc.contains("components")) {
        const json& comps = doc["components"];
        if (!comps.is_array()) throw ParseError("instance: \"components\" must be a list of bases");
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const std::string where = "component " + std::to_string(c + 1);
            if (!comps[c].is_array() || comps[c].empty())
                throw ParseError(where + ": must be a nonempty list of vectors");
            std::vector<RationalVector> vecs;
            for (std::size_t v = 0; v < comps[c].size(); ++v) {
                const json& vec = comps[c][v];
                const std::string at = where + " vector " + std::to_string(v + 1);
                if (!vec.is_array() || vec.size() != n)
                    throw ParseError(at + ": must have " + std::to_string(n) + " entries");
                RationalVector x;
                for (const auto& e : vec) x.push_back(rational_value(e, at));
                vecs.push_back(std::move(x));
            }
            try {
                inst.components.emplace_back(n, vecs);
            } catch (const std::invalid_argument&) {
                throw ParseError(where + ": vectors are linearly dependent");
            }
        }
    }
    inst.digest = content_digest(doc.dump());
    return inst;
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

GraphFile parse_graph(std::string_view text) {
    const json doc = parse_json(text, "graph");
    if (!doc.is_object()) throw ParseError("graph: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "vertices" && key != "edges") throw ParseError("graph: unknown key \"" + key + "\"");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 1)
        throw ParseError("graph: \"vertices\" must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["vertices"].get<long long>());
    if (n > 64) throw ParseError("graph: more than 64 vertices");
    std::vector<Graph::Edge> edges;
    if (doc.contains("edges")) {
        const json& list = doc["edges"];
        if (!list.is_array()) throw ParseError("graph: \"edges\" must be a list of [i, j] pairs");
        for (std::size_t e = 0; e < list.size(); ++e) {
            const std::string at = "graph edge " + std::to_string(e + 1);
            if (!list[e].is_array() || list[e].size() != 2) throw ParseError(at + ": expected [i, j]");
            const std::size_t i = positive_index(list[e][0], n, at);
            const std::size_t j = positive_index(list[e][1], n, at);
            if (i >= j) throw ParseError(at + ": endpoints must satisfy i < j");
            edges.push_back({i, j});
        }
    }
    GraphFile out;
    try {
        out.graph = Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    out.digest = content_digest(doc.dump());
    return out;
}

GraphFile load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

SubspaceSpec parse_component(std::size_t n, std::string_view text) {
    std::vector<RationalVector> vecs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = std::min(text.find(';', start), text.size());
        const std::string_view part = text.substr(start, semi - start);
        RationalVector v;
        std::size_t p = 0;
        while (p <= part.size()) {
            const std::size_t comma = std::min(part.find(',', p), part.size());
            v.push_back(parse_rational(part.substr(p, comma - p)));
            p = comma + 1;
        }
        if (v.size() != n)
            throw ParseError("component vector " + std::to_string(vecs.size() + 1) + " has " +
                             std::to_string(v.size()) + " entries, expected " + std::to_string(n));
        vecs.push_back(std::move(v));
        start = semi + 1;
    }
    try {
        return SubspaceSpec(n, vecs);
    } catch (const std::invalid_argument&) {
        throw ParseError("component vectors are linearly dependent");
    }
}

}  // namespace resonance
