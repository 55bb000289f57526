#pragma once

#include "resonance/multilinear.hpp"
#include "resonance/raag.hpp"
#include "resonance/resonance.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace resonance {

// Instance file:
//   {"dim": n,
//    "K" or "Kperp": [[[i, j, "num/den"], ...], ...],   1-based, i < j
//    "components": [[["num/den", ...], ...], ...]}      optional
struct Instance {
    PairSpec spec;
    std::vector<SubspaceSpec> components;
    std::string digest;  // 16 hex digits
};

// Graph file: {"vertices": n, "edges": [[i, j], ...]}, 1-based, i < j.
struct GraphFile {
    Graph graph;
    std::string digest;
};

// All loaders throw ParseError with a description of the first problem.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);
GraphFile parse_graph(std::string_view text);
GraphFile load_graph(const std::filesystem::path& path);

// "v1;v2;..." with each vector a comma-separated list of n rationals.
SubspaceSpec parse_component(std::size_t n, std::string_view text);

// FNV-1a over the canonical (sorted-key, compact) JSON serialization.
std::string content_digest(std::string_view canonical);

}  // namespace resonance
