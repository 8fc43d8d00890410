#pragma once

// JSON encodings: instances {"n":[...],"a":[...],"d":k}, vertices [block, rank],
// monomials {"exp":[[X_0 exponents], [X_1 exponents], ...]}, monomial sets
// {"monomials":[...]} and facet sets {"facets":[[[block, rank], ...], ...]}.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"
#include "lambdacm/homology.hpp"
#include "lambdacm/multicomplex.hpp"

namespace lambdacm::json_io {

using json = nlohmann::json;

namespace detail {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace detail

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

// --- instances and vertices ------------------------------------------------

inline json to_json(const Instance& inst) { return {{"n", inst.n()}, {"a", inst.a()}, {"d", inst.facet_size()}}; }

inline Instance instance_from_json(const json& j) {
    return detail::guarded("instance", [&] {
        return Instance(detail::field(j, "n").get<std::vector<int>>(), detail::field(j, "a").get<std::vector<int>>(),
                        detail::field(j, "d").get<int>());
    });
}

/// Accepts either a bare instance or an object with an "instance" member.
inline Instance find_instance(const json& j) {
    if (j.is_object() && j.contains("instance")) {
        return instance_from_json(j.at("instance"));
    }
    return instance_from_json(j);
}

inline json to_json(Vertex v) { return json::array({v.block, v.rank}); }

inline Vertex vertex_from_json(const json& j) {
    return detail::guarded("vertex", [&] {
        if (!j.is_array() || j.size() != 2) {
            throw InputError("vertex must be a [block, rank] pair");
        }
        return Vertex{j.at(0).get<int>(), j.at(1).get<int>()};
    });
}

inline json vertex_set_to_json(const Instance& inst, VertexSet s) {
    json out = json::array();
    for (const Vertex& v : inst.vertices_of(s)) {
        out.push_back(to_json(v));
    }
    return out;
}

inline VertexSet vertex_set_from_json(const Instance& inst, const json& j) {
    if (!j.is_array()) {
        throw InputError("vertex set must be an array of [block, rank] pairs");
    }
    std::vector<Vertex> vs;
    for (const json& v : j) {
        vs.push_back(vertex_from_json(v));
    }
    return inst.make_set(vs);
}

// --- monomials -------------------------------------------------------------

inline json to_json(const Instance& inst, const Monomial& mu) {
    inst.require_shape(mu);
    json blocks = json::array();
    for (int b = 0; b <= inst.blocks(); ++b) {
        json e = json::array();
        for (int k = inst.variable_offset(b); k < inst.variable_offset(b + 1); ++k) {
            e.push_back(mu[static_cast<std::size_t>(k)]);
        }
        blocks.push_back(e);
    }
    return {{"exp", blocks}};
}

inline Monomial monomial_from_json(const Instance& inst, const json& j) {
    return detail::guarded("monomial", [&] {
        const json& blocks = detail::field(j, "exp");
        if (!blocks.is_array() || blocks.size() != static_cast<std::size_t>(inst.blocks()) + 1) {
            throw InputError("monomial needs one exponent list per variable block 0..m");
        }
        std::vector<int> e;
        for (int b = 0; b <= inst.blocks(); ++b) {
            const auto part = blocks.at(static_cast<std::size_t>(b)).get<std::vector<int>>();
            if (part.size() != static_cast<std::size_t>(inst.variable_block_size(b))) {
                throw InputError("exponent list for block " + std::to_string(b) + " has the wrong length");
            }
            e.insert(e.end(), part.begin(), part.end());
        }
        return Monomial(std::move(e));
    });
}

inline json to_json(const Instance& inst, const MonomialSet& m) {
    json list = json::array();
    for (const Monomial& mu : m) {
        list.push_back(to_json(inst, mu));
    }
    return {{"monomials", list}};
}

inline MonomialSet monomial_set_from_json(const Instance& inst, const json& j) {
    const json& list = detail::field(j, "monomials");
    if (!list.is_array()) {
        throw InputError("\"monomials\" must be an array");
    }
    MonomialSet out;
    for (const json& mu : list) {
        out.insert(monomial_from_json(inst, mu));
    }
    return out;
}

// --- facet sets ------------------------------------------------------------

inline json facets_to_json(const Instance& inst, const std::vector<VertexSet>& facets) {
    json list = json::array();
    for (VertexSet f : facets) {
        list.push_back(vertex_set_to_json(inst, f));
    }
    return {{"instance", to_json(inst)}, {"facets", list}};
}

inline std::vector<VertexSet> facets_from_json(const Instance& inst, const json& j) {
    const json& list = detail::field(j, "facets");
    if (!list.is_array()) {
        throw InputError("\"facets\" must be an array");
    }
    std::vector<VertexSet> out;
    for (const json& f : list) {
        out.push_back(vertex_set_from_json(inst, f));
    }
    return out;
}

/// The smallest ground set able to hold the listed faces: n_i is the largest
/// rank seen in block i, a_i the largest number of vertices a face takes from
/// it, d the largest face size.
inline Instance infer_instance(const json& j) {
    const json& list = detail::field(j, "facets");
    std::vector<int> n;
    std::vector<int> a;
    int d = 0;
    for (const json& f : list) {
        if (!f.is_array()) {
            throw InputError("facet must be an array of [block, rank] pairs");
        }
        std::vector<int> per_block;
        for (const json& vj : f) {
            const Vertex v = vertex_from_json(vj);
            if (v.block < 1 || v.rank < 1) {
                throw InputError("vertex blocks and ranks start at 1");
            }
            const auto b = static_cast<std::size_t>(v.block);
            n.resize(std::max(n.size(), b), 1);
            a.resize(n.size(), 1);
            per_block.resize(n.size(), 0);
            n[b - 1] = std::max(n[b - 1], v.rank);
            a[b - 1] = std::max(a[b - 1], ++per_block[b - 1]);
        }
        d = std::max(d, static_cast<int>(f.size()));
    }
    if (n.empty()) {
        n = {1};
        a = {1};
    }
    int total = 0;
    for (int x : a) {
        total += x;
    }
    return Instance(n, a, std::min(d, total));
}

// --- reports ---------------------------------------------------------------

inline json to_json(const BettiProfile& b) { return b.values; }

}  // namespace lambdacm::json_io
