#pragma once

// End-to-end checks of the equivalences between multicomplexes in S,
// (0)-compressed multicomplexes, shellable subcomplexes of Lambda and
// Cohen-Macaulay subcomplexes of Lambda, on a single instance or a grid.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lambdacm/bijection.hpp"
#include "lambdacm/complex.hpp"
#include "lambdacm/ground.hpp"
#include "lambdacm/homology.hpp"
#include "lambdacm/json_io.hpp"
#include "lambdacm/multicomplex.hpp"
#include "lambdacm/shelling.hpp"

namespace lambdacm {

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t enumeration_budget = 20000;  ///< enumerate every multicomplex when there are at most this many
    std::size_t samples = 200;               ///< random multicomplexes otherwise
    std::size_t extensional_facets = 14;     ///< compare CM h-vectors with F-vectors when Lambda has at most this many facets
    std::size_t facet_budget = 20000;        ///< refuse instances whose Lambda has more facets
};

/// Instance-specific RNG so that a report depends only on (instance, seed).
inline std::mt19937_64 instance_rng(const Instance& inst, std::uint64_t seed) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                     static_cast<std::uint32_t>(inst.facet_size())};
    for (std::size_t i = 0; i < inst.n().size(); ++i) {
        words.push_back(static_cast<std::uint32_t>(inst.n()[i]));
        words.push_back(static_cast<std::uint32_t>(inst.a()[i]));
    }
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

/// The multicomplexes a run checks: all of them when the count fits the
/// budget, random nonempty ones otherwise.
struct MulticomplexSuite {
    std::vector<PosetMask> members;
    bool exhaustive = false;
};

inline MulticomplexSuite multicomplex_suite(const MonomialPoset& poset, const VerifyOptions& opt, std::mt19937_64& rng) {
    MulticomplexSuite suite;
    suite.exhaustive = poset.enumerate_multicomplexes(opt.enumeration_budget, [&](const PosetMask& m) { suite.members.push_back(m); });
    if (!suite.exhaustive) {
        suite.members.clear();
        for (std::size_t s = 0; s < opt.samples; ++s) {
            suite.members.push_back(poset.random_multicomplex(rng));
        }
    }
    return suite;
}

/// Outcome of running the compression loop one operator at a time.
struct CompressionCheck {
    PosetMask result;
    int steps = 0;
    std::optional<std::string> failure;
};

/// Applies C_1, ..., C_m cyclically, checking after every step that the
/// F-vector and multicomplex property survive, that the total degree of the
/// potential is unchanged, and that the potential never drops in revlex and
/// strictly rises whenever the set changes. The final set must be (0)-compressed.
inline CompressionCheck checked_compress(const MonomialPoset& poset, const PosetMask& start) {
    CompressionCheck out;
    const Instance& inst = poset.instance();
    const auto nvars = static_cast<std::size_t>(inst.variable_count());
    const std::vector<std::int64_t> f0 = poset.F_vector(start);
    PosetMask mask = start;
    Monomial pot = potential(poset.from_mask(mask), nvars);
    const long cap = static_cast<long>(poset.size()) * static_cast<long>(poset.size()) + 2;
    for (long pass = 0;; ++pass) {
        if (pass > cap) {
            out.failure = "compression did not stabilize";
            return out;
        }
        bool changed = false;
        for (int b = 1; b <= inst.blocks(); ++b) {
            PosetMask next = poset.compress_block(mask, b);
            ++out.steps;
            if (poset.F_vector(next) != f0) {
                out.failure = "C_" + std::to_string(b) + " changed the F-vector";
                return out;
            }
            if (!poset.is_multicomplex(next)) {
                out.failure = "C_" + std::to_string(b) + " broke the multicomplex property";
                return out;
            }
            if (!poset.is_0i_compressed(next, b)) {
                out.failure = "C_" + std::to_string(b) + " output is not (0," + std::to_string(b) + ")-compressed";
                return out;
            }
            const Monomial pot2 = potential(poset.from_mask(next), nvars);
            if (pot2.degree() != pot.degree()) {
                out.failure = "C_" + std::to_string(b) + " changed the degree of the potential";
                return out;
            }
            const auto cmp = revlex_mono_cmp(pot2, pot);
            if (next != mask ? cmp != std::strong_ordering::greater : cmp != std::strong_ordering::equal) {
                out.failure = "C_" + std::to_string(b) + " potential not revlex-monotone";
                return out;
            }
            if (next != mask) {
                changed = true;
                mask = std::move(next);
                pot = pot2;
            }
        }
        if (!changed) {
            break;
        }
    }
    if (!poset.is_0_compressed(mask)) {
        out.failure = "compression output is not (0)-compressed";
        return out;
    }
    out.result = std::move(mask);
    return out;
}

/// Result of one leg of the equivalence chain.
struct DirectionResult {
    explicit DirectionResult(std::string n, std::string m = "") : name(std::move(n)), mode(std::move(m)) {}

    std::string name;
    std::string status = "pass";  ///< pass | fail | skipped
    std::string mode;             ///< exhaustive | sampled | skipped
    std::size_t checked = 0;
    double millis = 0;
    std::string detail;
};

struct VerificationReport {
    Instance instance;
    std::uint64_t seed = 0;
    VerifyOptions options;
    std::vector<DirectionResult> directions;
    std::optional<nlohmann::json> witness;
    bool complete = true;

    bool passed() const {
        for (const DirectionResult& d : directions) {
            if (d.status == "fail") {
                return false;
            }
        }
        return true;
    }

    std::string status() const {
        if (!passed()) {
            return "fail";
        }
        return complete ? "pass" : "incomplete";
    }

    nlohmann::json to_json() const {
        nlohmann::json dirs = nlohmann::json::object();
        for (const DirectionResult& d : directions) {
            dirs[d.name] = {{"status", d.status}, {"mode", d.mode}, {"checked", d.checked}, {"millis", d.millis}};
            if (!d.detail.empty()) {
                dirs[d.name]["detail"] = d.detail;
            }
        }
        return {{"instance", json_io::to_json(instance)},
                {"seed", seed},
                {"status", status()},
                {"directions", dirs},
                {"witness", witness ? *witness : nlohmann::json(nullptr)},
                {"budget",
                 {{"facets", options.facet_budget},
                  {"enumeration", options.enumeration_budget},
                  {"samples", options.samples},
                  {"extensional_facets", options.extensional_facets}}}};
    }
};

namespace detail {

class Stopwatch {
public:
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string vec_str(const std::vector<std::int64_t>& v) { return nlohmann::json(v).dump(); }

}  // namespace detail

/// Sets of h-vectors of CM pure full-dimensional subcomplexes and of
/// F-vectors of nonempty multicomplexes in S, both gathered exhaustively.
struct ExtensionalSets {
    std::set<std::vector<std::int64_t>> cm_h;
    std::set<std::vector<std::int64_t>> multicomplex_F;
    std::map<std::vector<std::int64_t>, std::vector<VertexSet>> cm_example;  ///< one CM complex per h
    std::size_t subcomplexes = 0;
};

inline ExtensionalSets extensional_sets(const Complex& lambda, const MonomialPoset& poset) {
    ExtensionalSets out;
    const std::vector<VertexSet>& all = lambda.facets();
    if (all.size() >= 63) {
        throw BudgetExceeded("extensional_sets: too many facets");
    }
    const std::uint64_t subsets = std::uint64_t{1} << all.size();
    std::vector<VertexSet> chosen;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        chosen.clear();
        for (std::size_t k = 0; k < all.size(); ++k) {
            if ((s >> k) & 1U) {
                chosen.push_back(all[k]);
            }
        }
        const Complex delta(lambda.instance(), chosen);
        ++out.subcomplexes;
        if (is_CM(delta)) {
            auto h = h_vector(delta);
            out.cm_example.try_emplace(h, chosen);
            out.cm_h.insert(std::move(h));
        }
    }
    poset.enumerate_multicomplexes(static_cast<std::size_t>(-1), [&](const PosetMask& m) {
        if (std::find(m.begin(), m.end(), true) != m.end()) {
            out.multicomplex_F.insert(poset.F_vector(m));
        }
    });
    return out;
}

inline VerificationReport verify_instance(const Instance& inst, const VerifyOptions& opt = {}) {
    VerificationReport rep{inst, opt.seed, opt, {}, std::nullopt, true};
    auto rng = instance_rng(inst, opt.seed);
    const Complex lambda = build_lambda(inst);
    const int d = inst.facet_size();
    if (lambda.size() > opt.facet_budget) {
        rep.complete = false;
        for (const char* name : {"3->4", "4->2", "2->1", "1<->3"}) {
            DirectionResult skipped(name, "skipped");
            skipped.status = "skipped";
            skipped.detail = "facet count exceeds the budget";
            rep.directions.push_back(skipped);
        }
        return rep;
    }
    const MonomialPoset poset(inst);

    // 3 -> 4: compression.
    DirectionResult compress_dir("3->4");
    detail::Stopwatch clock;
    const MulticomplexSuite suite = multicomplex_suite(poset, opt, rng);
    compress_dir.mode = suite.exhaustive ? "exhaustive" : "sampled";
    std::set<PosetMask> compressed;
    for (const PosetMask& m : suite.members) {
        ++compress_dir.checked;
        CompressionCheck c = checked_compress(poset, m);
        if (c.failure) {
            compress_dir.status = "fail";
            compress_dir.detail = *c.failure;
            rep.witness = json_io::to_json(inst, poset.from_mask(m));
            break;
        }
        compressed.insert(std::move(c.result));
    }
    compress_dir.millis = clock.millis();
    rep.directions.push_back(compress_dir);

    // 4 -> 2 and 2 -> 1 on each distinct compressed output.
    DirectionResult shell_dir("4->2", compress_dir.mode);
    DirectionResult cm_dir("2->1", compress_dir.mode);
    for (const PosetMask& m : compressed) {
        if (std::find(m.begin(), m.end(), true) == m.end()) {
            continue;
        }
        const MonomialSet mset = poset.from_mask(m);
        const std::vector<std::int64_t> f = poset.F_vector(m);
        detail::Stopwatch t1;
        const Complex gamma = gamma_from_M(poset, mset);
        const ShellingRecord rec = subcomplex_lex_record(gamma);
        const ShellingVerdict sv = verify_shelling(rec);
        ++shell_dir.checked;
        std::string problem;
        if (!sv) {
            problem = "Gamma is not shelled by the revlex order: " + sv.reason;
        } else if (h_from_shelling(rec, d) != f) {
            problem = "restriction histogram " + detail::vec_str(h_from_shelling(rec, d)) + " differs from F(M) " + detail::vec_str(f);
        } else if (h_vector(gamma) != f) {
            problem = "h(Gamma) " + detail::vec_str(h_vector(gamma)) + " differs from F(M) " + detail::vec_str(f);
        }
        shell_dir.millis += t1.millis();
        if (!problem.empty()) {
            shell_dir.status = "fail";
            shell_dir.detail = problem;
            rep.witness = json_io::to_json(inst, mset);
            break;
        }
        detail::Stopwatch t2;
        const CMVerdict cm = is_CM(gamma);
        ++cm_dir.checked;
        cm_dir.millis += t2.millis();
        if (!cm) {
            cm_dir.status = "fail";
            cm_dir.detail = "Gamma is not Cohen-Macaulay";
            rep.witness = json_io::facets_to_json(inst, gamma.facets());
            if (cm.face) {
                (*rep.witness)["face"] = json_io::vertex_set_to_json(inst, *cm.face);
                (*rep.witness)["degree"] = cm.degree;
            }
            break;
        }
    }
    rep.directions.push_back(shell_dir);
    rep.directions.push_back(cm_dir);

    // 1 <-> 3 by exhaustive comparison on tiny instances.
    DirectionResult ext_dir("1<->3");
    if (lambda.size() <= opt.extensional_facets) {
        detail::Stopwatch t3;
        ext_dir.mode = "exhaustive";
        const ExtensionalSets sets = extensional_sets(lambda, poset);
        ext_dir.checked = sets.subcomplexes;
        for (const auto& h : sets.cm_h) {
            if (!sets.multicomplex_F.contains(h)) {
                ext_dir.status = "fail";
                ext_dir.detail = "CM complex with h " + detail::vec_str(h) + " matches no multicomplex";
                rep.witness = json_io::facets_to_json(inst, sets.cm_example.at(h));
                break;
            }
        }
        if (ext_dir.status == "pass") {
            for (const auto& f : sets.multicomplex_F) {
                if (!sets.cm_h.contains(f)) {
                    ext_dir.status = "fail";
                    ext_dir.detail = "F-vector " + detail::vec_str(f) + " is the h-vector of no CM subcomplex";
                    rep.witness = nlohmann::json{{"F", f}};
                    break;
                }
            }
        }
        ext_dir.millis = t3.millis();
    } else {
        ext_dir.status = "skipped";
        ext_dir.mode = "skipped";
        ext_dir.detail = std::to_string(lambda.size()) + " facets exceeds the extensional limit";
    }
    rep.directions.push_back(ext_dir);
    return rep;
}

/// All instances with m <= max_blocks, n_i <= max_n, sum a_i <= max_sum_a and
/// 1 <= d <= sum a_i, ordered by m, then n, then a, then d.
inline std::vector<Instance> default_grid(int max_blocks = 3, int max_n = 4, int max_sum_a = 6) {
    std::vector<Instance> out;
    for (int m = 1; m <= max_blocks; ++m) {
        std::vector<int> n(static_cast<std::size_t>(m), 1);
        std::vector<int> a(static_cast<std::size_t>(m), 1);
        auto over_a = [&](auto&& self, std::size_t i, int sum) -> void {
            if (i == a.size()) {
                for (int d = 1; d <= sum; ++d) {
                    out.emplace_back(n, a, d);
                }
                return;
            }
            for (int x = 1; x <= n[i] && sum + x <= max_sum_a; ++x) {
                a[i] = x;
                self(self, i + 1, sum + x);
            }
        };
        auto over_n = [&](auto&& self, std::size_t i) -> void {
            if (i == n.size()) {
                over_a(over_a, 0, 0);
                return;
            }
            for (int x = 1; x <= max_n; ++x) {
                n[i] = x;
                self(self, i + 1);
            }
        };
        over_n(over_n, 0);
    }
    return out;
}

}  // namespace lambdacm
