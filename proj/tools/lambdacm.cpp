// Command-line front end. Every subcommand reads and writes JSON.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error or bad input.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdacm/bijection.hpp"
#include "lambdacm/complex.hpp"
#include "lambdacm/homology.hpp"
#include "lambdacm/json_io.hpp"
#include "lambdacm/lsop.hpp"
#include "lambdacm/multicomplex.hpp"
#include "lambdacm/shelling.hpp"
#include "lambdacm/verify.hpp"

namespace {

using lambdacm::InputError;
using nlohmann::json;
namespace io = lambdacm::json_io;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Inline JSON text, or the name of a file holding it.
json json_arg(const std::string& text) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        return io::read_file(text);
    }
    return io::parse(text);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

lambdacm::Complex complex_from(const lambdacm::Instance& inst, const std::optional<std::string>& facets_file) {
    if (!facets_file) {
        return lambdacm::build_lambda(inst);
    }
    return lambdacm::Complex(inst, io::facets_from_json(inst, io::read_file(*facets_file)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lambda_d(n, a) complexes: shellings, compression, bijections and CM checks"};
    app.require_subcommand(1);

    std::string instance_file;
    std::optional<std::string> facets_file;
    std::string monomials_file;
    std::optional<std::uint64_t> seed_flag;

    auto add_instance = [&](CLI::App* sub) { sub->add_option("--instance", instance_file, "instance JSON file")->required(); };

    auto* lambda_cmd = app.add_subcommand("lambda", "list the facets of Lambda");
    add_instance(lambda_cmd);

    auto* fvector_cmd = app.add_subcommand("fvector", "f-vector (f_-1 first) of Lambda or of --facets");
    add_instance(fvector_cmd);
    fvector_cmd->add_option("--facets", facets_file, "facet-set JSON file");

    auto* hvector_cmd = app.add_subcommand("hvector", "h-vector of Lambda or of --facets");
    add_instance(hvector_cmd);
    hvector_cmd->add_option("--facets", facets_file, "facet-set JSON file");

    bool verify_flag = false;
    auto* shelling_cmd = app.add_subcommand("shelling", "revlex shelling with closed-form restrictions");
    add_instance(shelling_cmd);
    shelling_cmd->add_flag("--verify", verify_flag, "check the shelling from the definition");

    bool check_flag = false;
    auto* compress_cmd = app.add_subcommand("compress", "(0)-compress a multicomplex");
    add_instance(compress_cmd);
    compress_cmd->add_option("--monomials", monomials_file, "monomial-set JSON file")->required();
    compress_cmd->add_flag("--check", check_flag, "only test whether the input is already (0)-compressed");

    std::string facet_text;
    auto* phi_cmd = app.add_subcommand("phi", "Phi of a facet");
    add_instance(phi_cmd);
    phi_cmd->add_option("--facet", facet_text, "vertex list JSON, inline or file")->required();

    std::string monomial_text;
    auto* psi_cmd = app.add_subcommand("psi", "Psi of a monomial");
    add_instance(psi_cmd);
    psi_cmd->add_option("--monomial", monomial_text, "monomial JSON, inline or file")->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "the complex Psi(M) of a (0)-compressed multicomplex");
    add_instance(gamma_cmd);
    gamma_cmd->add_option("--monomials", monomials_file, "monomial-set JSON file")->required();

    std::string cm_facets;
    std::optional<std::string> cm_instance;
    auto* cm_cmd = app.add_subcommand("check-cm", "Reisner test over Q");
    cm_cmd->add_option("--facets", cm_facets, "facet-set JSON file")->required();
    cm_cmd->add_option("--instance", cm_instance, "instance JSON file (default: embedded or inferred)");

    int seeds = 5;
    double range = 1e6;
    auto* lsop_cmd = app.add_subcommand("check-lsop", "facet minors of random g^{-1} against the last d columns");
    add_instance(lsop_cmd);
    lsop_cmd->add_option("--seeds", seeds, "number of seeds")->check(CLI::PositiveNumber);
    lsop_cmd->add_option("--range", range, "numerators and denominators drawn from [1, range]")->check(CLI::Range(1.0, 9.0e18));

    std::size_t bij_budget = 200;
    bool all_choices = false;
    auto* bij_cmd = app.add_subcommand("verify-bijection", "conditions (a)-(e) for every facet and subface");
    add_instance(bij_cmd);
    bij_cmd->add_option("--budget", bij_budget, "largest facet count to attempt");
    bij_cmd->add_flag("--all-choices", all_choices, "swap every admissible vertex, not only the largest");

    lambdacm::VerifyOptions vopt;
    bool grid = false;
    auto* verify_cmd = app.add_subcommand("verify", "end-to-end equivalence checks");
    verify_cmd->add_option("--instance", instance_file, "instance JSON file");
    verify_cmd->add_flag("--grid", grid, "run the default grid instead of one instance");
    verify_cmd->add_option("--budget", vopt.enumeration_budget, "enumerate multicomplexes when there are at most this many");
    verify_cmd->add_option("--samples", vopt.samples, "random multicomplexes otherwise");
    verify_cmd->add_option("--extensional", vopt.extensional_facets, "facet limit for the exhaustive h/F comparison");
    verify_cmd->add_option("--facet-budget", vopt.facet_budget, "refuse instances with more facets");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->add_option("--seed", seed_flag, "RNG seed (default: $SEED or 0)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
        auto instance = [&] { return io::find_instance(io::read_file(instance_file)); };

        if (lambda_cmd->parsed()) {
            const auto inst = instance();
            emit(io::facets_to_json(inst, lambdacm::build_lambda(inst).facets()));
            return kOk;
        }
        if (fvector_cmd->parsed()) {
            emit(lambdacm::f_vector(complex_from(instance(), facets_file)));
            return kOk;
        }
        if (hvector_cmd->parsed()) {
            emit(lambdacm::h_vector(complex_from(instance(), facets_file)));
            return kOk;
        }
        if (shelling_cmd->parsed()) {
            const auto inst = instance();
            const auto rec = lambdacm::lex_shelling(lambdacm::build_lambda(inst));
            json out = io::facets_to_json(inst, rec.order);
            json restr = json::array();
            for (auto r : rec.restrictions) {
                restr.push_back(io::vertex_set_to_json(inst, r));
            }
            out["restrictions"] = restr;
            out["h"] = lambdacm::h_from_shelling(rec, inst.facet_size());
            int code = kOk;
            if (verify_flag) {
                const auto verdict = lambdacm::verify_shelling(rec);
                out["verified"] = verdict.ok;
                if (!verdict) {
                    out["failure"] = {{"index", verdict.index},
                                      {"face", io::vertex_set_to_json(inst, verdict.face)},
                                      {"reason", verdict.reason}};
                    code = kCheckFailed;
                }
            }
            emit(out);
            return code;
        }
        if (compress_cmd->parsed()) {
            const auto inst = instance();
            const lambdacm::MonomialPoset poset(inst);
            const auto m = io::monomial_set_from_json(inst, io::read_file(monomials_file));
            lambdacm::detail::require_in_poset(poset, m);
            if (check_flag) {
                const auto mask = poset.to_mask(m);
                for (int b = 1; b <= inst.blocks(); ++b) {
                    if (const auto w = poset.find_uncompressed(mask, b)) {
                        emit({{"compressed", false},
                              {"block", w->block},
                              {"member", io::to_json(inst, w->member)},
                              {"missing", io::to_json(inst, w->missing)}});
                        return kCheckFailed;
                    }
                }
                emit({{"compressed", true}});
                return kOk;
            }
            const auto res = poset.compress(poset.to_mask(m));
            json out = io::to_json(inst, poset.from_mask(res.mask));
            out["cycles"] = res.cycles;
            emit(out);
            return kOk;
        }
        if (phi_cmd->parsed()) {
            const auto inst = instance();
            const auto tau = io::vertex_set_from_json(inst, json_arg(facet_text));
            const auto mu = lambdacm::Phi(inst, tau);
            json out = io::to_json(inst, mu);
            out["degree"] = mu.degree();
            out["restriction"] = io::vertex_set_to_json(inst, lambdacm::restriction(inst, tau));
            emit(out);
            return kOk;
        }
        if (psi_cmd->parsed()) {
            const auto inst = instance();
            const auto mu = io::monomial_from_json(inst, json_arg(monomial_text));
            emit(io::vertex_set_to_json(inst, lambdacm::Psi(inst, mu)));
            return kOk;
        }
        if (gamma_cmd->parsed()) {
            const auto inst = instance();
            const lambdacm::MonomialPoset poset(inst);
            const auto m = io::monomial_set_from_json(inst, io::read_file(monomials_file));
            emit(io::facets_to_json(inst, lambdacm::gamma_from_M(poset, m).facets()));
            return kOk;
        }
        if (cm_cmd->parsed()) {
            const json doc = io::read_file(cm_facets);
            const auto inst = cm_instance ? io::find_instance(io::read_file(*cm_instance))
                              : doc.contains("instance") ? io::find_instance(doc)
                                                         : io::infer_instance(doc);
            const auto facets = io::facets_from_json(inst, doc);
            const auto verdict = lambdacm::is_CM(lambdacm::downward_closure(facets));
            json out{{"cm", verdict.cm}};
            if (!verdict) {
                out["pure"] = verdict.pure;
                if (verdict.face) {
                    out["face"] = io::vertex_set_to_json(inst, *verdict.face);
                    out["degree"] = verdict.degree;
                }
            }
            emit(out);
            return verdict ? kOk : kCheckFailed;
        }
        if (lsop_cmd->parsed()) {
            const auto inst = instance();
            const auto lambda = lambdacm::build_lambda(inst);
            constexpr int kRetries = 3;
            json results = json::array();
            bool ok = true;
            for (int s = 0; s < seeds; ++s) {
                json attempts = json::array();
                bool passed = false;
                for (int r = 0; r <= kRetries && !passed; ++r) {
                    lambdacm::GenericMatrixSpec spec{inst, seed + static_cast<std::uint64_t>(s) + 1000003ULL * static_cast<std::uint64_t>(r),
                                                     static_cast<std::int64_t>(range)};
                    const auto g = lambdacm::build_g_inverse(spec);
                    const auto verdict = lambdacm::check_kikl(lambda, spec, g.matrix);
                    json a{{"seed", spec.seed}, {"ok", verdict.ok}, {"block_determinant", lambdacm::block_determinant_identity(g)}};
                    if (verdict.facet) {
                        a["facet"] = io::vertex_set_to_json(inst, *verdict.facet);
                    }
                    passed = verdict.ok && a["block_determinant"].get<bool>();
                    attempts.push_back(a);
                }
                ok = ok && passed;
                results.push_back({{"ok", passed}, {"attempts", attempts}});
            }
            emit({{"ok", ok}, {"facets", lambda.size()}, {"seeds", results}});
            return ok ? kOk : kCheckFailed;
        }
        if (bij_cmd->parsed()) {
            const auto inst = instance();
            const auto lambda = lambdacm::build_lambda(inst);
            try {
                const auto rep = lambdacm::verify_bijection_theorem(lambda, bij_budget, all_choices);
                json out{{"ok", rep.ok()}, {"facets", rep.facets}, {"pairs", rep.pairs}};
                if (rep.failure) {
                    out["witness"] = {{"tau", io::vertex_set_to_json(inst, rep.failure->tau)},
                                      {"gamma", io::vertex_set_to_json(inst, rep.failure->gamma)},
                                      {"swapped", io::vertex_set_to_json(inst, rep.failure->swapped)},
                                      {"reason", rep.failure->reason}};
                }
                emit(out);
                return rep.ok() ? kOk : kCheckFailed;
            } catch (const lambdacm::BudgetExceeded& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kUsage;
            }
        }
        if (verify_cmd->parsed()) {
            vopt.seed = seed;
            if (grid == !instance_file.empty()) {
                std::cerr << "error: verify needs exactly one of --instance and --grid\n";
                return kUsage;
            }
            if (!grid) {
                const auto rep = lambdacm::verify_instance(instance(), vopt);
                emit(rep.to_json());
                return rep.passed() ? kOk : kCheckFailed;
            }
            bool ok = true;
            for (const auto& inst : lambdacm::default_grid()) {
                const auto rep = lambdacm::verify_instance(inst, vopt);
                emit(rep.to_json());
                ok = ok && rep.passed();
            }
            return ok ? kOk : kCheckFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
