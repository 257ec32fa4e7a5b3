// helly — combinatorial topology and discrete geometry toolkit CLI.
//
// Subcommands: homology, leray, collapse, matroid, theorem, nerve,
// colorful-helly, tverberg (center|tolerant|verify), generate, run-suite,
// verify. All I/O is JSON; rationals ride as "p/q" strings. Exit codes:
// 0 success, 1 assertion/verification failure, 2 usage or I/O error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helly/collapse.hpp"
#include "helly/colorful.hpp"
#include "helly/complex.hpp"
#include "helly/generators.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/json_io.hpp"
#include "helly/matroid.hpp"
#include "helly/oracles.hpp"
#include "helly/rng.hpp"
#include "helly/suites.hpp"
#include "helly/theorems.hpp"
#include "helly/tverberg.hpp"

using namespace helly;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    int budget = 100; // percent of default caps / corpus sizes
    std::string json_out;
    bool quiet = false;
};

void emit(const GlobalOpts& g, const std::string& command, const json& params,
          const json& result, std::chrono::steady_clock::time_point t0) {
    json report;
    report["helly_schema"] = kSchemaVersion;
    report["command"] = command;
    report["parameters"] = params;
    report["seed"] = g.seed;
    report["result"] = result;
    report["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
    if (!g.json_out.empty())
        write_json_file(g.json_out, report);
    else
        std::cout << report.dump(2) << std::endl;
}

Simplex parse_id_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) v.push_back(std::stoi(tok));
    return Simplex(std::move(v));
}

int scaled(int base, int percent) { return std::max(1, base * percent / 100); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact colorful-Helly / Tverberg toolkit"};
    app.fallthrough(); // global flags may appear after the subcommand
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for random instances")->capture_default_str();
    app.add_option("--budget", g.budget, "percent of default search/corpus budgets")
        ->capture_default_str();
    app.add_option("--json-out", g.json_out, "write the JSON report to a file");
    app.add_flag("--quiet", g.quiet, "suppress the human-readable summary");

    // ---- homology ----------------------------------------------------------
    auto* cmd_hom = app.add_subcommand("homology", "reduced Betti numbers");
    std::string hom_complex, hom_field = "q";
    int hom_k = 0;
    bool hom_all = false;
    cmd_hom->add_option("--complex", hom_complex, "complex JSON file")->required();
    cmd_hom->add_option("--betti", hom_k, "homology index k (>= -1)");
    cmd_hom->add_flag("--all", hom_all, "report all indices -1..dim");
    cmd_hom->add_option("--field", hom_field, "q | f2")->capture_default_str();

    // ---- leray -------------------------------------------------------------
    auto* cmd_leray = app.add_subcommand("leray", "d-Leray check");
    std::string leray_complex, leray_method = "both";
    int leray_d = 1;
    cmd_leray->add_option("--complex", leray_complex)->required();
    cmd_leray->add_option("-d,--dim", leray_d, "d")->required();
    cmd_leray->add_option("--method", leray_method, "induced | links | both")
        ->capture_default_str();

    // ---- collapse ----------------------------------------------------------
    auto* cmd_col = app.add_subcommand("collapse", "d-collapsibility search");
    std::string col_complex, col_mode = "standard";
    int col_d = 1;
    cmd_col->add_option("--complex", col_complex)->required();
    cmd_col->add_option("-d,--dim", col_d, "d")->required();
    cmd_col->add_option("--mode", col_mode, "standard | exact")->capture_default_str();

    // ---- matroid -----------------------------------------------------------
    auto* cmd_mat = app.add_subcommand("matroid", "rank oracle queries");
    std::string mat_file, mat_rank, mat_span, mat_indep;
    int mat_tol = -1;
    bool mat_axioms = false;
    cmd_mat->add_option("--matroid", mat_file)->required();
    cmd_mat->add_option("--rank", mat_rank, "comma-separated element ids");
    cmd_mat->add_option("--span", mat_span, "comma-separated element ids");
    cmd_mat->add_option("--independent", mat_indep, "comma-separated element ids");
    cmd_mat->add_option("--tolerance", mat_tol, "report the t-tolerance matroid");
    cmd_mat->add_flag("--check-axioms", mat_axioms, "verify axioms (explicit kind)");

    // ---- theorem -----------------------------------------------------------
    auto* cmd_thm = app.add_subcommand("theorem", "hypothesis check + witness");
    std::string thm_which = "1.5", thm_complex, thm_matroid;
    int thm_d = 1, thm_m = 1, thm_k = 1;
    bool thm_constructive = false;
    cmd_thm->add_option("--which", thm_which, "1.5 | 1.6")->capture_default_str();
    cmd_thm->add_option("--complex", thm_complex)->required();
    cmd_thm->add_option("--matroid", thm_matroid)->required();
    cmd_thm->add_option("-d,--dim", thm_d)->required();
    cmd_thm->add_option("-m", thm_m)->required();
    cmd_thm->add_option("-k", thm_k)->required();
    cmd_thm->add_flag("--constructive", thm_constructive,
                      "also extract the witness from a collapse certificate");

    // ---- nerve -------------------------------------------------------------
    auto* cmd_nerve = app.add_subcommand("nerve", "nerve of a convex family");
    std::string nerve_family;
    cmd_nerve->add_option("--family", nerve_family)->required();

    // ---- colorful-helly ----------------------------------------------------
    auto* cmd_ch = app.add_subcommand("colorful-helly", "geometric colorful Helly");
    std::string ch_family;
    int ch_d = 1, ch_m = 1, ch_k = 1;
    cmd_ch->add_option("--family", ch_family)->required();
    cmd_ch->add_option("-d,--dim", ch_d)->required();
    cmd_ch->add_option("-m", ch_m)->required();
    cmd_ch->add_option("-k", ch_k)->required();

    // ---- tverberg ----------------------------------------------------------
    auto* cmd_tv = app.add_subcommand("tverberg", "Tverberg partitions");
    cmd_tv->require_subcommand(1);
    auto* tv_center = cmd_tv->add_subcommand("center", "partition with Tverberg center");
    std::string tvc_points;
    int tvc_r = 2;
    tv_center->add_option("--points", tvc_points)->required();
    tv_center->add_option("-r", tvc_r)->required();
    auto* tv_tol = cmd_tv->add_subcommand("tolerant", "partition with tolerance");
    std::string tvt_points;
    int tvt_r = 2, tvt_t = 1;
    tv_tol->add_option("--points", tvt_points)->required();
    tv_tol->add_option("-r", tvt_r)->required();
    tv_tol->add_option("-t", tvt_t)->required();
    auto* tv_verify = cmd_tv->add_subcommand("verify", "re-check a certificate");
    std::string tvv_cert;
    tv_verify->add_option("--certificate", tvv_cert)->required();

    // ---- generate ----------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("generate", "seeded random instances");
    cmd_gen->require_subcommand(1);
    auto* gen_complex = cmd_gen->add_subcommand("complex", "random complex");
    int genc_vertices = 6, genc_facets = 6, genc_maxsize = 4, genc_d = 2, genc_steps = 4;
    bool genc_collapsible = false;
    gen_complex->add_option("--vertices", genc_vertices)->capture_default_str();
    gen_complex->add_option("--facets", genc_facets)->capture_default_str();
    gen_complex->add_option("--max-size", genc_maxsize)->capture_default_str();
    gen_complex->add_flag("--collapsible", genc_collapsible, "reverse-collapse construction");
    gen_complex->add_option("-d,--dim", genc_d, "collapse parameter d")->capture_default_str();
    gen_complex->add_option("--steps", genc_steps, "reverse growth steps")->capture_default_str();
    auto* gen_matroid = cmd_gen->add_subcommand("matroid", "random matroid");
    std::string genm_kind = "any";
    int genm_elements = 5, genm_blocks = 0;
    gen_matroid->add_option("--kind", genm_kind, "uniform|partition|linear|explicit|tolerance|any")
        ->capture_default_str();
    gen_matroid->add_option("--elements", genm_elements)->capture_default_str();
    gen_matroid->add_option("--blocks", genm_blocks, "partition kind: block count");
    auto* gen_points = cmd_gen->add_subcommand("points", "random rational points");
    int genp_dim = 2, genp_count = 9;
    gen_points->add_option("--dim", genp_dim)->capture_default_str();
    gen_points->add_option("--count", genp_count)->capture_default_str();
    auto* gen_family = cmd_gen->add_subcommand("family", "random convex family");
    std::string genf_kind = "intervals";
    int genf_count = 5, genf_dim = 2;
    gen_family->add_option("--kind", genf_kind, "intervals | boxes")->capture_default_str();
    gen_family->add_option("--count", genf_count)->capture_default_str();
    gen_family->add_option("--dim", genf_dim, "box dimension")->capture_default_str();

    // ---- run-suite ---------------------------------------------------------
    auto* cmd_suite = app.add_subcommand("run-suite", "property/acceptance suites");
    std::string suite_name = "all";
    cmd_suite->add_option("suite", suite_name, "lemmas | theorems | tverberg | all")
        ->capture_default_str();

    // ---- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "re-check any emitted certificate");
    std::string ver_cert;
    cmd_verify->add_option("--certificate", ver_cert)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*cmd_hom) {
            std::vector<std::string> warnings;
            SimplicialComplex X = complex_from_json(load_json_file(hom_complex), &warnings);
            const Field f = hom_field == "f2" ? Field::F2 : Field::Q;
            json result;
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            if (hom_all) {
                json bs = json::array();
                std::vector<int> betti = reduced_betti_all(X, f);
                for (int k = -1; k <= X.dim(); ++k)
                    bs.push_back(json{{"k", k}, {"rank", betti[static_cast<size_t>(k + 1)]}});
                result["betti"] = bs;
            } else {
                result["k"] = hom_k;
                result["rank"] = reduced_betti(X, hom_k, f);
            }
            if (!g.quiet) std::cerr << "homology computed over " << hom_field << "\n";
            emit(g, "homology", json{{"complex", hom_complex}, {"field", hom_field}}, result, t0);
            return 0;
        }

        if (*cmd_leray) {
            SimplicialComplex X = complex_from_json(load_json_file(leray_complex));
            json result;
            bool verdict = true;
            if (leray_method == "induced" || leray_method == "both") {
                LerayResult r = is_d_leray_induced(X, leray_d);
                result["induced"] = r.is_leray;
                if (r.witness)
                    result["induced_witness"] = json{{"U", simplex_to_json(r.witness->first)},
                                                     {"k", r.witness->second}};
                verdict = r.is_leray;
            }
            if (leray_method == "links" || leray_method == "both") {
                LerayResult r = is_d_leray_links(X, leray_d);
                result["links"] = r.is_leray;
                if (r.witness)
                    result["links_witness"] = json{{"sigma", simplex_to_json(r.witness->first)},
                                                   {"k", r.witness->second}};
                verdict = r.is_leray;
            }
            if (leray_method == "both" && result.contains("induced") &&
                result["induced"] != result["links"]) {
                std::cerr << "internal disagreement between methods\n";
                return 1;
            }
            result["is_leray"] = verdict;
            emit(g, "leray", json{{"complex", leray_complex}, {"d", leray_d}}, result, t0);
            return 0;
        }

        if (*cmd_col) {
            SimplicialComplex X = complex_from_json(load_json_file(col_complex));
            const CollapseMode mode =
                col_mode == "exact" ? CollapseMode::ExactD : CollapseMode::Standard;
            CollapseBudget budget;
            budget.max_states = static_cast<size_t>(scaled(5000, g.budget));
            CollapseSearchResult res = find_d_collapse(X, col_d, mode, budget);
            emit(g, "collapse", json{{"complex", col_complex}, {"d", col_d}, {"mode", col_mode}},
                 collapse_cert_to_json(X, col_d, mode, res), t0);
            return 0;
        }

        if (*cmd_mat) {
            Matroid M = matroid_from_json(load_json_file(mat_file));
            json result;
            result["elements"] = M.num_elements();
            result["rank_full"] = M.rank_full();
            if (!mat_rank.empty()) result["rank"] = M.rank(parse_id_list(mat_rank));
            if (!mat_span.empty())
                result["span"] = simplex_to_json(M.span(parse_id_list(mat_span)));
            if (!mat_indep.empty())
                result["independent"] = M.is_independent(parse_id_list(mat_indep));
            if (mat_tol >= 0) result["tolerance"] = matroid_to_json(M.tolerance(mat_tol));
            if (mat_axioms) {
                require(M.kind() == Matroid::Kind::Explicit, Errc::BadParams,
                        "--check-axioms needs an explicit matroid");
                AxiomCheck chk = check_matroid_axioms(M.num_elements(), M.family());
                result["axioms_ok"] = chk.ok;
                if (!chk.ok) result["violation"] = chk.violation;
                emit(g, "matroid", json{{"matroid", mat_file}}, result, t0);
                return chk.ok ? 0 : 1;
            }
            emit(g, "matroid", json{{"matroid", mat_file}}, result, t0);
            return 0;
        }

        if (*cmd_thm) {
            SimplicialComplex X = complex_from_json(load_json_file(thm_complex));
            Matroid M = matroid_from_json(load_json_file(thm_matroid));
            json result;
            HypothesisReport rep = thm_which == "1.6"
                                       ? hypothesis_leray(X, M, thm_d, thm_m, thm_k)
                                       : hypothesis_collapsible(X, M, thm_d, thm_m, thm_k);
            result["hypothesis"] = rep.holds;
            if (!rep.holds) {
                result["counterexample"] = json{{"U", simplex_to_json(*rep.bad_U)},
                                                {"S", simplex_to_json(*rep.bad_S)}};
                result["witness"] = nullptr;
            } else {
                auto w = find_witness(X, M, thm_m, thm_k, thm_which != "1.6");
                if (w)
                    result["witness"] = json{{"tau", simplex_to_json(w->tau)},
                                             {"rank_tau", w->rank_tau},
                                             {"rank_complement", w->rank_complement}};
                else
                    result["witness"] = nullptr;
                result["counterexample"] = nullptr;
                if (thm_constructive && thm_which == "1.6")
                    std::cerr << "note: --constructive applies to 1.5 only; ignored\n";
                if (thm_constructive && thm_which != "1.6") {
                    CollapseSearchResult cert = find_d_collapse(
                        X, thm_d, CollapseMode::ExactD,
                        {12, static_cast<size_t>(scaled(400000, g.budget))});
                    require(cert.sequence.has_value(), Errc::BadParams,
                            "complex is not d-collapsible; --constructive needs a certificate");
                    Witness ew = extract_witness_from_collapse(X, *cert.sequence, M, thm_d,
                                                               thm_m, thm_k);
                    result["constructive_witness"] =
                        json{{"tau", simplex_to_json(ew.tau)},
                             {"rank_tau", ew.rank_tau},
                             {"rank_complement", ew.rank_complement}};
                }
            }
            emit(g, "theorem",
                 json{{"which", thm_which}, {"complex", thm_complex}, {"matroid", thm_matroid},
                      {"d", thm_d}, {"m", thm_m}, {"k", thm_k}},
                 result, t0);
            return 0;
        }

        if (*cmd_nerve) {
            ColoredFamily fam = family_from_json(load_json_file(nerve_family));
            NerveResult nv = nerve(fam, scaled(12, g.budget));
            json result = complex_to_json(nv.complex);
            result["empty_vertices"] = nv.empty_vertices;
            emit(g, "nerve", json{{"family", nerve_family}}, result, t0);
            return 0;
        }

        if (*cmd_ch) {
            ColoredFamily fam = family_from_json(load_json_file(ch_family));
            ColorfulHellyResult res = colorful_helly(fam, ch_d, ch_m, ch_k);
            json result;
            result["hypothesis"] = res.hypothesis_holds;
            if (res.hypothesis_holds) {
                result["classes"] = res.classes;
                result["tau"] = res.tau;
                result["common_point"] = point_to_json(*res.common_point);
            } else {
                result["violating_subfamily"] = simplex_to_json(*res.bad_subfamily);
                result["violating_core"] = simplex_to_json(*res.bad_core);
            }
            emit(g, "colorful-helly",
                 json{{"family", ch_family}, {"d", ch_d}, {"m", ch_m}, {"k", ch_k}}, result, t0);
            return res.hypothesis_holds ? 0 : 1;
        }

        if (*tv_center) {
            PointConfig A = points_from_json(load_json_file(tvc_points));
            TverbergCertificate cert = tverberg_with_center(A, tvc_r);
            emit(g, "tverberg center", json{{"points", tvc_points}, {"r", tvc_r}},
                 tverberg_cert_to_json(A, tvc_r, cert), t0);
            return 0;
        }

        if (*tv_tol) {
            PointConfig A = points_from_json(load_json_file(tvt_points));
            ToleranceCertificate cert = tolerant_tverberg(A, tvt_r, tvt_t);
            emit(g, "tverberg tolerant",
                 json{{"points", tvt_points}, {"r", tvt_r}, {"t", tvt_t}},
                 tolerance_cert_to_json(A, tvt_r, cert), t0);
            return 0;
        }

        if (*tv_verify || *cmd_verify) {
            const std::string path = *tv_verify ? tvv_cert : ver_cert;
            json cert = load_json_file(path);
            // Accept either a bare certificate or a full command report.
            if (!cert.contains("type") && cert.contains("result")) cert = cert["result"];
            require(cert.contains("type"), Errc::IoError, "certificate missing \"type\"");
            const std::string type = cert["type"].get<std::string>();
            bool ok = false;
            json result;
            if (type == "collapse") {
                SimplicialComplex X = complex_from_json(cert.at("complex"));
                if (cert.value("collapsible", false)) {
                    SequenceCheck chk = verify_sequence(X, collapse_sequence_from_json(cert));
                    ok = chk.valid;
                    if (!chk.valid) result["failed_step"] = chk.failed_step;
                } else {
                    ok = true; // nothing to replay for a negative certificate
                    result["note"] = "negative certificate; nothing to replay";
                }
            } else if (type == "tverberg_center") {
                PointConfig A = points_from_json(cert.at("points"));
                CenterCheck chk = verify_center(A, cert.at("labels").get<std::vector<int>>(),
                                                cert.at("center").get<std::vector<int>>(),
                                                cert.value("r", -1));
                ok = chk.ok;
                if (!ok) result["failed_point"] = chk.failed_p;
            } else if (type == "tverberg_tolerant") {
                PointConfig A = points_from_json(cert.at("points"));
                ok = verify_tolerance(A, cert.at("labels").get<std::vector<int>>(),
                                      cert.at("t").get<int>(), cert.value("r", -1));
            } else {
                fail(Errc::IoError, "unknown certificate type '" + type + "'");
            }
            result["verified"] = ok;
            emit(g, "verify", json{{"certificate", path}, {"type", type}}, result, t0);
            return ok ? 0 : 1;
        }

        if (*gen_complex) {
            Rng rng(g.seed);
            json result;
            if (genc_collapsible) {
                GeneratedCollapsible gen =
                    random_collapsible_complex(rng, genc_d, genc_vertices, genc_steps);
                CollapseSearchResult as_result{gen.certificate, true};
                result = collapse_cert_to_json(gen.complex, genc_d, CollapseMode::Standard,
                                               as_result);
            } else {
                result = complex_to_json(
                    random_complex(rng, genc_vertices, genc_facets, genc_maxsize));
            }
            emit(g, "generate complex", json{{"vertices", genc_vertices}}, result, t0);
            return 0;
        }

        if (*gen_matroid) {
            Rng rng(g.seed);
            int kind = -1;
            if (genm_kind == "uniform") kind = 0;
            else if (genm_kind == "partition") kind = 1;
            else if (genm_kind == "linear") kind = 2;
            else if (genm_kind == "explicit") kind = 3;
            else if (genm_kind == "tolerance") kind = 4;
            Matroid M = random_matroid(rng, genm_elements, kind);
            if (genm_kind == "partition" && genm_blocks > 0) {
                // honor the requested block count
                std::vector<int> perm(static_cast<size_t>(genm_elements));
                std::iota(perm.begin(), perm.end(), 0);
                rng.shuffle(perm);
                std::vector<std::vector<int>> blocks(static_cast<size_t>(genm_blocks));
                for (int i = 0; i < genm_elements; ++i)
                    blocks[static_cast<size_t>(i % genm_blocks)].push_back(perm[static_cast<size_t>(i)]);
                M = Matroid::partition(genm_elements, std::move(blocks));
            }
            emit(g, "generate matroid", json{{"kind", genm_kind}, {"elements", genm_elements}},
                 matroid_to_json(M), t0);
            return 0;
        }

        if (*gen_points) {
            Rng rng(g.seed);
            emit(g, "generate points", json{{"dim", genp_dim}, {"count", genp_count}},
                 points_to_json(random_points(rng, genp_dim, genp_count)), t0);
            return 0;
        }

        if (*gen_family) {
            Rng rng(g.seed);
            ColoredFamily fam = genf_kind == "boxes"
                                    ? random_box_family(rng, genf_dim, genf_count)
                                    : random_interval_family(rng, genf_count);
            emit(g, "generate family", json{{"kind", genf_kind}, {"count", genf_count}},
                 family_to_json(fam), t0);
            return 0;
        }

        if (*cmd_suite) {
            SuiteScale scale{g.budget, 100};
            std::vector<CriterionResult> results = run_suite_group(suite_name, g.seed, scale);
            bool all_pass = true;
            json verdicts = json::array();
            for (const CriterionResult& r : results) {
                all_pass = all_pass && r.pass;
                if (!g.quiet)
                    std::cerr << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name
                              << " — " << r.detail << " (" << r.wall_ms << " ms)\n";
                verdicts.push_back(
                    json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            emit(g, "run-suite", json{{"suite", suite_name}, {"budget", g.budget}},
                 json{{"verdicts", verdicts}, {"all_pass", all_pass}}, t0);
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand handled\n";
    return 2;
}
