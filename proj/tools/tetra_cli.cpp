// Batch front end: loads JSON structures, runs the checkers, builders and
// verifiers, and emits machine-readable reports on standard output.
// Exit codes: 0 all flags pass, 1 at least one flag fails, 2 malformed input.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "tetra/json_io.hpp"

using namespace tetra;

namespace {

int emit_report(Report rep, bool as_json, double ms) {
    rep.elapsed_ms = ms;
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& [name, ok] : rep.flags)
            std::cout << (ok ? "pass " : "FAIL ") << name << "\n";
        for (const Violation& v : rep.violations) {
            std::cout << "  violation [" << v.flag << "] at (";
            for (size_t i = 0; i < v.basis.size(); ++i) std::cout << (i ? ", " : "") << v.basis[i];
            std::cout << "): " << v.detail << "\n";
        }
        std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass() ? 0 : 1;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

ZteSolution build_solution(const std::string& kind, const Json& j) {
    if (kind == "leibniz2") {
        Leibniz2Algebra l = leibniz2_from_json(j);
        Mat e;
        if (!leibniz2_json_central(j, &e)) throw InputError("structure file carries no \"central\" object");
        return from_central_leibniz(l, e);
    }
    if (kind == "rack2") return from_linear_2rack(rack2_from_json(j));
    throw InputError("unknown structure kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for braided structures on 2-vector spaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON");

    std::string check_kind, check_file;
    CLI::App* check = app.add_subcommand("check", "run a structure checker on a JSON file");
    check->add_option("kind", check_kind, "leibniz2 or rack2")->required();
    check->add_option("file", check_file, "structure file")->required();

    std::string build_from, build_file, build_out;
    CLI::App* build = app.add_subcommand("build-zte", "construct a braiding solution from a structure");
    build->add_option("--from", build_from, "leibniz2 or rack2")->required();
    build->add_option("file", build_file)->required();
    build->add_option("--out", build_out)->required();

    std::string verify_file;
    CLI::App* verify = app.add_subcommand("verify-zte", "verify a solution file against the coherence schedule");
    verify->add_option("file", verify_file)->required();

    std::string ybe_file;
    CLI::App* ybe = app.add_subcommand("verify-ybe", "verify a flat braiding matrix");
    ybe->add_option("file", ybe_file)->required();

    std::string decat_from, decat_file;
    bool decat_square = false;
    CLI::App* decat = app.add_subcommand("decat", "decategorify a structure or solution");
    decat->add_option("--from", decat_from, "leibniz2, rack2 or solution")->required();
    decat->add_option("file", decat_file)->required();
    decat->add_flag("--square", decat_square, "check the flat formula against the decategorified solution");

    std::string split_structure, split_section, split_out;
    CLI::App* split = app.add_subcommand("split", "build the rack induced by a splitting and compare solutions");
    split->add_option("--structure", split_structure)->required();
    split->add_option("--section", split_section)->required();
    split->add_option("--out", split_out, "where to write the induced rack");

    CLI::App* finrack = app.add_subcommand("finrack", "finite 2-rack tools");
    finrack->require_subcommand(1);
    std::string fin_check_file;
    CLI::App* fin_check = finrack->add_subcommand("check", "check semistrict/strict 2-rack tables");
    fin_check->add_option("file", fin_check_file)->required();
    std::string fin_cm_file, fin_cm_out;
    CLI::App* fin_build = finrack->add_subcommand("build-2group", "strict 2-group from a crossed module");
    fin_build->add_option("file", fin_cm_file)->required();
    fin_build->add_option("--out", fin_cm_out);
    std::string fin_conj_file, fin_conj_out;
    CLI::App* fin_conj = finrack->add_subcommand("conjugation", "conjugation 2-rack of a crossed module acting on itself");
    fin_conj->add_option("file", fin_conj_file)->required();
    fin_conj->add_option("--out", fin_conj_out);

    CLI::App* forge = app.add_subcommand("forge", "instance generation");
    forge->require_subcommand(1);
    std::string forge_kind, forge_dims = "2,1", forge_out;
    std::uint64_t forge_seed = 0;
    int forge_bound = 3;
    CLI::App* forge_sample = forge->add_subcommand("sample", "sample a checker-passing instance");
    forge_sample->add_option("--kind", forge_kind, "leibniz2 or rack2")->required();
    forge_sample->add_option("--dims", forge_dims, "object,arrow dimensions, e.g. 3,2");
    forge_sample->add_option("--seed", forge_seed);
    forge_sample->add_option("--bound", forge_bound);
    forge_sample->add_option("--out", forge_out)->required();
    std::string fixture_name, fixture_out;
    CLI::App* forge_fixture = forge->add_subcommand("fixture", "emit a named fixture");
    forge_fixture->add_option("name", fixture_name, "a, b, c, d, e or f")->required();
    forge_fixture->add_option("--out", fixture_out)->required();

    try {
        app.parse(argc, argv);
        Timer timer;

        if (*check) {
            Json j = load_json_file(check_file);
            if (check_kind == "leibniz2") {
                Leibniz2Algebra l = leibniz2_from_json(j);
                Report rep = check_leibniz2(l);
                Mat e;
                if (leibniz2_json_central(j, &e)) rep.set("central", check_central(l, e));
                return emit_report(rep, as_json, timer.ms());
            }
            if (check_kind == "rack2") {
                Linear2Rack rk = rack2_from_json(j);
                Report rep = check_linear_2rack(rk);
                std::vector<Mat> candidates = rack2_json_candidates(j, rk.space.dim_obj);
                if (!candidates.empty()) rep.merge(group_like_report(rk, candidates), "group_like_");
                return emit_report(rep, as_json, timer.ms());
            }
            throw InputError("unknown structure kind: " + check_kind);
        }
        if (*build) {
            ZteSolution sol = build_solution(build_from, load_json_file(build_file));
            save_json_file(build_out, solution_to_json(sol));
            std::cout << "wrote " << build_out << "\n";
            return 0;
        }
        if (*verify) {
            ZteSolution sol = solution_from_json(load_json_file(verify_file));
            return emit_report(verify_zte(sol), as_json, timer.ms());
        }
        if (*ybe) {
            Json j = load_json_file(ybe_file);
            long dim = j.at("dim").get<long>();
            Mat m = mat_from_json(j.at("B"), dim * dim, dim * dim);
            Report rep;
            rep.set("ybe", verify_ybe(m, dim));
            return emit_report(rep, as_json, timer.ms());
        }
        if (*decat) {
            Json j = load_json_file(decat_file);
            Report rep;
            Json out;
            if (decat_from == "leibniz2") {
                Leibniz2Algebra l = leibniz2_from_json(j);
                LeibnizDecat dec = decategorify_leibniz(l);
                rep.set("flat_leibniz", flat_leibniz_identity_holds(dec.flat.bracket));
                out["dim"] = dec.flat.dim;
                out["bracket"] = mat_to_json(dec.flat.bracket)["entries"];
                Mat e;
                if (leibniz2_json_central(j, &e)) {
                    Mat e_bar = dec.dec.proj * e;
                    rep.set("flat_central", flat_central(dec.flat.bracket, e_bar));
                    out["central"] = vec_to_json(e_bar);
                    if (decat_square) {
                        ZteSolution sol = from_central_leibniz(l, e);
                        rep.set("square", decat_square_leibniz(l, e, sol));
                        out["b_bar"] = mat_to_json(decategorify_solution(sol).ybe.b_bar)["entries"];
                    }
                }
            } else if (decat_from == "rack2") {
                Linear2Rack rk = rack2_from_json(j);
                RackDecat dec = decategorify_rack(rk);
                rep.merge(check_flat_rack(dec.flat), "flat_");
                out["dim"] = dec.flat.dim;
                out["delta"] = mat_to_json(dec.flat.delta)["entries"];
                out["lhd"] = mat_to_json(dec.flat.lhd)["entries"];
                if (decat_square) {
                    ZteSolution sol = from_linear_2rack(rk);
                    rep.set("square", decat_square_rack(rk, sol));
                    out["b_bar"] = mat_to_json(decategorify_solution(sol).ybe.b_bar)["entries"];
                }
            } else if (decat_from == "solution") {
                ZteSolution sol = solution_from_json(j);
                SolutionDecat dec = decategorify_solution(sol);
                rep = dec.report;
                out["dim"] = dec.ybe.dim;
                out["b_bar"] = mat_to_json(dec.ybe.b_bar)["entries"];
            } else {
                throw InputError("unknown decategorification source: " + decat_from);
            }
            std::cout << out.dump(2) << "\n";
            return emit_report(rep, as_json, timer.ms());
        }
        if (*split) {
            Json sj = load_json_file(split_structure);
            Leibniz2Algebra l = leibniz2_from_json(sj);
            Mat e;
            if (!leibniz2_json_central(sj, &e)) throw InputError("structure file carries no \"central\" object");
            Mat sigma0 = mat_from_json(load_json_file(split_section).at("sigma0"));
            Splitting sp = make_splitting(l, e, sigma0);
            Linear2Rack rk = rack_from_splitting(sp);
            if (!split_out.empty()) save_json_file(split_out, rack2_to_json(rk));
            Report rep = check_linear_2rack(rk);
            rep.set("leibniz_section", is_leibniz_section(sp));
            CoincidenceReport co = solutions_coincide(sp);
            rep.merge(co.report, "coincide_");
            return emit_report(rep, as_json, timer.ms());
        }
        if (*fin_check) {
            NamedFinRack fr = finrack_from_json(load_json_file(fin_check_file));
            Report rep;
            if (fr.has_distributor) {
                if (!fr.has_inverse) throw InputError("semistrict tables need an inverse operation table");
                rep = check_semistrict_2rack(fr.cat, fr.lhd, fr.r, fr.lhd_inv);
            } else {
                rep = check_strict_2rack(fr.cat, fr.lhd);
            }
            return emit_report(rep, as_json, timer.ms());
        }
        if (*fin_build) {
            CrossedModule cm = crossed_module_from_json(load_json_file(fin_cm_file));
            Strict2Group g2 = two_group_from_crossed_module(cm);
            Report rep = check_strict_2group(g2);
            if (!fin_cm_out.empty()) {
                std::vector<std::string> obj_names, mor_names;
                for (long o = 0; o < g2.cat.n_obj; ++o) obj_names.push_back("g" + std::to_string(o));
                for (long m = 0; m < g2.cat.n_mor; ++m) mor_names.push_back("m" + std::to_string(m));
                save_json_file(fin_cm_out, fincat_to_json(g2.cat, obj_names, mor_names));
            }
            return emit_report(rep, as_json, timer.ms());
        }
        if (*fin_conj) {
            CrossedModule cm = crossed_module_from_json(load_json_file(fin_conj_file));
            Strict2Group g2 = two_group_from_crossed_module(cm);
            ConjugationRack rack = conjugation_rack(g2, g2.cat, left_translation_action(g2));
            if (!fin_conj_out.empty()) save_json_file(fin_conj_out, conjugation_rack_to_json(rack));
            return emit_report(check_strict_2rack(rack.cat, rack.lhd), as_json, timer.ms());
        }
        if (*forge_sample) {
            long u = 0, w = 0;
            if (std::sscanf(forge_dims.c_str(), "%ld,%ld", &u, &w) != 2)
                throw InputError("--dims expects two comma-separated numbers");
            if (forge_kind == "leibniz2") {
                SampledLeibniz2 s = sample_leibniz2(forge_seed, u, w, forge_bound);
                Json j = leibniz2_to_json(s.algebra, &s.central.e);
                j["sigma0"] = mat_to_json(s.sigma0)["entries"];
                save_json_file(forge_out, j);
            } else if (forge_kind == "rack2") {
                save_json_file(forge_out, rack2_to_json(sample_rack2(forge_seed, u, w, forge_bound)));
            } else {
                throw InputError("unknown sample kind: " + forge_kind);
            }
            std::cout << "wrote " << forge_out << "\n";
            return 0;
        }
        if (*forge_fixture) {
            Json j;
            if (fixture_name == "a") {
                Mat e(2, 1);
                e.at(1, 0) = 1;
                j = leibniz2_to_json(fixture_a(), &e);
            } else if (fixture_name == "b") {
                j = leibniz2_to_json(fixture_b());
            } else if (fixture_name == "c") {
                OmegaInstance c = fixture_c();
                j = leibniz2_to_json(c.algebra, &c.central.e);
            } else if (fixture_name == "d") {
                j = rack2_to_json(fixture_d());
            } else if (fixture_name == "e") {
                Mat e(2, 1);
                e.at(1, 0) = 1;
                j = leibniz2_to_json(fixture_e(), &e);
            } else if (fixture_name == "f") {
                j = conjugation_rack_to_json(fixture_f());
            } else {
                throw InputError("unknown fixture: " + fixture_name);
            }
            save_json_file(fixture_out, j);
            std::cout << "wrote " << fixture_out << "\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return 1;
    } catch (const SamplingError& e) {
        std::cerr << "sampling error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
