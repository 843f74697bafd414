// topodyn command line: thin argument handling over the shared-library C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topodyn.h"

namespace {

struct SystemHandle {
    td_system* p = nullptr;
    ~SystemHandle() { td_system_free(p); }
};
struct SftHandle {
    td_sft* p = nullptr;
    ~SftHandle() { td_sft_free(p); }
};
struct ReportHandle {
    td_report* p = nullptr;
    ~ReportHandle() { td_report_free(p); }
};

[[noreturn]] void die(td_status st) {
    std::cerr << "error (" << td_status_name(st) << "): " << td_last_error() << "\n";
    std::exit(1);
}

void check(td_status st) {
    if (st != TD_OK) die(st);
}

/// system specs: file:<path> | cantor_fan:N,P | circle:N | truncation:<P> of --sft
void open_system(const std::string& spec, const std::string& sft_spec, SystemHandle& sys);

void open_sft(const std::string& spec, SftHandle& sft) {
    if (spec.rfind("full:", 0) == 0) {
        check(td_sft_full_shift(std::stoul(spec.substr(5)), &sft.p));
    } else if (spec == "golden_mean") {
        check(td_sft_golden_mean(&sft.p));
    } else if (spec.rfind("file:", 0) == 0) {
        check(td_sft_load(spec.substr(5).c_str(), &sft.p));
    } else {
        std::cerr << "error: unknown sft spec '" << spec << "' (full:<m> | golden_mean | file:<path>)\n";
        std::exit(1);
    }
}

void open_system(const std::string& spec, const std::string& sft_spec, SystemHandle& sys) {
    if (spec.rfind("file:", 0) == 0) {
        check(td_system_load(spec.substr(5).c_str(), &sys.p));
    } else if (spec.rfind("cantor_fan:", 0) == 0) {
        auto rest = spec.substr(11);
        auto comma = rest.find(',');
        check(td_cantor_fan(std::stoll(rest.substr(0, comma)), std::stoll(rest.substr(comma + 1)),
                            &sys.p));
    } else if (spec.rfind("circle:", 0) == 0) {
        check(td_circle_accumulation(std::stoll(spec.substr(7)), &sys.p));
    } else if (spec.rfind("truncation:", 0) == 0) {
        if (sft_spec.empty()) {
            std::cerr << "error: truncation systems need --sft\n";
            std::exit(1);
        }
        SftHandle sft;
        open_sft(sft_spec, sft);
        check(td_sft_truncation(sft.p, std::stoll(spec.substr(11)), &sys.p));
    } else {
        std::cerr << "error: unknown system spec '" << spec
                  << "' (file:<path> | cantor_fan:N,P | circle:N | truncation:P)\n";
        std::exit(1);
    }
}

int emit(const ReportHandle& rep, const std::string& out_dir) {
    std::cout << td_report_text(rep.p);
    if (!out_dir.empty()) {
        for (size_t i = 0; i < td_report_artifact_count(rep.p); ++i) {
            std::string path = out_dir + "/" + td_report_artifact_name(rep.p, i);
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f) {
                std::cerr << "error: cannot write " << path << "\n";
                return 1;
            }
            f << td_report_artifact_content(rep.p, i);
            std::cout << "wrote " << path << "\n";
        }
    } else {
        for (size_t i = 0; i < td_report_artifact_count(rep.p); ++i)
            std::cout << "--- " << td_report_artifact_name(rep.p, i) << " ---\n"
                      << td_report_artifact_content(rep.p, i);
    }
    return td_report_exit_code(rep.p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topodyn: computable topological dynamics on finitely presented systems"};
    app.require_subcommand(1);

    std::string system_spec, sft_spec, subset, out_dir;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an example system file");
    std::string gen_name, gen_out;
    long long gen_n = 4, gen_p = 3;
    gen->add_option("generator", gen_name, "cantor_fan | circle")->required();
    gen->add_option("--n", gen_n, "fibers (cantor_fan) or depth (circle)");
    gen->add_option("--max-period", gen_p, "fiber period bound (cantor_fan)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // chain
    auto* chain = app.add_subcommand("chain", "delta-chain graph, CR set and components");
    std::string chain_deltas = "0.25";
    chain->add_option("--system", system_spec, "system spec")->required();
    chain->add_option("--sft", sft_spec, "sft spec for truncation systems");
    chain->add_option("--delta", chain_deltas, "space-separated delta list");
    chain->add_option("--out-dir", out_dir, "write chain.csv / chain.dot here");

    // chaos sen / horseshoe
    auto* chaos = app.add_subcommand("chaos", "sensitivity and horseshoe certificates");
    chaos->require_subcommand(1);
    auto* sen = chaos->add_subcommand("sen", "a-sensitive points with witnesses");
    std::string sen_a = "0.5";
    sen->add_option("--system", system_spec, "system spec")->required();
    sen->add_option("--sft", sft_spec, "sft spec for truncation systems");
    sen->add_option("--subset", subset, "restrict to a named subset");
    sen->add_option("--a", sen_a, "sensitivity level");
    auto* horse = chaos->add_subcommand("horseshoe", "two-chain certificate with entropy bound");
    std::string h_eps = "0.25", h_a = "1", h_base;
    long long h_words = 3;
    horse->add_option("--system", system_spec, "finite system spec");
    horse->add_option("--sft", sft_spec, "sft spec (symbolic construction)");
    horse->add_option("--subset", subset, "lambda subset (finite systems)");
    horse->add_option("--eps", h_eps, "shadowing eps");
    horse->add_option("--a", h_a, "sensitivity level");
    horse->add_option("--base", h_base, "base point (symbolic), e.g. '(0)..(0)'");
    horse->add_option("--word-length", h_words, "pattern word length (2^l realizations)");
    horse->add_option("--out-dir", out_dir, "write horseshoe.json here");

    // entropy
    auto* ent = app.add_subcommand("entropy", "separated-set entropy estimates");
    std::string ent_r;
    long long ent_nmax = 12;
    ent->add_option("--system", system_spec, "finite system spec");
    ent->add_option("--sft", sft_spec, "sft spec (exact spectral entropy)");
    ent->add_option("--subset", subset, "restrict to a named subset");
    ent->add_option("--r", ent_r, "space-separated r list (default: derived schedule)");
    ent->add_option("--nmax", ent_nmax, "largest window n");
    ent->add_option("--out-dir", out_dir, "write entropy.csv here");

    // model
    auto* model = app.add_subcommand("model", "itinerary SFT models");
    model->require_subcommand(1);
    auto* mbuild = model->add_subcommand("build", "build the envelope model");
    std::string m_ambient, m_lambda, m_c;
    long long m_n = 1;
    mbuild->add_option("--ambient", m_ambient, "ambient sft spec")->required();
    mbuild->add_option("--lambda", m_lambda, "subsystem sft spec")->required();
    mbuild->add_option("--n", m_n, "itinerary window");
    mbuild->add_option("--c", m_c, "thickening radius (default: largest safe dyadic)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check certificates and theorems");
    verify->require_subcommand(1);
    auto* vcert = verify->add_subcommand("cert", "re-check a certificate record");
    std::string cert_path;
    vcert->add_option("file", cert_path, "certificate json")->required();
    auto* v11 = verify->add_subcommand("thm11", "equivalence across a truncation family");
    long long v11_pmin = 3, v11_pmax = 8, v11_threshold = 100;
    std::string v11_a = "0.5", v11_deltas = "0.25";
    v11->add_option("--sft", sft_spec, "sft spec")->required();
    v11->add_option("--pmin", v11_pmin, "first truncation period");
    v11->add_option("--pmax", v11_pmax, "last truncation period");
    v11->add_option("--a", v11_a, "sensitivity level");
    v11->add_option("--delta", v11_deltas, "delta schedule");
    v11->add_option("--threshold", v11_threshold, "growth threshold");
    auto* v12 = verify->add_subcommand("thm12", "hypotheses and the three conditions");
    v12->add_option("--system", system_spec, "finite system spec");
    v12->add_option("--sft", sft_spec, "ambient sft spec");
    std::string v12_lambda, v12_schedule;
    v12->add_option("--lambda", v12_lambda, "subset name (finite) or sft spec (symbolic)");
    v12->add_option("--schedule", v12_schedule,
                    "overrides, e.g. 'nmax=4 eps=0.5,0.25 c=0.5 b=0.5 e=0.5'");
    auto* vappendix = verify->add_subcommand("appendix", "X=Per and Sen-in-Y checks");
    std::string ap_a = "0.5", ap_r = "0.1";
    vappendix->add_option("--system", system_spec, "finite system spec")->required();
    vappendix->add_option("--a", ap_a, "sensitivity level");
    vappendix->add_option("--r", ap_r, "accumulation resolution");

    // run
    auto* run = app.add_subcommand("run", "run a pipeline config");
    std::string run_config, run_tol, run_seed;
    run->add_option("config", run_config, "config file")->required();
    run->add_option("--out-dir", out_dir, "artifact directory");
    run->add_option("--tolerance", run_tol, "recorded override note");
    run->add_option("--seed", run_seed, "recorded for provenance, unused");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        SystemHandle sys;
        if (gen_name == "cantor_fan") check(td_cantor_fan(gen_n, gen_p, &sys.p));
        else if (gen_name == "circle") check(td_circle_accumulation(gen_n, &sys.p));
        else {
            std::cerr << "error: unknown generator '" << gen_name << "'\n";
            return 1;
        }
        ReportHandle rep;
        check(td_system_serialize(sys.p, &rep.p));
        if (gen_out.empty()) {
            std::cout << td_report_text(rep.p);
        } else {
            std::ofstream f(gen_out, std::ios::binary | std::ios::trunc);
            f << td_report_text(rep.p);
            std::cout << "wrote " << gen_out << " (" << td_system_size(sys.p) << " states)\n";
        }
        return 0;
    }
    if (chain->parsed()) {
        SystemHandle sys;
        open_system(system_spec, sft_spec, sys);
        ReportHandle rep;
        check(td_chain_analysis(sys.p, chain_deltas.c_str(), &rep.p));
        return emit(rep, out_dir);
    }
    if (sen->parsed()) {
        SystemHandle sys;
        open_system(system_spec, sft_spec, sys);
        ReportHandle rep;
        check(td_sensitivity(sys.p, subset.empty() ? nullptr : subset.c_str(), sen_a.c_str(),
                             &rep.p));
        return emit(rep, out_dir);
    }
    if (horse->parsed()) {
        ReportHandle rep;
        if (!sft_spec.empty() && system_spec.empty()) {
            SftHandle sft;
            open_sft(sft_spec, sft);
            check(td_horseshoe_sft(sft.p, h_base.empty() ? nullptr : h_base.c_str(),
                                   h_eps.c_str(), h_a.c_str(), h_words, &rep.p));
        } else {
            SystemHandle sys;
            open_system(system_spec, sft_spec, sys);
            check(td_horseshoe_system(sys.p, subset.empty() ? nullptr : subset.c_str(),
                                      h_eps.c_str(), h_a.c_str(), h_words, &rep.p));
        }
        return emit(rep, out_dir);
    }
    if (ent->parsed()) {
        if (!sft_spec.empty() && system_spec.empty()) {
            SftHandle sft;
            open_sft(sft_spec, sft);
            double h = 0, wc = 0;
            check(td_sft_entropy(sft.p, &h));
            check(td_sft_word_count_entropy(sft.p, ent_nmax < 8 ? 8 : ent_nmax, &wc));
            std::printf("spectral entropy  %.12f\nword-count slope  %.12f\n", h, wc);
            return 0;
        }
        SystemHandle sys;
        open_system(system_spec, sft_spec, sys);
        ReportHandle rep;
        check(td_entropy_estimate(sys.p, subset.empty() ? nullptr : subset.c_str(),
                                  ent_r.empty() ? nullptr : ent_r.c_str(), ent_nmax, &rep.p));
        return emit(rep, out_dir);
    }
    if (mbuild->parsed()) {
        SftHandle ambient, lambda;
        open_sft(m_ambient, ambient);
        open_sft(m_lambda, lambda);
        ReportHandle rep;
        check(td_model_build(ambient.p, lambda.p, m_n, m_c.empty() ? nullptr : m_c.c_str(),
                             &rep.p));
        return emit(rep, out_dir);
    }
    if (vcert->parsed()) {
        std::ifstream f(cert_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << cert_path << "\n";
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        ReportHandle rep;
        check(td_verify_certificate(text.c_str(), &rep.p));
        return emit(rep, out_dir);
    }
    if (v11->parsed()) {
        SftHandle sft;
        open_sft(sft_spec, sft);
        ReportHandle rep;
        check(td_thm11_truncations(sft.p, v11_pmin, v11_pmax, v11_a.c_str(), v11_deltas.c_str(),
                                   v11_threshold, &rep.p));
        return emit(rep, out_dir);
    }
    if (v12->parsed()) {
        ReportHandle rep;
        const char* sched = v12_schedule.empty() ? nullptr : v12_schedule.c_str();
        if (!sft_spec.empty()) {
            SftHandle ambient, lambda;
            open_sft(sft_spec, ambient);
            open_sft(v12_lambda, lambda);
            check(td_thm12_sft(ambient.p, lambda.p, sched, &rep.p));
        } else {
            SystemHandle sys;
            open_system(system_spec, "", sys);
            check(td_thm12_system(sys.p, v12_lambda.empty() ? nullptr : v12_lambda.c_str(), sched,
                                  &rep.p));
        }
        return emit(rep, out_dir);
    }
    if (vappendix->parsed()) {
        SystemHandle sys;
        open_system(system_spec, "", sys);
        ReportHandle rep;
        check(td_appendix_verify(sys.p, ap_a.c_str(), ap_r.c_str(), &rep.p));
        return emit(rep, out_dir);
    }
    if (run->parsed()) {
        ReportHandle rep;
        if (run_tol.empty() && run_seed.empty()) {
            check(td_pipeline_run(run_config.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
                                  &rep.p));
        } else {
            // flag overrides append config lines
            std::ifstream f(run_config, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open " << run_config << "\n";
                return 1;
            }
            std::string text((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
            if (!run_tol.empty()) text += "\ntolerance = " + run_tol + "\n";
            if (!run_seed.empty()) text += "\nseed = " + run_seed + "\n";
            std::string base = ".";
            auto slash = run_config.find_last_of('/');
            if (slash != std::string::npos) base = run_config.substr(0, slash);
            check(td_pipeline_run_text(text.c_str(), base.c_str(),
                                       out_dir.empty() ? nullptr : out_dir.c_str(), &rep.p));
        }
        std::cout << td_report_text(rep.p);
        return td_report_exit_code(rep.p);
    }
    return 0;
}
