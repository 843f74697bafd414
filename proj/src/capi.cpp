#include "topodyn.h"

#include <sstream>
#include <string>
#include <vector>

#include "topodyn/chain.hpp"
#include "topodyn/chaos.hpp"
#include "topodyn/entropy.hpp"
#include "topodyn/generators.hpp"
#include "topodyn/io.hpp"
#include "topodyn/modelbuild.hpp"
#include "topodyn/pipeline.hpp"

using namespace topodyn;

struct td_system {
    FiniteSystem sys;
};
struct td_sft {
    Sft sft;
};
struct td_report {
    std::vector<Artifact> artifacts;
    std::string text;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

td_status status_of(Errc e) {
    switch (e) {
        case Errc::ok: return TD_OK;
        case Errc::invalid_argument: return TD_ERR_INVALID_ARGUMENT;
        case Errc::parse_error: return TD_ERR_PARSE;
        case Errc::not_found: return TD_ERR_NOT_FOUND;
        case Errc::precondition: return TD_ERR_PRECONDITION;
        case Errc::search_failed: return TD_ERR_SEARCH_FAILED;
        case Errc::unsupported: return TD_ERR_UNSUPPORTED;
        case Errc::io_error: return TD_ERR_IO;
        default: return TD_ERR_INTERNAL;
    }
}

template <typename Fn>
td_status guarded(Fn&& fn) {
    try {
        fn();
        return TD_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return TD_ERR_INTERNAL;
    }
}

double parse_distance(const char* text, const char* what) {
    if (!text) fail(Errc::invalid_argument, std::string(what) + " is required");
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        while (text[used] == ' ') ++used;
        if (text[used] != '\0') fail(Errc::parse_error, std::string("bad ") + what);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::parse_error, std::string("bad ") + what + " '" + text + "'");
    }
}

std::vector<double> parse_distance_list(const char* text, const char* what) {
    if (!text) fail(Errc::invalid_argument, std::string(what) + " is required");
    std::vector<double> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            fail(Errc::parse_error, std::string("bad ") + what + " entry '" + tok + "'");
        }
    }
    if (out.empty()) fail(Errc::invalid_argument, std::string(what) + " list is empty");
    return out;
}

StateSet subset_of(const FiniteSystem& sys, const char* name) {
    if (!name) return sys.all_states();
    const StateSet* s = sys.find_subset(name);
    if (!s) fail(Errc::not_found, std::string("no subset named '") + name + "'");
    return *s;
}

td_report* make_report(std::string text, std::vector<Artifact> artifacts = {}, int exit_code = 0) {
    auto* r = new td_report;
    r->text = std::move(text);
    r->artifacts = std::move(artifacts);
    r->exit_code = exit_code;
    return r;
}

}  // namespace

extern "C" {

const char* td_version(void) { return "topodyn 1.0.0"; }

const char* td_status_name(td_status s) {
    switch (s) {
        case TD_OK: return "ok";
        case TD_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TD_ERR_PARSE: return "parse error";
        case TD_ERR_NOT_FOUND: return "not found";
        case TD_ERR_PRECONDITION: return "precondition violated";
        case TD_ERR_SEARCH_FAILED: return "search failed";
        case TD_ERR_UNSUPPORTED: return "unsupported";
        case TD_ERR_IO: return "io error";
        default: return "internal error";
    }
}

const char* td_last_error(void) { return g_last_error.c_str(); }

td_status td_system_parse(const char* text, td_system** out) {
    return guarded([&] {
        if (!text || !out) fail(Errc::invalid_argument, "null argument");
        *out = new td_system{parse_system(text)};
    });
}

td_status td_system_load(const char* path, td_system** out) {
    return guarded([&] {
        if (!path || !out) fail(Errc::invalid_argument, "null argument");
        *out = new td_system{parse_system(read_file(path))};
    });
}

td_status td_cantor_fan(int64_t fibers, int64_t max_period, td_system** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null output");
        *out = new td_system{cantor_fan(fibers, max_period)};
    });
}

td_status td_circle_accumulation(int64_t depth, td_system** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null output");
        *out = new td_system{circle_accumulation(depth)};
    });
}

td_status td_sft_parse(const char* text, td_sft** out) {
    return guarded([&] {
        if (!text || !out) fail(Errc::invalid_argument, "null argument");
        *out = new td_sft{parse_sft(text)};
    });
}

td_status td_sft_load(const char* path, td_sft** out) {
    return guarded([&] {
        if (!path || !out) fail(Errc::invalid_argument, "null argument");
        *out = new td_sft{parse_sft(read_file(path))};
    });
}

td_status td_sft_full_shift(uint32_t alphabet, td_sft** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null output");
        *out = new td_sft{Sft::full_shift(alphabet)};
    });
}

td_status td_sft_golden_mean(td_sft** out) {
    return guarded([&] {
        if (!out) fail(Errc::invalid_argument, "null output");
        *out = new td_sft{Sft::golden_mean()};
    });
}

td_status td_sft_truncation(const td_sft* s, int64_t max_period, td_system** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        *out = new td_system{s->sft.truncation(max_period)};
    });
}

void td_system_free(td_system* s) { delete s; }
void td_sft_free(td_sft* s) { delete s; }

size_t td_system_size(const td_system* s) { return s ? s->sys.size() : 0; }

td_status td_system_serialize(const td_system* s, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        *out = make_report(serialize_system(s->sys));
    });
}

td_status td_sft_entropy(const td_sft* s, double* out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        *out = s->sft.spectral_entropy();
    });
}

td_status td_sft_word_count_entropy(const td_sft* s, int64_t n_max, double* out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        *out = s->sft.word_count_entropy(std::size_t(n_max));
    });
}

td_status td_shift_metric(const char* p, const char* q, double* out) {
    return guarded([&] {
        if (!p || !q || !out) fail(Errc::invalid_argument, "null argument");
        *out = shift_metric(SymbolicPoint::parse(p), SymbolicPoint::parse(q));
    });
}

td_status td_sft_expansivity_horizon(const td_sft* s, const char* e, const char* eps,
                                     int64_t* out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        *out = uniform_expansivity_horizon(s->sft, parse_distance(e, "e"),
                                           parse_distance(eps, "eps"));
    });
}

td_status td_sft_shadow(const td_sft* s, const char* points, const char* delta,
                        td_report** out) {
    return guarded([&] {
        if (!s || !points || !out) fail(Errc::invalid_argument, "null argument");
        SymbolicPseudoOrbit po;
        po.periodic = true;
        std::istringstream is(points);
        std::string tok;
        while (is >> tok) po.entries.push_back(SymbolicPoint::parse(tok));
        auto res = constructive_shadow(s->sft, po, parse_distance(delta, "delta"));
        std::ostringstream os;
        os << "shadow " << res.point.to_string() << "\n";
        os << "eps " << format_double(res.eps) << "\n";
        *out = make_report(os.str());
    });
}

td_status td_sft_asymptotic_pair(const td_sft* s, const char* point, td_report** out) {
    return guarded([&] {
        if (!s || !point || !out) fail(Errc::invalid_argument, "null argument");
        auto pair = asymptotic_pair(s->sft, SymbolicPoint::parse(point));
        *out = make_report(pair ? "pair " + pair->to_string() + "\n" : "none\n",
                           {}, pair ? 0 : 1);
    });
}

td_status td_sft_local_stable_set(const td_sft* s, const char* point, const char* r,
                                  int64_t horizon, td_report** out) {
    return guarded([&] {
        if (!s || !point || !out) fail(Errc::invalid_argument, "null argument");
        auto w =
            local_stable_set(s->sft, SymbolicPoint::parse(point), parse_distance(r, "r"), horizon);
        std::ostringstream os;
        os << w.description << "\n";
        os << "from " << w.from_index << " sample ";
        for (Sym sym : w.sample) os << sym;
        os << "\n";
        *out = make_report(os.str());
    });
}

td_status td_sft_locally_maximal(const td_sft* ambient, const td_sft* sub, int64_t horizon,
                                 td_report** out) {
    return guarded([&] {
        if (!ambient || !sub || !out) fail(Errc::invalid_argument, "null argument");
        auto rep = is_locally_maximal(ambient->sft, sub->sft, horizon);
        std::ostringstream os;
        os << (rep.locally_maximal ? "locally maximal at r = " + format_double(rep.witness_r)
                                   : "not locally maximal on the schedule")
           << "\n";
        *out = make_report(os.str(), {}, rep.locally_maximal ? 0 : 1);
    });
}

td_status td_chain_analysis(const td_system* s, const char* deltas, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto ds = parse_distance_list(deltas, "delta");
        std::vector<Artifact> artifacts;
        artifacts.push_back({"chain.csv", chain_csv(s->sys, ds)});
        auto dec = chain_components(s->sys, ds.front());
        artifacts.push_back({"chain.dot", condensation_dot(s->sys, dec)});
        std::ostringstream os;
        os << "delta " << format_double(ds.front()) << ": |CR| = " << dec.cr.count() << ", "
           << dec.components.size() << " components\n";
        *out = make_report(os.str(), std::move(artifacts));
    });
}

td_status td_sensitivity(const td_system* s, const char* subset_or_null, const char* a,
                         td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        double av = parse_distance(a, "a");
        auto rep = sensitive_points(s->sys, subset_of(s->sys, subset_or_null), av);
        std::ostringstream os;
        os << "a = " << format_double(av) << "\nsensitive: " << rep.sensitive.count() << "\n";
        for (auto x : rep.sensitive.to_vector()) {
            os << "  " << s->sys.label(x);
            if (rep.witnesses[x])
                os << " witness " << s->sys.label(rep.witnesses[x]->y) << " i="
                   << rep.witnesses[x]->iterate
                   << " sep=" << format_double(rep.witnesses[x]->separation);
            os << "\n";
        }
        *out = make_report(os.str());
    });
}

td_status td_entropy_estimate(const td_system* s, const char* subset_or_null,
                              const char* r_list_or_null, int64_t n_max, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto k = subset_of(s->sys, subset_or_null);
        std::vector<double> rs = r_list_or_null ? parse_distance_list(r_list_or_null, "r")
                                                : default_r_schedule(s->sys, k);
        auto rep = entropy_estimate(s->sys, k, rs, n_max);
        std::ostringstream os;
        os << "estimate " << format_double(rep.estimate) << (rep.degenerate ? " (degenerate)" : "")
           << "\n";
        for (auto& pr : rep.per_r)
            os << "  r=" << format_double(pr.r) << " slope=" << format_double(pr.slope)
               << " residual=" << format_double(pr.residual) << "\n";
        std::vector<Artifact> artifacts{{"entropy.csv", rep.csv()}};
        *out = make_report(os.str(), std::move(artifacts));
    });
}

td_status td_horseshoe_sft(const td_sft* s, const char* base_or_null, const char* eps,
                           const char* a, int64_t word_length, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        SymbolicPoint base = base_or_null ? SymbolicPoint::parse(base_or_null)
                                          : s->sft.periodic_points(1).front();
        auto cert = horseshoe_certificate(s->sft, base, parse_distance(eps, "eps"),
                                          parse_distance(a, "a"), word_length);
        std::ostringstream os;
        os << "m = " << cert.chain_length << ", k = " << cert.separation_index
           << ", separation = " << format_double(cert.separation)
           << ", bound = " << format_double(cert.entropy_lower_bound) << "\n";
        std::vector<Artifact> artifacts{{"horseshoe.json", certificate_to_json(cert, s->sft)}};
        *out = make_report(os.str(), std::move(artifacts));
    });
}

td_status td_horseshoe_system(const td_system* s, const char* subset_or_null, const char* eps,
                              const char* a, int64_t word_length, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto cert =
            horseshoe_certificate(s->sys, subset_of(s->sys, subset_or_null),
                                  parse_distance(eps, "eps"), parse_distance(a, "a"), word_length);
        std::ostringstream os;
        os << "m = " << cert.chain_length << ", k = " << cert.separation_index
           << ", separation = " << format_double(cert.separation)
           << ", bound = " << format_double(cert.entropy_lower_bound) << "\n";
        std::vector<Artifact> artifacts{{"horseshoe.json", certificate_to_json(cert, s->sys)}};
        *out = make_report(os.str(), std::move(artifacts));
    });
}

td_status td_model_build(const td_sft* ambient, const td_sft* lambda, int64_t n,
                         const char* c_or_null, td_report** out) {
    return guarded([&] {
        if (!ambient || !lambda || !out) fail(Errc::invalid_argument, "null argument");
        auto part = clopen_partition(lambda->sft, 0.75);
        double c = c_or_null ? parse_distance(c_or_null, "c") : 0.0;
        auto model = build_sft_model(ambient->sft, lambda->sft, part, n, c);
        std::string record = model.serialize();
        record += "conjugacy " + std::string(model.conjugacy_checked ? "true" : "false") + "\n";
        record += "xi_entropy " + format_double(model.xi.spectral_entropy()) + "\n";
        *out = make_report(std::move(record));
    });
}

td_status td_thm11_truncations(const td_sft* s, int64_t p_min, int64_t p_max, const char* a,
                               const char* deltas, int64_t threshold, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto fam = truncation_family(s->sft, p_min, p_max, "sft truncations");
        auto rep = theorem_1_1_verify(fam, parse_distance(a, "a"),
                                      parse_distance_list(deltas, "delta"),
                                      std::size_t(threshold));
        int code = !rep.applicable ? 0 : (rep.consistent ? 0 : 1);
        *out = make_report(rep.summary, {}, code);
    });
}

namespace {

void apply_schedule_overrides(Thm12Schedule& sched, const char* text) {
    if (!text) return;
    std::istringstream is(text);
    std::string tok;
    auto parse_ladder = [](const std::string& v) {
        std::vector<double> out;
        std::istringstream vs(v);
        std::string item;
        while (std::getline(vs, item, ',')) out.push_back(std::stod(item));
        if (out.empty()) fail(Errc::parse_error, "empty ladder in schedule");
        return out;
    };
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "schedule entries are key=value");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "nmax") sched.n_max = std::stoll(val);
            else if (key == "eps") sched.eps_ladder = parse_ladder(val);
            else if (key == "c") sched.c_ladder = parse_ladder(val);
            else if (key == "b") sched.b = std::stod(val);
            else if (key == "e") sched.e = std::stod(val);
            else if (key == "a") sched.a_check = std::stod(val);
            else if (key == "parte") sched.partition_e = std::stod(val);
            else if (key == "modeln") sched.model_n = std::stoll(val);
            else if (key == "threshold") sched.growth_threshold = std::size_t(std::stoull(val));
            else fail(Errc::parse_error, "unknown schedule key '" + key + "'");
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Errc::parse_error, "bad schedule value for '" + key + "'");
        }
    }
}

}  // namespace

td_status td_thm12_sft(const td_sft* ambient, const td_sft* lambda, const char* schedule_or_null,
                       td_report** out) {
    return guarded([&] {
        if (!ambient || !lambda || !out) fail(Errc::invalid_argument, "null argument");
        auto sched = Thm12Schedule::defaults_for_symbolic();
        apply_schedule_overrides(sched, schedule_or_null);
        auto rep = theorem_1_2_verify(ambient->sft, lambda->sft, sched);
        *out = make_report(rep.summary, {}, rep.exit_code());
    });
}

td_status td_thm12_system(const td_system* s, const char* subset_or_null,
                          const char* schedule_or_null, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto sched = Thm12Schedule::defaults_for(s->sys);
        apply_schedule_overrides(sched, schedule_or_null);
        auto rep = theorem_1_2_verify(s->sys, subset_of(s->sys, subset_or_null), sched);
        *out = make_report(rep.summary, {}, rep.exit_code());
    });
}

td_status td_appendix_verify(const td_system* s, const char* a, const char* r, td_report** out) {
    return guarded([&] {
        if (!s || !out) fail(Errc::invalid_argument, "null argument");
        auto rep = appendix_verify(s->sys, parse_distance(a, "a"), parse_distance(r, "r"));
        *out = make_report(rep.to_text());
    });
}

td_status td_verify_certificate(const char* json_text, td_report** out) {
    return guarded([&] {
        if (!json_text || !out) fail(Errc::invalid_argument, "null argument");
        auto check = verify_certificate_json(json_text);
        std::ostringstream os;
        os << check.kind << ": " << (check.valid ? "VALID" : "INVALID") << " — " << check.detail
           << "\n";
        *out = make_report(os.str(), {}, check.valid ? 0 : 1);
    });
}

td_status td_pipeline_run(const char* config_path, const char* out_dir_or_null, td_report** out) {
    return guarded([&] {
        if (!config_path || !out) fail(Errc::invalid_argument, "null argument");
        std::string text = read_file(config_path);
        std::string base = ".";
        auto slash = std::string(config_path).find_last_of('/');
        if (slash != std::string::npos) base = std::string(config_path).substr(0, slash);
        auto res = run_pipeline(text, base);
        if (out_dir_or_null) write_artifacts(res, out_dir_or_null);
        *out = make_report(res.verdicts, std::move(res.artifacts), res.exit_code);
    });
}

td_status td_pipeline_run_text(const char* config_text, const char* base_dir,
                               const char* out_dir_or_null, td_report** out) {
    return guarded([&] {
        if (!config_text || !out) fail(Errc::invalid_argument, "null argument");
        auto res = run_pipeline(config_text, base_dir ? base_dir : ".");
        if (out_dir_or_null) write_artifacts(res, out_dir_or_null);
        *out = make_report(res.verdicts, std::move(res.artifacts), res.exit_code);
    });
}

size_t td_report_artifact_count(const td_report* r) { return r ? r->artifacts.size() : 0; }

const char* td_report_artifact_name(const td_report* r, size_t i) {
    return (r && i < r->artifacts.size()) ? r->artifacts[i].name.c_str() : nullptr;
}

const char* td_report_artifact_content(const td_report* r, size_t i) {
    return (r && i < r->artifacts.size()) ? r->artifacts[i].content.c_str() : nullptr;
}

const char* td_report_text(const td_report* r) { return r ? r->text.c_str() : ""; }

int td_report_exit_code(const td_report* r) { return r ? r->exit_code : 1; }

void td_report_free(td_report* r) { delete r; }

}  // extern "C"
