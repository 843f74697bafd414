#include "topodyn/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "topodyn/chain.hpp"
#include "topodyn/chaos.hpp"
#include "topodyn/entropy.hpp"
#include "topodyn/generators.hpp"
#include "topodyn/io.hpp"
#include "topodyn/modelbuild.hpp"

namespace topodyn {

namespace {

struct Config {
    std::map<std::string, std::string> kv;
    std::vector<std::string> analyses;

    bool has(const std::string& key) const { return kv.count(key) > 0; }
    std::string get(const std::string& key, const std::string& dflt = "") const {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    }
    double get_num(const std::string& key, double dflt) const {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : std::stod(it->second);
    }
    std::vector<double> get_list(const std::string& key) const {
        std::vector<double> out;
        std::istringstream is(get(key));
        std::string tok;
        while (is >> tok) out.push_back(std::stod(tok));
        return out;
    }
};

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected key = value");
        auto trim = [](std::string s) {
            auto bb = s.find_first_not_of(" \t");
            auto ee = s.find_last_not_of(" \t");
            return bb == std::string::npos ? std::string() : s.substr(bb, ee - bb + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) fail(Errc::parse_error, "line " + std::to_string(line_no) + ": empty key");
        if (key == "analyses") {
            std::string item;
            std::istringstream vs(value);
            while (std::getline(vs, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.analyses.push_back(item);
            }
        } else {
            cfg.kv[key] = value;
        }
    }
    return cfg;
}

FiniteSystem load_system(const Config& cfg, const std::string& base_dir) {
    std::string spec = cfg.get("system");
    if (spec.empty()) fail(Errc::invalid_argument, "config names no system");
    std::istringstream is(spec);
    std::string kind;
    is >> kind;
    if (kind == "cantor_fan") {
        Count n = 4, p = 3;
        std::string tok;
        while (is >> tok) {
            if (tok.rfind("N=", 0) == 0) n = std::stoll(tok.substr(2));
            else if (tok.rfind("P=", 0) == 0) p = std::stoll(tok.substr(2));
            else fail(Errc::parse_error, "cantor_fan parameter '" + tok + "'");
        }
        return cantor_fan(n, p);
    }
    if (kind == "circle") {
        Count n = 6;
        std::string tok;
        while (is >> tok) {
            if (tok.rfind("N=", 0) == 0) n = std::stoll(tok.substr(2));
            else fail(Errc::parse_error, "circle parameter '" + tok + "'");
        }
        return circle_accumulation(n);
    }
    if (kind == "file") {
        std::string path;
        is >> path;
        return parse_system(read_file((std::filesystem::path(base_dir) / path).string()));
    }
    fail(Errc::parse_error, "unknown system kind '" + kind + "'");
}

std::optional<Sft> load_sft(const Config& cfg, const std::string& base_dir) {
    std::string spec = cfg.get("sft");
    if (spec.empty()) return std::nullopt;
    std::istringstream is(spec);
    std::string kind;
    is >> kind;
    if (kind == "full") {
        unsigned m = 2;
        is >> m;
        return Sft::full_shift(Sym(m));
    }
    if (kind == "golden_mean") return Sft::golden_mean();
    if (kind == "file") {
        std::string path;
        is >> path;
        return parse_sft(read_file((std::filesystem::path(base_dir) / path).string()));
    }
    fail(Errc::parse_error, "unknown sft kind '" + kind + "'");
}

}  // namespace

PipelineResult run_pipeline(const std::string& config_text, const std::string& base_dir) {
    Config cfg = parse_config(config_text);
    PipelineResult res;
    std::ostringstream verdicts;
    verdicts << "topodyn pipeline\n";
    if (cfg.has("seed")) verdicts << "seed " << cfg.get("seed") << " (recorded, unused)\n";

    std::optional<Sft> sft = load_sft(cfg, base_dir);
    std::optional<FiniteSystem> sys;
    if (cfg.has("system")) {
        std::string spec = cfg.get("system");
        if (spec.rfind("truncation", 0) == 0) {
            if (!sft) fail(Errc::invalid_argument, "truncation system needs an sft");
            std::istringstream is(spec);
            std::string kind;
            Count p = 4;
            is >> kind >> p;
            sys = sft->truncation(p);
        } else {
            sys = load_system(cfg, base_dir);
        }
        if (cfg.has("tolerance")) {
            double tol = cfg.get_num("tolerance", kDefaultTolerance);
            sys = sys->with_tolerance(tol);
            verdicts << "tolerance " << format_double(tol) << "\n";
        }
    }

    auto lambda_of = [&](const FiniteSystem& s) {
        std::string spec = cfg.get("lambda", "whole");
        if (spec == "whole") return s.all_states();
        std::istringstream is(spec);
        std::string kind, name;
        is >> kind >> name;
        if (kind == "subset") {
            const StateSet* sub = s.find_subset(name);
            if (!sub) fail(Errc::not_found, "no subset named '" + name + "'");
            return *sub;
        }
        fail(Errc::parse_error, "unknown lambda kind '" + spec + "'");
    };

    bool any_refuted = false;

    for (const std::string& analysis : cfg.analyses) {
        if (analysis == "chain") {
            if (!sys) fail(Errc::invalid_argument, "chain analysis needs a finite system");
            auto deltas = cfg.get_list("chain.deltas");
            if (deltas.empty()) deltas = dyadic_ladder(std::max(sys->resolution(), 1e-9));
            res.artifacts.push_back({"chain.csv", chain_csv(*sys, deltas)});
            auto dec = chain_components(*sys, deltas.front());
            res.artifacts.push_back({"chain.dot", condensation_dot(*sys, dec)});
            verdicts << "chain: " << dec.components.size() << " components at delta="
                     << format_double(deltas.front()) << "\n";
        } else if (analysis == "sen") {
            if (!sys) fail(Errc::invalid_argument, "sen analysis needs a finite system");
            double a = cfg.get_num("sen.a", 0.5);
            auto rep = sensitive_points(*sys, lambda_of(*sys), a);
            std::ostringstream os;
            os << "a = " << format_double(a) << "\n";
            os << "sensitive states: " << rep.sensitive.count() << "\n";
            for (auto x : rep.sensitive.to_vector()) {
                os << "  " << sys->label(x);
                if (rep.witnesses[x])
                    os << "  witness " << sys->label(rep.witnesses[x]->y) << " at i="
                       << rep.witnesses[x]->iterate
                       << " sep=" << format_double(rep.witnesses[x]->separation);
                os << "\n";
            }
            res.artifacts.push_back({"sen.txt", os.str()});
            verdicts << "sen: " << rep.sensitive.count() << " sensitive states at a="
                     << format_double(a) << "\n";
        } else if (analysis == "entropy") {
            Count nmax = Count(cfg.get_num("entropy.nmax", 12));
            if (sft && !sys) {
                double h = sft->spectral_entropy();
                double wc = sft->word_count_entropy(std::size_t(std::max<Count>(nmax, 8)));
                std::ostringstream os;
                os << "spectral entropy," << format_double(h) << "\n";
                os << "word-count slope," << format_double(wc) << "\n";
                res.artifacts.push_back({"entropy.csv", os.str()});
                verdicts << "entropy: log spectral radius = " << format_double(h) << "\n";
            } else {
                if (!sys) fail(Errc::invalid_argument, "entropy analysis needs a system");
                auto k = lambda_of(*sys);
                auto rs = cfg.get_list("entropy.r");
                if (rs.empty()) rs = default_r_schedule(*sys, k);
                auto rep = entropy_estimate(*sys, k, rs, nmax);
                res.artifacts.push_back({"entropy.csv", rep.csv()});
                verdicts << "entropy: estimate " << format_double(rep.estimate)
                         << (rep.degenerate ? " (degenerate)" : "") << "\n";
            }
        } else if (analysis == "horseshoe") {
            double eps = cfg.get_num("horseshoe.eps", 0.25);
            double a = cfg.get_num("horseshoe.a", 1.0);
            if (sft) {
                Count words = Count(cfg.get_num("horseshoe.words", 3));
                std::string basespec = cfg.get("horseshoe.base", "");
                SymbolicPoint base = basespec.empty()
                                         ? sft->periodic_points(1).front()
                                         : SymbolicPoint::parse(basespec);
                auto cert = horseshoe_certificate(*sft, base, eps, a, words);
                res.artifacts.push_back({"horseshoe.json", certificate_to_json(cert, *sft)});
                verdicts << "horseshoe: m=" << cert.chain_length
                         << " bound=" << format_double(cert.entropy_lower_bound) << "\n";
            } else {
                if (!sys) fail(Errc::invalid_argument, "horseshoe analysis needs a system");
                Count words = Count(cfg.get_num("horseshoe.words", 1));
                auto cert = horseshoe_certificate(*sys, lambda_of(*sys), eps, a, words);
                res.artifacts.push_back({"horseshoe.json", certificate_to_json(cert, *sys)});
                verdicts << "horseshoe: m=" << cert.chain_length
                         << " bound=" << format_double(cert.entropy_lower_bound) << "\n";
            }
        } else if (analysis == "model") {
            if (!sft) fail(Errc::invalid_argument, "model analysis needs an ambient sft");
            std::string lamspec = cfg.get("lambda", "");
            Sft lambda = lamspec == "sft golden_mean" ? Sft::golden_mean()
                         : lamspec.rfind("sft file ", 0) == 0
                             ? parse_sft(read_file((std::filesystem::path(base_dir) /
                                                    lamspec.substr(9)).string()))
                             : *sft;
            Count n = Count(cfg.get_num("model.n", 1));
            double c = cfg.get_num("model.c", 0);
            auto part = clopen_partition(lambda, cfg.get_num("model.e", 0.75));
            auto model = build_sft_model(*sft, lambda, part, n, c);
            std::string record = model.serialize();
            record += "xi_entropy " + format_double(model.xi.spectral_entropy()) + "\n";
            res.artifacts.push_back({"model.txt", record});
            verdicts << "model: |W|=" << model.word_set.size()
                     << " sandwich=" << (model.sandwich ? "true" : "false") << "\n";
        } else if (analysis == "thm11") {
            std::string famspec = cfg.get("thm11.family", "");
            RefinementFamily fam;
            if (famspec.rfind("truncations", 0) == 0) {
                if (!sft) fail(Errc::invalid_argument, "truncation family needs an sft");
                std::size_t dots = famspec.find("..");
                Count lo = std::stoll(famspec.substr(11, dots - 11));
                Count hi = std::stoll(famspec.substr(dots + 2));
                fam = truncation_family(*sft, lo, hi, cfg.get("system", "sft") + " truncations");
            } else if (famspec.rfind("constant", 0) == 0) {
                if (!sys) fail(Errc::invalid_argument, "constant family needs a system");
                std::size_t copies = std::size_t(std::stoll(famspec.substr(8)));
                fam = constant_family(*sys, copies, "constant");
            } else {
                fail(Errc::parse_error, "unknown thm11 family '" + famspec + "'");
            }
            double a = cfg.get_num("thm11.a", 0.5);
            auto deltas = cfg.get_list("thm11.deltas");
            if (deltas.empty()) deltas = {0.25};
            auto rep = theorem_1_1_verify(fam, a, deltas,
                                          std::size_t(cfg.get_num("thm11.threshold", 100)));
            res.artifacts.push_back({"thm11.txt", rep.summary});
            verdicts << "thm11: "
                     << (!rep.applicable ? "no verdict"
                                         : (rep.consistent ? "CONSISTENT" : "INCONSISTENT"))
                     << "\n";
            if (rep.applicable && !rep.consistent) res.exit_code = 1;
        } else if (analysis == "thm12") {
            if (sft && cfg.get("lambda", "").rfind("sft", 0) == 0) {
                std::string lamspec = cfg.get("lambda");
                Sft lambda = lamspec == "sft golden_mean"
                                 ? Sft::golden_mean()
                                 : parse_sft(read_file((std::filesystem::path(base_dir) /
                                                        lamspec.substr(9)).string()));
                auto sched = Thm12Schedule::defaults_for_symbolic();
                if (cfg.has("thm12.nmax")) sched.n_max = Count(cfg.get_num("thm12.nmax", 8));
                auto rep = theorem_1_2_verify(*sft, lambda, sched);
                res.artifacts.push_back({"thm12.txt", rep.summary});
                verdicts << "thm12: exit " << rep.exit_code() << "\n";
                if (rep.exit_code() == 2) any_refuted = true;
                if (rep.exit_code() == 1) res.exit_code = 1;
            } else {
                if (!sys) fail(Errc::invalid_argument, "thm12 analysis needs a system");
                auto sched = Thm12Schedule::defaults_for(*sys);
                if (cfg.has("thm12.nmax")) sched.n_max = Count(cfg.get_num("thm12.nmax", 4));
                auto rep = theorem_1_2_verify(*sys, lambda_of(*sys), sched);
                res.artifacts.push_back({"thm12.txt", rep.summary});
                verdicts << "thm12: exit " << rep.exit_code() << "\n";
                if (rep.exit_code() == 2) any_refuted = true;
                if (rep.exit_code() == 1) res.exit_code = 1;
            }
        } else if (analysis == "appendix") {
            if (!sys) fail(Errc::invalid_argument, "appendix analysis needs a finite system");
            double a = cfg.get_num("appendix.a", 0.5);
            double r = cfg.get_num("appendix.r", 0.1);
            auto rep = appendix_verify(*sys, a, r);
            res.artifacts.push_back({"appendix.txt", rep.to_text()});
            verdicts << "appendix: sen " << (rep.sen_nonempty ? "nonempty" : "empty")
                     << ", contained " << (rep.sen_in_accumulation ? "yes" : "no") << "\n";
        } else {
            fail(Errc::invalid_argument, "unknown analysis '" + analysis + "'");
        }
    }

    if (any_refuted && res.exit_code == 0) res.exit_code = 2;
    res.verdicts = verdicts.str();
    return res;
}

void write_artifacts(const PipelineResult& result, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& a : result.artifacts)
        write_file_atomic((std::filesystem::path(out_dir) / a.name).string(), a.content);
    write_file_atomic((std::filesystem::path(out_dir) / "verdict.txt").string(), result.verdicts);
}

}  // namespace topodyn
