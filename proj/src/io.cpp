#include "topodyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace topodyn {

namespace {

using nlohmann::json;

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            // trim
            auto b = out.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            auto e = out.find_last_not_of(" \t\r");
            out = out.substr(b, e - b + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
    }
};

double parse_decimal(const std::string& tok, LineReader& r) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) r.error("bad number '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        r.error("bad number '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

FiniteSystem parse_system(const std::string& text) {
    LineReader r(text);
    std::string line;
    std::size_t n = 0;
    bool have_states = false;
    std::vector<std::string> labels;
    std::vector<StateId> map;
    std::vector<double> dist;
    bool have_metric = false;
    std::vector<std::pair<double, double>> coords;
    std::vector<bool> coord_set;
    bool euclidean = false;
    double tolerance = kDefaultTolerance;
    double resolution = -1;
    std::vector<std::pair<std::string, std::vector<StateId>>> subsets;

    while (r.next(line)) {
        auto toks = split(line);
        const std::string& kw = toks[0];
        if (kw == "system") {
            continue;  // name is cosmetic
        } else if (kw == "states") {
            if (toks.size() != 2) r.error("states takes one count");
            n = std::stoul(toks[1]);
            if (n == 0) r.error("need at least one state");
            have_states = true;
            labels.resize(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i);
            coords.assign(n, {0, 0});
            coord_set.assign(n, false);
        } else if (kw == "label") {
            if (!have_states) r.error("label before states");
            if (toks.size() < 3) r.error("label takes an index and text");
            std::size_t i = std::stoul(toks[1]);
            if (i >= n) r.error("label index out of range");
            std::string rest;
            for (std::size_t t = 2; t < toks.size(); ++t) rest += (t > 2 ? " " : "") + toks[t];
            labels[i] = rest;
        } else if (kw == "map") {
            if (!have_states) r.error("map before states");
            if (toks.size() != n + 1) r.error("map needs one target per state");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::size_t t = std::stoul(toks[i]);
                if (t >= n) r.error("map target out of range");
                map.push_back(StateId(t));
            }
        } else if (kw == "metric") {
            if (!have_states) r.error("metric before states");
            if (toks.size() != 2) r.error("metric takes a mode");
            if (toks[1] == "table") {
                for (std::size_t i = 1; i < n; ++i) {
                    if (!r.next(line)) r.error("metric table truncated");
                    auto row = split(line);
                    if (row.size() != i) r.error("metric row " + std::to_string(i) + " needs " +
                                                 std::to_string(i) + " entries");
                    for (auto& tok : row) dist.push_back(parse_decimal(tok, r));
                }
                have_metric = true;
            } else if (toks[1] == "euclidean") {
                euclidean = true;
            } else {
                r.error("unknown metric mode '" + toks[1] + "'");
            }
        } else if (kw == "coord") {
            if (!euclidean) r.error("coord outside metric euclidean");
            if (toks.size() != 4) r.error("coord takes index x y");
            std::size_t i = std::stoul(toks[1]);
            if (i >= n) r.error("coord index out of range");
            coords[i] = {parse_decimal(toks[2], r), parse_decimal(toks[3], r)};
            coord_set[i] = true;
        } else if (kw == "subset") {
            if (toks.size() < 2) r.error("subset takes a name");
            std::vector<StateId> members;
            for (std::size_t t = 2; t < toks.size(); ++t) {
                std::size_t i = std::stoul(toks[t]);
                if (i >= n) r.error("subset member out of range");
                members.push_back(StateId(i));
            }
            subsets.emplace_back(toks[1], members);
        } else if (kw == "tolerance") {
            if (toks.size() != 2) r.error("tolerance takes one value");
            tolerance = parse_decimal(toks[1], r);
        } else if (kw == "resolution") {
            if (toks.size() != 2) r.error("resolution takes one value");
            resolution = parse_decimal(toks[1], r);
        } else {
            r.error("unknown keyword '" + kw + "'");
        }
    }
    if (!have_states) fail(Errc::parse_error, "missing states line");
    if (map.empty()) fail(Errc::parse_error, "missing map line");
    if (euclidean) {
        for (std::size_t i = 0; i < n; ++i)
            if (!coord_set[i]) fail(Errc::parse_error, "missing coord for state " + std::to_string(i));
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b) {
                double dx = coords[a].first - coords[b].first;
                double dy = coords[a].second - coords[b].second;
                dist.push_back(std::sqrt(dx * dx + dy * dy));
            }
        have_metric = true;
    }
    if (!have_metric) fail(Errc::parse_error, "missing metric");

    FiniteSystem sys(std::move(labels), std::move(dist), std::move(map), tolerance);
    for (auto& [name, members] : subsets)
        sys.attach_subset(name, StateSet::of(sys.size(), members));
    if (resolution > 0) sys.set_resolution(resolution);
    return sys;
}

std::string serialize_system(const FiniteSystem& sys, const std::string& name) {
    std::ostringstream os;
    os << "system " << name << "\n";
    os << "states " << sys.size() << "\n";
    for (StateId i = 0; i < sys.size(); ++i) os << "label " << i << " " << sys.label(i) << "\n";
    os << "map";
    for (StateId i = 0; i < sys.size(); ++i) os << " " << sys.map(i);
    os << "\n";
    os << "metric table\n";
    for (StateId a = 1; a < sys.size(); ++a) {
        for (StateId b = 0; b < a; ++b) os << (b ? " " : "") << format_double(sys.dist(a, b));
        os << "\n";
    }
    for (const auto& [sname, members] : sys.subsets()) {
        os << "subset " << sname;
        for (auto m : members.to_vector()) os << " " << m;
        os << "\n";
    }
    os << "tolerance " << format_double(sys.tolerance()) << "\n";
    os << "resolution " << format_double(sys.resolution()) << "\n";
    return os.str();
}

Sft parse_sft(const std::string& text) {
    LineReader r(text);
    std::string line;
    Sym alphabet = 0;
    std::vector<std::pair<Sym, Sym>> edges;
    std::size_t word_len = 0;
    std::vector<Word> words;

    auto parse_word = [&](const std::string& tok) {
        Word w;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') r.error("bad word symbol '" + std::string(1, ch) + "'");
            w.push_back(Sym(ch - '0'));
        }
        return w;
    };

    while (r.next(line)) {
        auto toks = split(line);
        const std::string& kw = toks[0];
        if (kw == "sft") {
            continue;
        } else if (kw == "alphabet") {
            if (toks.size() != 2) r.error("alphabet takes one count");
            alphabet = Sym(std::stoul(toks[1]));
        } else if (kw == "edge") {
            if (toks.size() != 4 || toks[2] != "->") r.error("edge syntax: edge a -> b");
            edges.emplace_back(Sym(std::stoul(toks[1])), Sym(std::stoul(toks[3])));
        } else if (kw == "words") {
            // words L: w1 w2 ...
            if (toks.size() < 2) r.error("words takes a length");
            std::string lenspec = toks[1];
            if (!lenspec.empty() && lenspec.back() == ':') lenspec.pop_back();
            word_len = std::stoul(lenspec);
            for (std::size_t t = 2; t < toks.size(); ++t) {
                auto w = parse_word(toks[t]);
                if (w.size() != word_len) r.error("word length mismatch");
                words.push_back(w);
            }
        } else {
            r.error("unknown keyword '" + kw + "'");
        }
    }
    if (alphabet == 0) fail(Errc::parse_error, "missing alphabet");
    if (!edges.empty() && !words.empty())
        fail(Errc::parse_error, "give either edges or a word set, not both");
    if (!edges.empty()) return Sft::from_transitions(alphabet, edges);
    if (!words.empty()) return Sft::from_words(alphabet, word_len, words);
    fail(Errc::parse_error, "missing transitions");
}

std::string serialize_sft(const Sft& s, const std::string& name) {
    std::ostringstream os;
    os << "sft " << name << "\n";
    os << "alphabet " << s.alphabet_size() << "\n";
    std::size_t L = s.order() + 1;
    os << "words " << L << ":";
    for (const auto& w : s.words(L)) {
        os << " ";
        for (Sym sym : w) os << sym;
    }
    os << "\n";
    return os.str();
}

namespace {

json point_json(const SymbolicPoint& p) { return p.to_string(); }

json words_json(const Sft& s) {
    json arr = json::array();
    std::size_t L = s.order() + 1;
    for (const auto& w : s.words(L)) {
        std::string t;
        for (Sym sym : w) t += std::to_string(sym) + (sym > 9 ? "," : "");
        arr.push_back(t);
    }
    return json{{"alphabet", s.alphabet_size()}, {"length", L}, {"list", arr}};
}

Sft sft_from_words_json(const json& j) {
    Sym alphabet = j.at("alphabet").get<Sym>();
    std::size_t L = j.at("length").get<std::size_t>();
    std::vector<Word> ws;
    for (const auto& item : j.at("list")) {
        std::string t = item.get<std::string>();
        Word w;
        for (char ch : t)
            if (ch >= '0' && ch <= '9') w.push_back(Sym(ch - '0'));
        if (w.size() != L) fail(Errc::parse_error, "certificate word length mismatch");
        ws.push_back(w);
    }
    return Sft::from_words(alphabet, L, ws);
}

}  // namespace

std::string certificate_to_json(const HorseshoeCertificate& cert, const Sft& sys) {
    json j;
    j["kind"] = "symbolic_horseshoe";
    j["system"] = words_json(sys);
    j["base"] = point_json(cert.base);
    j["k"] = cert.separation_index;
    j["m"] = cert.chain_length;
    j["delta"] = cert.delta;
    j["eps"] = cert.eps;
    j["a"] = cert.a;
    j["separation"] = cert.separation;
    j["entropy_lower_bound"] = cert.entropy_lower_bound;
    j["word_length"] = cert.word_length;
    j["note"] = cert.note;
    json z = json::array(), w = json::array(), realized = json::array();
    for (const auto& p : cert.chain_z) z.push_back(point_json(p));
    for (const auto& p : cert.chain_w) w.push_back(point_json(p));
    for (const auto& p : cert.realized) realized.push_back(point_json(p));
    j["chain_z"] = z;
    j["chain_w"] = w;
    j["realized"] = realized;
    return j.dump(2);
}

std::string certificate_to_json(const FiniteHorseshoeCertificate& cert, const FiniteSystem& sys) {
    json j;
    j["kind"] = "finite_horseshoe";
    j["system"] = serialize_system(sys);
    j["base"] = cert.base;
    j["k"] = cert.separation_index;
    j["m"] = cert.chain_length;
    j["delta"] = cert.delta;
    j["eps"] = cert.eps;
    j["a"] = cert.a;
    j["separation"] = cert.separation;
    j["entropy_lower_bound"] = cert.entropy_lower_bound;
    j["word_length"] = cert.word_length;
    j["chain_z"] = cert.chain_z;
    j["chain_w"] = cert.chain_w;
    j["realized"] = cert.realized;
    return j.dump(2);
}

CertificateCheck verify_certificate_json(const std::string& json_text) {
    CertificateCheck out;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        fail(Errc::parse_error, std::string("bad certificate JSON: ") + e.what());
    }
    out.kind = j.value("kind", "");
    try {
        if (out.kind == "symbolic_horseshoe") {
            Sft sys = sft_from_words_json(j.at("system"));
            HorseshoeCertificate cert;
            cert.base = SymbolicPoint::parse(j.at("base").get<std::string>());
            cert.separation_index = j.at("k").get<Count>();
            cert.chain_length = j.at("m").get<Count>();
            cert.delta = j.at("delta").get<double>();
            cert.eps = j.at("eps").get<double>();
            cert.a = j.at("a").get<double>();
            cert.separation = j.at("separation").get<double>();
            cert.entropy_lower_bound = j.at("entropy_lower_bound").get<double>();
            cert.word_length = j.at("word_length").get<Count>();
            for (const auto& t : j.at("chain_z"))
                cert.chain_z.push_back(SymbolicPoint::parse(t.get<std::string>()));
            for (const auto& t : j.at("chain_w"))
                cert.chain_w.push_back(SymbolicPoint::parse(t.get<std::string>()));
            for (const auto& t : j.at("realized"))
                cert.realized.push_back(SymbolicPoint::parse(t.get<std::string>()));
            std::string why;
            out.valid = cert.verify(sys, &why);
            out.detail = out.valid ? "all certificate checks passed" : why;
        } else if (out.kind == "finite_horseshoe") {
            FiniteSystem sys = parse_system(j.at("system").get<std::string>());
            FiniteHorseshoeCertificate cert;
            cert.base = j.at("base").get<StateId>();
            cert.separation_index = j.at("k").get<Count>();
            cert.chain_length = j.at("m").get<Count>();
            cert.delta = j.at("delta").get<double>();
            cert.eps = j.at("eps").get<double>();
            cert.a = j.at("a").get<double>();
            cert.separation = j.at("separation").get<double>();
            cert.entropy_lower_bound = j.at("entropy_lower_bound").get<double>();
            cert.word_length = j.at("word_length").get<Count>();
            cert.chain_z = j.at("chain_z").get<std::vector<StateId>>();
            cert.chain_w = j.at("chain_w").get<std::vector<StateId>>();
            cert.realized = j.at("realized").get<std::vector<StateId>>();
            std::string why;
            out.valid = cert.verify(sys, &why);
            out.detail = out.valid ? "all certificate checks passed" : why;
        } else {
            fail(Errc::parse_error, "unknown certificate kind '" + out.kind + "'");
        }
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("certificate field error: ") + e.what());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Errc::io_error, "cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(Errc::io_error, "cannot rename into " + path);
}

}  // namespace topodyn
