#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "topodyn.h"

namespace {

struct Sys {
    td_system* p = nullptr;
    ~Sys() { td_system_free(p); }
};
struct Shift {
    td_sft* p = nullptr;
    ~Shift() { td_sft_free(p); }
};
struct Rep {
    td_report* p = nullptr;
    ~Rep() { td_report_free(p); }
};

}  // namespace

TEST_CASE("capi: construction, analysis, report lifecycle") {
    Shift full;
    REQUIRE(td_sft_full_shift(2, &full.p) == TD_OK);
    double h = 0;
    REQUIRE(td_sft_entropy(full.p, &h) == TD_OK);
    CHECK(h == doctest::Approx(std::log(2.0)));

    Sys trunc;
    REQUIRE(td_sft_truncation(full.p, 4, &trunc.p) == TD_OK);
    CHECK(td_system_size(trunc.p) == 22);

    Rep chain;
    REQUIRE(td_chain_analysis(trunc.p, "0.25 0.125", &chain.p) == TD_OK);
    CHECK(td_report_artifact_count(chain.p) == 2);
    CHECK(std::string(td_report_artifact_name(chain.p, 0)) == "chain.csv");
    CHECK(std::string(td_report_artifact_content(chain.p, 0)).find("delta,") == 0);

    Rep sen;
    REQUIRE(td_sensitivity(trunc.p, nullptr, "0.5", &sen.p) == TD_OK);
    std::string sen_text = td_report_text(sen.p);
    CHECK(sen_text.find("a = 0.5") != std::string::npos);
    CHECK(sen_text.find("sensitive: ") != std::string::npos);
    CHECK(sen_text.find("witness") != std::string::npos);
}

TEST_CASE("capi: generators, subsets and error reporting") {
    Sys fan;
    REQUIRE(td_cantor_fan(4, 3, &fan.p) == TD_OK);
    Rep sen;
    REQUIRE(td_sensitivity(fan.p, "lambda", "0.5", &sen.p) == TD_OK);
    CHECK(std::string(td_report_text(sen.p)).find("sensitive: 0") != std::string::npos);

    Rep missing;
    CHECK(td_sensitivity(fan.p, "nope", "0.5", &missing.p) == TD_ERR_NOT_FOUND);
    CHECK(std::strlen(td_last_error()) > 0);
    CHECK(td_sensitivity(fan.p, nullptr, "abc", &missing.p) == TD_ERR_PARSE);
    CHECK(td_cantor_fan(1, 1, &fan.p) == TD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: horseshoe certificate and re-verification") {
    Shift full;
    REQUIRE(td_sft_full_shift(2, &full.p) == TD_OK);
    Rep horse;
    REQUIRE(td_horseshoe_sft(full.p, "(0)..(0)", "0.25", "1", 3, &horse.p) == TD_OK);
    REQUIRE(td_report_artifact_count(horse.p) == 1);
    std::string json = td_report_artifact_content(horse.p, 0);

    Rep verify;
    REQUIRE(td_verify_certificate(json.c_str(), &verify.p) == TD_OK);
    CHECK(td_report_exit_code(verify.p) == 0);
    CHECK(std::string(td_report_text(verify.p)).find("VALID") != std::string::npos);

    // the finite-system flavour over a truncation handle
    Sys trunc;
    REQUIRE(td_sft_truncation(full.p, 6, &trunc.p) == TD_OK);
    Rep fin;
    REQUIRE(td_horseshoe_system(trunc.p, nullptr, "0.25", "0.9", 1, &fin.p) == TD_OK);
    REQUIRE(td_report_artifact_count(fin.p) == 1);
    Rep fverify;
    REQUIRE(td_verify_certificate(td_report_artifact_content(fin.p, 0), &fverify.p) == TD_OK);
    CHECK(td_report_exit_code(fverify.p) == 0);
}

TEST_CASE("capi: thm12 over the pipeline text entry point") {
    Rep rep;
    std::string cfg =
        "system = cantor_fan N=4 P=3\n"
        "lambda = subset lambda\n"
        "analyses = thm12\n";
    REQUIRE(td_pipeline_run_text(cfg.c_str(), ".", nullptr, &rep.p) == TD_OK);
    CHECK(td_report_exit_code(rep.p) == 2);

    Rep empty;
    REQUIRE(td_pipeline_run_text("system = circle N=4\n", ".", nullptr, &empty.p) == TD_OK);
    CHECK(td_report_exit_code(empty.p) == 0);
    CHECK(td_report_artifact_count(empty.p) == 0);

    // golden-mean entropy through the pipeline: CSV slope within 0.02 of the
    // spectral value 0.4812...
    Rep gm;
    REQUIRE(td_pipeline_run_text("sft = golden_mean\nanalyses = entropy\nentropy.nmax = 25\n",
                                 ".", nullptr, &gm.p) == TD_OK);
    CHECK(td_report_exit_code(gm.p) == 0);
    REQUIRE(td_report_artifact_count(gm.p) == 1);
    std::string csv = td_report_artifact_content(gm.p, 0);
    auto pos = csv.find("word-count slope,");
    REQUIRE(pos != std::string::npos);
    double slope = std::stod(csv.substr(pos + 17));
    CHECK(std::abs(slope - 0.4812118250596035) < 0.02);
}

TEST_CASE("capi: symbolic operations") {
    Shift gm;
    REQUIRE(td_sft_golden_mean(&gm.p) == TD_OK);

    double d = 0;
    REQUIRE(td_shift_metric("(0)..(0)", "(0).1.(0)@3", &d) == TD_OK);
    CHECK(d == 0.125);

    int64_t n = -1;
    REQUIRE(td_sft_expansivity_horizon(gm.p, "0.5", "0.0625", &n) == TD_OK);
    CHECK(n == 3);

    Rep shadow;
    REQUIRE(td_sft_shadow(gm.p, "(000010)..(000010) (000010)..(000010)@-1", "0.25",
                          &shadow.p) == TD_OK);
    CHECK(std::string(td_report_text(shadow.p)).find("eps 0.25") != std::string::npos);

    Rep pair;
    REQUIRE(td_sft_asymptotic_pair(gm.p, "(0)..(0)", &pair.p) == TD_OK);
    CHECK(std::string(td_report_text(pair.p)).find("pair (0).1.(0)@-1") != std::string::npos);

    Rep stable;
    REQUIRE(td_sft_local_stable_set(gm.p, "(0)..(0)", "0.5", 4, &stable.p) == TD_OK);
    CHECK(std::string(td_report_text(stable.p)).find("i >= 0") != std::string::npos);

    Shift orbit, full;
    REQUIRE(td_sft_full_shift(2, &full.p) == TD_OK);
    REQUIRE(td_sft_parse("sft o\nalphabet 2\nwords 2: 01 10\n", &orbit.p) == TD_OK);
    Rep lm;
    REQUIRE(td_sft_locally_maximal(full.p, orbit.p, 6, &lm.p) == TD_OK);
    CHECK(td_report_exit_code(lm.p) == 0);
    CHECK(std::string(td_report_text(lm.p)).find("0.25") != std::string::npos);
}

TEST_CASE("capi: model build against the golden mean") {
    Shift full, gm;
    REQUIRE(td_sft_full_shift(2, &full.p) == TD_OK);
    REQUIRE(td_sft_golden_mean(&gm.p) == TD_OK);
    Rep rep;
    REQUIRE(td_model_build(full.p, gm.p, 1, "0.5", &rep.p) == TD_OK);
    std::string text = td_report_text(rep.p);
    CHECK(text.find("W 000 001 010 100 101") != std::string::npos);
    CHECK(text.find("sandwich true") != std::string::npos);
}
