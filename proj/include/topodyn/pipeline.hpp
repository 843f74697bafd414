#ifndef TOPODYN_PIPELINE_HPP
#define TOPODYN_PIPELINE_HPP

#include <string>
#include <vector>

namespace topodyn {

/// One emitted artifact: name carries the extension (.csv, .dot, .txt, .json).
struct Artifact {
    std::string name;
    std::string content;
};

struct PipelineResult {
    int exit_code = 0;  // 0 consistent, 2 refuted-hypothesis reports, 1 errors
    std::vector<Artifact> artifacts;
    std::string verdicts;  // human-readable verdict file content
};

/// Runs the analyses named in a config:
///
///     system = cantor_fan N=4 P=3 | circle N=6 | file <path>
///     sft = full 2 | golden_mean | file <path>
///     lambda = subset <name> | sft golden_mean | whole
///     analyses = chain, sen, entropy, horseshoe, model, thm11, thm12, appendix
///     chain.deltas = 0.5 0.25
///     sen.a = 0.5
///     entropy.nmax = 12
///     entropy.r = 0.5 0.25
///     horseshoe.eps = 0.25
///     horseshoe.a = 1
///     model.n = 1
///     model.c = 0.5
///     thm11.family = truncations 3..8 | constant 3
///     thm11.a = 0.5
///     thm11.deltas = 0.25
///     thm11.threshold = 100
///     thm12.nmax = 4
///     appendix.a = 0.5
///     appendix.r = 0.1
///     seed = 0              # recorded for provenance only
///
/// Deterministic execution order (the order analyses are listed). Relative
/// `file` paths resolve against base_dir.
PipelineResult run_pipeline(const std::string& config_text, const std::string& base_dir = ".");

/// Atomically writes every artifact plus verdict.txt under out_dir.
void write_artifacts(const PipelineResult& result, const std::string& out_dir);

}  // namespace topodyn

#endif
