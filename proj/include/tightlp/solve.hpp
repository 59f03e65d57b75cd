#pragma once

// Answer sets from models of the completion: the completion is clausified and
// its models enumerated; each model is accepted by absolute tightness, by
// tightness on the model, or by an explicit answer-set check.

#include "tightlp/literal_set.hpp"
#include "tightlp/sat.hpp"
#include "tightlp/syntax.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tightlp {

enum class Method {
    kAbsolutelyTight, // "cor7": the program is absolutely tight
    kTightOnModel,    // "thm1": the program is tight on this model
    kVerified,        // "verified": checked against the reduct
};

std::string_view method_tag(Method m) noexcept;

struct AnswerSet {
    LiteralSet literals;
    Method method;
};

struct PipelineOptions {
    SolveOptions sat;
    ClausifyOptions clausify;
    bool trace = false;
};

struct PipelineResult {
    std::vector<AnswerSet> answer_sets;    // canonical order
    std::vector<LiteralSet> completion_models; // in source literals, canonical order
    std::vector<LiteralSet> dropped;       // completion models that are not answer sets
    bool absolutely_tight = false;
    SolverStats stats;
    std::vector<std::string> trace;        // filled when options.trace is set
};

// Programs with classical negation are translated to normal programs first
// and models are mapped back. Throws LimitExceeded from the model cap.
PipelineResult answer_sets_via_completion(const Program& p, const PipelineOptions& options = {});

// Completion of `p` after classical-negation elimination, clausified.
Cnf program_cnf(const Program& p, const ClausifyOptions& options = {});

} // namespace tightlp
