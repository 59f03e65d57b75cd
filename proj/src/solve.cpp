#include "tightlp/solve.hpp"

#include "tightlp/classical_negation.hpp"
#include "tightlp/completion.hpp"
#include "tightlp/semantics.hpp"
#include "tightlp/tightness.hpp"

#include <algorithm>

namespace tightlp {

std::string_view method_tag(Method m) noexcept {
    switch (m) {
        case Method::kAbsolutelyTight: return "cor7";
        case Method::kTightOnModel: return "thm1";
        case Method::kVerified: return "verified";
    }
    return "?";
}

Cnf program_cnf(const Program& p, const ClausifyOptions& options) {
    return clausify(completion(eliminate_classical_negation(p).program), options);
}

PipelineResult answer_sets_via_completion(const Program& p, const PipelineOptions& options) {
    PipelineResult result;
    const NegationElimination normal = eliminate_classical_negation(p);
    const Cnf cnf = clausify(completion(normal.program), options.clausify);
    SolveReport report = solve_all(cnf, options.sat);
    result.stats = report.stats;
    result.absolutely_tight = is_absolutely_tight(p);

    auto log = [&](std::string line) {
        if (options.trace) {
            result.trace.push_back(std::move(line));
        }
    };
    log("completion has " + std::to_string(report.models.size()) + " model(s); program is " +
        (result.absolutely_tight ? "absolutely tight" : "not absolutely tight"));

    for (const AtomSet& model : report.models) {
        LiteralSet x = normal.restore(to_literal_set(model));
        result.completion_models.push_back(x);
        if (result.absolutely_tight) {
            log("model " + x.to_string() + ": accepted (cor7)");
            result.answer_sets.push_back({x, Method::kAbsolutelyTight});
        } else if (is_tight_on(p, x)) {
            log("model " + x.to_string() + ": program is tight on it, accepted (thm1)");
            result.answer_sets.push_back({x, Method::kTightOnModel});
        } else if (is_answer_set(x, p)) {
            log("model " + x.to_string() + ": not tight on it, verified against the reduct (verified)");
            result.answer_sets.push_back({x, Method::kVerified});
        } else {
            if (options.trace) {
                const Program r = reduct(p, x);
                auto least = minimal_closed_set(r);
                log("model " + x.to_string() + ": not tight on it; reduct:");
                for (const Rule& rule : r.rules()) {
                    log("  " + render(rule));
                }
                log("  minimal closed set of the reduct: " + (least ? least->to_string() : std::string("none")));
                log("dropped " + x.to_string() + ": not an answer set");
            }
            result.dropped.push_back(x);
        }
    }
    sort_canonical(result.completion_models);
    std::sort(result.answer_sets.begin(), result.answer_sets.end(),
              [](const AnswerSet& a, const AnswerSet& b) { return canonical_less(a.literals, b.literals); });
    sort_canonical(result.dropped);
    return result;
}

} // namespace tightlp
