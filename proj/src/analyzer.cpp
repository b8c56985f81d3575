// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/analyzer.hpp"

#include "monoterm/classifier.hpp"
#include "monoterm/decider_diagonal.hpp"
#include "monoterm/decider_multipath.hpp"
#include "monoterm/decider_single.hpp"

namespace monoterm {

namespace {

Verdict dispatch(const LoopProgram& p, const AnalyzeOptions& opts) {
    validate(p);
    return std::visit(
        [&](const auto& s) -> Verdict {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, SinglePathDF>) {
                return decide_single(s, p.init.at(s.guard.var));
            } else if constexpr (std::is_same_v<S, SinglePathDiag>) {
                return decide_diagonal(s, p.init, DiagonalOptions{opts.search_budget});
            } else {
                return decide_multipath(s, p.init.at(s.guard.var), MultipathOptions{opts.search_budget});
            }
        },
        p.shape);
}

} // namespace

Verdict analyze(const LoopProgram& p, const AnalyzeOptions& opts) {
    try {
        return dispatch(p, opts);
    } catch (const UnsupportedError& e) {
        return Verdict::unsupported(e.what());
    } catch (const AnalysisError& e) {
        return Verdict::unsupported(std::string("analysis error: ") + e.what());
    }
}

} // namespace monoterm
