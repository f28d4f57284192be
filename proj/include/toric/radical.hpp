// Copyright 2026 The toric authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_RADICAL_HPP
#define TORIC_RADICAL_HPP

/// Radical ideal membership via the auxiliary-variable construction:
/// g lies in the radical of <f_1, ..., f_m> iff <f_1, ..., f_m, 1 - t*g>
/// is the unit ideal for a fresh variable t. One Groebner computation per
/// query, under a cooperative time budget.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "toric/budget.hpp"
#include "toric/groebner.hpp"
#include "toric/poly.hpp"

namespace toric {

enum class TestStatus { False, True, Timeout, Skipped };

inline std::string to_string(TestStatus s) {
    switch (s) {
        case TestStatus::False: return "false";
        case TestStatus::True: return "true";
        case TestStatus::Timeout: return "timeout";
        default: return "skipped";
    }
}

/// A boolean test result plus its wall-clock duration. Timeout is a distinct
/// third state so a harness can tell "false" from "gave up".
struct TestOutcome {
    TestStatus status = TestStatus::Skipped;
    double seconds = 0.0;

    bool is_true() const { return status == TestStatus::True; }
    bool is_false() const { return status == TestStatus::False; }
};

namespace detail {

class Stopwatch {
  public:
    double seconds() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// One radical membership question: is candidate in the radical of the ideal
/// generated by generators? The shared context must reserve one auxiliary
/// variable (aux_var) that occurs in neither candidate nor generators.
struct RadicalQuery {
    ContextPtr ctx;
    std::vector<Polynomial> generators;
    Polynomial candidate;
    int aux_var;
    Budget budget = Budget::unlimited();
};

inline TestOutcome radical_membership(const RadicalQuery& q) {
    detail::Stopwatch clock;
    if (q.aux_var < 0 || static_cast<std::size_t>(q.aux_var) >= q.ctx->size())
        throw std::invalid_argument("auxiliary variable index out of range");
    check_shared_context(q.ctx, q.candidate.context());
    for (const Polynomial& f : q.generators) check_shared_context(q.ctx, f.context());
    auto uses_aux = [&](const Polynomial& f) {
        for (const Term& t : f.terms())
            if (t.mono.exp(q.aux_var) != 0) return true;
        return false;
    };
    if (uses_aux(q.candidate))
        throw std::invalid_argument("auxiliary variable occurs in the candidate");
    for (const Polynomial& f : q.generators)
        if (uses_aux(f))
            throw std::invalid_argument("auxiliary variable occurs in a generator");

    std::vector<Polynomial> extended = q.generators;
    Polynomial t = Polynomial::variable(q.ctx, q.aux_var);
    extended.push_back(Polynomial::from_int(q.ctx, 1) - t * q.candidate);

    std::optional<GroebnerBasis> basis = buchberger(q.ctx, extended, q.budget);
    if (!basis) return TestOutcome{TestStatus::Timeout, clock.seconds()};
    return TestOutcome{contains_unit(*basis) ? TestStatus::True : TestStatus::False,
                       clock.seconds()};
}

/// Convenience form: the context's last variable is the reserved auxiliary.
inline TestOutcome radical_membership(const Polynomial& candidate,
                                      const std::vector<Polynomial>& generators,
                                      const Budget& budget = Budget::unlimited()) {
    const ContextPtr& ctx = candidate.context();
    return radical_membership(RadicalQuery{ctx, generators, candidate,
                                           static_cast<int>(ctx->size()) - 1, budget});
}

/// Appends a fresh auxiliary variable (ranked lowest) to a context, for
/// building radical queries from polynomials that live in the base context.
struct AuxExtension {
    ContextPtr ctx;
    std::vector<int> var_map;  // base index -> extended index (the identity)
    int aux_var;
};

inline AuxExtension extend_with_aux(const ContextPtr& base, std::string aux_name = "t_") {
    while (base->index_of(aux_name) >= 0) aux_name += "_";
    std::vector<std::string> names = base->names();
    names.push_back(aux_name);
    std::vector<int> ranking = base->order().ranking();
    ranking.push_back(static_cast<int>(base->size()));
    ContextPtr ctx = Context::make(base->field(), std::move(names),
                                   MonomialOrder(base->order().kind(), std::move(ranking)));
    std::vector<int> var_map(base->size());
    std::iota(var_map.begin(), var_map.end(), 0);
    return AuxExtension{ctx, std::move(var_map), static_cast<int>(base->size())};
}

}  // namespace toric

#endif  // TORIC_RADICAL_HPP
