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

#ifndef TORIC_TORICITY_HPP
#define TORIC_TORICITY_HPP

/// Decides whether the points with all-non-zero coordinates of the variety of
/// an input system form a multiplicative group, or a coset of one, over the
/// algebraically closed field of the configured characteristic.
///
/// Four sub-tests reduce to radical ideal membership:
///   iota  - closure under coordinate-wise division relative to a base point,
///   mu    - closure under coordinate-wise multiplication,
///   eta   - emptiness of the non-zero-coordinate part (coset needs NOT eta),
///   gamma - the all-ones point lies on the variety (plain evaluation).
/// coset = iota AND mu AND NOT eta; group = iota AND mu AND gamma.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/budget.hpp"
#include "toric/radical.hpp"
#include "toric/system.hpp"

namespace toric {

/// Fresh companion variables for a system: one g- and one y-partner per
/// system variable (positional names g1_, y1_, ...) plus the reserved
/// auxiliary variable for radical queries. Underscores are appended until a
/// name avoids every input variable.
struct PartnerContext {
    std::vector<std::string> g_names;
    std::vector<std::string> y_names;
    std::string aux_name;
};

inline PartnerContext make_partners(const PolySystem& sys) {
    std::set<std::string> used;
    auto fresh = [&](std::string name) {
        while (sys.context()->index_of(name) >= 0 || used.count(name)) name += "_";
        used.insert(name);
        return name;
    };
    PartnerContext pc;
    int n = sys.n();
    for (int i = 0; i < n; ++i) pc.g_names.push_back(fresh("g" + std::to_string(i + 1) + "_"));
    for (int i = 0; i < n; ++i) pc.y_names.push_back(fresh("y" + std::to_string(i + 1) + "_"));
    pc.aux_name = fresh("t_");
    return pc;
}

/// A prepared radical-membership instance: one generator set, one candidate
/// per input polynomial, and the reserved auxiliary variable.
struct RadicalInstance {
    ContextPtr ctx;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> candidates;
    int aux_var;
};

namespace detail {

struct ExtendedSystem {
    ContextPtr ctx;
    std::vector<Polynomial> polys;  // inputs lifted, x-variables at indices 0..n-1
    int n;
};

/// Context [x..., g...?, y...?, aux] with the natural ranking, so original
/// variables rank highest and the auxiliary lowest.
inline ExtendedSystem extend_system(const PolySystem& sys, const PartnerContext& pc,
                                    bool with_g, bool with_y) {
    std::vector<std::string> names = sys.context()->names();
    if (with_g) names.insert(names.end(), pc.g_names.begin(), pc.g_names.end());
    if (with_y) names.insert(names.end(), pc.y_names.begin(), pc.y_names.end());
    names.push_back(pc.aux_name);
    ContextPtr ctx = Context::make(sys.context()->field(), std::move(names),
                                   sys.context()->order().kind());
    std::vector<int> var_map(sys.n());
    std::iota(var_map.begin(), var_map.end(), 0);
    ExtendedSystem ext{ctx, {}, sys.n()};
    ext.polys.reserve(sys.m());
    for (const Polynomial& f : sys.polynomials()) ext.polys.push_back(lift(f, ctx, var_map));
    return ext;
}

inline std::vector<int> offset_partners(const ExtendedSystem& ext, int offset) {
    std::vector<int> map(ext.ctx->size(), -1);
    for (int j = 0; j < ext.n; ++j) map[j] = offset + j;
    return map;
}

inline Polynomial product_of_vars(const ContextPtr& ctx, const std::vector<int>& vars) {
    std::vector<std::uint32_t> e(ctx->size(), 0);
    for (int v : vars) e[v] += 1;
    return Polynomial::from_terms(
        ctx, {Term{FieldElement::one(ctx->field()), Monomial(std::move(e))}});
}

}  // namespace detail

/// Instance for the division-closure test: generators are every f_i with
/// x -> g and x -> g*x; the k-th candidate is the denominator-cleared
/// f_k(g x^{-1}) times the cofactor prod_j g_j x_j.
inline RadicalInstance iota_instance(const PolySystem& sys, const PartnerContext& pc) {
    detail::ExtendedSystem ext = detail::extend_system(sys, pc, true, false);
    int n = ext.n;
    std::vector<int> g_of = detail::offset_partners(ext, n);

    std::vector<int> to_g(ext.ctx->size());
    std::iota(to_g.begin(), to_g.end(), 0);
    for (int j = 0; j < n; ++j) to_g[j] = n + j;

    RadicalInstance inst{ext.ctx, {}, {}, static_cast<int>(ext.ctx->size()) - 1};
    for (const Polynomial& f : ext.polys) inst.generators.push_back(rename_merge(f, to_g));
    for (const Polynomial& f : ext.polys) inst.generators.push_back(subst_scale(f, g_of));

    std::vector<int> cofactor_vars;
    for (int j = 0; j < n; ++j) {
        cofactor_vars.push_back(j);
        cofactor_vars.push_back(n + j);
    }
    Polynomial cofactor = detail::product_of_vars(ext.ctx, cofactor_vars);
    for (const Polynomial& f : ext.polys)
        inst.candidates.push_back(subst_inverse_cleared(f, g_of) * cofactor);
    return inst;
}

/// Instance for the multiplication-closure test: generators are every f_i
/// with x -> g, x -> g*x and x -> g*y; the k-th candidate is
/// f_k(g*x*y) times the cofactor prod_j g_j x_j y_j.
inline RadicalInstance mu_instance(const PolySystem& sys, const PartnerContext& pc) {
    detail::ExtendedSystem ext = detail::extend_system(sys, pc, true, true);
    int n = ext.n;
    std::vector<int> g_of = detail::offset_partners(ext, n);
    std::vector<int> y_of = detail::offset_partners(ext, 2 * n);

    std::vector<int> to_g(ext.ctx->size()), to_y(ext.ctx->size());
    std::iota(to_g.begin(), to_g.end(), 0);
    std::iota(to_y.begin(), to_y.end(), 0);
    for (int j = 0; j < n; ++j) {
        to_g[j] = n + j;
        to_y[j] = 2 * n + j;
    }
    std::vector<int> g_of_y(ext.ctx->size(), -1);
    for (int j = 0; j < n; ++j) g_of_y[2 * n + j] = n + j;

    RadicalInstance inst{ext.ctx, {}, {}, static_cast<int>(ext.ctx->size()) - 1};
    for (const Polynomial& f : ext.polys) inst.generators.push_back(rename_merge(f, to_g));
    for (const Polynomial& f : ext.polys) inst.generators.push_back(subst_scale(f, g_of));
    for (const Polynomial& f : ext.polys)
        inst.generators.push_back(subst_scale(rename_merge(f, to_y), g_of_y));

    std::vector<int> cofactor_vars;
    for (int j = 0; j < 3 * n; ++j) cofactor_vars.push_back(j);
    Polynomial cofactor = detail::product_of_vars(ext.ctx, cofactor_vars);
    for (const Polynomial& f : ext.polys)
        inst.candidates.push_back(subst_scale_pair(f, g_of, y_of) * cofactor);
    return inst;
}

/// Instance for the emptiness test: generators are the inputs themselves and
/// the single candidate is prod_j x_j.
inline RadicalInstance eta_instance(const PolySystem& sys, const PartnerContext& pc) {
    detail::ExtendedSystem ext = detail::extend_system(sys, pc, false, false);
    std::vector<int> all_x(ext.n);
    std::iota(all_x.begin(), all_x.end(), 0);
    return RadicalInstance{ext.ctx, ext.polys,
                           {detail::product_of_vars(ext.ctx, all_x)},
                           static_cast<int>(ext.ctx->size()) - 1};
}

namespace detail {

/// Runs all candidates of one instance: false on the first failed membership,
/// timeout on the first expired sub-query, true when every candidate is in.
inline TestOutcome run_instance(const RadicalInstance& inst, const Budget& budget) {
    Stopwatch clock;
    for (const Polynomial& candidate : inst.candidates) {
        TestOutcome sub = radical_membership(
            RadicalQuery{inst.ctx, inst.generators, candidate, inst.aux_var, budget});
        if (sub.status != TestStatus::True) return TestOutcome{sub.status, clock.seconds()};
    }
    return TestOutcome{TestStatus::True, clock.seconds()};
}

}  // namespace detail

inline TestOutcome test_iota(const PolySystem& sys, const PartnerContext& pc,
                             const Budget& budget = Budget::unlimited()) {
    return detail::run_instance(iota_instance(sys, pc), budget);
}

inline TestOutcome test_mu(const PolySystem& sys, const PartnerContext& pc,
                           const Budget& budget = Budget::unlimited()) {
    return detail::run_instance(mu_instance(sys, pc), budget);
}

inline TestOutcome test_eta(const PolySystem& sys, const Budget& budget = Budget::unlimited()) {
    return detail::run_instance(eta_instance(sys, make_partners(sys)), budget);
}

/// The all-ones membership test: plain evaluation, no Groebner computation.
inline TestOutcome test_gamma(const PolySystem& sys) {
    detail::Stopwatch clock;
    std::vector<FieldElement> ones(sys.n(), FieldElement::one(sys.context()->field()));
    for (const Polynomial& f : sys.polynomials()) {
        if (!f.evaluate(ones).is_zero())
            return TestOutcome{TestStatus::False, clock.seconds()};
    }
    return TestOutcome{TestStatus::True, clock.seconds()};
}

enum class Verdict { False, True, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::False: return "false";
        case Verdict::True: return "true";
        default: return "unknown";
    }
}

namespace detail {

inline Verdict tri(TestStatus s) {
    if (s == TestStatus::True) return Verdict::True;
    if (s == TestStatus::False) return Verdict::False;
    return Verdict::Unknown;
}

inline Verdict tri_and(Verdict a, Verdict b) {
    if (a == Verdict::False || b == Verdict::False) return Verdict::False;
    if (a == Verdict::True && b == Verdict::True) return Verdict::True;
    return Verdict::Unknown;
}

inline Verdict tri_not(Verdict a) {
    if (a == Verdict::True) return Verdict::False;
    if (a == Verdict::False) return Verdict::True;
    return Verdict::Unknown;
}

}  // namespace detail

/// Per-system verdicts. The statements are decided over the algebraically
/// closed field of the recorded characteristic; a timed-out or skipped
/// sub-test makes dependent verdicts unknown rather than false.
struct ToricityReport {
    int m = 0;
    int n = 0;
    TestOutcome iota, mu, eta, gamma;
    Verdict coset = Verdict::Unknown;
    Verdict group = Verdict::Unknown;
    double total_seconds = 0.0;
    std::uint64_t characteristic = 0;
};

struct ClassifyOptions {
    OrderKind order = OrderKind::grevlex;
    double test_budget_seconds = 0.0;   // 0 = unlimited
    double model_budget_seconds = 0.0;  // 0 = unlimited
    bool fail_fast = false;             // skip remaining tests once both verdicts are decided
};

/// Runs all four tests (each timed) and combines them. By default every test
/// runs even after a decisive failure; with fail_fast the remaining tests are
/// skipped once a false iota or mu has settled both verdicts.
inline ToricityReport classify(const PolySystem& input, const ClassifyOptions& opts = {}) {
    detail::Stopwatch clock;
    const PolySystem* sys = &input;
    PolySystem reordered = input;
    if (input.context()->order().kind() != opts.order) {
        reordered = input.with_order(opts.order);
        sys = &reordered;
    }

    ToricityReport report;
    report.m = sys->m();
    report.n = sys->n();
    report.characteristic = sys->context()->field().characteristic();

    PartnerContext pc = make_partners(*sys);
    Budget model_budget = Budget::after(opts.model_budget_seconds);
    auto test_budget = [&] { return model_budget.capped(opts.test_budget_seconds); };

    report.iota = test_iota(*sys, pc, test_budget());
    bool decided = opts.fail_fast && report.iota.is_false();
    if (!decided) {
        report.mu = test_mu(*sys, pc, test_budget());
        decided = opts.fail_fast && report.mu.is_false();
    }
    if (!decided) {
        report.eta = test_eta(*sys, test_budget());
        report.gamma = test_gamma(*sys);
    }

    using detail::tri;
    Verdict closure = detail::tri_and(tri(report.iota.status), tri(report.mu.status));
    report.coset = detail::tri_and(closure, detail::tri_not(tri(report.eta.status)));
    report.group = detail::tri_and(closure, tri(report.gamma.status));
    report.total_seconds = clock.seconds();
    return report;
}

}  // namespace toric

#endif  // TORIC_TORICITY_HPP
