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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "toric/toric.hpp"

using namespace toric;
using toric::testing::Rng;
using toric::testing::system_of;

namespace {

const FieldSpec kQ;

PolySystem bio092(OrderKind kind = OrderKind::grevlex) {
    return parse_system_file(std::string(TORIC_DATA_DIR) + "/bio092.poly", kQ, kind);
}

}  // namespace

TEST_CASE("partner names are positional and fresh", "[toricity]") {
    PolySystem sys = system_of({"x1*x2 - 1", "x4 - x1"});
    // variables in first-occurrence order: x1, x2, x4
    PartnerContext pc = make_partners(sys);
    CHECK(pc.g_names == std::vector<std::string>{"g1_", "g2_", "g3_"});
    CHECK(pc.y_names == std::vector<std::string>{"y1_", "y2_", "y3_"});
    CHECK(pc.aux_name == "t_");

    PolySystem colliding = system_of({"g1_ + x"});
    PartnerContext pc2 = make_partners(colliding);
    CHECK(pc2.g_names == std::vector<std::string>{"g1__", "g2_"});

    PolySystem constant = system_of({"5"});
    PartnerContext pc3 = make_partners(constant);
    CHECK(pc3.g_names.empty());
    CHECK(pc3.y_names.empty());
}

TEST_CASE("iota instances", "[toricity]") {
    PolySystem sys = system_of({"x^2 - 2"});
    RadicalInstance inst = iota_instance(sys, make_partners(sys));
    // context [x, g1_, t_], original variables ranked highest, aux lowest
    CHECK(inst.ctx->names() == std::vector<std::string>{"x", "g1_", "t_"});
    CHECK(inst.aux_var == 2);
    REQUIRE(inst.generators.size() == 2);
    CHECK(inst.generators[0] == parse_polynomial("g1_^2 - 2", inst.ctx));
    CHECK(inst.generators[1] == parse_polynomial("g1_^2*x^2 - 2", inst.ctx));
    REQUIRE(inst.candidates.size() == 1);
    CHECK(inst.candidates[0] ==
          parse_polynomial("(g1_^2 - 2*x^2)*g1_*x", inst.ctx));

    PolySystem linear = system_of({"x"});
    RadicalInstance li = iota_instance(linear, make_partners(linear));
    CHECK(li.generators[0] == parse_polynomial("g1_", li.ctx));
    CHECK(li.generators[1] == parse_polynomial("g1_*x", li.ctx));
    CHECK(li.candidates[0] == parse_polynomial("g1_^2*x", li.ctx));

    PolySystem constant = system_of({"7"});
    RadicalInstance ci = iota_instance(constant, make_partners(constant));
    REQUIRE(ci.generators.size() == 2);
    CHECK(ci.generators[0] == parse_polynomial("7", ci.ctx));
    CHECK(ci.generators[1] == parse_polynomial("7", ci.ctx));
    CHECK(ci.candidates[0] == parse_polynomial("7", ci.ctx));  // empty cofactor product
}

TEST_CASE("mu instances", "[toricity]") {
    PolySystem sys = system_of({"x^2 - 2"});
    RadicalInstance inst = mu_instance(sys, make_partners(sys));
    CHECK(inst.ctx->names() == std::vector<std::string>{"x", "g1_", "y1_", "t_"});
    REQUIRE(inst.generators.size() == 3);
    CHECK(inst.generators[0] == parse_polynomial("g1_^2 - 2", inst.ctx));
    CHECK(inst.generators[1] == parse_polynomial("g1_^2*x^2 - 2", inst.ctx));
    CHECK(inst.generators[2] == parse_polynomial("g1_^2*y1_^2 - 2", inst.ctx));
    REQUIRE(inst.candidates.size() == 1);
    CHECK(inst.candidates[0] ==
          parse_polynomial("(g1_^2*x^2*y1_^2 - 2)*g1_*x*y1_", inst.ctx));

    PolySystem linear = system_of({"x"});
    RadicalInstance li = mu_instance(linear, make_partners(linear));
    REQUIRE(li.generators.size() == 3);
    CHECK(li.generators[2] == parse_polynomial("g1_*y1_", li.ctx));
    CHECK(li.candidates[0] == parse_polynomial("g1_^2*x^2*y1_^2", li.ctx));

    PolySystem empty = system_of({"# nothing"});
    RadicalInstance ei = mu_instance(empty, make_partners(empty));
    CHECK(ei.generators.empty());
    CHECK(ei.candidates.empty());
}

TEST_CASE("sub-tests on small systems", "[toricity]") {
    PolySystem x2m2 = system_of({"x^2 - 2"});
    PartnerContext pc = make_partners(x2m2);
    CHECK(test_iota(x2m2, pc).is_true());
    CHECK(test_mu(x2m2, pc).is_true());
    CHECK(test_eta(x2m2).is_false());

    PolySystem constant = system_of({"9"});
    CHECK(test_iota(constant, make_partners(constant)).is_true());  // unit ideal

    PolySystem xy = system_of({"x*y"});
    CHECK(test_eta(xy).is_true());  // candidate equals the generator

    PolySystem empty = system_of({"# nothing"});
    CHECK(empty.m() == 0);
    CHECK(test_iota(empty, make_partners(empty)).is_true());
    CHECK(test_mu(empty, make_partners(empty)).is_true());
    CHECK(test_eta(empty).is_false());
    CHECK(test_gamma(empty).is_true());
}

TEST_CASE("gamma is plain evaluation", "[toricity]") {
    CHECK(test_gamma(bio092()).is_false());
    CHECK(test_gamma(system_of({"x1*x2 - 1"})).is_true());
    CHECK(test_gamma(system_of({"x + 1"})).is_false());
    CHECK(test_gamma(system_of({"x + 1"}, FieldSpec(2))).is_true());
}

TEST_CASE("model 92 classification matches its reference row", "[toricity]") {
    ToricityReport rep = classify(bio092());
    CHECK(rep.m == 4);
    CHECK(rep.n == 3);
    CHECK(rep.iota.is_true());
    CHECK(rep.mu.is_true());
    CHECK(rep.eta.is_false());
    CHECK(rep.gamma.is_false());
    CHECK(rep.coset == Verdict::True);
    CHECK(rep.group == Verdict::False);
    CHECK(rep.characteristic == 0);
}

TEST_CASE("quartic fixtures", "[toricity]") {
    CHECK(classify(system_of({"x^4 - 4"})).coset == Verdict::True);
    CHECK(classify(system_of({"x^4 + x^2 - 6"})).coset == Verdict::False);
    ToricityReport r = classify(system_of({"x^2 - 2"}));
    CHECK(r.coset == Verdict::True);
    CHECK(r.group == Verdict::False);
    CHECK(classify(system_of({"x^2 + 2"})).coset == Verdict::True);
}

TEST_CASE("hyperbola is a group", "[toricity]") {
    ToricityReport rep = classify(system_of({"x1*x2 - 1"}));
    CHECK(rep.group == Verdict::True);
    CHECK(rep.coset == Verdict::True);
    CHECK(rep.gamma.is_true());
}

TEST_CASE("degenerate systems", "[toricity]") {
    // empty system: the whole torus, a group
    ToricityReport empty = classify(system_of({"# comment only"}));
    CHECK(empty.m == 0);
    CHECK(empty.n == 0);
    CHECK(empty.iota.is_true());
    CHECK(empty.mu.is_true());
    CHECK(empty.eta.is_false());
    CHECK(empty.gamma.is_true());
    CHECK(empty.coset == Verdict::True);
    CHECK(empty.group == Verdict::True);

    // unit ideal: empty variety, vacuous closures, empty intersection
    ToricityReport unit = classify(system_of({"5"}));
    CHECK(unit.iota.is_true());
    CHECK(unit.mu.is_true());
    CHECK(unit.eta.is_true());
    CHECK(unit.gamma.is_false());
    CHECK(unit.coset == Verdict::False);
    CHECK(unit.group == Verdict::False);
}

TEST_CASE("gamma excludes eta on systems vanishing at the all-ones point", "[toricity]") {
    Rng rng(20260115);
    for (int i = 0; i < 100; ++i) {
        PolySystem sys = testing::vanishing_at_ones(rng, rng.uniform(1, 3), rng.uniform(1, 3));
        TestOutcome gamma = test_gamma(sys);
        REQUIRE(gamma.is_true());
        TestOutcome eta = test_eta(sys);
        REQUIRE(eta.is_false());
    }
}

TEST_CASE("group implies coset on every report seen", "[toricity]") {
    std::vector<ToricityReport> reports;
    reports.push_back(classify(bio092()));
    for (const char* text : {"x^4 - 4", "x^4 + x^2 - 6", "x^2 - 2", "x1*x2 - 1", "x*y", "5"})
        reports.push_back(classify(system_of({text})));
    reports.push_back(classify(system_of({"# empty"})));
    for (const ToricityReport& r : reports)
        if (r.group == Verdict::True) REQUIRE(r.coset == Verdict::True);
}

namespace {

struct StatusQuad {
    TestStatus iota, mu, eta, gamma;

    friend bool operator==(const StatusQuad&, const StatusQuad&) = default;
};

StatusQuad statuses(const ToricityReport& r) {
    return StatusQuad{r.iota.status, r.mu.status, r.eta.status, r.gamma.status};
}

}  // namespace

TEST_CASE("verdicts are invariant under benign transformations", "[toricity]") {
    Rng rng(20260116);
    std::vector<PolySystem> fixtures;
    fixtures.push_back(bio092());
    for (const char* text : {"x^4 - 4", "x^4 + x^2 - 6", "x^2 - 2", "x1*x2 - 1", "x*y"})
        fixtures.push_back(system_of({text}));

    for (const PolySystem& sys : fixtures) {
        StatusQuad base = statuses(classify(sys));

        REQUIRE(statuses(classify(testing::permuted(sys, rng))) == base);
        REQUIRE(statuses(classify(testing::scaled(sys, rng))) == base);
        REQUIRE(statuses(classify(testing::renamed(sys, "v_"))) == base);

        ClassifyOptions lex;
        lex.order = OrderKind::lex;
        REQUIRE(statuses(classify(sys, lex)) == base);
    }
}

TEST_CASE("verdicts survive coordinate scaling", "[toricity]") {
    Rng rng(20260117);
    std::vector<PolySystem> fixtures;
    fixtures.push_back(bio092());
    for (const char* text : {"x^4 - 4", "x^4 + x^2 - 6", "x^2 - 2"})
        fixtures.push_back(system_of({text}));

    for (const PolySystem& sys : fixtures) {
        ToricityReport base = classify(sys);
        std::vector<FieldElement> c;
        for (int j = 0; j < sys.n(); ++j)
            c.push_back(testing::random_element(rng, kQ, true));
        ToricityReport scaled = classify(testing::coordinate_scaled(sys, c));
        REQUIRE(scaled.coset == base.coset);
        REQUIRE(scaled.group == base.group);
    }

    // a scaled group is still a coset, but the identity moves off the variety
    // unless the scale itself lies on it, so only the coset verdict survives
    PolySystem hyperbola = system_of({"x1*x2 - 1"});
    std::vector<FieldElement> c = {FieldElement::from_int(3, kQ),
                                   FieldElement::from_int(5, kQ)};
    ToricityReport scaled = classify(testing::coordinate_scaled(hyperbola, c));
    CHECK(scaled.coset == Verdict::True);
    CHECK(scaled.group == Verdict::False);
    CHECK(scaled.gamma.is_false());
}

TEST_CASE("fail-fast skips the remaining tests after a decisive failure", "[toricity]") {
    ClassifyOptions opts;
    opts.fail_fast = true;
    ToricityReport rep = classify(system_of({"x^4 + x^2 - 6"}), opts);
    CHECK(rep.iota.is_false());
    CHECK(rep.mu.status == TestStatus::Skipped);
    CHECK(rep.eta.status == TestStatus::Skipped);
    CHECK(rep.gamma.status == TestStatus::Skipped);
    CHECK(rep.coset == Verdict::False);
    CHECK(rep.group == Verdict::False);

    // without fail-fast everything runs even though the verdict is decided
    ToricityReport full = classify(system_of({"x^4 + x^2 - 6"}));
    CHECK(full.mu.status != TestStatus::Skipped);
    CHECK(full.eta.status != TestStatus::Skipped);
}

TEST_CASE("timeouts propagate as unknown verdicts", "[toricity]") {
    ClassifyOptions opts;
    opts.model_budget_seconds = 1e-9;
    ToricityReport rep = classify(bio092(), opts);
    CHECK(rep.iota.status == TestStatus::Timeout);
    CHECK(rep.mu.status == TestStatus::Timeout);
    CHECK(rep.eta.status == TestStatus::Timeout);
    CHECK(rep.gamma.is_false());  // gamma needs no budget
    CHECK(rep.coset == Verdict::Unknown);
    CHECK(rep.group == Verdict::False);  // gamma decisively fails the group test
}
