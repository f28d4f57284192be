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

#ifndef TORIC_GROEBNER_HPP
#define TORIC_GROEBNER_HPP

/// Buchberger's algorithm with the Gebauer-Moeller arrangement of the two
/// classical criteria (coprime leading monomials and the chain criterion),
/// multivariate division, reduced bases, and unit-ideal detection.

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "toric/budget.hpp"
#include "toric/poly.hpp"

namespace toric {

/// Pending S-pair: indices into the working basis, the lcm of the two leading
/// monomials, and its total degree as the normal-strategy selection key.
struct CriticalPair {
    int i;
    int j;
    Monomial lcm;
    std::uint64_t degree;
};

class GroebnerBasis {
  public:
    GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> elements, bool reduced)
        : ctx_(std::move(ctx)), elements_(std::move(elements)), reduced_(reduced) {}

    const ContextPtr& context() const { return ctx_; }
    const MonomialOrder& order() const { return ctx_->order(); }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool reduced() const { return reduced_; }

  private:
    ContextPtr ctx_;
    std::vector<Polynomial> elements_;
    bool reduced_;
};

/// The order-maximal term of a non-zero polynomial.
inline const Term& leading_term(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    return f.terms().front();
}

inline const Monomial& leading_monomial(const Polynomial& f) { return leading_term(f).mono; }

/// f scaled monic (leading coefficient 1).
inline Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    const FieldElement& lc = leading_term(f).coeff;
    return lc.is_one() ? f : f.times(inverse(lc));
}

namespace detail {

/// Division remainder; nullopt iff the budget expired mid-division.
inline std::optional<Polynomial> reduce_with_budget(const Polynomial& f,
                                                    const std::vector<Polynomial>& divisors,
                                                    const Budget& budget) {
    for (const Polynomial& g : divisors) check_shared_context(f.context(), g.context());
    Polynomial work = f;
    std::vector<Term> remainder;
    std::size_t head = 0;
    int steps = 0;
    while (head < work.terms().size()) {
        if (++steps % 128 == 0 && budget.expired()) return std::nullopt;
        const Term& lt = work.terms()[head];
        const Polynomial* divisor = nullptr;
        for (const Polynomial& g : divisors) {
            if (!g.is_zero() && leading_monomial(g).divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(lt);
            ++head;
            continue;
        }
        const Term& dlt = leading_term(*divisor);
        FieldElement c = lt.coeff / dlt.coeff;
        Monomial m = lt.mono.divided_by(dlt.mono);
        std::vector<Term> rest(work.terms().begin() + head, work.terms().end());
        work = Polynomial::from_ordered_terms(work.context(), std::move(rest))
                   .sub_scaled(c, m, *divisor);
        head = 0;
    }
    return Polynomial::from_terms(f.context(), std::move(remainder));
}

}  // namespace detail

/// Remainder of multivariate division of f by the list G, in list order:
/// no term of the result is divisible by any leading monomial of G, and
/// f - result lies in the ideal generated by G.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    return *detail::reduce_with_budget(f, divisors, Budget::unlimited());
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis.elements());
}

/// The lcm-cofactor combination of f and g that cancels both leading terms.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s-polynomial of the zero polynomial");
    check_shared_context(f.context(), g.context());
    const Term& lf = leading_term(f);
    const Term& lg = leading_term(g);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_term(inverse(lf.coeff), l.divided_by(lf.mono));
    Polynomial b = g.times_term(inverse(lg.coeff), l.divided_by(lg.mono));
    return a - b;
}

namespace detail {

/// Buchberger working state. Pairs are selected by minimal lcm total degree
/// with pair-index tiebreak; the pair queue is updated with the
/// Gebauer-Moeller criteria whenever an element joins the basis.
class BuchbergerState {
  public:
    explicit BuchbergerState(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const std::vector<Polynomial>& basis() const { return basis_; }
    bool queue_empty() const { return queue_.empty(); }

    CriticalPair pop() {
        auto it = queue_.begin();
        auto [deg, i, j] = *it;
        queue_.erase(it);
        return CriticalPair{i, j, Monomial::lcm(lm(i), lm(j)), deg};
    }

    /// Gebauer-Moeller update: prune now-redundant old pairs, then add the
    /// surviving new pairs against the incoming element.
    void add(Polynomial f) {
        int t = static_cast<int>(basis_.size());
        const Monomial& lmt = leading_monomial(f);

        for (auto it = queue_.begin(); it != queue_.end();) {
            auto [deg, i, j] = *it;
            Monomial lij = Monomial::lcm(lm(i), lm(j));
            if (lmt.divides(lij) && !(Monomial::lcm(lm(i), lmt) == lij) &&
                !(Monomial::lcm(lm(j), lmt) == lij))
                it = queue_.erase(it);
            else
                ++it;
        }

        // group candidate pairs by lcm, ascending in the active order so
        // potential divisors are seen before their multiples
        auto less = [this](const Monomial& a, const Monomial& b) {
            return ctx_->order().less(a, b);
        };
        std::map<Monomial, std::vector<int>, decltype(less)> groups(less);
        for (int i = 0; i < t; ++i) groups[Monomial::lcm(lm(i), lmt)].push_back(i);

        std::vector<Monomial> kept;
        for (const auto& [l, members] : groups) {
            bool redundant = false;
            for (const Monomial& k : kept)
                if (k.divides(l)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            kept.push_back(l);
            bool any_coprime = false;
            for (int i : members)
                if (Monomial::coprime(lm(i), lmt)) {
                    any_coprime = true;
                    break;
                }
            if (!any_coprime)
                queue_.emplace(l.total_degree(), members.front(), t);
        }

        basis_.push_back(std::move(f));
    }

  private:
    const Monomial& lm(int i) const { return leading_monomial(basis_[i]); }

    ContextPtr ctx_;
    std::vector<Polynomial> basis_;
    std::set<std::tuple<std::uint64_t, int, int>> queue_;
};

}  // namespace detail

/// Buchberger's algorithm. Returns a (not necessarily reduced) Groebner basis
/// of the ideal generated by F, with monic elements; nullopt iff the budget
/// expired, in which case partial work is discarded. Zero inputs are dropped;
/// an empty F yields the empty basis of the zero ideal.
inline std::optional<GroebnerBasis> buchberger(const ContextPtr& ctx,
                                               const std::vector<Polynomial>& input,
                                               const Budget& budget = Budget::unlimited()) {
    auto unit_basis = [&] {
        return GroebnerBasis(ctx, {Polynomial::from_int(ctx, 1)}, true);
    };

    detail::BuchbergerState state(ctx);
    for (const Polynomial& f : input) {
        check_shared_context(ctx, f.context());
        if (f.is_zero()) continue;
        if (f.is_constant()) return unit_basis();
        state.add(monic(f));
    }

    while (!state.queue_empty()) {
        if (budget.expired()) return std::nullopt;
        CriticalPair p = state.pop();
        Polynomial s = s_polynomial(state.basis()[p.i], state.basis()[p.j]);
        std::optional<Polynomial> r = detail::reduce_with_budget(s, state.basis(), budget);
        if (!r) return std::nullopt;
        if (r->is_zero()) continue;
        if (r->is_constant()) return unit_basis();
        state.add(monic(*r));
    }
    return GroebnerBasis(ctx, state.basis(), false);
}

/// Convenience overload deriving the context from the first polynomial.
inline std::optional<GroebnerBasis> buchberger(const std::vector<Polynomial>& input,
                                               const Budget& budget = Budget::unlimited()) {
    if (input.empty()) throw std::invalid_argument("buchberger on an empty list needs a context");
    return buchberger(input.front().context(), input, budget);
}

/// The unique reduced Groebner basis of the same ideal: monic elements with
/// pairwise indivisible leading monomials and fully reduced tails, sorted by
/// descending leading monomial.
inline GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
    const MonomialOrder& ord = basis.order();
    std::vector<Polynomial> sorted = basis.elements();
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a), leading_monomial(b));
    });

    std::vector<Polynomial> minimal;
    for (const Polynomial& g : sorted) {
        bool covered = false;
        for (const Polynomial& h : minimal)
            if (leading_monomial(h).divides(leading_monomial(g))) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(g);
    }

    // tail-reduce each element against all the others; leading monomials are
    // pairwise indivisible, so they survive and one pass suffices
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = monic(normal_form(minimal[i], others));
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(leading_monomial(a), leading_monomial(b));
    });
    return GroebnerBasis(basis.context(), std::move(minimal), true);
}

/// True iff some basis element is a non-zero constant, i.e. the ideal is the
/// whole ring. For a completed Groebner basis this is exact.
inline bool contains_unit(const GroebnerBasis& basis) {
    for (const Polynomial& g : basis.elements())
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

}  // namespace toric

#endif  // TORIC_GROEBNER_HPP
