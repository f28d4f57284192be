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

#ifndef TORIC_POLY_HPP
#define TORIC_POLY_HPP

/// Sparse multivariate polynomials over an ambient context (a fixed variable
/// list, coefficient field, and monomial order). Terms are kept strictly
/// descending in the active order with no zero coefficients, so structural
/// equality is polynomial equality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Exponent vector over the ambient variables, with the total degree cached.
class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), total_(0) {}

    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          total_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    std::uint64_t total_degree() const { return total_; }
    bool is_one() const { return total_ == 0; }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.total_ += o.total_;
        return r;
    }

    /// true iff this divides m coordinate-wise
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial divided_by(const Monomial& d) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (d.exps_[i] > exps_[i]) throw std::invalid_argument("monomial division not exact");
            r.exps_[i] -= d.exps_[i];
        }
        r.total_ -= d.total_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.total_ = std::accumulate(r.exps_.begin(), r.exps_.end(), std::uint64_t{0});
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

  private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t total_;
};

enum class OrderKind { lex, grevlex };

inline std::string to_string(OrderKind k) {
    return k == OrderKind::lex ? "lex" : "grevlex";
}

/// Admissible monomial order: lex or grevlex over a ranking of the ambient
/// variables (ranking[0] is the highest-ranked variable).
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, std::vector<int> ranking)
        : kind_(kind), ranking_(std::move(ranking)) {
        std::vector<bool> seen(ranking_.size(), false);
        for (int v : ranking_) {
            if (v < 0 || static_cast<std::size_t>(v) >= ranking_.size() || seen[v])
                throw std::invalid_argument("variable ranking is not a permutation");
            seen[v] = true;
        }
    }

    /// Variables ranked by ambient position.
    static MonomialOrder natural(OrderKind kind, std::size_t nvars) {
        std::vector<int> r(nvars);
        std::iota(r.begin(), r.end(), 0);
        return MonomialOrder(kind, std::move(r));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<int>& ranking() const { return ranking_; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == OrderKind::lex) {
            for (int v : ranking_) {
                if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
            }
            return 0;
        }
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree() ? -1 : 1;
        // reverse-lex tiebreak: the lowest-ranked differing variable decides,
        // and the smaller exponent there wins
        for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
            if (a.exp(*it) != b.exp(*it)) return a.exp(*it) < b.exp(*it) ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  private:
    OrderKind kind_;
    std::vector<int> ranking_;
};

struct Variable {
    std::string name;
    int index;

    friend bool operator==(const Variable&, const Variable&) = default;
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// The shared ambient of a family of polynomials: variable names (unique),
/// the coefficient field, and the active monomial order. Immutable.
class Context {
  public:
    static ContextPtr make(FieldSpec field, std::vector<std::string> names,
                           OrderKind kind = OrderKind::grevlex) {
        MonomialOrder order = MonomialOrder::natural(kind, names.size());
        return make(field, std::move(names), std::move(order));
    }

    static ContextPtr make(FieldSpec field, std::vector<std::string> names,
                           MonomialOrder order) {
        if (order.ranking().size() != names.size())
            throw std::invalid_argument("order ranking size does not match variable count");
        auto ctx = std::shared_ptr<Context>(new Context(field, std::move(names), std::move(order)));
        for (std::size_t i = 0; i < ctx->names_.size(); ++i) {
            if (ctx->names_[i].empty())
                throw std::invalid_argument("empty variable name");
            if (!ctx->index_.emplace(ctx->names_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name: " + ctx->names_[i]);
        }
        return ctx;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    /// -1 when absent
    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    Variable variable(std::size_t i) const { return Variable{names_[i], static_cast<int>(i)}; }

    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    bool same_as(const Context& o) const {
        return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
    }

  private:
    Context(FieldSpec field, std::vector<std::string> names, MonomialOrder order)
        : field_(field), names_(std::move(names)), order_(std::move(order)) {}

    FieldSpec field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

inline void check_shared_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b))
        throw std::invalid_argument("polynomials from different ambient contexts");
}

struct Term {
    FieldElement coeff;
    Monomial mono;
};

class Polynomial {
  public:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("polynomial without a context");
    }

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, FieldElement c) {
        Polynomial f(std::move(ctx));
        if (!(c.spec() == f.ctx_->field()))
            throw std::invalid_argument("constant from a different field");
        if (!c.is_zero()) f.terms_.push_back(Term{std::move(c), Monomial::one(f.ctx_->size())});
        return f;
    }

    static Polynomial from_int(ContextPtr ctx, long v) {
        FieldSpec fs = ctx->field();
        return constant(std::move(ctx), FieldElement::from_int(v, fs));
    }

    static Polynomial variable(ContextPtr ctx, int index, std::uint32_t exp = 1) {
        if (index < 0 || static_cast<std::size_t>(index) >= ctx->size())
            throw std::invalid_argument("variable index out of range");
        Polynomial f(ctx);
        if (exp == 0) return from_int(std::move(ctx), 1);
        std::vector<std::uint32_t> e(ctx->size(), 0);
        e[index] = exp;
        f.terms_.push_back(Term{FieldElement::one(ctx->field()), Monomial(std::move(e))});
        return f;
    }

    /// Builds canonical form from arbitrary terms: sorts, merges duplicates,
    /// drops zeros.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms) {
        Polynomial f(std::move(ctx));
        const MonomialOrder& ord = f.ctx_->order();
        for (const Term& t : terms) {
            if (!(t.coeff.spec() == f.ctx_->field()))
                throw std::invalid_argument("term coefficient from a different field");
            if (t.mono.size() != f.ctx_->size())
                throw std::invalid_argument("term monomial width does not match context");
        }
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mono, b.mono);
        });
        for (Term& t : terms) {
            if (t.coeff.is_zero()) continue;
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                FieldElement s = f.terms_.back().coeff + t.coeff;
                if (s.is_zero())
                    f.terms_.pop_back();
                else
                    f.terms_.back().coeff = std::move(s);
            } else {
                f.terms_.push_back(std::move(t));
            }
        }
        return f;
    }

    /// Trusted fast path: terms must already be canonical (strictly
    /// descending, no zero coefficients). Used by the division loop.
    static Polynomial from_ordered_terms(ContextPtr ctx, std::vector<Term> terms) {
        Polynomial f(std::move(ctx));
        f.terms_ = std::move(terms);
        return f;
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_shared_context(a.ctx_, b.ctx_);
        return merge(a, b, false);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_shared_context(a.ctx_, b.ctx_);
        return merge(a, b, true);
    }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{-t.coeff, t.mono});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_shared_context(a.ctx_, b.ctx_);
        std::vector<Term> products;
        products.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_)
                products.push_back(Term{s.coeff * t.coeff, s.mono.times(t.mono)});
        return from_terms(a.ctx_, std::move(products));
    }

    /// Scales every coefficient; zero scalar gives the zero polynomial.
    Polynomial times(const FieldElement& c) const {
        if (c.is_zero()) return Polynomial(ctx_);
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono});
        return r;
    }

    /// Multiplies by the term c*m. Order is preserved, so no re-sort happens.
    Polynomial times_term(const FieldElement& c, const Monomial& m) const {
        if (c.is_zero()) return Polynomial(ctx_);
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono.times(m)});
        return r;
    }

    /// this - c*m*g in one merge pass.
    Polynomial sub_scaled(const FieldElement& c, const Monomial& m, const Polynomial& g) const {
        check_shared_context(ctx_, g.ctx_);
        if (c.is_zero()) return *this;
        const MonomialOrder& ord = ctx_->order();
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
                continue;
            }
            Monomial gm = g.terms_[j].mono.times(m);
            int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, gm);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back(Term{-(c * g.terms_[j].coeff), std::move(gm)});
                ++j;
            } else {
                FieldElement s = terms_[i].coeff - c * g.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        return r;
    }

    FieldElement evaluate(const std::vector<FieldElement>& point) const {
        if (point.size() != ctx_->size())
            throw std::invalid_argument("evaluation point has wrong length");
        for (const FieldElement& v : point)
            if (!(v.spec() == ctx_->field()))
                throw std::invalid_argument("evaluation point from a different field");
        FieldElement acc = FieldElement::zero(ctx_->field());
        for (const Term& t : terms_) {
            FieldElement v = t.coeff;
            for (std::size_t j = 0; j < point.size(); ++j)
                if (t.mono.exp(j) != 0) v = v * pow(point[j], t.mono.exp(j));
            acc = acc + v;
        }
        return acc;
    }

    /// Per-variable maximum exponent; all-zeros for constants and zero.
    std::vector<std::uint32_t> degree_vector() const {
        std::vector<std::uint32_t> d(ctx_->size(), 0);
        for (const Term& t : terms_)
            for (std::size_t j = 0; j < d.size(); ++j)
                d[j] = std::max(d[j], t.mono.exp(j));
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ctx_ != b.ctx_ && !(a.ctx_ && b.ctx_ && a.ctx_->same_as(*b.ctx_))) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].coeff == b.terms_[i].coeff && a.terms_[i].mono == b.terms_[i].mono))
                return false;
        return true;
    }

  private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        const MonomialOrder& ord = a.ctx_->order();
        Polynomial r(a.ctx_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp = i == a.terms_.size()   ? -1
                      : j == b.terms_.size() ? 1
                                             : ord.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                const Term& t = b.terms_[j++];
                r.terms_.push_back(Term{subtract ? -t.coeff : t.coeff, t.mono});
            } else {
                FieldElement s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                          : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), a.terms_[i].mono});
                ++i;
                ++j;
            }
        }
        return r;
    }

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

/// All variables occurring with positive exponent in some f, in ambient order.
inline std::vector<Variable> variables_of(const std::vector<Polynomial>& fs) {
    if (fs.empty()) return {};
    const ContextPtr& ctx = fs.front().context();
    std::vector<bool> seen(ctx->size(), false);
    for (const Polynomial& f : fs) {
        check_shared_context(ctx, f.context());
        for (const Term& t : f.terms())
            for (std::size_t j = 0; j < ctx->size(); ++j)
                if (t.mono.exp(j) != 0) seen[j] = true;
    }
    std::vector<Variable> vars;
    for (std::size_t j = 0; j < ctx->size(); ++j)
        if (seen[j]) vars.push_back(ctx->variable(j));
    return vars;
}

/// Re-sorts f under the given order (same variables and field).
inline Polynomial canonicalize(const Polynomial& f, MonomialOrder order) {
    ContextPtr ctx = Context::make(f.context()->field(), f.context()->names(), std::move(order));
    return Polynomial::from_terms(ctx, f.terms());
}

inline Polynomial canonicalize(const Polynomial& f, OrderKind kind) {
    return canonicalize(f, MonomialOrder::natural(kind, f.context()->size()));
}

/// Moves f into a wider (or renamed) context; var_map[j] is the target index
/// of source variable j.
inline Polynomial lift(const Polynomial& f, const ContextPtr& target,
                       const std::vector<int>& var_map) {
    if (var_map.size() != f.context()->size())
        throw std::invalid_argument("variable map has wrong length");
    if (!(f.context()->field() == target->field()))
        throw std::invalid_argument("lift across different fields");
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(target->size(), 0);
        for (std::size_t j = 0; j < var_map.size(); ++j) {
            if (t.mono.exp(j) == 0) continue;
            int v = var_map[j];
            if (v < 0 || static_cast<std::size_t>(v) >= target->size())
                throw std::invalid_argument("variable map entry out of range");
            e[v] += t.mono.exp(j);
        }
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

/// Exponent transport within one context: variable j's exponent moves onto
/// target_of[j] (exponents merge when targets coincide).
inline Polynomial rename_merge(const Polynomial& f, const std::vector<int>& target_of) {
    return lift(f, f.context(), target_of);
}

namespace detail {

inline void check_partners(const Polynomial& f, const std::vector<int>& partner,
                           const char* what) {
    std::size_t n = f.context()->size();
    if (partner.size() != n)
        throw std::invalid_argument(std::string(what) + ": partner map has wrong length");
    for (int v : partner)
        if (v >= static_cast<int>(n))
            throw std::invalid_argument(std::string(what) + ": partner index out of range");
    for (const Term& t : f.terms())
        for (std::size_t j = 0; j < n; ++j)
            if (t.mono.exp(j) != 0 && partner[j] < 0)
                throw std::invalid_argument(std::string(what) + ": no partner for variable " +
                                            f.context()->name(j));
}

}  // namespace detail

/// x_j -> g_j * x_j: each term picks up g_j^{e_j} for every occurring variable.
inline Polynomial subst_scale(const Polynomial& f, const std::vector<int>& g_of) {
    detail::check_partners(f, g_of, "subst_scale");
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(f.context()->size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            std::uint32_t ej = t.mono.exp(j);
            if (ej == 0) continue;
            e[j] += ej;
            e[g_of[j]] += ej;
        }
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(f.context(), std::move(terms));
}

/// x_j -> g_j * x_j * y_j.
inline Polynomial subst_scale_pair(const Polynomial& f, const std::vector<int>& g_of,
                                   const std::vector<int>& y_of) {
    detail::check_partners(f, g_of, "subst_scale_pair");
    detail::check_partners(f, y_of, "subst_scale_pair");
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(f.context()->size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            std::uint32_t ej = t.mono.exp(j);
            if (ej == 0) continue;
            e[j] += ej;
            e[g_of[j]] += ej;
            e[y_of[j]] += ej;
        }
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(f.context(), std::move(terms));
}

/// x^d * f(g_1 x_1^{-1}, ..., g_n x_n^{-1}) with d = degree_vector(f),
/// computed term-wise by exponent complement: c * prod x_j^{e_j} maps to
/// c * prod g_j^{e_j} x_j^{d_j - e_j}. Never materializes a rational function.
inline Polynomial subst_inverse_cleared(const Polynomial& f, const std::vector<int>& g_of) {
    detail::check_partners(f, g_of, "subst_inverse_cleared");
    std::vector<std::uint32_t> d = f.degree_vector();
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(f.context()->size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            std::uint32_t ej = t.mono.exp(j);
            if (d[j] != 0 && g_of[j] >= 0) {
                e[j] += d[j] - ej;
                if (ej != 0) e[g_of[j]] += ej;
            } else {
                e[j] += ej;
            }
        }
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(f.context(), std::move(terms));
}

/// Partial evaluation of one variable.
inline Polynomial specialize(const Polynomial& f, int var, const FieldElement& value) {
    if (var < 0 || static_cast<std::size_t>(var) >= f.context()->size())
        throw std::invalid_argument("specialize: variable index out of range");
    if (!(value.spec() == f.context()->field()))
        throw std::invalid_argument("specialize: value from a different field");
    std::vector<Term> terms;
    terms.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::uint32_t ej = t.mono.exp(var);
        FieldElement c = ej == 0 ? t.coeff : t.coeff * pow(value, ej);
        std::vector<std::uint32_t> e(f.context()->size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = t.mono.exp(j);
        e[var] = 0;
        terms.push_back(Term{std::move(c), Monomial(std::move(e))});
    }
    return Polynomial::from_terms(f.context(), std::move(terms));
}

}  // namespace toric

#endif  // TORIC_POLY_HPP
