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

#ifndef TORIC_SYSTEM_HPP
#define TORIC_SYSTEM_HPP

#include <utility>
#include <vector>

#include "toric/poly.hpp"

namespace toric {

/// An input system F: non-zero polynomials over a context whose variables are
/// exactly those occurring in F. m is the polynomial count, n the variable
/// count, both following the convention that only occurring variables count.
class PolySystem {
  public:
    /// Filters out zero polynomials and shrinks the context to the variables
    /// that actually occur, preserving their relative order and ranking.
    static PolySystem from_polynomials(const ContextPtr& base, std::vector<Polynomial> fs) {
        std::vector<Polynomial> kept;
        for (Polynomial& f : fs) {
            check_shared_context(base, f.context());
            if (!f.is_zero()) kept.push_back(std::move(f));
        }

        std::vector<bool> occurs(base->size(), false);
        for (const Polynomial& f : kept)
            for (const Term& t : f.terms())
                for (std::size_t j = 0; j < base->size(); ++j)
                    if (t.mono.exp(j) != 0) occurs[j] = true;

        std::vector<int> new_index(base->size(), -1);
        std::vector<std::string> names;
        for (std::size_t j = 0; j < base->size(); ++j) {
            if (occurs[j]) {
                new_index[j] = static_cast<int>(names.size());
                names.push_back(base->name(j));
            }
        }
        std::vector<int> ranking;
        for (int v : base->order().ranking())
            if (occurs[v]) ranking.push_back(new_index[v]);

        ContextPtr ctx = Context::make(base->field(), std::move(names),
                                       MonomialOrder(base->order().kind(), std::move(ranking)));
        PolySystem sys;
        sys.ctx_ = ctx;
        sys.polys_.reserve(kept.size());
        for (const Polynomial& f : kept) sys.polys_.push_back(lift(f, ctx, new_index));
        return sys;
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    int m() const { return static_cast<int>(polys_.size()); }
    int n() const { return static_cast<int>(ctx_->size()); }

    /// Same system re-sorted under another order kind (natural ranking).
    PolySystem with_order(OrderKind kind) const {
        ContextPtr ctx = Context::make(ctx_->field(), ctx_->names(), kind);
        PolySystem sys;
        sys.ctx_ = ctx;
        sys.polys_.reserve(polys_.size());
        for (const Polynomial& f : polys_)
            sys.polys_.push_back(Polynomial::from_terms(ctx, f.terms()));
        return sys;
    }

  private:
    PolySystem() = default;

    ContextPtr ctx_;
    std::vector<Polynomial> polys_;
};

}  // namespace toric

#endif  // TORIC_SYSTEM_HPP
