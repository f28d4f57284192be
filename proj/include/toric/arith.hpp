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

#ifndef TORIC_ARITH_HPP
#define TORIC_ARITH_HPP

/// Exact coefficient arithmetic: rationals for characteristic 0, residues
/// mod p for prime characteristic. Everything here is immutable value types;
/// no floating point is involved anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Selects the coefficient field: the rationals (characteristic 0) or the
/// prime field F_p. Primes are checked by trial division at construction
/// and must fit in 32 bits so residue products fit in a machine word.
class FieldSpec {
  public:
    FieldSpec() = default;

    explicit FieldSpec(std::uint64_t characteristic) : char_(characteristic) {
        if (char_ == 0) return;
        if (char_ >= (std::uint64_t{1} << 32))
            throw std::invalid_argument("characteristic too large (must be < 2^32): " +
                                        std::to_string(char_));
        if (!is_prime(char_))
            throw std::invalid_argument("characteristic must be 0 or prime, got " +
                                        std::to_string(char_));
    }

    std::uint64_t characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    std::uint64_t char_ = 0;
};

/// num/den as a fully reduced fraction: denominator positive, gcd 1, zero is 0/1.
inline Rational rat_normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit; p < 2^32 so no overflow
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("residue not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace detail

/// An exact scalar of a fixed field: a Rational when the characteristic is 0,
/// otherwise a residue in [0, p). Elements of different fields never mix.
class FieldElement {
  public:
    FieldElement() : spec_(), value_(Rational(0)) {}

    static FieldElement zero(const FieldSpec& fs) { return from_int(0, fs); }
    static FieldElement one(const FieldSpec& fs) { return from_int(1, fs); }

    static FieldElement from_int(long v, const FieldSpec& fs) {
        return from_integer(Integer(v), fs);
    }

    static FieldElement from_integer(const Integer& z, const FieldSpec& fs) {
        if (fs.is_rational()) return FieldElement(fs, Rational(z));
        std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), fs.characteristic());
        return FieldElement(fs, r);
    }

    static FieldElement from_rational(const Rational& q, const FieldSpec& fs) {
        if (fs.is_rational()) {
            Rational c = q;
            c.canonicalize();
            return FieldElement(fs, c);
        }
        std::uint64_t p = fs.characteristic();
        std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (den == 0) throw std::domain_error("denominator vanishes mod p");
        std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        return FieldElement(fs, num * detail::mod_inverse(den, p) % p);
    }

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const {
        return spec_.is_rational() ? rational() == 0 : residue() == 0;
    }
    bool is_one() const {
        return spec_.is_rational() ? rational() == 1 : residue() == 1;
    }

    /// Char 0: true iff the denominator is 1. Char p: always true.
    bool is_integral() const {
        return !spec_.is_rational() || rational().get_den() == 1;
    }

    const Rational& rational() const { return std::get<Rational>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        if (a.spec_.is_rational()) return FieldElement(a.spec_, Rational(a.rational() + b.rational()));
        return FieldElement(a.spec_, (a.residue() + b.residue()) % a.p());
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        if (a.spec_.is_rational()) return FieldElement(a.spec_, Rational(a.rational() - b.rational()));
        return FieldElement(a.spec_, (a.residue() + a.p() - b.residue()) % a.p());
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        if (a.spec_.is_rational()) return FieldElement(a.spec_, Rational(a.rational() * b.rational()));
        return FieldElement(a.spec_, a.residue() * b.residue() % a.p());
    }

    FieldElement operator-() const {
        if (spec_.is_rational()) return FieldElement(spec_, Rational(-rational()));
        return FieldElement(spec_, residue() == 0 ? 0 : p() - residue());
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

    std::string str() const {
        if (!spec_.is_rational()) return std::to_string(residue());
        const Rational& q = rational();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

  private:
    FieldElement(const FieldSpec& fs, Rational q) : spec_(fs), value_(std::move(q)) {}
    FieldElement(const FieldSpec& fs, std::uint64_t r) : spec_(fs), value_(r) {}

    std::uint64_t p() const { return spec_.characteristic(); }

    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!(a.spec_ == b.spec_))
            throw std::invalid_argument("field elements of different fields");
    }

    FieldSpec spec_;
    std::variant<Rational, std::uint64_t> value_;

    friend FieldElement inverse(const FieldElement&);
};

/// Multiplicative inverse; the zero element has none.
inline FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (a.spec().is_rational())
        return FieldElement(a.spec(), Rational(1 / a.rational()));
    return FieldElement(a.spec(), detail::mod_inverse(a.residue(), a.spec().characteristic()));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * inverse(b);
}

inline FieldElement pow(FieldElement base, std::uint64_t e) {
    FieldElement acc = FieldElement::one(base.spec());
    while (e != 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace toric

#endif  // TORIC_ARITH_HPP
