/*
 * Copyright 2026 The degcalc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DEGCALC_RING_HPP
#define DEGCALC_RING_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degcalc/rational.hpp"

namespace degcalc::ring {

using exact::Rational;

/// A ring generator: a named variable with a positive weight (complex degree).
/// Conventional short names: h -> H (weight 1), a -> alpha (1), b -> beta (2),
/// c -> gamma (3), t -> theta (1), c1..ck (i), ch1.. (i), phi (1).
struct GeneratorSpec {
    std::string name;
    int weight = 1;
};

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

/**
 * Immutable description of a weighted-graded commutative polynomial ring over
 * the exact rationals, with two optional normalizations:
 *
 *  - top_weight: monomials of weight > top_weight rewrite to 0;
 *  - h_rule: one designated weight-1 generator H satisfies
 *        H^2 -> a*H - (a^2 - b)/4,
 *    which requires generators named "a" (weight 1) and "b" (weight 2).
 */
class RingSpec {
public:
    static Ring make(std::vector<GeneratorSpec> generators,
                     std::optional<int> top_weight = std::nullopt,
                     std::optional<std::string> h_generator = std::nullopt);

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::optional<int> top_weight() const { return top_weight_; }
    bool has_h_rule() const { return h_index_ >= 0; }
    int h_index() const { return h_index_; }
    int alpha_index() const { return alpha_index_; }
    int beta_index() const { return beta_index_; }

    /// Index of a generator by name, or -1.
    int index_of(std::string_view name) const;

    int monomial_weight(const std::vector<int>& exps) const;

    bool same_as(const RingSpec& other) const;

private:
    RingSpec() = default;
    std::vector<GeneratorSpec> gens_;
    std::optional<int> top_weight_;
    int h_index_ = -1;
    int alpha_index_ = -1;
    int beta_index_ = -1;
};

/**
 * Sparse polynomial: a finite map from exponent vectors to nonzero rational
 * coefficients. Immutable value type; arithmetic returns new values in reduced
 * form (truncated, and H-reduced when the ambient ring has the h rule).
 * Direct construction (monomial / parse) keeps H powers verbatim so that
 * reduce_h has something to chew on; truncation is always applied.
 */
class Poly {
public:
    Poly() = default;  // zero in no ring; usable only via assignment

    static Poly zero(Ring ring);
    static Poly constant(Ring ring, const Rational& value);
    static Poly generator(Ring ring, std::string_view name);
    /// Verbatim monomial from {name -> exponent}; truncates, does not H-reduce.
    static Poly monomial(Ring ring, const std::map<std::string, int>& exps,
                         const Rational& coef);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Weight if homogeneous (zero counts as homogeneous of any weight).
    bool is_homogeneous() const;
    int weight() const;  // throws if not homogeneous; 0 for the zero poly

    Rational coefficient(const std::map<std::string, int>& mono) const;
    bool uses_generator(std::string_view name) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly scaled(const Rational& r) const;
    Poly pow(long k) const;

    /// Splits p as u*H + v with u, v free of H, applying the rewrite
    /// H^2 = a*H - (a^2 - b)/4 to higher powers via the recurrence
    /// u_{k+1} = a*u_k + w*u_{k-1}, v_{k+1} = w*u_k, w = (b - a^2)/4.
    /// Requires the ambient h rule.
    std::pair<Poly, Poly> reduce_h() const;

    /// Replaces one generator by a homogeneous polynomial of the same weight.
    Poly substituted(std::string_view name, const Poly& value) const;

    /// Re-keys the terms into another ring by generator name. Every generator
    /// used with nonzero exponent must exist there with the same weight.
    /// Normalizes in the target ring (truncation + H-reduction).
    Poly cast_to(Ring target) const;

    /// Canonical text form, graded-lex term order: "7/64*a^6 + 35/64*a^4*b".
    std::string str() const;
    static Poly parse(Ring ring, std::string_view text);

    void for_each_term(
        const std::function<void(const std::vector<int>&, const Rational&)>& fn) const;

private:
    struct Key {
        int weight = 0;
        std::vector<int> exps;
        bool operator<(const Key& other) const {
            if (weight != other.weight) return weight < other.weight;
            return std::lexicographical_compare(other.exps.begin(), other.exps.end(),
                                                exps.begin(), exps.end());
        }
        bool operator==(const Key& other) const {
            return weight == other.weight && exps == other.exps;
        }
    };

    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    void add_term(const std::vector<int>& exps, const Rational& coef);
    void h_normalize();
    static void require_same_ring(const Poly& p, const Poly& q);

    Ring ring_;
    std::map<Key, Rational> terms_;
};

}  // namespace degcalc::ring

#endif
