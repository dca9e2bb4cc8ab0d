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

#include "degcalc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace degcalc::ring {

Ring RingSpec::make(std::vector<GeneratorSpec> generators,
                    std::optional<int> top_weight,
                    std::optional<std::string> h_generator) {
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.name.empty() || g.weight < 1) {
            throw std::invalid_argument("generator needs a name and weight >= 1");
        }
        if (!seen.insert(g.name).second) {
            throw std::invalid_argument("duplicate generator name: " + g.name);
        }
    }
    if (top_weight && *top_weight < 0) {
        throw std::invalid_argument("top weight must be nonnegative");
    }
    spec->gens_ = std::move(generators);
    spec->top_weight_ = top_weight;
    if (h_generator) {
        spec->h_index_ = spec->index_of(*h_generator);
        if (spec->h_index_ < 0 || spec->gens_[spec->h_index_].weight != 1) {
            throw std::invalid_argument("h rule needs an existing weight-1 generator");
        }
        spec->alpha_index_ = spec->index_of("a");
        spec->beta_index_ = spec->index_of("b");
        if (spec->alpha_index_ < 0 || spec->gens_[spec->alpha_index_].weight != 1 ||
            spec->beta_index_ < 0 || spec->gens_[spec->beta_index_].weight != 2) {
            throw std::invalid_argument(
                "h rule needs generators a (weight 1) and b (weight 2)");
        }
    }
    return spec;
}

int RingSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

int RingSpec::monomial_weight(const std::vector<int>& exps) const {
    int w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        w += exps[i] * gens_[i].weight;
    }
    return w;
}

bool RingSpec::same_as(const RingSpec& other) const {
    if (this == &other) return true;
    if (gens_.size() != other.gens_.size() || top_weight_ != other.top_weight_ ||
        h_index_ != other.h_index_) {
        return false;
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name != other.gens_[i].name ||
            gens_[i].weight != other.gens_[i].weight) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

Poly Poly::zero(Ring ring) { return Poly(std::move(ring)); }

Poly Poly::constant(Ring ring, const Rational& value) {
    Poly p(std::move(ring));
    if (value != 0) {
        p.add_term(std::vector<int>(p.ring_->generators().size(), 0), value);
    }
    return p;
}

Poly Poly::generator(Ring ring, std::string_view name) {
    int idx = ring->index_of(name);
    if (idx < 0) {
        throw std::invalid_argument("unknown generator: " + std::string(name));
    }
    Poly p(std::move(ring));
    std::vector<int> exps(p.ring_->generators().size(), 0);
    exps[static_cast<std::size_t>(idx)] = 1;
    p.add_term(exps, Rational(1));
    return p;
}

Poly Poly::monomial(Ring ring, const std::map<std::string, int>& exps,
                    const Rational& coef) {
    Poly p(std::move(ring));
    std::vector<int> e(p.ring_->generators().size(), 0);
    for (const auto& [name, k] : exps) {
        int idx = p.ring_->index_of(name);
        if (idx < 0) {
            throw std::invalid_argument("unknown generator: " + name);
        }
        if (k < 0) {
            throw std::invalid_argument("negative exponent");
        }
        e[static_cast<std::size_t>(idx)] = k;
    }
    if (coef != 0) p.add_term(e, coef);
    return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rational& coef) {
    int w = ring_->monomial_weight(exps);
    if (ring_->top_weight() && w > *ring_->top_weight()) return;
    Key key{w, exps};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int w = terms_.begin()->first.weight;
    return terms_.rbegin()->first.weight == w;
}

int Poly::weight() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) {
        throw std::logic_error("weight() on an inhomogeneous polynomial");
    }
    return terms_.begin()->first.weight;
}

Rational Poly::coefficient(const std::map<std::string, int>& mono) const {
    if (!ring_) return Rational(0);
    std::vector<int> e(ring_->generators().size(), 0);
    for (const auto& [name, k] : mono) {
        int idx = ring_->index_of(name);
        if (idx < 0) {
            throw std::invalid_argument("unknown generator: " + name);
        }
        e[static_cast<std::size_t>(idx)] = k;
    }
    Key key{ring_->monomial_weight(e), e};
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::uses_generator(std::string_view name) const {
    if (!ring_) return false;
    int idx = ring_->index_of(name);
    if (idx < 0) return false;
    for (const auto& [key, coef] : terms_) {
        (void)coef;
        if (key.exps[static_cast<std::size_t>(idx)] != 0) return true;
    }
    return false;
}

void Poly::require_same_ring(const Poly& p, const Poly& q) {
    if (!p.ring_ || !q.ring_ || !p.ring_->same_as(*q.ring_)) {
        throw std::invalid_argument("mismatched ambient rings");
    }
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly operator+(const Poly& p, const Poly& q) {
    Poly::require_same_ring(p, q);
    Poly out = p;
    for (const auto& [key, coef] : q.terms_) {
        auto it = out.terms_.find(key);
        if (it == out.terms_.end()) {
            out.terms_.emplace(key, coef);
        } else {
            it->second += coef;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    out.h_normalize();
    return out;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    Poly::require_same_ring(p, q);
    Poly out(p.ring_);
    auto top = p.ring_->top_weight();
    for (const auto& [kp, cp] : p.terms_) {
        for (const auto& [kq, cq] : q.terms_) {
            if (top && kp.weight + kq.weight > *top) continue;
            std::vector<int> e(kp.exps);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += kq.exps[i];
            out.add_term(e, cp * cq);
        }
    }
    out.h_normalize();
    return out;
}

bool Poly::operator==(const Poly& other) const {
    if (!ring_ || !other.ring_) return terms_.empty() && other.terms_.empty();
    return ring_->same_as(*other.ring_) && terms_ == other.terms_;
}

Poly Poly::scaled(const Rational& r) const {
    Poly out(ring_);
    if (r == 0) return out;
    for (const auto& [key, coef] : terms_) {
        out.terms_.emplace(key, coef * r);
    }
    return out;
}

Poly Poly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    if (!ring_) throw std::logic_error("pow on a ringless polynomial");
    Poly acc = Poly::constant(ring_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

namespace {

// u_k, v_k with H^k = u_k*H + v_k under H^2 = a*H + w, w = (b - a^2)/4.
// u_1 = 1, u_2 = a; u_{k+1} = a*u_k + w*u_{k-1}; v_{k+1} = w*u_k.
struct HReductionTable {
    std::vector<Poly> u, v;

    HReductionTable(const Ring& ring, int max_power) {
        const auto& gens = ring->generators();
        Poly one = Poly::constant(ring, Rational(1));
        Poly zero = Poly::zero(ring);
        Poly a = Poly::generator(ring, gens[static_cast<std::size_t>(
                                           ring->alpha_index())].name);
        Poly b = Poly::generator(ring, gens[static_cast<std::size_t>(
                                           ring->beta_index())].name);
        Poly w = (b - a * a).scaled(Rational(1, 4));
        u = {zero, one};
        v = {one, zero};
        for (int k = 1; k < max_power; ++k) {
            u.push_back(a * u.back() + w * u[static_cast<std::size_t>(k - 1)]);
            v.push_back(w * u[static_cast<std::size_t>(k)]);
        }
    }
};

}  // namespace

void Poly::h_normalize() {
    if (!ring_ || !ring_->has_h_rule()) return;
    std::size_t h = static_cast<std::size_t>(ring_->h_index());
    int max_power = 0;
    for (const auto& [key, coef] : terms_) {
        (void)coef;
        max_power = std::max(max_power, key.exps[h]);
    }
    if (max_power < 2) return;

    HReductionTable table(ring_, max_power);
    Poly reduced(ring_);
    for (const auto& [key, coef] : terms_) {
        int k = key.exps[h];
        if (k < 2) {
            reduced.add_term(key.exps, coef);
            continue;
        }
        std::vector<int> rest = key.exps;
        rest[h] = 0;
        Poly factor(ring_);
        factor.add_term(rest, coef);
        // u_k * H * factor: the u/v polynomials are H-free, so the product
        // needs no further rewriting.
        std::vector<int> honly(ring_->generators().size(), 0);
        honly[h] = 1;
        Poly hpoly(ring_);
        hpoly.add_term(honly, Rational(1));
        Poly contrib = table.u[static_cast<std::size_t>(k)] * hpoly * factor +
                       table.v[static_cast<std::size_t>(k)] * factor;
        for (const auto& [ck, cc] : contrib.terms_) {
            reduced.add_term(ck.exps, cc);
        }
    }
    terms_ = std::move(reduced.terms_);
}

std::pair<Poly, Poly> Poly::reduce_h() const {
    if (!ring_ || !ring_->has_h_rule()) {
        throw std::logic_error("reduce_h requires the ambient h rule");
    }
    Poly normalized = *this;
    normalized.h_normalize();
    std::size_t h = static_cast<std::size_t>(ring_->h_index());
    Poly u(ring_), v(ring_);
    for (const auto& [key, coef] : normalized.terms_) {
        std::vector<int> e = key.exps;
        if (e[h] == 1) {
            e[h] = 0;
            u.add_term(e, coef);
        } else {
            v.add_term(e, coef);
        }
    }
    return {u, v};
}

Poly Poly::substituted(std::string_view name, const Poly& value) const {
    if (!ring_) return *this;
    int idx = ring_->index_of(name);
    if (idx < 0) {
        throw std::invalid_argument("unknown generator: " + std::string(name));
    }
    require_same_ring(*this, value);
    if (!value.is_zero() && (!value.is_homogeneous() ||
                             value.weight() != ring_->generators()
                                                   [static_cast<std::size_t>(idx)]
                                                       .weight)) {
        throw std::invalid_argument("substitution must preserve the grading");
    }
    Poly out(ring_);
    for (const auto& [key, coef] : terms_) {
        std::vector<int> rest = key.exps;
        int k = rest[static_cast<std::size_t>(idx)];
        rest[static_cast<std::size_t>(idx)] = 0;
        Poly term(ring_);
        term.add_term(rest, coef);
        out = out + term * value.pow(k);
    }
    return out;
}

Poly Poly::cast_to(Ring target) const {
    if (!ring_) throw std::logic_error("cast_to on a ringless polynomial");
    Poly out(target);
    std::vector<int> index_map(ring_->generators().size(), -1);
    for (std::size_t i = 0; i < ring_->generators().size(); ++i) {
        const auto& g = ring_->generators()[i];
        int j = target->index_of(g.name);
        if (j >= 0 && target->generators()[static_cast<std::size_t>(j)].weight !=
                          g.weight) {
            throw std::invalid_argument("generator weight mismatch: " + g.name);
        }
        index_map[i] = j;
    }
    for (const auto& [key, coef] : terms_) {
        std::vector<int> e(target->generators().size(), 0);
        for (std::size_t i = 0; i < key.exps.size(); ++i) {
            if (key.exps[i] == 0) continue;
            if (index_map[i] < 0) {
                throw std::invalid_argument(
                    "generator missing in target ring: " + ring_->generators()[i].name);
            }
            e[static_cast<std::size_t>(index_map[i])] = key.exps[i];
        }
        out.add_term(e, coef);
    }
    out.h_normalize();
    return out;
}

void Poly::for_each_term(
    const std::function<void(const std::vector<int>&, const Rational&)>& fn) const {
    for (const auto& [key, coef] : terms_) {
        fn(key.exps, coef);
    }
}

// ---------------------------------------------------------------------------
// Text form. Grammar:
//   poly   := ['-'|'+'] term { ('+'|'-') term } | "0"
//   term   := factor { '*' factor }
//   factor := rational | name [ '^' integer ]
// Names map to the usual classes: a=alpha, b=beta, c=gamma, h=H, t=theta.

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coef] : terms_) {
        Rational c = coef;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < key.exps.size(); ++i) {
            int e = key.exps[i];
            if (e == 0) continue;
            std::string f = ring_->generators()[i].name;
            if (e != 1) f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        }
        bool coef_printed = false;
        if (c != 1 || factors.empty()) {
            out << exact::to_string(c);
            coef_printed = true;
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (coef_printed || i > 0) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::string out;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        if (out.empty()) throw std::invalid_argument("expected digits in polynomial");
        return out;
    }
    std::string identifier() {
        skip_ws();
        std::string out;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_')) {
            out.push_back(text[pos++]);
        }
        if (out.empty()) throw std::invalid_argument("expected generator name");
        return out;
    }
};

}  // namespace

Poly Poly::parse(Ring ring, std::string_view text) {
    Lexer lex{text};
    Poly out = Poly::zero(ring);
    if (lex.done()) throw std::invalid_argument("empty polynomial text");

    bool negative = false;
    if (lex.consume('-')) {
        negative = true;
    } else {
        lex.consume('+');
    }

    while (true) {
        // one term
        Rational coef(1);
        std::map<std::string, int> exps;
        bool expect_factor = true;
        while (expect_factor) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lex.number();
                std::string den = "1";
                if (lex.consume('/')) den = lex.number();
                coef *= exact::make_rational(exact::Int(num, 10), exact::Int(den, 10));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lex.identifier();
                if (ring->index_of(name) < 0) {
                    throw std::invalid_argument("unknown generator: " + name);
                }
                long e = 1;
                if (lex.consume('^')) {
                    e = std::stol(lex.number());
                }
                exps[name] += static_cast<int>(e);
            } else {
                throw std::invalid_argument("unexpected character in polynomial");
            }
            expect_factor = lex.consume('*');
        }
        if (negative) coef = -coef;
        // Merge verbatim (no H-reduction), mirroring monomial().
        Poly term = Poly::monomial(ring, exps, coef);
        for (const auto& [key, c] : term.terms_) {
            out.add_term(key.exps, c);
        }

        if (lex.done()) break;
        if (lex.consume('+')) {
            negative = false;
        } else if (lex.consume('-')) {
            negative = true;
        } else {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
    }
    return out;
}

}  // namespace degcalc::ring
