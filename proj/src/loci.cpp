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

#include "degcalc/loci.hpp"

#include <stdexcept>
#include <string>

#include "degcalc/numtheory.hpp"

namespace degcalc::loci {

using ring::GeneratorSpec;
using ring::RingSpec;
using symfun::Partition;

namespace {

LocusSpec base(LocusSpec::Kind kind, int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    LocusSpec s;
    s.kind = kind;
    s.genus = genus;
    return s;
}

}  // namespace

LocusSpec LocusSpec::classic(int genus, long r, long d) {
    LocusSpec s = base(Kind::Classic, genus);
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    s.r = r;
    s.d = d;
    return s;
}

LocusSpec LocusSpec::general(int genus, long k, long rank_e, long rank_f) {
    LocusSpec s = base(Kind::General, genus);
    if (k < 0 || rank_e < k || rank_f < k) {
        throw std::invalid_argument("need 0 <= k <= min(rank_e, rank_f)");
    }
    s.k = k;
    s.rank_e = rank_e;
    s.rank_f = rank_f;
    return s;
}

LocusSpec LocusSpec::symmetric(int genus, long k) {
    LocusSpec s = base(Kind::Symmetric, genus);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    s.k = k;
    return s;
}

LocusSpec LocusSpec::lagrangian(int genus, long k) {
    LocusSpec s = symmetric(genus, k);
    s.kind = Kind::Lagrangian;
    return s;
}

LocusSpec LocusSpec::skew(int genus, long nu) {
    LocusSpec s = base(Kind::Skew, genus);
    if (nu < 0) throw std::invalid_argument("nu must be nonnegative");
    s.nu = nu;
    return s;
}

LocusSpec LocusSpec::section_count(int genus, long n) {
    LocusSpec s = base(Kind::SectionCount, genus);
    s.n = n;
    return s;
}

LocusSpec LocusSpec::hom_count(int genus, long nu, std::optional<long> deg_f) {
    LocusSpec s = base(Kind::HomCount, genus);
    if (nu < 0) throw std::invalid_argument("nu must be nonnegative");
    if (deg_f && (nu - *deg_f) % 2 != 0) {
        throw std::invalid_argument("nu must match deg F mod 2");
    }
    s.nu = nu;
    s.deg_f = deg_f;
    return s;
}

long brill_noether_rho(long g, long r, long d) {
    return g - (r + 1) * (r - d + g);
}

long expected_codim(const LocusSpec& s) {
    switch (s.kind) {
        case LocusSpec::Kind::Classic:
            return (s.r + 1) * (s.r - s.d + s.genus);
        case LocusSpec::Kind::General:
            return (s.rank_e - s.k) * (s.rank_f - s.k);
        case LocusSpec::Kind::Symmetric:
        case LocusSpec::Kind::Lagrangian:
            return s.k * (s.k + 1) / 2;
        case LocusSpec::Kind::Skew:
            return s.nu * (s.nu - 1) / 2;
        case LocusSpec::Kind::SectionCount:
            return (s.n + 2) * (s.n + 3) / 2;
        case LocusSpec::Kind::HomCount:
            return s.nu * (s.nu - 1) / 2;
    }
    throw std::logic_error("unreachable");
}

long expected_dim(const LocusSpec& s) {
    return 3L * s.genus - 3 - expected_codim(s);
}

Rational lambda_coeff(long r, long d, long g) {
    Rational out(1);
    for (long i = 0; i <= r; ++i) {
        long arg = g - d + r + i;
        if (arg < 0) {
            throw std::domain_error("class formula out of range");
        }
        out *= Rational(exact::factorial(i)) / Rational(exact::factorial(arg));
    }
    return out;
}

Ring theta_ring(int g) {
    return RingSpec::make({{"t", 1}}, g);
}

Poly classic_locus_class(long r, long d, int g) {
    Rational lambda = lambda_coeff(r, d, g);  // also enforces rho <= g
    long rho = brill_noether_rho(g, r, d);

    Ring ring = theta_ring(g);
    Poly theta = Poly::generator(ring, "t");
    Poly expected = theta.pow(g - rho).scaled(lambda);

    // c_i = theta^i / i!; the (r+1)-fold rectangle with part g-d+r.
    long part = g - d + r;
    long entries = part + r;  // largest index the determinant can ask for
    ChernSeries series{ring, {}};
    for (long i = 1; i <= entries; ++i) {
        series.c.push_back(
            theta.pow(i).scaled(Rational(1) / Rational(exact::factorial(i))));
    }
    Poly det = symfun::schur(Partition::rectangle(part, r + 1), series);
    if (det != expected) {
        throw std::logic_error("determinant disagrees with the product formula");
    }
    return expected;
}

Poly porteous_class(long k, const ChernSeries& cf, long r, long s) {
    if (k < 0 || k > r || k > s) {
        throw std::invalid_argument("need 0 <= k <= min(r, s)");
    }
    return symfun::schur(Partition::rectangle(s - k, r - k), cf);
}

Poly harris_tu_symmetric(long k, const ChernSeries& c_dual) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Poly cls = symfun::schur(Partition::staircase(k), c_dual);
    return cls.scaled(Rational(exact::pow_int(exact::Int(2), static_cast<unsigned long>(k))));
}

Poly harris_tu_skew(long nu, const ChernSeries& c_dual) {
    if (nu < 0) throw std::invalid_argument("nu must be nonnegative");
    return symfun::schur(Partition::staircase(nu - 1), c_dual);
}

namespace {

/// (h?, a, b, c) plus even placeholders e2, e4, ..., e_{2 top_n - 2}.
Ring pipeline_ring(bool with_h, long top_n) {
    std::vector<GeneratorSpec> gens;
    if (with_h) gens.push_back({"h", 1});
    gens.push_back({"a", 1});
    gens.push_back({"b", 2});
    gens.push_back({"c", 3});
    for (long k = 2; k <= 2 * top_n - 2; k += 2) {
        gens.push_back({"e" + std::to_string(k), static_cast<int>(k)});
    }
    return RingSpec::make(std::move(gens));
}

ChSeries pushforward_ch(bool hecke, long top_n) {
    if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
    Ring ring = pipeline_ring(hecke, top_n);
    Poly a = Poly::generator(ring, "a");
    Poly b = Poly::generator(ring, "b");
    Poly c = Poly::generator(ring, "c");
    Poly lead = hecke ? Poly::generator(ring, "h")
                      : a.scaled(Rational(1, 2));  // h plays the role of a/2

    ChSeries out{ring, {}, {}};
    out.comp.emplace(1, -lead);
    for (long n = 2; n <= top_n; ++n) {
        Poly core =
            b * lead.scaled(Rational(-1, 4)) + c.scaled(exact::make_rational(n - 1, 2));
        Poly value = b.scaled(Rational(1, 4)).pow(n - 2) * core;
        out.comp.emplace(
            2 * n - 1,
            value.scaled(Rational(1) / Rational(exact::factorial(2 * n - 1))));
    }
    for (long k = 2; k <= 2 * top_n - 2; k += 2) {
        out.comp.emplace(k, Poly::generator(ring, "e" + std::to_string(k)));
        out.placeholder_degrees.insert(k);
    }
    return out;
}

}  // namespace

ChSeries pushforward_ch_odd(long top_n) { return pushforward_ch(false, top_n); }

ChSeries pushforward_ch_hecke(long top_n) { return pushforward_ch(true, top_n); }

Ring hecke_class_ring() {
    return RingSpec::make({{"h", 1}, {"a", 1}, {"b", 2}, {"c", 3}});
}

Ring odd_class_ring() {
    return RingSpec::make({{"a", 1}, {"b", 2}, {"c", 3}});
}

Poly skew_locus_class(long nu, SkewContext context) {
    if (nu != 3 && nu != 4) {
        throw std::invalid_argument("skew locus class implemented for nu in {3, 4}");
    }
    bool hecke = context == SkewContext::HeckeGraph;
    long top_n = nu - 1;  // odd characters through degree 2 nu - 3
    ChSeries ch = pushforward_ch(hecke, top_n);
    ChSeries dual = symfun::dualize_ch(ch);
    ChernSeries chern = symfun::ch_to_chern(dual, 2 * nu - 3);
    Poly cls = harris_tu_skew(nu, chern);
    for (long k : ch.placeholder_degrees) {
        if (cls.uses_generator("e" + std::to_string(k))) {
            throw std::logic_error(
                "even Chern characters failed to cancel in the skew class");
        }
    }
    return cls.cast_to(hecke ? hecke_class_ring() : odd_class_ring());
}

Poly skew4_class_variant(Skew4Variant variant) {
    Ring ring = hecke_class_ring();
    switch (variant) {
        case Skew4Variant::Printed:
            return Poly::parse(ring,
                               "1/45*h^6 - 1/36*h^4*b + 1/18*h^3*c + 1/180*h^2*b^2 "
                               "- 1/45*h*b*c - 1/36*c^2");
        case Skew4Variant::LiteralForm:
            return Poly::parse(ring,
                               "1/45*h^6 - 1/72*h^4*b + 1/36*h^3*c + 1/180*h^2*b^2 "
                               "- 1/45*h*b*c - 1/36*c^2");
    }
    throw std::logic_error("unreachable");
}

Poly section_locus_class(long n) {
    Ring ring = hecke_class_ring();
    switch (n) {
        case 0:
            return Poly::parse(ring, "1/6*h^3 - 1/6*h*b + 1/3*c");
        case 1:
            return Poly::parse(ring,
                               "1/360*h^6 - 1/72*h^4*b + 1/36*h^3*c + 1/90*h^2*b^2 "
                               "- 2/45*h*b*c - 1/18*c^2");
        case 2:
            return Poly::parse(
                ring,
                "1/302400*h^10 - 1/20160*h^8*b + 1/10080*h^7*c - 17/60480*h^4*b^3 "
                "+ 17/10080*h^3*b^2*c + 1/720*h^2*b*c^2 + 1/8400*h^2*b^4 "
                "+ 1/216*h*c^3 - 1/1050*h*b^3*c - 3/2800*b^2*c^2 + 1/4800*h^6*b^2 "
                "- 1/1200*h^5*b*c");
        default:
            throw std::invalid_argument("section locus class known for n in {0, 1, 2}");
    }
}

long canonical_exponent(CanonicalFamily, long idx) {
    if (idx % 2 == 0) {
        throw std::domain_error("parity hypothesis violated: index must be odd");
    }
    return (idx - 5) / 2;
}

bool hom_parity_ok(long hom_dim, long deg_f) {
    return ((hom_dim - deg_f) % 2) == 0;
}

}  // namespace degcalc::loci
