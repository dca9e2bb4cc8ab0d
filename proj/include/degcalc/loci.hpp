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

#ifndef DEGCALC_LOCI_HPP
#define DEGCALC_LOCI_HPP

#include <optional>

#include "degcalc/symfun.hpp"

namespace degcalc::loci {

using exact::Rational;
using ring::Poly;
using ring::Ring;
using symfun::ChernSeries;
using symfun::ChSeries;

/// The degeneracy-locus families the library knows, with their genus.
/// Classic lives in the Jacobian; SectionCount (h^0(E) >= n+2) and
/// HomCount (hom(F, E) >= nu) live in the rank-2 moduli spaces.
struct LocusSpec {
    enum class Kind {
        Classic,       // W^r_d: h^0 >= r+1 on line bundles of degree d
        General,       // rank <= k map of bundles of ranks (rank_e, rank_f)
        Symmetric,     // corank >= k, f symmetric
        Lagrangian,    // dim intersection >= k, Lagrangian pair
        Skew,          // corank >= nu, f skewsymmetric
        SectionCount,  // h^0(E) >= n+2 in the canonical-determinant moduli
        HomCount,      // hom(F, E) >= nu, F fixed
    };

    Kind kind;
    int genus = 2;
    long r = 0, d = 0;              // Classic
    long k = 0;                     // General/Symmetric/Lagrangian rank bound
    long rank_e = 0, rank_f = 0;    // General
    long nu = 0;                    // Skew / HomCount
    long n = 0;                     // SectionCount
    std::optional<long> deg_f;      // HomCount parity check, when known

    static LocusSpec classic(int genus, long r, long d);
    static LocusSpec general(int genus, long k, long rank_e, long rank_f);
    static LocusSpec symmetric(int genus, long k);
    static LocusSpec lagrangian(int genus, long k);
    static LocusSpec skew(int genus, long nu);
    static LocusSpec section_count(int genus, long n);
    static LocusSpec hom_count(int genus, long nu,
                               std::optional<long> deg_f = std::nullopt);
};

/// rho = g - (r+1)(r-d+g); may be negative.
long brill_noether_rho(long g, long r, long d);

/// The codimension the corresponding class formula subtracts from dim X.
long expected_codim(const LocusSpec& spec);

/// 3g-3 minus the expected codimension, for the moduli-space families.
long expected_dim(const LocusSpec& spec);

/// prod_{i=0..r} i! / (g-d+r+i)!. Throws "class formula out of range" when a
/// factorial argument would be negative.
Rational lambda_coeff(long r, long d, long g);

/// Ring Q[t] (theta), truncated at weight g.
Ring theta_ring(int g);

/**
 * Fundamental class of W^r_d in the Jacobian, as lambda * theta^{g-rho} in
 * theta_ring(g). Also evaluates the rectangular Schur determinant with
 * c_i = theta^i/i! and throws std::logic_error if the two disagree — each
 * call re-proves the product formula mechanically.
 */
Poly classic_locus_class(long r, long d, int g);

/// Rectangular-partition Schur class Delta_{(s-k)^{r-k}}(cf); needs k <= min(r, s).
Poly porteous_class(long k, const ChernSeries& cf, long r, long s);

/// 2^k * Delta_{k, k-1, ..., 1}(c_dual) for the symmetric degeneracy locus.
Poly harris_tu_symmetric(long k, const ChernSeries& c_dual);

/// Delta_{nu-1, ..., 1}(c_dual) for the skew (Pfaffian) locus; 1 for nu <= 1.
Poly harris_tu_skew(long nu, const ChernSeries& c_dual);

/**
 * Chern characters of the half-twisted direct image on the odd moduli space,
 * in the ring (a, b, c) plus placeholder generators e2, e4, ... for the even
 * components (they are never needed, and the placeholders prove it):
 *   ch_1 = -a/2,
 *   ch_{2n-1} = (b/4)^{n-2} (-a b/8 + ((n-1)/2) c) / (2n-1)!  for n >= 2.
 */
ChSeries pushforward_ch_odd(long top_n);

/// Same data on the Hecke graph, ring (h, a, b, c, e2, ...): ch_1 = -h,
/// ch_{2n-1} = (b/4)^{n-2} (-b h/4 + ((n-1)/2) c) / (2n-1)!. Substituting
/// h := a/2 recovers pushforward_ch_odd componentwise.
ChSeries pushforward_ch_hecke(long top_n);

enum class SkewContext { OddModuli, HeckeGraph };

/**
 * Fundamental class of the hom-count locus {hom(F, E) >= nu}, nu in {3, 4},
 * through the full pipeline: dualize the twisted direct-image characters,
 * convert with symbolic even components, take the staircase Schur
 * determinant, and check that every placeholder cancels (throws otherwise).
 * OddModuli returns a class in (a, b, c); HeckeGraph in (h, a, b, c).
 */
Poly skew_locus_class(long nu, SkewContext context);

/// The two retained weight-6 class variants for nu = 4 on the Hecke graph:
/// the one printed alongside the degree targets, and the one obtained from
/// the transcribed staircase-3 character identity (they differ by a factor
/// 2 in the h^4 b and h^3 c coefficients; degree targets adjudicate).
enum class Skew4Variant { Printed, LiteralForm };
Poly skew4_class_variant(Skew4Variant variant);

/// Printed classes of the section-count loci {h^0 >= n+2}, n in {0, 1, 2},
/// pulled back to the Hecke graph; consumed as data.
Poly section_locus_class(long n);

/// Ring (h, a, b, c) without the h rule, where the Hecke-graph classes live.
Ring hecke_class_ring();
/// Ring (a, b, c), where the odd-moduli classes live.
Ring odd_class_ring();

enum class CanonicalFamily { SectionCount, HomCount };

/// (idx - 5)/2 for odd idx; negative exactly when the locus is Fano.
/// Throws std::domain_error on even idx.
long canonical_exponent(CanonicalFamily family, long idx);

/// dim Hom(F, E) is congruent to deg F mod 2 for canonical-difference pairs.
bool hom_parity_ok(long hom_dim, long deg_f);

}  // namespace degcalc::loci

#endif
