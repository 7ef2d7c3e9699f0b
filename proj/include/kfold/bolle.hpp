#ifndef KFOLD_BOLLE_HPP_
#define KFOLD_BOLLE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfold/geometry.hpp"
#include "kfold/lattice.hpp"
#include "kfold/tiling.hpp"
#include "kfold/verifier.hpp"

namespace kfold {

struct BolleEdgeRow {
    int edge_index = 0;  // 0-based edge of the origin-centered polygon
    std::optional<Vec2> interior_witness;  // point of (1/2)L strictly inside the edge
    bool midpoint_in_half_lattice = false;
    bool edge_is_lattice_vector = false;  // checked only when the midpoint is not in (1/2)L
    bool ok = false;
};

/// Outcome of Bolle's lattice-tiling criterion for a centrally symmetric
/// polygon: every edge's relative interior must meet (1/2)L, and any edge
/// whose midpoint misses (1/2)L must itself be a lattice vector. The
/// multiplicity k = area/|det L| must be a positive integer.
struct BolleReport {
    Lattice2 lattice;
    bool passed = false;
    std::optional<int> k;
    Scalar k_exact;  // area/|det|, for diagnostics
    bool k_integral = false;
    std::vector<BolleEdgeRow> per_edge;  // all 2m edges
    Vec2 applied_centering;              // translation applied to move P to the origin
};

inline BolleReport bolle_check(const SymPolygon& p, const Lattice2& lat) {
    const SymPolygon p0 = p.centered_at_origin();
    const Lattice2 half = lat.scaled(1, 2);

    BolleReport report{lat, true, std::nullopt, Scalar(0), false, {}, -p.center()};
    for (int i = 0; i < p0.edge_count(); ++i) {
        BolleEdgeRow row;
        row.edge_index = i;
        row.interior_witness = lattice_point_on_open_segment(half, p0.edge_segment(i));
        row.midpoint_in_half_lattice = half.contains(p0.edge_midpoint(i));
        if (!row.midpoint_in_half_lattice)
            row.edge_is_lattice_vector = lat.contains(p0.edge_vector(i));
        row.ok = row.interior_witness.has_value() &&
                 (row.midpoint_in_half_lattice || row.edge_is_lattice_vector);
        if (!row.ok) report.passed = false;
        report.per_edge.push_back(std::move(row));
    }
    report.k_exact = p0.area() / lat.abs_det();
    report.k_integral = report.k_exact.is_integer() && report.k_exact.sign() > 0;
    if (report.k_integral)
        report.k = static_cast<int>(rat_num(report.k_exact.rational_part()).convert_to<long long>());
    if (!report.k_integral) report.passed = false;
    return report;
}

/// Determinant of the l x l matrix with the given diagonal, +1 strictly
/// above it and -1 strictly below. Exact fraction-pivoting elimination.
inline Rat skew_ones_det(const std::vector<Rat>& diag) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return Rat(1);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j) ? diag[i] : (i < j ? Rat(1) : Rat(-1));

    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

enum class EdgeRoute { Diagonal, Edge };  // which of e*_i / e_i is commensurate

struct EdgeChoice {
    EdgeRoute route;
    Int denominator;  // minimal q with the chosen vector in (1/q)L
};

/// For each i < m, finds whether e_i or e*_i is rationally commensurate with
/// the lattice, preferring e*_i (whose midpoint identity makes the
/// half-lattice condition automatic). beta is the lcm of the chosen minimal
/// denominators, so every chosen vector lies in (1/beta)L.
struct Commensuration {
    bool ok = false;
    int failed_index = -1;  // when !ok: first i with neither vector commensurate
    Int beta = 0;
    std::vector<EdgeChoice> choices;
};

inline Commensuration edge_commensuration(const SymPolygon& p, const Lattice2& lat) {
    const SymPolygon p0 = p.centered_at_origin();
    Commensuration out;
    out.beta = 1;
    for (int i = 0; i < p0.m(); ++i) {
        auto qd = lat.rational_commensurate(p0.estar_vector(i));
        auto qe = lat.rational_commensurate(p0.edge_vector(i));
        if (qd) {
            out.choices.push_back({EdgeRoute::Diagonal, *qd});
        } else if (qe) {
            out.choices.push_back({EdgeRoute::Edge, *qe});
        } else {
            out.failed_index = i;
            return out;
        }
        out.beta = int_lcm(out.beta, out.choices.back().denominator);
    }
    out.ok = true;
    return out;
}

struct ExtractionAttempt {
    int part_index;
    Int scale;  // the candidate was (1/scale) * Lambda_j; 0 when commensuration failed
    std::string reason;
};

/// Certificate that P + (1/beta)Lambda_j is a multiple lattice tiling,
/// extracted from a verified multiple translative tiling P + X.
struct ExtractionCertificate {
    int part_index = 0;  // chosen j, 0-based into X's parts
    Int beta = 1;        // lattice = (1/beta) * Lambda_j
    Lattice2 lattice;
    int k_lattice = 0;
    BolleReport bolle;
    TilingCertificate source;       // the verification of (P, X) driving the pipeline
    TilingCertificate cross_check;  // independent exact verification of the output
};

struct ExtractionResult {
    std::optional<ExtractionCertificate> certificate;
    std::vector<ExtractionAttempt> attempts;  // failures, in trial order

    bool found() const { return certificate.has_value(); }
};

/// Converts a verified multiple translative tiling into a multiple lattice
/// tiling: per underlying lattice, compute beta from the edge system, then
/// test (1/(gamma*beta))Lambda_j against Bolle's criterion with gamma
/// escalating up to the bound. The first passing lattice is cross-verified
/// exactly before the certificate is issued.
inline ExtractionResult extract_lattice_tiling(const SymPolygon& p, const TileMultiset& x,
                                               int beta_escalation_bound,
                                               const TilingCertificate& source) {
    if (source.status != VerifyStatus::Verified)
        throw Error(ErrorCode::PreconditionUnverified,
                    "a Verified tiling certificate for (P, X) is required");
    if (auto violation = structure_check(x))
        throw Error(ErrorCode::InvalidArgument,
                    "translate multiset violates the union normal form: parts " +
                        std::to_string(violation->first) + " and " + std::to_string(violation->second) +
                        " have a rank-2 intersection");
    if (beta_escalation_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "beta escalation bound must be positive");

    ExtractionResult result;
    for (size_t j = 0; j < x.parts().size(); ++j) {
        const Lattice2& lambda = x.parts()[j].lattice;
        Commensuration comm = edge_commensuration(p, lambda);
        if (!comm.ok) {
            result.attempts.push_back({static_cast<int>(j), Int(0),
                                       "neither e nor e* commensurate at edge index " +
                                           std::to_string(comm.failed_index)});
            continue;
        }
        for (int gamma = 1; gamma <= beta_escalation_bound; ++gamma) {
            const Int scale = comm.beta * gamma;
            const Lattice2 candidate = lambda.scaled(1, scale);
            BolleReport rep = bolle_check(p, candidate);
            if (!rep.passed) {
                std::string why = rep.k_integral ? "edge condition failed"
                                                 : "multiplicity " + rep.k_exact.str() + " not integral";
                result.attempts.push_back({static_cast<int>(j), scale, why});
                continue;
            }
            TilingCertificate cross = verify_exact(p, TileMultiset::single(candidate));
            if (!cross.verified() || cross.k != rep.k) {
                result.attempts.push_back({static_cast<int>(j), scale,
                                           "cross-verification disagreed with the criterion"});
                continue;
            }
            result.certificate = ExtractionCertificate{static_cast<int>(j), scale, candidate,
                                                       *rep.k, std::move(rep), source, std::move(cross)};
            return result;
        }
    }
    return result;
}

struct TauStarResult {
    bool found = false;
    std::optional<int> k;
    std::optional<Lattice2> lattice;
    std::optional<BolleReport> report;
    long long candidates_tested = 0;

    /// The result is an upper bound on the minimal lattice-tiling
    /// multiplicity; the generator set is heuristic, so NotFound within the
    /// bounds is not a nonexistence proof.
};

/// Searches lattices generated by pairs of edge-system vectors (e_i, e*_i,
/// and vertex differences) scaled by 1/beta, and returns the passing lattice
/// of minimal multiplicity.
inline TauStarResult tau_star_search(const SymPolygon& p, int beta_bound, int generator_bound) {
    const SymPolygon p0 = p.centered_at_origin();

    auto canon = [](Vec2 w) {
        if (w.x.sign() < 0 || (w.x.sign() == 0 && w.y.sign() < 0)) return -w;
        return w;
    };
    std::vector<Vec2> gens;
    auto push = [&](const Vec2& w) {
        if (w.is_zero()) return;
        const Vec2 c = canon(w);
        for (const Vec2& g : gens)
            if (g == c) return;
        gens.push_back(c);
    };
    for (int i = 0; i < p0.m(); ++i) push(p0.estar_vector(i));
    for (int i = 0; i < p0.edge_count(); ++i) push(p0.edge_vector(i));
    const auto& verts = p0.vertices();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) push(verts[i] - verts[j]);
    if (generator_bound >= 0 && static_cast<int>(gens.size()) > generator_bound)
        gens.resize(generator_bound);

    TauStarResult best;
    std::vector<Lattice2> seen;
    for (int beta = 1; beta <= beta_bound; ++beta) {
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i + 1; j < gens.size(); ++j) {
                if (cross(gens[i], gens[j]).sign() == 0) continue;
                Lattice2 cand = Lattice2::from_basis(gens[i] / Scalar(beta), gens[j] / Scalar(beta));
                bool dup = false;
                for (const Lattice2& s : seen)
                    if (s.equals(cand)) { dup = true; break; }
                if (dup) continue;
                seen.push_back(cand);
                ++best.candidates_tested;
                BolleReport rep = bolle_check(p, cand);
                if (!rep.passed) continue;
                if (!best.found || *rep.k < *best.k) {
                    best.found = true;
                    best.k = rep.k;
                    best.lattice = cand;
                    best.report = std::move(rep);
                }
            }
        }
    }
    return best;
}

}  // namespace kfold

#endif  // KFOLD_BOLLE_HPP_
