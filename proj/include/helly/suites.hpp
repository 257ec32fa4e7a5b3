#pragma once

// Property and acceptance suites. Each criterion is deterministic in the
// master seed; run_acceptance executes all of them and the CLI's run-suite
// groups them by topic. Instance counts follow the stated desk-scale corpus
// sizes; SuiteScale shrinks them proportionally for smoke runs.

#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helly/collapse.hpp"
#include "helly/colorful.hpp"
#include "helly/complex.hpp"
#include "helly/generators.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/matroid.hpp"
#include "helly/oracles.hpp"
#include "helly/rng.hpp"
#include "helly/theorems.hpp"
#include "helly/tverberg.hpp"

namespace helly {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail; // deterministic: counts and first failure, no timings
    long wall_ms = 0;
};

struct SuiteScale {
    int num = 1;
    int den = 1;
    int count(int full) const { return std::max(1, full * num / den); }
};

namespace suites {

// ---------------------------------------------------------------------------
// Shared corpora
// ---------------------------------------------------------------------------

/// Base matroids for the tolerance criteria: kinds cycle through uniform,
/// partition, linear, explicit; grounds cycle 3..8.
inline std::vector<Matroid> matroid_corpus(uint64_t seed, int count) {
    Rng rng = Rng(seed).fork(101);
    std::vector<Matroid> out;
    for (int i = 0; i < count; ++i) {
        const int n = 3 + i % 6;
        out.push_back(random_matroid(rng, n, i % 4, false));
    }
    return out;
}

struct TheoremInstance {
    SimplicialComplex X;
    Matroid M;
    int d, m, k;
    std::optional<CollapseSequence> exact_cert;
};

inline std::optional<std::pair<int, int>> pick_valid_mk(Rng& rng, int d, int r, int n) {
    std::vector<std::pair<int, int>> valid;
    for (int m = 1; m <= r; ++m)
        for (int k = m; k <= std::min(m + d, r); ++k)
            if (n >= std::max(m + d, r)) valid.emplace_back(m, k);
    if (valid.empty()) return std::nullopt;
    return valid[rng.below(valid.size())];
}

/// A convex family with strong pairwise overlap, so the nerve is dense but
/// usually not the full simplex.
inline ColoredFamily dense_family(Rng& rng, int d, int n) {
    ColoredFamily f;
    f.dim = d;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> lo, hi;
        for (int c = 0; c < d; ++c) {
            const Rational mid(rng.range(-30, 30));
            const Rational half(rng.range(15, 60));
            lo.push_back(mid - half);
            hi.push_back(mid + half);
        }
        if (d == 1)
            f.bodies.push_back(ConvexBody::hull({Point({lo[0]}), Point({hi[0]})}));
        else
            f.bodies.push_back(ConvexBody::box(std::move(lo), std::move(hi)));
        f.colors.push_back(i);
    }
    return f;
}

/// Complete complex with the stars of a few pairwise-disjoint (d+1)-sets
/// removed. Any (d+m)-set with m ≤ d+1 contains at most one of the removed
/// sets, so the strong hypothesis holds for m ≥ 2 while X stays incomplete.
/// d-collapsibility is not automatic and is certified by the caller.
inline SimplicialComplex complete_minus_disjoint_stars(Rng& rng, int d, int n) {
    SimplicialComplex X = SimplicialComplex::complete(n);
    const int max_disjoint = n / (d + 1);
    const int j = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(std::max(1, max_disjoint))));
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (int b = 0; b + d + 1 <= n && b / (d + 1) < j; b += d + 1) {
        std::vector<int> a(perm.begin() + b, perm.begin() + b + d + 1);
        X = costar(X, Simplex(std::move(a)));
    }
    return X;
}

/// Random polygons in the plane; their nerve is 2-collapsible by convexity
/// and often has a dense 1-skeleton without being the full simplex.
inline ColoredFamily plane_hull_family(Rng& rng, int n) {
    ColoredFamily fam;
    fam.dim = 2;
    for (int i = 0; i < n; ++i) {
        PointConfig pc = random_points(rng, 2, 3 + static_cast<int>(rng.below(2)), 30, 1);
        fam.bodies.push_back(ConvexBody::hull(pc.points));
        fam.colors.push_back(i);
    }
    return fam;
}

inline bool is_full_simplex(const SimplicialComplex& X) {
    return X.facets().size() == 1 && X.facets()[0].size() == X.num_vertices();
}

/// A few exact-d collapse steps taken off the complete complex: dense but not
/// complete, and d-collapsibility is re-certified by search (collapses of a
/// collapsible complex can in principle get stuck).
inline std::optional<SimplicialComplex> partially_collapsed_complete(Rng& rng, int d, int n,
                                                                     int steps) {
    SimplicialComplex X = SimplicialComplex::complete(n);
    for (int s = 0; s < steps; ++s) {
        std::vector<std::pair<Simplex, Simplex>> ff = free_faces(X, d);
        std::vector<std::pair<Simplex, Simplex>> exact;
        for (auto& p : ff)
            if (p.first.size() == d) exact.push_back(p);
        if (exact.empty()) break;
        X = costar(X, exact[rng.below(exact.size())].first);
    }
    if (X.is_void() || X.dim() < d) return std::nullopt;
    return X;
}

/// Instances for the d-collapsible theorem: X with an exact-d certificate, a
/// matroid of rank ≥ d+1 on the same ground, and valid (m,k) such that the
/// hypothesis holds. Mix: reverse-collapse complexes, dense nerves, partial
/// collapses of the complete complex, tolerance-complex skeletons, and a
/// capped share of complete complexes.
inline std::vector<TheoremInstance> collapsible_instances(uint64_t seed, int count,
                                                          std::string* shortfall) {
    Rng rng = Rng(seed).fork(505);
    std::vector<TheoremInstance> out;
    int attempts = 0, completes = 0;
    const int cap = count * 200;
    const int complete_cap = std::max(1, count / 8);
    while (static_cast<int>(out.size()) < count && ++attempts <= cap) {
        const int d = 1 + static_cast<int>(rng.below(2));
        const int n = static_cast<int>(rng.range(d + 2, 7));
        SimplicialComplex X = SimplicialComplex::void_complex(0);
        const int style = static_cast<int>(rng.below(10));
        if (style < 2) {
            X = random_collapsible_complex(rng, d, n, static_cast<int>(rng.range(2, 6))).complex;
        } else if (style < 5) {
            X = complete_minus_disjoint_stars(rng, d, n);
        } else if (style < 7) {
            X = d == 2 ? nerve(plane_hull_family(rng, n)).complex
                       : nerve(dense_family(rng, 1, n)).complex;
        } else if (style < 9) {
            auto partial = partially_collapsed_complete(rng, d, n,
                                                        1 + static_cast<int>(rng.below(3)));
            if (!partial) continue;
            X = *partial;
        } else {
            X = SimplicialComplex::complete(n);
        }
        if (is_full_simplex(X) && completes >= complete_cap) continue;
        CollapseSearchResult cert;
        try {
            cert = find_d_collapse(X, d, CollapseMode::ExactD, {12, 400000});
        } catch (const Error&) {
            continue;
        }
        if (!cert.sequence) continue;
        Matroid M = random_matroid_with_rank_at_least(rng, n, d + 1);
        auto mk = pick_valid_mk(rng, d, M.rank_full(), n);
        if (!mk) continue;
        if (!hypothesis_collapsible(X, M, d, mk->first, mk->second).holds) continue;
        if (is_full_simplex(X)) ++completes;
        out.push_back({std::move(X), std::move(M), d, mk->first, mk->second,
                       std::move(cert.sequence)});
    }
    if (static_cast<int>(out.size()) < count && shortfall) {
        *shortfall = "generated only " + std::to_string(out.size()) + "/" +
                     std::to_string(count) + " instances";
    }
    return out;
}

/// Instances for the d-Leray theorem: certified d-Leray complexes (via a
/// collapse certificate or a direct induced-subcomplex sweep) with a holding
/// Leray hypothesis.
inline std::vector<TheoremInstance> leray_instances(uint64_t seed, int count,
                                                    std::string* shortfall) {
    Rng rng = Rng(seed).fork(606);
    std::vector<TheoremInstance> out;
    int attempts = 0, completes = 0;
    const int cap = count * 200;
    const int complete_cap = std::max(1, count / 8);
    while (static_cast<int>(out.size()) < count && ++attempts <= cap) {
        const int d = 1 + static_cast<int>(rng.below(2));
        const int n = static_cast<int>(rng.range(d + 2, 7));
        SimplicialComplex X = SimplicialComplex::void_complex(0);
        const int style = static_cast<int>(rng.below(10));
        if (style < 2) {
            X = random_collapsible_complex(rng, d, n, static_cast<int>(rng.range(2, 6))).complex;
        } else if (style < 4) {
            X = complete_minus_disjoint_stars(rng, d, n);
            if (!is_d_leray_induced(X, d).is_leray) continue;
        } else if (style < 6) {
            X = d == 2 ? nerve(plane_hull_family(rng, n)).complex
                       : nerve(dense_family(rng, 1, n)).complex;
        } else if (style < 7) {
            auto partial = partially_collapsed_complete(rng, d, n,
                                                        1 + static_cast<int>(rng.below(3)));
            if (!partial || !is_d_leray_induced(*partial, d).is_leray) continue;
            X = *partial;
        } else if (style < 9) {
            const int nn = std::min(n, 6);
            X = random_complex(rng, nn, nn + 2, 4);
            if (X.is_void() || !is_d_leray_induced(X, d).is_leray) continue;
        } else {
            X = SimplicialComplex::complete(n);
        }
        if (is_full_simplex(X) && completes >= complete_cap) continue;
        if (X.num_vertices() < d + 2) continue;
        Matroid M = random_matroid_with_rank_at_least(rng, X.num_vertices(), d + 1);
        auto mk = pick_valid_mk(rng, d, M.rank_full(), X.num_vertices());
        if (!mk) continue;
        if (!hypothesis_leray(X, M, d, mk->first, mk->second).holds) continue;
        if (is_full_simplex(X)) ++completes;
        out.push_back({std::move(X), std::move(M), d, mk->first, mk->second, std::nullopt});
    }
    if (static_cast<int>(out.size()) < count && shortfall) {
        *shortfall = "generated only " + std::to_string(out.size()) + "/" +
                     std::to_string(count) + " instances";
    }
    return out;
}

/// The fixed nine-point regression configuration: rational points exactly on
/// the radius-2 circle near angles 40°·i, in convex position with the exact
/// cyclic order of the ideal picture (t = tan(angle/2), point
/// (2(1-t²)/(1+t²), 4t/(1+t²))).
inline PointConfig nine_point_ring() {
    const std::pair<long, long> ts[9] = {{0, 1},      {91, 250},   {839, 1000},
                                         {433, 250},  {5671, 1000}, {-5671, 1000},
                                         {-433, 250}, {-839, 1000}, {-91, 250}};
    PointConfig A;
    A.dim = 2;
    for (const auto& [p, q] : ts) {
        const Rational t(p, q);
        const Rational den = 1 + t * t;
        A.points.push_back(Point({2 * (1 - t * t) / den, 4 * t / den}));
    }
    return A;
}

/// Partition labels of the regression picture, parts numbered 0..2.
inline std::vector<int> nine_point_right_labels() { return {0, 1, 0, 0, 2, 1, 0, 0, 2}; }
inline std::vector<int> nine_point_left_labels() { return {0, 2, 1, 2, 0, 0, 1, 2, 1}; }
inline std::vector<int> nine_point_right_center() { return {1, 3, 4, 5, 6, 8}; }

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

template <typename F>
CriterionResult timed(const std::string& id, const std::string& name, F&& body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        res.pass = body(detail);
        res.detail = detail.str();
    } catch (const Error& e) {
        res.pass = false;
        res.detail = std::string("error: ") + e.what();
    }
    res.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return res;
}

/// 1. Tolerance rank closed form = brute force = matroid-union rank, on every
/// subset of every corpus matroid, for every t.
inline CriterionResult crit_tolerance_rank(uint64_t seed, const SuiteScale& scale) {
    return timed("1", "tolerance rank closed form", [&](std::ostringstream& detail) {
        const int count = scale.count(200);
        std::vector<Matroid> corpus = matroid_corpus(seed, count);
        long checks = 0;
        for (size_t mi = 0; mi < corpus.size(); ++mi) {
            const Matroid& M = corpus[mi];
            const int n = M.num_elements();
            const std::vector<int> table = oracle::rank_table(M);
            for (int t = 0; t <= M.rank_full(); ++t) {
                const Matroid Mt = M.tolerance(t);
                const Matroid Ut = Matroid::uniform(n, t);
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    std::vector<int> v;
                    for (int i = 0; i < n; ++i)
                        if (mask & (1u << i)) v.push_back(i);
                    const VertexSet A(std::move(v));
                    const int closed = Mt.rank(A);
                    const int brute = oracle::tolerance_rank_brute(table, mask, t);
                    const int viaunion = matroid_union_rank(M, Ut, A);
                    ++checks;
                    if (closed != brute || closed != viaunion) {
                        detail << "matroid " << mi << " t=" << t << " A=" << A.str()
                               << ": closed=" << closed << " brute=" << brute
                               << " union=" << viaunion;
                        return false;
                    }
                }
            }
        }
        detail << checks << " subset checks over " << corpus.size() << " matroids";
        return true;
    });
}

/// 2. Every tolerance matroid of the criterion-1 corpus passes the
/// independence axioms when materialized.
inline CriterionResult crit_tolerance_axioms(uint64_t seed, const SuiteScale& scale) {
    return timed("2", "tolerance matroid axioms", [&](std::ostringstream& detail) {
        const int count = scale.count(200);
        std::vector<Matroid> corpus = matroid_corpus(seed, count);
        long families = 0;
        for (size_t mi = 0; mi < corpus.size(); ++mi) {
            const Matroid& M = corpus[mi];
            for (int t = 0; t <= M.rank_full(); ++t) {
                AxiomCheck chk = check_matroid_axioms(M.num_elements(), tolerance_family(M, t));
                ++families;
                if (!chk.ok) {
                    detail << "matroid " << mi << " t=" << t << ": " << chk.violation;
                    return false;
                }
            }
        }
        detail << families << " tolerance families pass the axioms";
        return true;
    });
}

/// 3. Induced-subcomplex and link characterizations of d-Leray agree.
inline CriterionResult crit_leray_equivalence(uint64_t seed, const SuiteScale& scale) {
    return timed("3", "leray definitions agree", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(303);
        const int count = scale.count(300);
        for (int i = 0; i < count; ++i) {
            const int n = 3 + i % 6; // 3..8
            SimplicialComplex X = random_complex(rng, n, n + 2, std::min(n, 5));
            const int d = 1 + i % 3;
            const bool a = is_d_leray_induced(X, d).is_leray;
            const bool b = is_d_leray_links(X, d).is_leray;
            if (a != b) {
                detail << "complex " << i << " (" << X.str() << ") d=" << d << ": induced=" << a
                       << " links=" << b;
                return false;
            }
        }
        detail << count << " complexes agree at d in {1,2,3}";
        return true;
    });
}

/// 4. Standard-mode and exact-d-mode collapse searches agree.
inline CriterionResult crit_collapse_normal_form(uint64_t seed, const SuiteScale& scale) {
    return timed("4", "collapse normal form", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(404);
        const int count = scale.count(200);
        const CollapseBudget budget{12, 600000};
        for (int i = 0; i < count; ++i) {
            const int n = 3 + i % 5; // 3..7
            SimplicialComplex X = random_complex(rng, n, n + 2, 4);
            const int d = 1 + i % 3;
            const bool std_ok = find_d_collapse(X, d, CollapseMode::Standard, budget)
                                    .sequence.has_value();
            const bool exact_ok = find_d_collapse(X, d, CollapseMode::ExactD, budget)
                                      .sequence.has_value();
            if (std_ok != exact_ok) {
                detail << "complex " << i << " (" << X.str() << ") d=" << d
                       << ": standard=" << std_ok << " exact=" << exact_ok;
                return false;
            }
        }
        detail << count << " complexes agree in both modes";
        return true;
    });
}

/// 5. On every generated instance with a holding collapsible hypothesis, the
/// brute-force witness exists with both conclusion inequalities, and the
/// constructive extraction from the collapse certificate passes the same
/// postcondition.
inline CriterionResult crit_theorem_collapsible(uint64_t seed, const SuiteScale& scale) {
    return timed("5", "collapsible witness theorem", [&](std::ostringstream& detail) {
        std::string shortfall;
        std::vector<TheoremInstance> insts =
            collapsible_instances(seed, scale.count(200), &shortfall);
        if (!shortfall.empty()) {
            detail << shortfall;
            return false;
        }
        for (size_t i = 0; i < insts.size(); ++i) {
            const TheoremInstance& inst = insts[i];
            const int r = inst.M.rank_full();
            auto w = find_witness(inst.X, inst.M, inst.m, inst.k, true);
            if (!w || w->rank_tau < r + 1 - inst.m || w->rank_complement > inst.k - 1) {
                detail << "instance " << i << ": brute-force witness missing or invalid";
                return false;
            }
            try {
                Witness ew = extract_witness_from_collapse(inst.X, *inst.exact_cert, inst.M,
                                                           inst.d, inst.m, inst.k);
                if (ew.rank_tau < r + 1 - inst.m || ew.rank_complement > inst.k - 1) {
                    detail << "instance " << i << ": extracted witness violates conclusion";
                    return false;
                }
            } catch (const Error& e) {
                detail << "instance " << i << ": extraction failed: " << e.what();
                return false;
            }
        }
        detail << insts.size() << " instances: witness + extraction sound";
        return true;
    });
}

/// 6. Same soundness for the d-Leray theorem with the relaxed conclusion.
inline CriterionResult crit_theorem_leray(uint64_t seed, const SuiteScale& scale) {
    return timed("6", "leray witness theorem", [&](std::ostringstream& detail) {
        std::string shortfall;
        std::vector<TheoremInstance> insts = leray_instances(seed, scale.count(200), &shortfall);
        if (!shortfall.empty()) {
            detail << shortfall;
            return false;
        }
        for (size_t i = 0; i < insts.size(); ++i) {
            const TheoremInstance& inst = insts[i];
            auto w = find_witness(inst.X, inst.M, inst.m, inst.k, false);
            if (!w || w->rank_complement > inst.k - 1) {
                detail << "instance " << i << ": relaxed witness missing or invalid";
                return false;
            }
        }
        detail << insts.size() << " instances: relaxed witness sound";
        return true;
    });
}

/// 7. strong ⇒ leray ⇒ collapsible on every instance of criteria 5 and 6;
/// all three coincide when m ≤ 2.
inline CriterionResult crit_implication_chain(uint64_t seed, const SuiteScale& scale) {
    return timed("7", "hypothesis implication chain", [&](std::ostringstream& detail) {
        std::string shortfall;
        std::vector<TheoremInstance> insts =
            collapsible_instances(seed, scale.count(200), &shortfall);
        std::vector<TheoremInstance> more = leray_instances(seed, scale.count(200), &shortfall);
        insts.insert(insts.end(), more.begin(), more.end());
        for (size_t i = 0; i < insts.size(); ++i) {
            const TheoremInstance& inst = insts[i];
            const bool s = hypothesis_strong(inst.X, inst.M, inst.d, inst.m, inst.k).holds;
            const bool l = hypothesis_leray(inst.X, inst.M, inst.d, inst.m, inst.k).holds;
            const bool c = hypothesis_collapsible(inst.X, inst.M, inst.d, inst.m, inst.k).holds;
            if ((s && !l) || (l && !c)) {
                detail << "instance " << i << ": chain broken (s=" << s << " l=" << l
                       << " c=" << c << ")";
                return false;
            }
            if (inst.m <= 2 && !(s == l && l == c)) {
                detail << "instance " << i << ": m=" << inst.m
                       << " but conditions differ (s=" << s << " l=" << l << " c=" << c << ")";
                return false;
            }
        }
        detail << insts.size() << " instances respect the chain";
        return true;
    });
}

/// 8. Sarkaria lift equivalence: part hulls intersect ⇔ lifted origin in hull.
inline CriterionResult crit_sarkaria(uint64_t seed, const SuiteScale& scale) {
    return timed("8", "sarkaria lift equivalence", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(808);
        const int count = scale.count(500);
        for (int i = 0; i < count; ++i) {
            const int r = 2 + static_cast<int>(rng.below(2));
            const int d = 1 + static_cast<int>(rng.below(2));
            std::vector<PointConfig> parts;
            std::vector<ConvexBody> hulls;
            for (int j = 0; j < r; ++j) {
                PointConfig part = random_points(rng, d, 1 + static_cast<int>(rng.below(3)), 40, 3);
                hulls.push_back(ConvexBody::hull(part.points));
                parts.push_back(std::move(part));
            }
            const bool direct = bodies_intersect(hulls, d).intersecting;
            std::vector<LiftedPoint> lift = sarkaria_lift(parts);
            std::vector<Point> lifted;
            for (const LiftedPoint& lp : lift) lifted.push_back(lp.point);
            const bool via_lift = in_hull(Point::zero((r - 1) * (d + 1)), lifted);
            if (direct != via_lift) {
                detail << "config " << i << " (r=" << r << ", d=" << d << "): direct=" << direct
                       << " lift=" << via_lift;
                return false;
            }
        }
        detail << count << " configurations agree";
        return true;
    });
}

/// 9. Tverberg centers at desk scale: the construction verifies, and the
/// independent partitions × centers enumeration confirms existence.
inline CriterionResult crit_tverberg_center(uint64_t seed, const SuiteScale& scale) {
    return timed("9", "tverberg centers at desk scale", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(909);
        const int per = scale.count(50);
        const std::pair<int, int> combos[3] = {{1, 2}, {2, 2}, {1, 3}};
        long done = 0;
        for (const auto& [d, r] : combos) {
            const int n = (r - 1) * (d + 1);
            for (int extra = 1; extra <= 3; ++extra) {
                for (int i = 0; i < per; ++i) {
                    PointConfig A = random_points(rng, d, n + extra, 60, 3);
                    TverbergCertificate cert;
                    try {
                        cert = tverberg_with_center(A, r);
                    } catch (const Error& e) {
                        detail << "d=" << d << " r=" << r << " |A|=" << n + extra << " #" << i
                               << ": " << e.what();
                        return false;
                    }
                    if (static_cast<int>(cert.center.size()) != n ||
                        !verify_center(A, cert.labels, cert.center).ok) {
                        detail << "d=" << d << " r=" << r << " |A|=" << n + extra << " #" << i
                               << ": certificate failed verification";
                        return false;
                    }
                    if (!oracle::center_exists(A, r)) {
                        detail << "d=" << d << " r=" << r << " |A|=" << n + extra << " #" << i
                               << ": brute force disagrees on existence";
                        return false;
                    }
                    ++done;
                }
            }
        }
        detail << done << " instances verified against the enumeration oracle";
        return true;
    });
}

/// 10. Nine-point regression: the pictured partition with a center verifies,
/// the other admits no center of size 6 among all 84 subsets.
inline CriterionResult crit_nine_point_regression(uint64_t, const SuiteScale&) {
    return timed("10", "nine-point regression", [&](std::ostringstream& detail) {
        const PointConfig A = nine_point_ring();
        if (!verify_center(A, nine_point_right_labels(), nine_point_right_center()).ok) {
            detail << "expected center rejected";
            return false;
        }
        const std::vector<int> left = nine_point_left_labels();
        std::vector<int> ids(9);
        std::iota(ids.begin(), ids.end(), 0);
        int centers_found = 0;
        for_each_subset_of_size(ids, 6, [&](Simplex B) {
            if (verify_center(A, left, B.vertices()).ok) ++centers_found;
            return false;
        });
        if (centers_found != 0) {
            detail << centers_found << " unexpected centers for the left partition";
            return false;
        }
        detail << "right center verified; all 84 left candidates fail";
        return true;
    });
}

/// 11. Tolerant partitions: certificates verify exhaustively and the
/// permutation overlap bound holds at every recursion level.
inline CriterionResult crit_tolerant_tverberg(uint64_t seed, const SuiteScale& scale) {
    return timed("11", "tolerant tverberg", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(1111);
        const int per = scale.count(30);
        const std::tuple<int, int, int> combos[3] = {{1, 2, 1}, {2, 2, 1}, {1, 2, 2}};
        long done = 0;
        for (const auto& [d, r, t] : combos) {
            const int size = (t + 1) * (r - 1) * (d + 1) + 1;
            for (int i = 0; i < per; ++i) {
                PointConfig A = random_points(rng, d, size, 60, 3);
                ToleranceCertificate cert;
                try {
                    cert = tolerant_tverberg(A, r, t);
                } catch (const Error& e) {
                    detail << "d=" << d << " r=" << r << " t=" << t << " #" << i << ": "
                           << e.what();
                    return false;
                }
                if (!verify_tolerance(A, cert.labels, t)) {
                    detail << "d=" << d << " r=" << r << " t=" << t << " #" << i
                           << ": exhaustive verification failed";
                    return false;
                }
                if (static_cast<int>(cert.level_overlaps.size()) != t) {
                    detail << "expected " << t << " recursion levels";
                    return false;
                }
                for (int lvl = 0; lvl < t; ++lvl) {
                    if (cert.level_overlaps[static_cast<size_t>(lvl)] < (t - lvl) + 1) {
                        detail << "level " << lvl << " overlap below bound";
                        return false;
                    }
                }
                ++done;
            }
        }
        detail << done << " certificates verified with overlap bounds";
        return true;
    });
}

/// 12. Sharpness: generic (r-1)(d+1)-point sets admit no Tverberg partition.
inline CriterionResult crit_sharpness(uint64_t seed, const SuiteScale& scale) {
    return timed("12", "center size sharpness", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(1212);
        const int per = scale.count(50);
        const std::pair<int, int> combos[3] = {{1, 2}, {2, 2}, {2, 3}};
        for (const auto& [d, r] : combos) {
            for (int i = 0; i < per; ++i) {
                if (!sharpness_probe(d, r, rng.next_u64())) {
                    detail << "d=" << d << " r=" << r << " #" << i
                           << ": found a Tverberg partition of a generic draw";
                    return false;
                }
            }
        }
        detail << 3 * per << " generic draws have no partition";
        return true;
    });
}

/// 13. Nerves of interval and planar box families are collapsible at the
/// ambient dimension.
inline CriterionResult crit_nerve_collapsibility(uint64_t seed, const SuiteScale& scale) {
    return timed("13", "nerve collapsibility", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(1313);
        const CollapseBudget budget{12, 600000};
        const int n_interval = scale.count(50);
        for (int i = 0; i < n_interval; ++i) {
            ColoredFamily fam = random_interval_family(rng, 2 + static_cast<int>(rng.below(7)));
            SimplicialComplex X = nerve(fam).complex;
            if (!find_d_collapse(X, 1, CollapseMode::Standard, budget).sequence) {
                detail << "interval family " << i << ": nerve not 1-collapsible";
                return false;
            }
        }
        const int n_box = scale.count(30);
        for (int i = 0; i < n_box; ++i) {
            ColoredFamily fam = random_box_family(rng, 2, 2 + static_cast<int>(rng.below(6)));
            SimplicialComplex X = nerve(fam).complex;
            if (!find_d_collapse(X, 2, CollapseMode::Standard, budget).sequence) {
                detail << "box family " << i << ": nerve not 2-collapsible";
                return false;
            }
        }
        detail << n_interval << " interval + " << n_box << " box nerves collapse";
        return true;
    });
}

// ---------------------------------------------------------------------------
// Additional property suites beyond the acceptance criteria.
// ---------------------------------------------------------------------------

inline CriterionResult prop_small_rank_sets(uint64_t seed, const SuiteScale& scale) {
    return timed("P1", "small sets of guaranteed rank", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(25);
        const int count = scale.count(40);
        for (int i = 0; i < count; ++i) {
            const int n = 3 + i % 6;
            Matroid M = random_matroid(rng, n);
            for (int t = 0; t <= n; ++t) {
                VertexSet U = oracle::lemma_small_rank_set(M, t);
                if (U.size() != t || M.rank(U) < std::min(t, M.rank_full())) {
                    detail << "matroid " << i << " t=" << t << ": construction failed";
                    return false;
                }
            }
        }
        detail << count << " matroids, all t";
        return true;
    });
}

inline CriterionResult prop_rank_drop(uint64_t seed, const SuiteScale& scale) {
    return timed("P2", "rank drop bound", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(26);
        const int count = scale.count(40);
        for (int i = 0; i < count; ++i) {
            const int n = 3 + i % 6;
            Matroid M = random_matroid(rng, n);
            for (int rep = 0; rep < 20; ++rep) {
                Simplex W = random_subset(rng, n, static_cast<int>(rng.range(0, n)));
                std::vector<int> uv;
                for (int v : W)
                    if (rng.chance(1, 2)) uv.push_back(v);
                Simplex U(std::move(uv));
                if (M.rank(U) < M.rank(W) - (W.size() - U.size())) {
                    detail << "matroid " << i << " W=" << W.str() << " U=" << U.str();
                    return false;
                }
            }
        }
        detail << count << " matroids x 20 samples";
        return true;
    });
}

inline CriterionResult prop_helly_for_leray(uint64_t seed, const SuiteScale& scale) {
    return timed("P3", "helly property of leray complexes", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(53);
        const int count = scale.count(25);
        for (int i = 0; i < count; ++i) {
            const int d = 1 + static_cast<int>(rng.below(2));
            const int n = static_cast<int>(rng.range(d + 2, 6));
            SimplicialComplex X =
                random_collapsible_complex(rng, d, n, static_cast<int>(rng.range(2, 5))).complex;
            bool ok = true;
            for_each_subset_by_size(X.vertex_set().vertices(), [&](Simplex U) {
                if (U.size() < d + 1) return false;
                if (!helly_for_leray(X, d, U, true)) { ok = false; return true; }
                return false;
            });
            if (!ok) {
                detail << "complex " << i << " (" << X.str() << ") d=" << d;
                return false;
            }
        }
        detail << count << " d-Leray complexes, all U";
        return true;
    });
}

inline CriterionResult prop_nonface_extension(uint64_t seed, const SuiteScale& scale) {
    return timed("P4", "non-face neighborhood extension", [&](std::ostringstream& detail) {
        Rng rng = Rng(seed).fork(54);
        const int count = scale.count(25);
        for (int i = 0; i < count; ++i) {
            const int d = 1 + static_cast<int>(rng.below(2));
            const int n = static_cast<int>(rng.range(d + 2, 6));
            SimplicialComplex X =
                random_collapsible_complex(rng, d, n, static_cast<int>(rng.range(2, 5))).complex;
            bool ok = true;
            for_each_subset_of_size(X.vertex_set().vertices(), d + 1, [&](Simplex A) {
                if (X.is_face(A)) return false;
                std::vector<int> uv;
                for (int v : X.vertex_set()) {
                    if (A.contains(v)) continue;
                    bool all = true;
                    for_each_subset_of_size(A.vertices(), d, [&](Simplex s) {
                        if (!X.is_face(s.with(v))) { all = false; return true; }
                        return false;
                    });
                    if (all) uv.push_back(v);
                }
                if (uv.empty()) return false;
                Simplex U(std::move(uv));
                for (int a : A)
                    if (!X.is_face(U.unite(A.minus(a)))) { ok = false; return true; }
                return false;
            });
            if (!ok) {
                detail << "complex " << i << " (" << X.str() << ") d=" << d;
                return false;
            }
        }
        detail << count << " d-Leray complexes";
        return true;
    });
}

} // namespace suites

/// All thirteen acceptance criteria in order.
inline std::vector<CriterionResult> run_acceptance(uint64_t seed, const SuiteScale& scale = {}) {
    using namespace suites;
    return {
        crit_tolerance_rank(seed, scale),       crit_tolerance_axioms(seed, scale),
        crit_leray_equivalence(seed, scale),    crit_collapse_normal_form(seed, scale),
        crit_theorem_collapsible(seed, scale),  crit_theorem_leray(seed, scale),
        crit_implication_chain(seed, scale),    crit_sarkaria(seed, scale),
        crit_tverberg_center(seed, scale),      crit_nine_point_regression(seed, scale),
        crit_tolerant_tverberg(seed, scale),    crit_sharpness(seed, scale),
        crit_nerve_collapsibility(seed, scale),
    };
}

/// Topic suites for the run-suite command.
inline std::vector<CriterionResult> run_suite_group(const std::string& name, uint64_t seed,
                                                    const SuiteScale& scale = {}) {
    using namespace suites;
    if (name == "lemmas")
        return {prop_small_rank_sets(seed, scale), prop_rank_drop(seed, scale),
                crit_tolerance_rank(seed, scale),  crit_tolerance_axioms(seed, scale),
                crit_leray_equivalence(seed, scale), crit_collapse_normal_form(seed, scale),
                prop_helly_for_leray(seed, scale), prop_nonface_extension(seed, scale)};
    if (name == "theorems")
        return {crit_theorem_collapsible(seed, scale), crit_theorem_leray(seed, scale),
                crit_implication_chain(seed, scale), crit_nerve_collapsibility(seed, scale)};
    if (name == "tverberg")
        return {crit_sarkaria(seed, scale), crit_tverberg_center(seed, scale),
                crit_nine_point_regression(seed, scale), crit_tolerant_tverberg(seed, scale),
                crit_sharpness(seed, scale)};
    if (name == "all") {
        std::vector<CriterionResult> out = run_acceptance(seed, scale);
        std::vector<CriterionResult> extras = {
            suites::prop_small_rank_sets(seed, scale), suites::prop_rank_drop(seed, scale),
            suites::prop_helly_for_leray(seed, scale),
            suites::prop_nonface_extension(seed, scale)};
        out.insert(out.end(), extras.begin(), extras.end());
        return out;
    }
    fail(Errc::BadParams, "unknown suite '" + name + "' (lemmas|theorems|tverberg|all)");
}

} // namespace helly
