#include "hookpart/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "hookpart/certificates.hpp"
#include "hookpart/format.hpp"
#include "hookpart/golden.hpp"
#include "hookpart/partition.hpp"
#include "hookpart/polyseq.hpp"
#include "hookpart/rootgeom.hpp"
#include "hookpart/sequence.hpp"
#include "hookpart/unimodality.hpp"

namespace hookpart {

std::string CriterionResult::to_line() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << format_double(seconds, 3)
       << "s)";
    if (!detail.empty())
        os << " " << detail;
    return os.str();
}

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds; // 0 = unlimited
    std::function<bool(std::string&)> body;
};

bool tables_match_goldens(std::string& detail) {
    const SequenceView view(15);
    const std::string t1 = view.table().to_csv();
    const std::string t2 = view.delta_table().to_csv();
    const bool ok1 = t1 == golden::kTable1Csv;
    const bool ok2 = t2 == golden::kTable2Csv;
    detail = "A-table bytes " + std::string(ok1 ? "match" : "DIFFER") + ", Delta-table bytes " +
             (ok2 ? "match" : "DIFFER");
    return ok1 && ok2;
}

bool triple_cross_validation(std::string& detail) {
    constexpr int kDepth = 20;
    auto [by_even, by_pairs] = oracle_tables(kDepth);
    const TriangleTable recurrence = a_table(kDepth);
    long long checked = 0;
    for (int n = 1; n <= kDepth; ++n) {
        for (int m = 0; m < n; ++m) {
            const Int& enumerated = by_even.at(n, m);
            if (enumerated != by_pairs.at(n, m)) {
                detail = "statistics disagree at (" + std::to_string(n) + "," + std::to_string(m) + ")";
                return false;
            }
            if (enumerated != recurrence.at(n, m)) {
                detail = "enumeration vs recurrence mismatch at (" + std::to_string(n) + "," +
                         std::to_string(m) + ")";
                return false;
            }
            if (enumerated != a_closed(n, m)) {
                detail = "enumeration vs closed form mismatch at (" + std::to_string(n) + "," +
                         std::to_string(m) + ")";
                return false;
            }
            ++checked;
        }
        // row sums must double: |H_n| = 2^(n-1)
        Int sum = 0;
        for (int m = 0; m < n; ++m)
            sum += by_even.at(n, m);
        if (sum != Int(1) << (n - 1)) {
            detail = "row sum != 2^(n-1) at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "entries checked: " + std::to_string(checked) + " (n <= " + std::to_string(kDepth) + ")";
    return true;
}

bool strong_unimodality_full(std::string& detail) {
    const SequenceView view(300);
    CheckReport r = verify_strong_unimodality(view, {6, 300});
    detail = r.pass() ? "rows 6..300, unique mode at floor((n-1)/4)" : r.violations.front();
    return r.pass();
}

bool certificates_full(std::string& detail) {
    // deepest consumer: the 4m+2 reduction at m = 200 touches Delta(802, 200)
    const SequenceView view(803);
    CheckReport all;
    all.name = "certificates";
    all.merge(verify_delta_certificate(view, {4, 200}, {0, 199}));
    all.merge(verify_g_certificate(view, {2, 150}, {0, 100}));
    all.merge(verify_degenerate_identity(view, {1, 200}));
    all.merge(verify_4m2_reduction(view, {1, 200}));
    all.merge(verify_boundary_formulas(view, {1, 200}));
    detail = all.pass() ? "identities exactly zero at " + std::to_string(all.checked) + " grid points"
                        : all.violations.front();
    return all.pass();
}

bool ratio_bounds_exact(std::string& detail) {
    const SequenceView view(400);
    CheckReport seven_ninths = verify_ratio_bounds(view, {5, 100});
    CheckReport ten_ninths = verify_upper_10_9(view, {3, 100});
    const bool ok = seven_ninths.pass() && ten_ninths.pass();
    detail = ok ? "exact rational comparisons at " +
                      std::to_string(seven_ninths.checked + ten_ninths.checked) + " points"
                : (!seven_ninths.pass() ? seven_ninths.violations.front()
                                        : ten_ninths.violations.front());
    return ok;
}

bool non_log_concavity(std::string& detail) {
    const SequenceView view(100);
    CheckReport r = verify_log_concavity_defect(view, {3, 100});
    detail = r.pass() ? "defect equals 2-n for n in 3..100" : r.violations.front();
    return r.pass();
}

bool circle_geometry(std::string& detail) {
    constexpr double kResidualTol = 1e-10;
    constexpr double kCircleTol = 1e-8;
    auto family = f_family(60);
    FindOpts opts;
    opts.tol = kResidualTol;
    double worst_dev = 0.0, worst_res = 0.0;
    std::vector<std::complex<double>> warm;
    for (int n = 2; n <= 60; ++n) {
        ZeroSet zs = find_roots_warm(family[static_cast<std::size_t>(n - 1)],
                                     "F_" + std::to_string(n), warm, opts);
        warm = zs.points;
        warm.push_back(widest_gap_seed(warm));
        if (!zs.certified || static_cast<int>(zs.points.size()) != n - 1) {
            detail = "F_" + std::to_string(n) + ": roots not certified";
            return false;
        }
        CircleCertification cert = certify_circle(zs, kCircleTol);
        worst_dev = std::max(worst_dev, cert.max_radius_deviation);
        worst_res = std::max(worst_res, cert.max_residual);
        if (!cert.pass) {
            detail = "F_" + std::to_string(n) + ": circle condition violated, first offender " +
                     cert.offenders.front();
            return false;
        }
    }
    detail = "n <= 60: max circle deviation " + format_double(worst_dev, 3) + ", max residual " +
             format_double(worst_res, 3);
    return true;
}

bool lift_properties(std::string& detail) {
    // exact structure to n = 200
    auto family = w_family(200);
    for (const auto& w : family) {
        const bool shape_ok = w.poly.degree() == w.n && w.poly.leading() == w.n + 1 &&
                              w.poly[0] == w.n + 1 && is_palindromic(w.poly);
        if (!shape_ok) {
            detail = "structural invariant fails at W_" + std::to_string(w.n);
            return false;
        }
    }
    // roots negative, simple, interlacing to n = 60
    CheckReport roots_report = verify_lift_roots(60);
    if (!roots_report.pass()) {
        detail = roots_report.violations.front();
        return false;
    }
    // transform chain to n = 40, purely rational and equal to the recurrence
    for (int n = 0; n <= 40; ++n) {
        Poly<Rat> chain = mobius_chain_rational(n);
        Poly<Rat> rec = convert_poly<Rat>(family[static_cast<std::size_t>(n)].poly);
        if (chain != rec) {
            detail = "transform chain deviates from the recurrence at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "structure n <= 200, zeros n <= 60, chain n <= 40";
    return true;
}

bool limit_of_zeros(std::string& detail) {
    LimitZeroResult res = wz_limits(1, 0, -1, 2);
    if (res.discriminant != -1) {
        detail = "discriminant != -1";
        return false;
    }
    if (!res.isolated.empty()) {
        detail = "isolated set not empty";
        return false;
    }
    // endpoints 2 +- 2i, through-point 0
    if (res.endpoint_re != 2 || res.endpoint_im_coeff != 2 || res.through_point != 0) {
        detail = "arc endpoints or through-point wrong";
        return false;
    }
    // one unit to the left: circle |z-1| = 2 with poles 1 +- 2i
    if (res.endpoint_re - 1 != 1 || res.through_point - 1 != -1) {
        detail = "shifted arc does not match |z-1| = 2";
        return false;
    }
    detail = "discriminant -1, no isolated limits, poles 1+-2i after the unit shift";
    return true;
}

bool density(std::string& detail) {
    FindOpts opts;
    opts.tol = 1e-6; // location statistics; certification lives in criterion 7
    opts.exact_certification_degree_cap = 0;
    DensityStats stats = arc_density(200, opts);
    for (std::size_t k = 0; k + 1 < stats.max_gap.size(); ++k) {
        if (stats.max_gap[k + 1] > stats.max_gap[k] + 1e-12) {
            detail = "gap increased at cutoff " + std::to_string(stats.cutoffs[k + 1]);
            return false;
        }
    }
    const double g50 = stats.gap_at(50), g200 = stats.gap_at(200);
    if (!(g200 < 0.5 * g50)) {
        detail = "gap(200) = " + format_double(g200, 4) + " not below half of gap(50) = " +
                 format_double(g50, 4);
        return false;
    }
    detail = "gap(50) = " + format_double(g50, 4) + ", gap(200) = " + format_double(g200, 4) +
             ", monotone over all cutoffs";
    return true;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
    const std::vector<Criterion> criteria = {
        {"table-reproduction-vs-golden", 1.0, tables_match_goldens},
        {"triple-cross-validation", 30.0, triple_cross_validation},
        {"strong-unimodality-6..300", 10.0, strong_unimodality_full},
        {"recurrence-certificates", 0.0, certificates_full},
        {"ratio-bounds-exact", 0.0, ratio_bounds_exact},
        {"non-log-concavity", 0.0, non_log_concavity},
        {"circle-geometry-n<=60", 30.0, circle_geometry},
        {"lift-properties", 0.0, lift_properties},
        {"limit-of-zeros", 0.0, limit_of_zeros},
        {"arc-density", 0.0, density},
    };

    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        CriterionResult r;
        r.index = static_cast<int>(k) + 1;
        r.name = criteria[k].name;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.pass = criteria[k].body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[k].time_limit_seconds > 0 && r.seconds > criteria[k].time_limit_seconds) {
            r.pass = false;
            r.detail += " [time limit " + format_double(criteria[k].time_limit_seconds, 2) +
                        "s exceeded]";
        }
        if (progress)
            *progress << r.to_line() << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace hookpart
