// Command-line front end: exact tables, verification suites, root
// computations and the SVG plot, plus the full acceptance run.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include "hookpart/acceptance.hpp"
#include "hookpart/certificates.hpp"
#include "hookpart/partition.hpp"
#include "hookpart/polyseq.hpp"
#include "hookpart/rootgeom.hpp"
#include "hookpart/sequence.hpp"
#include "hookpart/svg.hpp"
#include "hookpart/unimodality.hpp"

namespace {

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    f << content;
    return 0;
}

// returns the number of FAIL reports printed
int run_suite(const std::string& suite, int n_max, int m_max, double tol) {
    using namespace hookpart;
    int fails = 0;
    auto emit = [&fails](const CheckReport& r) {
        std::cout << r.to_lines();
        if (!r.pass())
            ++fails;
    };

    const bool all = suite == "all";
    if (all || suite == "tables") {
        const int depth = std::min({n_max, 20, kDefaultEnumerationCap});
        auto [by_even, by_pairs] = oracle_tables(depth);
        const TriangleTable rec = a_table(depth);
        CheckReport r;
        r.name = "tables-cross-validation";
        for (int n = 1; n <= depth; ++n)
            for (int m = 0; m < n; ++m) {
                ++r.checked;
                if (by_even.at(n, m) != by_pairs.at(n, m) || by_even.at(n, m) != rec.at(n, m) ||
                    rec.at(n, m) != a_closed(n, m))
                    r.fail("mismatch at (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
            }
        emit(r);
    }
    if (all || suite == "certificates") {
        const int mm = std::clamp(m_max, 1, 200);
        const int depth = std::max({n_max, 4 * mm + 3, 10});
        const SequenceView view(depth);
        emit(verify_delta_certificate(view, {4, std::min(n_max, depth)}, {0, m_max}));
        emit(verify_g_certificate(view, {2, std::min(n_max, depth - 4)}, {0, mm}));
        emit(verify_degenerate_identity(view, {1, mm}));
        emit(verify_4m2_reduction(view, {1, mm}));
        emit(verify_boundary_formulas(view, {1, depth - 5}));
    }
    if (all || suite == "unimodality") {
        const SequenceView view(std::max(6, n_max));
        emit(verify_strong_unimodality(view, {6, view.n_max()}));
        emit(verify_log_concavity_defect(view, {3, view.n_max()}));
        emit(check_sign_pattern(view, view.n_max()));
    }
    if (all || suite == "ratios") {
        const int mm = std::max(5, m_max);
        const SequenceView view(4 * mm);
        emit(verify_ratio_bounds(view, {5, mm}));
        emit(verify_upper_10_9(view, {3, mm}));
    }
    if (all || suite == "roots") {
        FindOpts opts;
        opts.tol = tol > 0 ? tol : 1e-10;
        CheckReport r;
        r.name = "circle-geometry";
        const int depth = std::max(2, std::min(n_max, 200));
        auto family = f_family(depth);
        for (int n = 2; n <= depth; ++n) {
            ++r.checked;
            try {
                ZeroSet zs = find_roots(family[static_cast<std::size_t>(n - 1)],
                                        "F_" + std::to_string(n), opts);
                auto cert = certify_circle(zs);
                if (!cert.pass)
                    r.fail("F_" + std::to_string(n) + ": " + cert.offenders.front());
            } catch (const std::exception& e) {
                r.fail(e.what());
            }
        }
        emit(r);
        emit(verify_lift_roots(std::clamp(n_max, 2, 60)));
    }
    if (all || suite == "limits") {
        CheckReport r;
        r.name = "limit-of-zeros";
        ++r.checked;
        try {
            auto res = wz_limits(1, 0, -1, 2);
            if (res.discriminant != -1 || !res.isolated.empty() || res.endpoint_re != 2 ||
                res.endpoint_im_coeff != 2 || res.through_point != 0)
                r.fail("shifted-family limit data deviates from the expected arc");
        } catch (const std::exception& e) {
            r.fail(e.what());
        }
        emit(r);
    }
    return fails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables, verifications and root geometry for the even-parts partition statistic"};
    app.require_subcommand(1);

    int table_n_max = 15;
    int verify_n_max = 60;
    int verify_m_max = 60;
    int roots_n = 2;
    int plot_n_max = 60;
    double tol = 0.0;
    std::string out_path;
    std::string suite = "all";

    auto* cmd_table = app.add_subcommand("table", "A(n,m) triangle as CSV");
    cmd_table->add_option("--n-max", table_n_max, "number of rows")->check(CLI::PositiveNumber);
    cmd_table->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_delta = app.add_subcommand("delta-table", "Delta(n,m) triangle as CSV");
    cmd_delta->add_option("--n-max", table_n_max, "number of rows")->check(CLI::PositiveNumber);
    cmd_delta->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_verify =
        app.add_subcommand("verify", "run a verification suite, one PASS/FAIL line per claim");
    cmd_verify->add_option("--suite", suite, "tables|certificates|unimodality|ratios|roots|limits|all")
        ->check(CLI::IsMember({"tables", "certificates", "unimodality", "ratios", "roots", "limits", "all"}));
    cmd_verify->add_option("--n-max", verify_n_max, "depth in n (default 60)");
    cmd_verify->add_option("--m-max", verify_m_max, "depth in m (default 60)");
    cmd_verify->add_option("--tol", tol, "residual tolerance override for root work");

    auto* cmd_roots =
        app.add_subcommand("roots", "zeros of one generating polynomial as CSV lines n,re,im,residual");
    cmd_roots->add_option("--n", roots_n, "polynomial index (degree n-1)")->check(CLI::Range(2, 500));
    cmd_roots->add_option("--tol", tol, "residual tolerance (default 1e-12)");
    cmd_roots->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_plot =
        app.add_subcommand("plot", "SVG of all zeros of F_2..F_n against the reference circle");
    cmd_plot->add_option("--n-max", plot_n_max, "largest polynomial index")->check(CLI::Range(2, 500));
    cmd_plot->add_option("--out", out_path, "output file (default roots.svg)");

    auto* cmd_accept = app.add_subcommand("acceptance", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_table->parsed()) {
            return write_output(hookpart::a_table(table_n_max).to_csv(), out_path);
        }
        if (cmd_delta->parsed()) {
            return write_output(hookpart::SequenceView(table_n_max).delta_table().to_csv(), out_path);
        }
        if (cmd_verify->parsed()) {
            const int fails = run_suite(suite, verify_n_max, verify_m_max, tol);
            return fails == 0 ? 0 : 1;
        }
        if (cmd_roots->parsed()) {
            hookpart::FindOpts opts;
            if (tol > 0)
                opts.tol = tol;
            hookpart::ZeroSet zs =
                hookpart::find_roots(hookpart::f_poly(roots_n), "F_" + std::to_string(roots_n), opts);
            return write_output(zs.to_csv(roots_n), out_path);
        }
        if (cmd_plot->parsed()) {
            hookpart::FindOpts opts;
            opts.tol = 1e-9;
            opts.exact_certification_degree_cap = 0;
            std::vector<hookpart::ZeroSet> sets;
            auto family = hookpart::f_family(plot_n_max);
            std::vector<std::complex<double>> warm;
            for (int n = 2; n <= plot_n_max; ++n) {
                sets.push_back(hookpart::find_roots_warm(family[static_cast<std::size_t>(n - 1)],
                                                         "F_" + std::to_string(n), warm, opts));
                warm = sets.back().points;
                warm.push_back(hookpart::widest_gap_seed(warm));
            }
            return write_output(hookpart::render_roots_svg(sets),
                                out_path.empty() ? "roots.svg" : out_path);
        }
        if (cmd_accept->parsed()) {
            auto results = hookpart::run_acceptance(&std::cout);
            for (const auto& r : results)
                if (!r.pass)
                    return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
