#include "entgraph/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>

#include "entgraph/analysis.hpp"
#include "entgraph/errors.hpp"
#include "entgraph/graph.hpp"
#include "entgraph/json_io.hpp"
#include "entgraph/states.hpp"
#include "entgraph/tolerances.hpp"

namespace entgraph {

namespace {

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

EntangledGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    const auto pairs = all_pairs(n);
    for (size_t b = 0; b < pairs.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) edges.push_back(pairs[b]);
    }
    return EntangledGraph(n, std::move(edges));
}

std::uint64_t random_mask(std::mt19937_64& rng, int n_pairs) {
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << n_pairs) - 1);
    return dist(rng);
}

StateVector random_pure_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm2 = 0;
    for (cplx& a : amps) {
        a = cplx(gauss(rng), gauss(rng));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : amps) a *= inv;
    return StateVector(n, std::move(amps));
}

// Mixture of up to four product states |a>|b>: separable by construction.
TwoQubitDensity random_separable_density(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> comp_count(1, 4);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    const int m = comp_count(rng);

    std::vector<double> weights(m);
    double total = 0;
    for (double& w : weights) {
        w = unit(rng);
        total += w;
    }
    for (double& w : weights) w /= total;

    ComplexMatrix rho(4, 4);
    for (int t = 0; t < m; ++t) {
        cplx a[2], b[2];
        double na = 0, nb = 0;
        for (int s = 0; s < 2; ++s) {
            a[s] = cplx(gauss(rng), gauss(rng));
            b[s] = cplx(gauss(rng), gauss(rng));
            na += std::norm(a[s]);
            nb += std::norm(b[s]);
        }
        na = std::sqrt(na);
        nb = std::sqrt(nb);
        for (int s = 0; s < 2; ++s) {
            a[s] /= na;
            b[s] /= nb;
        }
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const cplx vr = a[r >> 1] * b[r & 1];
                const cplx vc = a[c >> 1] * b[c & 1];
                rho(r, c) += weights[t] * vr * std::conj(vc);
            }
        }
    }
    return TwoQubitDensity(std::move(rho), 1, 2);
}

struct CriterionRun {
    CriterionResult result;

    CriterionRun(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
        result.passed = true;
    }

    void fail(std::string detail) {
        if (result.passed) {
            result.passed = false;
            result.detail = std::move(detail);
        }
    }

    void fail_instance(std::string detail, const EntangledGraph& g, const std::string& state_json) {
        if (result.passed) {
            fail(std::move(detail));
            result.failing_graph = serialize_graph(g);
            result.failing_state_json = state_json;
        }
    }
};

// 1. Every graph on N = 3..5 (exhaustive) and sampled graphs on N = 6..max_n
//    synthesize to a state whose realized graph equals the target, within the
//    runtime budget.
CriterionResult criterion_realizability(const SelftestConfig& cfg) {
    CriterionRun run(1, "universal realizability");
    const auto started = std::chrono::steady_clock::now();

    long exhaustive = 0;
    const int exhaustive_top = std::min(cfg.max_n, 5);
    for (int n = 3; n <= exhaustive_top && run.result.passed; ++n) {
        const int n_pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_pairs); ++mask) {
            EntangledGraph g = graph_from_mask(n, mask);
            try {
                StateVector state = synthesize(g);
                AnalysisReport report = verify_realization(g, state);
                if (!report.match.value_or(false)) {
                    run.fail_instance(fmt("realized graph differs from target (N=%d, k=%d)", n,
                                          g.edge_count()),
                                      g, state_to_json(state));
                    break;
                }
                ++exhaustive;
            } catch (const std::exception& ex) {
                run.fail_instance(fmt("synthesis failed (N=%d): %s", n, ex.what()), g, "");
                break;
            }
        }
    }

    long sampled = 0;
    std::mt19937_64 rng(cfg.seed + 1);
    for (int n = 6; n <= cfg.max_n && run.result.passed; ++n) {
        const int n_pairs = n * (n - 1) / 2;
        for (int t = 0; t < cfg.samples; ++t) {
            EntangledGraph g = graph_from_mask(n, random_mask(rng, n_pairs));
            try {
                StateVector state = synthesize(g);
                AnalysisReport report = verify_realization(g, state);
                if (!report.match.value_or(false)) {
                    run.fail_instance(fmt("realized graph differs from target (N=%d, k=%d)", n,
                                          g.edge_count()),
                                      g, state_to_json(state));
                    break;
                }
                ++sampled;
            } catch (const std::exception& ex) {
                run.fail_instance(fmt("synthesis failed (N=%d): %s", n, ex.what()), g, "");
                break;
            }
        }
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (run.result.passed && elapsed >= 60.0) {
        run.fail("runtime budget exceeded (60 s)");
    }
    if (run.result.passed) {
        run.result.detail = fmt("%ld exhaustive graphs (N=3..%d) + %ld sampled (N=6..%d) realized",
                                exhaustive, exhaustive_top, sampled, cfg.max_n);
    }
    return run.result;
}

// 2. Construction states carry at most k+2 nonzero amplitudes.
CriterionResult criterion_sparse_support(const SelftestConfig& cfg) {
    CriterionRun run(2, "sparse support");
    long checked = 0;

    auto check_graph = [&](const EntangledGraph& g) {
        const int k = g.edge_count();
        if (k < 1 || g.n_vertices() < 3) return true;
        StateVector state = general_construction(g, default_params(k));
        const int nz = state.nonzero_count();
        if (nz > k + 2) {
            run.fail_instance(fmt("construction state has %d nonzero amplitudes, budget k+2=%d",
                                  nz, k + 2),
                              g, state_to_json(state));
            return false;
        }
        ++checked;
        return true;
    };

    const int exhaustive_top = std::min(cfg.max_n, 5);
    for (int n = 3; n <= exhaustive_top && run.result.passed; ++n) {
        const int n_pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_pairs); ++mask) {
            if (!check_graph(graph_from_mask(n, mask))) break;
        }
    }
    std::mt19937_64 rng(cfg.seed + 2);
    for (int n = 6; n <= cfg.max_n && run.result.passed; ++n) {
        const int n_pairs = n * (n - 1) / 2;
        for (int t = 0; t < cfg.samples; ++t) {
            if (!check_graph(graph_from_mask(n, random_mask(rng, n_pairs)))) break;
        }
    }
    if (run.result.passed) {
        run.result.detail = fmt("%ld construction states within the k+2 budget", checked);
    }
    return run.result;
}

// 3. Closed-form reduced matrices equal numeric partial traces entrywise on
//    the construction's validity domain, exhaustively for N = 5, 6.
CriterionResult criterion_closed_form_reductions(const SelftestConfig& cfg) {
    CriterionRun run(3, "closed-form reduced matrices");
    if (cfg.max_n < 5) {
        run.result.detail = "skipped (needs max_n >= 5)";
        return run.result;
    }
    double worst = 0;
    long compared = 0;
    const int top = std::min(cfg.max_n, 6);
    for (int n = 5; n <= top && run.result.passed; ++n) {
        const auto pairs = all_pairs(n);
        const int n_pairs = static_cast<int>(pairs.size());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_pairs); ++mask) {
            EntangledGraph g = graph_from_mask(n, mask);
            const SynthesisParams p = default_params(g.edge_count());
            StateVector state = general_construction(g, p);
            for (const auto& [i, j] : pairs) {
                const GraphStats st = graph_stats(g, i, j);
                TwoQubitDensity numeric = reduce_pair(state, i, j);
                TwoQubitDensity closed =
                    st.is_edge ? cf_reduced_edge(p, st) : cf_reduced_nonedge(p, st);
                const double diff = max_abs_diff(numeric.matrix, closed.matrix);
                worst = std::max(worst, diff);
                ++compared;
                if (diff > 1e-12) {
                    run.fail_instance(fmt("entrywise deviation %.3e for pair (%d, %d), N=%d",
                                          diff, i, j, n),
                                      g, state_to_json(state));
                    break;
                }
            }
            if (!run.result.passed) break;
        }
    }
    if (run.result.passed) {
        run.result.detail =
            fmt("%ld pair matrices match entrywise, worst deviation %.2e (N=5..%d exhaustive)",
                compared, worst, top);
    }
    return run.result;
}

// 4. The non-edge R spectrum formula reproduces the Hermitian-surrogate
//    spectrum on 1000 random (graph, pair) instances.
CriterionResult criterion_nonedge_spectrum(const SelftestConfig& cfg) {
    CriterionRun run(4, "non-edge R spectrum");
    if (cfg.max_n < 5) {
        run.result.detail = "skipped (needs max_n >= 5)";
        return run.result;
    }
    std::mt19937_64 rng(cfg.seed + 4);
    std::uniform_int_distribution<int> pick_n(5, std::min(cfg.max_n, 8));
    double worst = 0;
    const int wanted = 1000;
    int done = 0;
    while (done < wanted && run.result.passed) {
        const int n = pick_n(rng);
        const int n_pairs = n * (n - 1) / 2;
        std::uniform_int_distribution<std::uint64_t> dist(
            1, (std::uint64_t{1} << n_pairs) - 1);
        EntangledGraph g = graph_from_mask(n, dist(rng));
        std::vector<Edge> nonedges;
        for (const auto& [i, j] : all_pairs(n)) {
            if (!g.has_edge(i, j)) nonedges.push_back({i, j});
        }
        if (nonedges.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, nonedges.size() - 1);
        const auto [i, j] = nonedges[pick(rng)];

        const SynthesisParams p = default_params(g.edge_count());
        StateVector state = general_construction(g, p);
        TwoQubitDensity rho = reduce_pair(state, i, j);

        const ComplexMatrix root = hermitian_sqrt(rho.matrix);
        Spectrum surrogate =
            hermitian_eigenvalues(multiply(multiply(root, spin_flip(rho)), root));
        const auto closed = cf_nonedge_R_spectrum(p, graph_stats(g, i, j));
        for (int t = 0; t < 4; ++t) {
            const double diff = std::abs(surrogate.eigenvalues[t] - closed[t]);
            worst = std::max(worst, diff);
            if (diff > 1e-12) {
                run.fail_instance(
                    fmt("spectrum deviation %.3e at position %d, pair (%d, %d), N=%d", diff, t,
                        i, j, n),
                    g, state_to_json(state));
                break;
            }
        }
        ++done;
    }
    if (run.result.passed) {
        run.result.detail = fmt("%d random instances match, worst deviation %.2e", done, worst);
    }
    return run.result;
}

// 5. Star states switch their non-hub pairs from separable to entangled
//    exactly at the alpha bound, while the hub stays entangled throughout;
//    closed-form PT minima match numeric ones near the bound.
CriterionResult criterion_star_boundary(const SelftestConfig& cfg) {
    CriterionRun run(5, "star-state phase boundary");
    if (cfg.max_n < 5) {
        run.result.detail = "skipped (needs max_n >= 5)";
        return run.result;
    }
    double worst = 0;
    const int top = std::min(cfg.max_n, 8);
    for (int n = 5; n <= top && run.result.passed; ++n) {
        const double bound = cf_star_alpha_bound(n);

        // Window straddling the bound; the closed form is the spectral
        // minimum throughout this window.
        for (int step = 0; step <= 60; ++step) {
            const double alpha = bound - 0.05 + 0.001 * step;
            StateVector state = star_state(n, alpha);

            const double pt_nonhub = pt_min_eigenvalue(reduce_pair(state, 2, 3));
            const double cf_nonhub = cf_star_pt_min_nonedge(alpha, n);
            const double pt_hub = pt_min_eigenvalue(reduce_pair(state, 1, 2));
            const double cf_hub = cf_star_pt_min_edge(alpha, n);
            worst = std::max({worst, std::abs(pt_nonhub - cf_nonhub),
                              std::abs(pt_hub - cf_hub)});

            if (alpha <= bound && pt_nonhub < -1e-10) {
                run.fail(fmt("N=%d alpha=%.4f below bound but PT min = %.3e", n, alpha,
                             pt_nonhub));
                break;
            }
            if (std::abs(pt_nonhub - cf_nonhub) > 1e-12 || std::abs(pt_hub - cf_hub) > 1e-12) {
                run.fail(fmt("N=%d alpha=%.4f closed-form PT deviates by %.3e", n, alpha,
                             std::max(std::abs(pt_nonhub - cf_nonhub),
                                      std::abs(pt_hub - cf_hub))));
                break;
            }
            const double c_hub = concurrence(reduce_pair(state, 1, 2));
            if (c_hub <= tol::pt_negative) {
                run.fail(fmt("N=%d alpha=%.4f hub concurrence %.3e not positive", n, alpha,
                             c_hub));
                break;
            }
        }
        if (!run.result.passed) break;

        const double pt_above =
            pt_min_eigenvalue(reduce_pair(star_state(n, bound + 0.01), 2, 3));
        if (pt_above >= -tol::pt_negative) {
            run.fail(fmt("N=%d alpha=bound+0.01 still PPT: PT min = %.3e", n, pt_above));
            break;
        }

        // Coarse whole-range sweep: hub entangled for every alpha in (0, 1),
        // non-hub separable everywhere below the bound.
        for (int step = 1; step <= 99; ++step) {
            const double alpha = 0.01 * step;
            StateVector state = star_state(n, alpha);
            const double c_hub = concurrence(reduce_pair(state, 1, 2));
            if (c_hub <= tol::pt_negative) {
                run.fail(fmt("N=%d alpha=%.2f hub concurrence %.3e not positive", n, alpha,
                             c_hub));
                break;
            }
            if (alpha <= bound) {
                const double pt_nonhub = pt_min_eigenvalue(reduce_pair(state, 2, 3));
                if (pt_nonhub < -1e-10) {
                    run.fail(fmt("N=%d alpha=%.2f below bound but PT min = %.3e", n, alpha,
                                 pt_nonhub));
                    break;
                }
            }
        }
    }
    if (run.result.passed) {
        run.result.detail =
            fmt("N=5..%d boundary swept, closed forms match numerics within %.2e", top, worst);
    }
    return run.result;
}

// 6. Every pair of the W state carries concurrence 2/N.
CriterionResult criterion_w_concurrence(const SelftestConfig& cfg) {
    CriterionRun run(6, "W-state concurrence");
    const int top = std::min(cfg.max_n, 8);
    double worst = 0;
    for (int n = 3; n <= top && run.result.passed; ++n) {
        StateVector w = w_state(n);
        const double expected = 2.0 / n;
        for (const auto& [i, j] : all_pairs(n)) {
            const double c = concurrence(reduce_pair(w, i, j));
            const double diff = std::abs(c - expected);
            worst = std::max(worst, diff);
            if (diff > 1e-10) {
                run.fail(fmt("W_%d pair (%d, %d): C = %.15f, expected 2/N = %.15f", n, i, j, c,
                             expected));
                break;
            }
        }
    }
    if (run.result.passed) {
        run.result.detail = fmt("N=3..%d all pairs equal 2/N within %.2e", top, worst);
    }
    return run.result;
}

// 7. The catalog's counterexamples land where they should: the maximal-hub
//    star attempt realizes the complete graph, and superposed Bell pairs
//    realize the triangle.
CriterionResult criterion_counterexamples(const SelftestConfig& cfg) {
    CriterionRun run(7, "counterexample states");
    const int top = std::min(cfg.max_n, 6);
    for (int n = 4; n <= top && run.result.passed; ++n) {
        EntangledGraph complete = graph_from_mask(n, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
        StateVector state = dur_star(n);
        AnalysisReport report = realized_graph(state);
        if (!(report.realized_graph == complete)) {
            run.fail_instance(fmt("dur_star(%d) did not realize the complete graph", n), complete,
                              state_to_json(state));
        }
    }
    EntangledGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    for (double alpha : {0.3, 0.5, 0.8}) {
        if (!run.result.passed) break;
        StateVector state = superposed_bells3(alpha);
        AnalysisReport report = realized_graph(state);
        if (!(report.realized_graph == triangle)) {
            run.fail_instance(fmt("superposed_bells3(%.1f) did not realize the triangle", alpha),
                              triangle, state_to_json(state));
        }
    }
    if (run.result.passed) {
        run.result.detail =
            fmt("dur_star N=4..%d complete; superposed Bell pairs give the triangle", top);
    }
    return run.result;
}

// 8. The chain family keeps C(1,3) at zero across the amplitude grid while
//    interior points entangle both chain links.
CriterionResult criterion_chain_family(const SelftestConfig&) {
    CriterionRun run(8, "three-qubit chain family");
    int valid = 0, interior = 0;
    double worst13 = 0;
    for (int ia = 1; ia <= 5 && run.result.passed; ++ia) {
        for (int ib = 1; ib <= 5 && run.result.passed; ++ib) {
            for (int ic = 1; ic <= 5; ++ic) {
                const double a = ia / 6.0, b = ib / 6.0, g = ic / 6.0;
                const double s2 = a * a + b * b + g * g;
                if (s2 > 1.0) continue;
                StateVector state = chain3(a, b, g);
                const double c13 = concurrence(reduce_pair(state, 1, 3));
                worst13 = std::max(worst13, c13);
                ++valid;
                if (c13 >= 1e-12) {
                    run.fail(fmt("chain3(%.3f, %.3f, %.3f): C(1,3) = %.3e", a, b, g, c13));
                    break;
                }
                if (s2 <= 35.0 / 36.0) {
                    ++interior;
                    const double c12 = concurrence(reduce_pair(state, 1, 2));
                    const double c23 = concurrence(reduce_pair(state, 2, 3));
                    if (c12 <= 1e-9 || c23 <= 1e-9) {
                        run.fail(fmt("chain3(%.3f, %.3f, %.3f): interior point with C12=%.3e "
                                     "C23=%.3e",
                                     a, b, g, c12, c23));
                        break;
                    }
                }
            }
        }
    }
    if (run.result.passed) {
        run.result.detail = fmt("%d valid grid points with C(1,3) <= %.1e; %d interior points "
                                "entangle both links",
                                valid, worst13, interior);
    }
    return run.result;
}

// 9. Bell-pair mixtures realize every graph exactly, including the weighted
//    two-component three-qubit mixture.
CriterionResult criterion_molecules(const SelftestConfig& cfg) {
    CriterionRun run(9, "mixed molecules");
    long checked = 0;
    const int top = std::min(cfg.max_n, 5);
    for (int n = 2; n <= top && run.result.passed; ++n) {
        const int n_pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_pairs); ++mask) {
            EntangledGraph g = graph_from_mask(n, mask);
            PureEnsemble molecule = dur_molecule(g);
            AnalysisReport report = verify_realization(g, molecule);
            if (!report.match.value_or(false)) {
                run.fail_instance(fmt("molecule mismatch (N=%d, k=%d)", n, g.edge_count()), g,
                                  ensemble_to_json(molecule));
                break;
            }
            ++checked;
        }
    }
    EntangledGraph path(3, {{1, 2}, {2, 3}});
    for (double a : {0.25, 0.5, 0.75}) {
        if (!run.result.passed) break;
        PureEnsemble mixture(3, {{a, bell_pair_product(3, 1, 2)},
                                 {1.0 - a, bell_pair_product(3, 2, 3)}});
        AnalysisReport report = verify_realization(path, mixture);
        if (!report.match.value_or(false)) {
            run.fail_instance(fmt("weighted two-Bell mixture (a=%.2f) did not realize the path",
                                  a),
                              path, ensemble_to_json(mixture));
        }
    }
    if (run.result.passed) {
        run.result.detail = fmt("%ld molecules realized their graphs (N=2..%d exhaustive); "
                                "weighted path mixture at a=0.25/0.5/0.75",
                                checked, top);
    }
    return run.result;
}

// 10. Concurrence and the partial-transpose sign agree on every random
//     density in a 10,000-instance corpus.
CriterionResult criterion_agreement(const SelftestConfig& cfg) {
    CriterionRun run(10, "criteria agreement");
    std::mt19937_64 rng(cfg.seed + 10);
    std::uniform_int_distribution<int> pick_n(3, 6);
    const int total = 10000;
    int disagreements = 0;
    for (int t = 0; t < total; ++t) {
        TwoQubitDensity rho = [&]() {
            if (t % 2 == 0) {
                const int n = pick_n(rng);
                StateVector psi = random_pure_state(rng, n);
                std::uniform_int_distribution<int> pick_i(1, n - 1);
                const int i = pick_i(rng);
                std::uniform_int_distribution<int> pick_j(i + 1, n);
                return reduce_pair(psi, i, pick_j(rng));
            }
            return random_separable_density(rng);
        }();
        const double c = concurrence(rho);
        const double pt = pt_min_eigenvalue(rho);
        const bool by_c = c > tol::pt_negative;
        const bool by_pt = pt < -tol::pt_negative;
        if (by_c != by_pt) {
            ++disagreements;
            if (run.result.passed) {
                run.fail(fmt("instance %d: C = %.3e but PT min = %.3e", t, c, pt));
            }
        }
    }
    if (run.result.passed) {
        run.result.detail = fmt("%d random densities, zero criteria disagreements", total);
    } else {
        run.result.detail += fmt(" (%d disagreements total)", disagreements);
    }
    return run.result;
}

} // namespace

std::vector<CriterionResult>
run_selftest(const SelftestConfig& config,
             const std::function<void(const CriterionResult&)>& on_result) {
    if (config.max_n < 3 || config.max_n > 8) {
        throw std::invalid_argument("selftest requires 3 <= max_n <= 8");
    }
    if (config.samples < 1) {
        throw std::invalid_argument("selftest requires at least one sample per N");
    }

    using Criterion = CriterionResult (*)(const SelftestConfig&);
    static constexpr Criterion criteria[] = {
        criterion_realizability,   criterion_sparse_support, criterion_closed_form_reductions,
        criterion_nonedge_spectrum, criterion_star_boundary,  criterion_w_concurrence,
        criterion_counterexamples, criterion_chain_family,   criterion_molecules,
        criterion_agreement,
    };

    std::vector<CriterionResult> results;
    for (Criterion criterion : criteria) {
        CriterionResult result = [&]() {
            try {
                return criterion(config);
            } catch (const std::exception& ex) {
                CriterionResult r;
                r.id = static_cast<int>(results.size()) + 1;
                r.name = "criterion aborted";
                r.passed = false;
                r.detail = ex.what();
                return r;
            }
        }();
        if (on_result) on_result(result);
        results.push_back(std::move(result));
    }
    return results;
}

std::string format_result_line(const CriterionResult& r) {
    std::string line = r.passed ? "[PASS]" : "[FAIL]";
    line += fmt(" criterion %d: %s", r.id, r.name.c_str());
    if (!r.detail.empty()) {
        line += " (" + r.detail + ")";
    }
    return line;
}

} // namespace entgraph
