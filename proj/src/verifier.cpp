#include "nakayama/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nakayama/filtration.hpp"
#include "nakayama/invariants.hpp"

namespace nakayama {

EnumerationBudget EnumerationBudget::with_defaults(int max_vertices)
{
    EnumerationBudget b;
    b.max_vertices = max_vertices;
    b.max_length = 2 * max_vertices + 1;
    return b;
}

void check_budget(const EnumerationBudget& budget)
{
    if (budget.max_vertices < 2)
        throw std::invalid_argument("budget: max_vertices must be at least 2");
    if (budget.min_vertices < 1 || budget.min_vertices > budget.max_vertices)
        throw std::invalid_argument("budget: min_vertices must lie in 1..max_vertices");
    if (budget.cyclic && budget.max_length < 2)
        throw std::invalid_argument("budget: max_length must be at least 2 for cyclic algebras");
    if (budget.max_length < 1)
        throw std::invalid_argument("budget: max_length must be positive");
    if (!budget.cyclic && !budget.linear)
        throw std::invalid_argument("budget: no algebra kind selected");
}

namespace {

void extend_cyclic(std::vector<int>& series, int n, int cap, bool dedup,
                   const std::function<void(const Algebra&)>& visit)
{
    if (static_cast<int>(series.size()) == n) {
        if (series.front() < series.back() - 1)
            return;
        Algebra a = Algebra::cyclic(series);
        if (dedup && !is_canonical(a))
            return;
        visit(a);
        return;
    }
    const int low = series.empty() ? 2 : std::max(2, series.back() - 1);
    for (int c = low; c <= cap; ++c) {
        // A canonical representative starts with its minimum entry.
        if (dedup && !series.empty() && c < series.front())
            continue;
        series.push_back(c);
        extend_cyclic(series, n, cap, dedup, visit);
        series.pop_back();
    }
}

void extend_linear(std::vector<int>& series, int n, int cap, const std::function<void(const Algebra&)>& visit)
{
    const int i = static_cast<int>(series.size()) + 1;
    if (i == n) {
        if (series.empty() || series.back() <= 2) {
            series.push_back(1);
            visit(Algebra::linear(series));
            series.pop_back();
        }
        return;
    }
    const int low = series.empty() ? 1 : std::max(1, series.back() - 1);
    const int high = std::min(cap, n - i + 1);
    for (int c = low; c <= high; ++c) {
        series.push_back(c);
        extend_linear(series, n, cap, visit);
        series.pop_back();
    }
}

}  // namespace

void for_each_algebra(const EnumerationBudget& budget, const std::function<void(const Algebra&)>& visit)
{
    check_budget(budget);
    std::vector<int> series;
    if (budget.cyclic)
        for (int n = std::max(2, budget.min_vertices); n <= budget.max_vertices; ++n)
            extend_cyclic(series, n, budget.max_length, budget.dedup, visit);
    if (budget.linear)
        for (int n = budget.min_vertices; n <= budget.max_vertices; ++n)
            extend_linear(series, n, budget.max_length, visit);
}

std::vector<Algebra> enumerate(const EnumerationBudget& budget)
{
    std::vector<Algebra> out;
    for_each_algebra(budget, [&](const Algebra& a) { out.push_back(a); });
    return out;
}

const std::vector<TheoremCheck>& theorem_catalogue()
{
    static const std::vector<TheoremCheck> catalogue = {
        {"T1", "phi-dimension minus finitistic dimension", "cyclic => findim <= phidim <= findim + 1"},
        {"T2", "Gorenstein dimension equals phi-dimension", "cyclic, Gorenstein => gordim = phidim"},
        {"T3", "fixed points of epsilon", "cyclic => (self-injective <=> epsilon(A) = A up to rotation)"},
        {"T4", "phi-dimension reduction", "cyclic, gldim = inf, not self-injective => epsilon cyclic, gldim epsilon = inf, phidim = phidim epsilon + 2"},
        {"T5", "parity and 2r bound of phi-dimension", "cyclic, gldim = inf => phidim even and phidim <= 2r"},
        {"T6", "small values of phi-dimension", "cyclic => phidim != 1, (phidim = 0 <=> self-injective); gldim = inf => (phidim = 2 <=> epsilon self-injective and A not)"},
        {"T7", "finitistic dimension reduction", "cyclic, findim > 2 => findim = findim epsilon + 2; findim = 2, gldim = inf => findim epsilon = 0"},
        {"T8", "phi-dimension two", "cyclic, phidim = 2 => phidim - findim <= 1"},
        {"T9", "Gorenstein reduction", "cyclic, Gorenstein, not self-injective, gordim >= 2 => epsilon Gorenstein, gordim = gordim epsilon + 2"},
        {"T10", "dominant dimension reduction", "cyclic, 3 <= domdim < inf => domdim = domdim epsilon + 2"},
        {"T11", "dominant dimension bounds", "cyclic, not self-injective => domdim <= phidim, domdim <= 2r"},
        {"T12", "global dimension bound from an even simple", "m finite => gldim finite, gldim <= N + m - 1"},
        {"T13", "global dimension bound 2N - 2", "cyclic, gldim finite => gldim <= 2N - 2"},
        {"T14", "left and right finitistic dimensions", "cyclic => findim = findim_op"},
        {"T15", "left and right phi-dimensions", "cyclic => phidim = phidim_op"},
        {"T16", "finitistic dimension one", "cyclic => (findim = 1 <=> findim_op = 1)"},
        {"T17", "unified 2r bound", "cyclic, not self-injective => phidim, findim, gordim (Gorenstein), domdim <= 2r <= 2N - 2"},
        {"T18", "linear algebras and simples of projective dimension two", "linear => gldim <= N - 1, connected with gldim >= 2 => some simple has pdim 2; cyclic with a simple of pdim 2 => epsilon linear"},
    };
    return catalogue;
}

namespace {

/// Everything the theorem checks read, computed once per algebra.
struct Profile {
    InvariantReport report;
    std::vector<ExtNat> simple_pdims;
    std::optional<EpsilonResult> eps;
    // Invariants of epsilon(A), aggregated over components.
    ExtNat eps_phi, eps_findim, eps_gldim, eps_gordim, eps_domdim;
    bool eps_gorenstein = false;
    bool eps_self_injective = false;
    bool eps_is_rotation_of_input = false;
};

Profile make_profile(const Algebra& algebra)
{
    Profile p;
    p.report = compute_report(algebra);
    for (int v = 1; v <= algebra.vertices(); ++v)
        p.simple_pdims.push_back(pdim(algebra, {v, 1}));
    if (!algebra.is_cyclic())
        return p;

    p.eps = epsilon(algebra);
    const auto& eps = *p.eps;
    p.eps_gorenstein = true;
    p.eps_gordim = 0;
    p.eps_domdim = ExtNat::infinity();
    for (const auto& comp : eps.components) {
        const auto rep = compute_report(comp.algebra);
        p.eps_phi = max(p.eps_phi, rep.phi_dim);
        p.eps_findim = max(p.eps_findim, rep.findim);
        p.eps_gldim = max(p.eps_gldim, rep.gldim);
        p.eps_gorenstein = p.eps_gorenstein && rep.gorenstein;
        p.eps_gordim = max(p.eps_gordim, rep.gordim);
        // The regular module of a product is the sum of the factors' regular modules.
        p.eps_domdim = min(p.eps_domdim, rep.domdim);
    }
    p.eps_self_injective = eps.is_cyclic() && is_self_injective(eps.components.front().algebra);
    p.eps_is_rotation_of_input =
        eps.is_cyclic() && canonical_rotation(eps.components.front().algebra) == canonical_rotation(algebra);
    return p;
}

std::string values(std::initializer_list<std::pair<const char*, ExtNat>> items)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : items) {
        if (!first)
            os << ", ";
        first = false;
        os << name << "=" << value;
    }
    return os.str();
}

CheckResult judge(bool hypothesis, bool conclusion, const std::string& detail)
{
    if (!hypothesis)
        return {Verdict::vacuous, {}};
    if (conclusion)
        return {Verdict::pass, {}};
    return {Verdict::violation, detail};
}

bool is_even(ExtNat x) { return x.is_finite() && x.value() % 2 == 0; }

}  // namespace

CheckOutcome run_checks(const Algebra& algebra)
{
    const Profile p = make_profile(algebra);
    const auto& rep = p.report;
    const bool cyclic = algebra.is_cyclic();
    const int n = algebra.vertices();
    const int r = rep.r;
    const ExtNat inf = ExtNat::infinity();
    const bool gl_infinite = rep.gldim.is_infinite();
    const bool self_inj = rep.self_injective;

    CheckOutcome out;
    auto& res = out.results;

    // T1
    res.push_back(judge(cyclic, rep.findim <= rep.phi_dim && rep.phi_dim <= rep.findim + 1,
                        values({{"phidim", rep.phi_dim}, {"findim", rep.findim}})));
    // T2
    res.push_back(judge(cyclic && rep.gorenstein, rep.gordim == rep.phi_dim,
                        values({{"gordim", rep.gordim}, {"phidim", rep.phi_dim}})));
    // T3
    res.push_back(judge(cyclic, self_inj == p.eps_is_rotation_of_input,
                        std::string("self_injective=") + (self_inj ? "true" : "false") +
                            ", epsilon equals input up to rotation=" + (p.eps_is_rotation_of_input ? "true" : "false")));
    // T4
    {
        const bool hyp = cyclic && gl_infinite && !self_inj;
        const bool concl = hyp && p.eps->is_cyclic() && p.eps_gldim.is_infinite() && rep.phi_dim == p.eps_phi + 2;
        res.push_back(judge(hyp, concl,
                            values({{"phidim", rep.phi_dim}, {"phidim_eps", p.eps_phi}, {"gldim_eps", p.eps_gldim}}) +
                                (hyp && !p.eps->is_cyclic() ? ", epsilon not cyclic" : "")));
    }
    // T5
    res.push_back(judge(cyclic && gl_infinite, is_even(rep.phi_dim) && rep.phi_dim <= 2 * r,
                        values({{"phidim", rep.phi_dim}, {"2r", 2 * r}})));
    // T6
    {
        bool concl = rep.phi_dim != 1 && ((rep.phi_dim == 0) == self_inj);
        if (cyclic && gl_infinite)
            concl = concl && ((rep.phi_dim == 2) == (p.eps_self_injective && !self_inj));
        res.push_back(judge(cyclic, concl,
                            values({{"phidim", rep.phi_dim}}) + ", self_injective=" + (self_inj ? "true" : "false") +
                                ", epsilon self_injective=" + (p.eps_self_injective ? "true" : "false")));
    }
    // T7: the stated hypothesis plus the findim = 2 branch of its proof.
    {
        const bool strict = cyclic && rep.findim > 2;
        const bool proof_branch = cyclic && rep.findim == 2 && gl_infinite;
        const bool concl = strict ? rep.findim == p.eps_findim + 2 : p.eps_findim == 0;
        res.push_back(judge(strict || proof_branch, concl,
                            values({{"findim", rep.findim}, {"findim_eps", p.eps_findim}, {"gldim", rep.gldim}})));
        if (cyclic && !self_inj && (rep.findim == 1 || (rep.findim == 2 && !gl_infinite)))
            out.observations.push_back({"findim_reduction_below_hypothesis", rep.findim == p.eps_findim + 2});
    }
    // T8
    res.push_back(judge(cyclic && rep.phi_dim == 2, rep.phi_dim <= rep.findim + 1,
                        values({{"phidim", rep.phi_dim}, {"findim", rep.findim}})));
    // T9
    {
        const bool hyp = cyclic && rep.gorenstein && !self_inj && rep.gordim >= 2;
        res.push_back(judge(hyp, p.eps_gorenstein && rep.gordim == p.eps_gordim + 2,
                            values({{"gordim", rep.gordim}, {"gordim_eps", p.eps_gordim}}) +
                                ", epsilon Gorenstein=" + (p.eps_gorenstein ? "true" : "false")));
        if (cyclic && rep.gorenstein && rep.gordim == 2)
            out.observations.push_back({"gordim_two_forces_epsilon_self_injective", p.eps_self_injective});
    }
    // T10
    {
        const bool hyp = cyclic && rep.domdim >= 3 && rep.domdim < inf;
        res.push_back(judge(hyp, rep.domdim == p.eps_domdim + 2,
                            values({{"domdim", rep.domdim}, {"domdim_eps", p.eps_domdim}})));
        if (cyclic && !self_inj && (rep.domdim == 1 || rep.domdim == 2))
            out.observations.push_back({"domdim_reduction_below_hypothesis", rep.domdim == p.eps_domdim + 2});
    }
    // T11
    res.push_back(judge(cyclic && !self_inj, rep.domdim <= rep.phi_dim && rep.domdim <= 2 * r,
                        values({{"domdim", rep.domdim}, {"phidim", rep.phi_dim}, {"2r", 2 * r}})));
    // T12
    res.push_back(judge(rep.m.is_finite(), rep.gldim.is_finite() && rep.gldim <= rep.m + (n - 1),
                        values({{"gldim", rep.gldim}, {"m", rep.m}, {"N+m-1", rep.m + (n - 1)}})));
    // T13
    res.push_back(judge(cyclic && rep.gldim.is_finite(), rep.gldim <= 2 * n - 2,
                        values({{"gldim", rep.gldim}, {"2N-2", 2 * n - 2}})));
    // T14
    res.push_back(judge(cyclic, rep.findim == rep.findim_op,
                        values({{"findim", rep.findim}, {"findim_op", rep.findim_op}})));
    // T15
    res.push_back(judge(cyclic, rep.phi_dim == rep.phi_dim_op,
                        values({{"phidim", rep.phi_dim}, {"phidim_op", rep.phi_dim_op}})));
    // T16
    res.push_back(judge(cyclic, (rep.findim == 1) == (rep.findim_op == 1),
                        values({{"findim", rep.findim}, {"findim_op", rep.findim_op}})));
    // T17
    {
        const ExtNat bound = 2 * r;
        const bool concl = rep.phi_dim <= bound && rep.findim <= bound && rep.domdim <= bound &&
                           (!rep.gorenstein || rep.gordim <= bound) && 2 * r <= 2 * n - 2;
        res.push_back(judge(cyclic && !self_inj, concl,
                            values({{"phidim", rep.phi_dim}, {"findim", rep.findim}, {"gordim", rep.gordim},
                                    {"domdim", rep.domdim}, {"2r", bound}, {"2N-2", 2 * n - 2}})));
    }
    // T18
    {
        const bool has_pdim_two = std::find(p.simple_pdims.begin(), p.simple_pdims.end(), ExtNat(2)) !=
                                  p.simple_pdims.end();
        if (!cyclic) {
            const bool connected = std::all_of(algebra.kupisch.begin(), algebra.kupisch.end() - 1,
                                               [](int c) { return c >= 2; });
            const bool concl =
                rep.gldim <= n - 1 && (!(connected && rep.gldim >= 2) || has_pdim_two);
            res.push_back(judge(true, concl,
                                values({{"gldim", rep.gldim}, {"N-1", n - 1}}) +
                                    ", simple of pdim 2=" + (has_pdim_two ? "true" : "false")));
        }
        else {
            res.push_back(judge(has_pdim_two, !p.eps->breaks.empty(), "simple of pdim 2 but epsilon is cyclic"));
        }
    }
    return out;
}

std::vector<OracleMismatch> cross_validate(const Algebra& algebra)
{
    std::vector<OracleMismatch> out;
    auto expect = [&](bool ok, const char* oracle, const std::string& witness) {
        if (!ok)
            out.push_back({oracle, witness});
    };

    const auto all = indecomposables(algebra);
    const ExtNat phi_left = phi_dim(algebra);
    const ExtNat phi_right = phi_dim_op(algebra);

    // Set cardinality against matrix rank, both sides.
    const int rank_left = phi_by_matrix_rank(algebra, Direction::projective);
    const int rank_right = phi_by_matrix_rank(algebra, Direction::injective);
    expect(phi_left == rank_left, "phi_set_vs_matrix_rank",
           "sets " + phi_left.to_string() + ", matrix " + std::to_string(rank_left));
    expect(phi_right == rank_right, "phi_set_vs_matrix_rank",
           "right: sets " + phi_right.to_string() + ", matrix " + std::to_string(rank_right));

    // Seen-set iteration against the batch functional-graph pass.
    const auto batch = resolution_dims(algebra, Direction::projective);
    const auto batch_inj = resolution_dims(algebra, Direction::injective);
    const ModuleIndex index(algebra);
    for (const Module& m : all) {
        const auto id = static_cast<std::size_t>(index.id(m));
        expect(pdim(algebra, m) == batch[id], "pdim_iteration_vs_batch", to_string(m));
        expect(injdim(algebra, m) == batch_inj[id], "pdim_iteration_vs_batch", "injdim " + to_string(m));
    }

    // Native right-hand invariants against the left-hand ones of the opposite algebra.
    const Algebra op = opposite(algebra);
    expect(opposite(op) == algebra, "opposite_involution", "opposite(opposite) = " + kupisch_string(opposite(op)));
    expect(phi_right == phi_dim(op), "right_native_vs_opposite",
           "phidim_op " + phi_right.to_string() + " vs phidim(op) " + phi_dim(op).to_string());
    expect(findim_op(algebra) == findim(op), "right_native_vs_opposite",
           "findim_op " + findim_op(algebra).to_string() + " vs findim(op) " + findim(op).to_string());
    for (const Module& m : all) {
        const Module d = dual(algebra, m);
        if (!is_valid(op, d)) {
            expect(false, "right_native_vs_opposite", "dual of " + to_string(m) + " invalid");
            continue;
        }
        expect(injdim(algebra, m) == pdim(op, d), "right_native_vs_opposite", "injdim " + to_string(m));
    }

    // Self-injectivity by series shape against "every projective is injective".
    bool all_proj_inj = true;
    for (int v = 1; v <= algebra.vertices(); ++v)
        all_proj_inj = all_proj_inj && is_injective(algebra, projective(algebra, v));
    expect(all_proj_inj == is_self_injective(algebra), "self_injective_series_vs_modules", kupisch_string(algebra));

    if (!algebra.is_cyclic())
        return out;

    expect(phi_dim_fast(algebra) == phi_left, "phi_fast_vs_direct",
           "fast " + phi_dim_fast(algebra).to_string() + ", direct " + phi_left.to_string());

    const EpsilonResult eps = epsilon(algebra);
    const auto& data = eps.source;

    // The arithmetic epsilon against Hom from the projectives indexed by S'.
    for (const Module& x : all) {
        const auto restricted = restrict_to_epsilon(algebra, x, eps);
        if (!restricted)
            continue;
        int hom_total = 0;
        for (int i : data.shifted)
            hom_total += hom_dim(algebra, projective(algebra, i), x);
        expect(restricted->module.length == hom_total, "epsilon_length_vs_hom_dim",
               to_string(x) + ": arcs " + std::to_string(restricted->module.length) + ", hom " +
                   std::to_string(hom_total));
    }

    // Second syzygies are filtered, and projective resolutions transport.
    std::vector<std::vector<ExtNat>> comp_dims;
    for (const auto& comp : eps.components)
        comp_dims.push_back(resolution_dims(comp.algebra, Direction::projective));
    for (const Module& m : all) {
        auto first = syzygy(algebra, m);
        if (!first)
            continue;
        auto second = syzygy(algebra, *first);
        if (!second)
            continue;
        const auto restricted = restrict_to_epsilon(algebra, *second, eps);
        if (!restricted) {
            expect(false, "second_syzygy_filtered", to_string(m) + " -> " + to_string(*second));
            continue;
        }
        const auto& comp = eps.components[restricted->component].algebra;
        const ExtNat below =
            comp_dims[restricted->component][static_cast<std::size_t>(ModuleIndex(comp).id(restricted->module))];
        const ExtNat here = batch[static_cast<std::size_t>(index.id(m))];
        expect(here == below + 2, "pdim_transport",
               to_string(m) + ": pdim " + here.to_string() + ", epsilon pdim " + below.to_string());
    }
    return out;
}

bool VerificationReport::clean() const
{
    if (!mismatches.empty() || !spot_failures.empty())
        return false;
    return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.violations.empty(); });
}

std::vector<Algebra> random_algebras(int count, int max_vertices, int max_length, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Algebra> out;
    std::uniform_int_distribution<int> vertices(2, std::max(2, max_vertices));
    while (static_cast<int>(out.size()) < count) {
        const int n = vertices(rng);
        std::vector<int> series;
        series.push_back(std::uniform_int_distribution<int>(2, max_length)(rng));
        for (int i = 1; i < n; ++i) {
            const int low = std::max(2, series.back() - 1);
            series.push_back(std::uniform_int_distribution<int>(low, std::max(low, max_length))(rng));
        }
        Algebra a = Algebra::cyclic(std::move(series));
        if (validate(a).empty())
            out.push_back(std::move(a));
    }
    return out;
}

namespace {

struct AlgebraResult {
    CheckOutcome checks;
    std::vector<OracleMismatch> mismatches;
};

std::vector<AlgebraResult> run_all(const std::vector<Algebra>& algebras, int jobs)
{
    std::vector<AlgebraResult> results(algebras.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < algebras.size(); i = next++) {
            results[i].checks = run_checks(algebras[i]);
            results[i].mismatches = cross_validate(algebras[i]);
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return results;
}

bool algebra_less(const Algebra& a, const Algebra& b)
{
    if (a.kind != b.kind)
        return a.kind < b.kind;
    const Algebra ca = canonical_rotation(a);
    const Algebra cb = canonical_rotation(b);
    if (ca.vertices() != cb.vertices())
        return ca.vertices() < cb.vertices();
    return ca.kupisch < cb.kupisch;
}

}  // namespace

VerificationReport verify(const EnumerationBudget& budget, const VerifyOptions& options)
{
    const auto started = std::chrono::steady_clock::now();
    check_budget(budget);

    const auto& catalogue = theorem_catalogue();
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < catalogue.size(); ++i)
        if (options.theorems.empty() ||
            std::find(options.theorems.begin(), options.theorems.end(), catalogue[i].id) != options.theorems.end())
            selected.push_back(i);
    for (const auto& id : options.theorems)
        if (std::none_of(catalogue.begin(), catalogue.end(), [&](const auto& c) { return c.id == id; }))
            throw std::invalid_argument("unknown theorem id " + id);

    VerificationReport report;
    report.budget = budget;
    report.options = options;

    const auto algebras = enumerate(budget);
    report.enumerated = static_cast<long>(algebras.size());
    const auto results = run_all(algebras, options.jobs);

    for (std::size_t i : selected)
        report.theorems.push_back({catalogue[i].id, 0, 0, {}});
    std::map<std::string, ObservationTally> observations;
    for (std::size_t k = 0; k < algebras.size(); ++k) {
        const auto& res = results[k];
        for (std::size_t s = 0; s < selected.size(); ++s) {
            const auto& verdict = res.checks.results[selected[s]];
            auto& tally = report.theorems[s];
            if (verdict.verdict == Verdict::vacuous) {
                ++tally.vacuous;
                continue;
            }
            ++tally.checked;
            if (verdict.verdict == Verdict::violation)
                tally.violations.emplace_back(algebras[k], verdict.detail);
        }
        for (const auto& obs : res.checks.observations) {
            auto& tally = observations[obs.key];
            tally.key = obs.key;
            ++(obs.holds ? tally.holds : tally.fails);
        }
        for (const auto& mm : res.mismatches)
            report.mismatches.emplace_back(algebras[k], mm);
    }
    for (auto& [key, tally] : observations)
        report.observations.push_back(tally);

    auto by_algebra = [](const auto& a, const auto& b) { return algebra_less(a.first, b.first); };
    for (auto& tally : report.theorems)
        std::stable_sort(tally.violations.begin(), tally.violations.end(), by_algebra);
    std::stable_sort(report.mismatches.begin(), report.mismatches.end(), by_algebra);

    if (options.spot_checks > 0) {
        const int nmax = budget.max_vertices + 2;
        const auto spot = random_algebras(options.spot_checks, nmax, 2 * nmax + 1, options.seed);
        const auto spot_results = run_all(spot, options.jobs);
        report.spot_count = static_cast<long>(spot.size());
        for (std::size_t k = 0; k < spot.size(); ++k) {
            for (std::size_t s : selected)
                if (spot_results[k].checks.results[s].verdict == Verdict::violation)
                    report.spot_failures.emplace_back(spot[k], catalogue[s].id + ": " +
                                                                   spot_results[k].checks.results[s].detail);
            for (const auto& mm : spot_results[k].mismatches)
                report.spot_failures.emplace_back(spot[k], mm.oracle + ": " + mm.witness);
        }
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                              started)
                            .count();
    return report;
}

}  // namespace nakayama
