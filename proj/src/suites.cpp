#include "trimcx/suites.hpp"

#include "trimcx/errors.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/realize.hpp"
#include "trimcx/resolution.hpp"
#include "trimcx/tor_algebra.hpp"
#include "trimcx/trimming.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>

namespace trimcx {

IntRange IntRange::parse(const std::string& text) {
    static const std::regex end_re(R"(\s*(?:(s)\s*(?:([+-])\s*(\d+))?|(-?\d+))\s*)");
    const auto parse_end = [&](const std::string& t) {
        std::smatch m;
        if (!std::regex_match(t, m, end_re)) throw InputError("bad range endpoint '" + t + "'");
        End e;
        if (m[1].matched) {
            e.uses_s = true;
            if (m[3].matched) e.offset = (m[2] == "-" ? -1 : 1) * std::stoi(m[3]);
        } else {
            e.offset = std::stoi(m[4]);
        }
        return e;
    };
    IntRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo_ = r.hi_ = parse_end(text);
    } else {
        r.lo_ = parse_end(text.substr(0, dots));
        r.hi_ = parse_end(text.substr(dots + 2));
    }
    return r;
}

std::vector<int> IntRange::values(int s) const {
    std::vector<int> v;
    for (int i = lo_.at(s); i <= hi_.at(s); ++i) v.push_back(i);
    return v;
}

std::uint64_t instance_seed(std::uint64_t base, int s, int ell, int trial) {
    // splitmix64 over the packed parameters
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (1 + std::uint64_t(s) * 1000003 + std::uint64_t(ell) * 1009 +
                                                        std::uint64_t(trial) * 7919);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void SuiteReport::record(bool ok, const std::string& line) {
    (ok ? passed : failed) += 1;
    lines.push_back((ok ? "PASS " : "FAIL ") + line);
}

namespace {

struct Outcome {
    bool ok = false;
    std::string line;
};

struct Job {
    int s = 0;
    int ell = 0;
    int trial = 0;
    std::uint64_t seed = 0;
};

std::string tag(const Job& j) {
    std::ostringstream o;
    o << "s=" << j.s << " ell=" << j.ell << " trial=" << j.trial << " seed=" << j.seed;
    return o.str();
}

std::vector<Job> instance_jobs(const SuiteOptions& opts) {
    std::vector<Job> jobs;
    const IntRange s_range = IntRange::parse(opts.s);
    const IntRange ell_range = IntRange::parse(opts.ell);
    for (int s : s_range.values())
        for (int ell : ell_range.values(s)) {
            if (ell < 1 || ell > s + 1) continue;
            for (int t = 0; t < opts.trials; ++t) jobs.push_back({s, ell, t, instance_seed(opts.seed, s, ell, t)});
        }
    return jobs;
}

// Runs the checks concurrently and records them in job order.
template <class J>
void run_jobs(SuiteReport& report, const std::vector<J>& jobs, const std::function<Outcome(const J&)>& check) {
    std::vector<Outcome> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        try {
            out[i] = check(jobs[i]);
        } catch (const std::exception& e) {
            out[i] = {false, std::string("error: ") + e.what()};
        }
    }
    for (const auto& o : out) report.record(o.ok, o.line);
}

void instance_suite(SuiteReport& report, const SuiteOptions& opts,
                    const std::function<Outcome(const Job&, const RandomInstance&)>& check) {
    run_jobs<Job>(report, instance_jobs(opts), [&](const Job& j) {
        const RandomInstance inst = random_instance(j.s, j.ell, j.seed);
        Outcome o = check(j, inst);
        o.line = tag(j) + " " + o.line;
        return o;
    });
}

std::string betti_line(const BettiTable& b) {
    std::string s;
    for (int t : b.totals()) s += (s.empty() ? "" : ",") + std::to_string(t);
    return "(" + s + ")";
}

void suite_tipping(SuiteReport& r, const SuiteOptions& opts) {
    instance_suite(r, opts, [](const Job& j, const RandomInstance& inst) {
        const int from_system = tipping_point(inst.system);
        const int from_ideal = tipping_point(inverse_system(inst.ideal, 2 * j.s));
        return Outcome{from_system == j.s && from_ideal == j.s,
                       "tipping point " + std::to_string(from_system) + "/" + std::to_string(from_ideal) +
                           " expected " + std::to_string(j.s)};
    });

    std::vector<Job> duals;
    for (int d = 3; d <= 9; ++d)
        for (int t = 0; t < opts.trials; ++t) duals.push_back({d, 0, t, instance_seed(opts.seed, d, 0, t)});
    run_jobs<Job>(r, duals, [](const Job& j) {
        const InverseSystem n({random_dual(j.s, j.seed)});
        const int tp = tipping_point(n);
        bool dual_ok = true;
        for (int i = 0; i <= j.s; ++i) {
            const Matrix a = phi_matrix(n, i).values;
            const Matrix b = phi_matrix(n, j.s - i).values;
            const bool surj = rank(a) == a.cols();
            const bool inj = rank(b) == b.rows();
            dual_ok = dual_ok && a.transpose() == b && surj == inj;
        }
        const int expected = (j.s + 1) / 2;
        return Outcome{tp == expected && dual_ok, "single dual degree " + std::to_string(j.s) + " tipping point " +
                                                      std::to_string(tp) + " expected " + std::to_string(expected) +
                                                      (dual_ok ? ", duality holds" : ", duality FAILS")};
    });
}

void suite_compressed(SuiteReport& r, const SuiteOptions& opts) {
    instance_suite(r, opts, [](const Job& j, const RandomInstance& inst) {
        const int s = j.s;
        bool ok = is_compressed(inst.ideal, 2 * s).compressed && is_compressed(inst.gorenstein, 2 * s).compressed;
        std::string detail = ok ? "I and I_t compressed" : "I or I_t not compressed";
        // Dropping i of the degree-s duals keeps the ring compressed with socle k(-s)^(l-i) + k(-2s+1).
        const auto& duals = inst.system.generators();
        for (int i = 1; i <= j.ell; ++i) {
            const InverseSystem sub(std::vector<DualPoly>(duals.begin() + i, duals.end()));
            const Ideal ii = annihilator(sub, 2 * s);
            const auto shape = socle_shape(socle(ii, 2 * s).dims);
            const bool good = is_compressed(ii, 2 * s).compressed && shape && shape->s == s && shape->ell == j.ell - i;
            ok = ok && good;
            if (!good) detail += ", drop " + std::to_string(i) + " fails";
        }
        return Outcome{ok, detail};
    });
}

void suite_genset(SuiteReport& r, const SuiteOptions& opts) {
    instance_suite(r, opts, [](const Job& j, const RandomInstance& inst) {
        const auto g = genset_decomposition(inst.ideal, inst.gorenstein, 2 * j.s);
        const bool ok = g.b() < j.s + 1 && static_cast<int>(g.phi.size()) == j.s + 1;
        return Outcome{ok, "I = trimmed presentation, b=" + std::to_string(g.b())};
    });
}

void suite_trim_resolution(SuiteReport& r, const SuiteOptions& opts) {
    instance_suite(r, opts, [](const Job& j, const RandomInstance& inst) {
        const auto g = genset_decomposition(inst.ideal, inst.gorenstein, 2 * j.s);
        const ChainComplex f = minimal_free_resolution(g.gorenstein_generators());
        std::vector<int> cut;
        for (int p : g.cut_positions()) cut.push_back(p - 1);
        const TrimmingData t = prepare_trimming(f, cut);
        const ChainComplex cone = trimming_complex(t);
        const bool exact = is_strand_exact(cone, 2 * j.s + 3);
        const bool same_ideal = ideals_equal(trimmed_ideal(t), inst.ideal, 2 * j.s);
        const BettiTable cone_b = betti_table(cone);
        const BettiTable formula = trimmed_betti(t);
        const BettiTable direct = betti_table(minimal_free_resolution(inst.ideal), true);
        const bool ok = exact && same_ideal && cone_b == formula && formula == direct;
        return Outcome{ok, "cone " + betti_line(cone_b) + " formula " + betti_line(formula) + " direct " +
                               betti_line(direct) + (exact ? "" : " not exact") + (same_ideal ? "" : " H0 differs")};
    });
}

void suite_gortype(SuiteReport& r, const SuiteOptions&) {
    struct Case {
        int m, j, ell;
    };
    std::vector<Case> cases;
    for (int m = 2; m <= 3; ++m)
        for (int j = 0; j <= m; ++j)
            for (int ell = 1; ell <= 2 * m - j + 1; ++ell) cases.push_back({m, j, ell});
    run_jobs<Case>(r, cases, [](const Case& c) {
        const int s = 2 * c.m - c.j;
        const ChainComplex f = buchsbaum_eisenbud(build_V(c.m, c.j));
        std::vector<int> degree_s;
        for (int i = 0; i < f.module(1).rank(); ++i)
            if (f.module(1).twists[i] == s) degree_s.push_back(i);
        const std::vector<int> cut(degree_s.end() - c.ell, degree_s.end());
        const TrimmingData t = prepare_trimming(f, cut);
        const int type = betti_table(trimming_complex(t)).totals().back();
        const int formula_type = trimmed_betti(t).totals().back();
        return Outcome{type == c.ell + 1 && formula_type == c.ell + 1,
                       "V_" + std::to_string(c.m) + "^" + std::to_string(c.j) + " trim " + std::to_string(c.ell) +
                           " of degree " + std::to_string(s) + ": type " + std::to_string(type) + " expected " +
                           std::to_string(c.ell + 1)};
    });
}

void suite_tor_bounds(SuiteReport& r, const SuiteOptions& opts) {
    instance_suite(r, opts, [](const Job& j, const RandomInstance& inst) {
        const ArtinianProfile p = artinian_profile(inst.ideal, 2 * j.s);
        const TorBoundsReport b = check_bounds(inst.ideal, inst.gorenstein, p);
        std::ostringstream o;
        o << "mu=" << b.mu << " b=" << b.b << " delta=" << b.delta_rank << " >= " << b.lower_bound
          << (b.hypothesis ? " (hypothesis holds, " + b.report.verdict_string() + ")" : " (hypothesis fails)")
          << " T1_s=" << b.t1_s << "/" << b.t1_s_expected << " T2_s+1=" << b.t2_s1 << "/" << b.t2_s1_expected
          << " T2_s+2=" << b.t2_s2 << "/" << b.t2_s2_expected << " (s+1+3l=" << b.t2_s2_euler << ")";
        return Outcome{b.bounds_ok() && b.graded_ok(), o.str()};
    });
}

void suite_pfaffian_tables(SuiteReport& r, const SuiteOptions&) {
    std::vector<std::pair<int, int>> cases;
    for (int m = 1; m <= 4; ++m)
        for (int j = 0; j <= m; ++j) cases.emplace_back(m, j);
    run_jobs<std::pair<int, int>>(r, cases, [](const std::pair<int, int>& c) {
        const auto [m, j] = c;
        const Ideal pf = submax_pfaffians(build_V(m, j));
        const BettiTable got = betti_table(minimal_free_resolution(pf), true);
        BettiTable want;
        want.add(0, 0);
        want.add(1, 2 * m - j, 2 * m + 1 - j);
        want.add(1, 2 * m - j + 1, j);
        want.add(2, 2 * m - j + 1, j);
        want.add(2, 2 * m - j + 2, 2 * m + 1 - j);
        want.add(3, 4 * m - 2 * j + 2);
        const bool compressed = is_compressed(pf).compressed;
        return Outcome{got == want && compressed, "V_" + std::to_string(m) + "^" + std::to_string(j) + " betti " +
                                                      betti_line(got) + (got == want ? "" : " table differs") +
                                                      (compressed ? "" : " not compressed")};
    });
}

void suite_realizability(SuiteReport& r, const SuiteOptions&) {
    const std::vector<std::pair<int, int>> cases = {{2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {5, 3}, {4, 1}};
    run_jobs<std::pair<int, int>>(r, cases, [](const std::pair<int, int>& c) {
        const Realization z = realize(c.first, c.second);
        std::ostringstream o;
        o << "(r,N)=(" << z.r << "," << z.n << ") " << (z.even ? "even" : "odd") << " m=" << z.m << " mu=" << z.report.mu
          << "/" << z.expected_mu << " type=" << z.report.type << "/" << z.expected_type << " "
          << z.report.verdict_string();
        return Outcome{z.matches(), o.str()};
    });
}

const std::vector<std::pair<std::string, std::function<void(SuiteReport&, const SuiteOptions&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<void(SuiteReport&, const SuiteOptions&)>>> r = {
        {"tipping", suite_tipping},
        {"compressed", suite_compressed},
        {"genset", suite_genset},
        {"trim-resolution", suite_trim_resolution},
        {"gortype", suite_gortype},
        {"tor-bounds", suite_tor_bounds},
        {"pfaffian-tables", suite_pfaffian_tables},
        {"realizability", suite_realizability},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            SuiteReport report;
            report.name = name;
            fn(report, opts);
            return report;
        }
    throw InputError("unknown suite '" + name + "'");
}

} // namespace trimcx
