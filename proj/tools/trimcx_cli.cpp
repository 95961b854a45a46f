#include "trimcx/errors.hpp"
#include "trimcx/inverse_system.hpp"
#include "trimcx/io.hpp"
#include "trimcx/pfaffian.hpp"
#include "trimcx/realize.hpp"
#include "trimcx/resolution.hpp"
#include "trimcx/suites.hpp"
#include "trimcx/tor_algebra.hpp"
#include "trimcx/trimming.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace trimcx;
using nlohmann::json;

namespace {

enum ExitCode { ok = 0, finding = 1, usage = 2 };

struct Globals {
    std::optional<long long> characteristic;
    std::uint64_t seed = 1;
    int bound = 0;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void apply_characteristic(const Globals& g) {
    if (!g.characteristic) return;
    const long long p = *g.characteristic;
    if (p <= 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw InputError("--char must be an odd prime below 2^31");
    Scalar::set_characteristic(static_cast<Scalar::rep>(p));
}

// Reads an ideal file; the header decides the field unless --char disagrees.
Ideal load_ideal(const Globals& g, const std::string& path) {
    Ideal i = read_ideal_file(path);
    if (g.characteristic && *g.characteristic != static_cast<long long>(Scalar::characteristic()))
        throw InputError("--char " + std::to_string(*g.characteristic) + " disagrees with the header of " + path);
    return i;
}

void emit_ideal(const Ideal& ideal, const std::string& out_path) {
    if (!out_path.empty()) write_ideal_file(out_path, ideal);
}

std::string render_map(const GradedMap& d) {
    std::ostringstream o;
    for (int i = 0; i < d.target().rank(); ++i) {
        for (int j = 0; j < d.source().rank(); ++j) o << (j ? ", " : "") << to_string(d(i, j));
        o << '\n';
    }
    return o.str();
}

json report_json(const ClassReport& r) {
    json j = {{"mu", r.mu},
              {"type", r.type},
              {"tor_dims", {r.t1, r.t2, r.t3}},
              {"rank_T1T1", r.rank_T1T1},
              {"rank_T1T2", r.rank_T1T2},
              {"dim_T1T2", r.dim_T1T2},
              {"delta_rank", r.delta_rank},
              {"verdict", r.verdict == TorVerdict::G ? "G" : "not-G"},
              {"class", r.verdict_string()}};
    if (r.ell) j["ell"] = *r.ell;
    if (r.s) j["s"] = *r.s;
    return j;
}

void print_report(const ClassReport& r) {
    std::cout << "mu " << r.mu << "\ntype " << r.type << "\ntor " << r.t1 << ' ' << r.t2 << ' ' << r.t3
              << "\nrank T1*T1 " << r.rank_T1T1 << "\ndim T1*T2 " << r.dim_T1T2 << "\ndelta rank " << r.delta_rank;
    std::cout << "\nclass " << r.verdict_string() << '\n';
}

json profile_json(const ArtinianProfile& p) {
    json j = {{"hilbert", p.hilbert},
              {"socle", p.socle_polynomial},
              {"type", p.type},
              {"tipping_point", p.tipping_point},
              {"compressed", p.compressed}};
    if (p.shape) {
        j["s"] = p.shape->s;
        j["ell"] = p.shape->ell;
    }
    return j;
}

// Lines start with '#' so the text output stays a readable ideal file.
void print_profile(const ArtinianProfile& p, const char* prefix) {
    std::cout << prefix << "hilbert";
    for (int h : p.hilbert) std::cout << ' ' << h;
    std::cout << '\n' << prefix << "socle";
    for (int c : p.socle_polynomial) std::cout << ' ' << c;
    std::cout << '\n' << prefix << "compressed " << (p.compressed ? "yes" : "no") << '\n'
              << prefix << "tipping point " << p.tipping_point << '\n';
    if (p.shape) std::cout << prefix << "s " << p.shape->s << '\n' << prefix << "ell " << p.shape->ell << '\n';
}

std::vector<int> to_zero_based(const std::vector<int>& one_based, int n) {
    std::vector<int> out;
    for (int i : one_based) {
        if (i < 1 || i > n) throw InputError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        out.push_back(i - 1);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trimming complexes, inverse systems and Tor algebras over k[x,y,z]"};
    app.require_subcommand(1);
    Globals g;
    long long char_flag = 0;
    auto* char_opt = app.add_option("--char", char_flag, "Field characteristic (prime, default 32003)");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--bound", g.bound, "Degree bound for Artinian checks (0 = automatic)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // gen-v
    auto* gen_v = app.add_subcommand("gen-v", "Emit the skew matrix V_m^j and its Pfaffian ideal");
    int m = 2, j = 0;
    std::string matrix_out, ideal_out;
    gen_v->add_option("--m", m, "Size parameter m >= 1")->required();
    gen_v->add_option("--j", j, "0 <= j <= m")->required();
    gen_v->add_option("--matrix-out", matrix_out, "Write the matrix here");
    gen_v->add_option("--out", ideal_out, "Write the Pfaffian ideal here");

    // pfaffians
    auto* pfaff = app.add_subcommand("pfaffians", "Submaximal Pfaffians of a skew matrix file");
    std::string matrix_in;
    pfaff->add_option("matrix", matrix_in, "Skew matrix file")->required()->check(CLI::ExistingFile);
    pfaff->add_option("--out", ideal_out, "Write the ideal here");

    // resolve / betti
    std::string ideal_in;
    auto* resolve = app.add_subcommand("resolve", "Minimal free resolution of R/I");
    resolve->add_option("ideal", ideal_in, "Ideal file")->required()->check(CLI::ExistingFile);
    auto* betti = app.add_subcommand("betti", "Graded Betti table of R/I");
    betti->add_option("ideal", ideal_in, "Ideal file")->required()->check(CLI::ExistingFile);

    // trim
    auto* trim = app.add_subcommand("trim", "Trim minimal generators and compare Betti tables");
    std::vector<int> cut;
    std::vector<std::string> a_files;
    trim->add_option("ideal", ideal_in, "Ideal file")->required()->check(CLI::ExistingFile);
    trim->add_option("--cut", cut, "1-based indices of the minimal generators to trim")->required()->delimiter(',');
    trim->add_option("--a", a_files, "Ideal files a_i, one per cut generator (default R_+)")->check(CLI::ExistingFile);
    trim->add_option("--out", ideal_out, "Write the trimmed ideal here");

    // instance
    auto* instance = app.add_subcommand("instance", "Random ideal with socle k(-s)^ell + k(-2s+1)");
    int s = 3, ell = 1;
    std::string gorenstein_out;
    instance->add_option("--s", s, "s >= 3")->required();
    instance->add_option("--ell", ell, "1 <= ell <= s+1")->required();
    instance->add_option("--out", ideal_out, "Write I here");
    instance->add_option("--gorenstein-out", gorenstein_out, "Write I_t here");

    // classify
    auto* classify = app.add_subcommand("classify", "Tor algebra structure and class G(r) verdict");
    classify->add_option("ideal", ideal_in, "Ideal file")->required()->check(CLI::ExistingFile);

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "Ideal of class G(r) with type at least N");
    int r = 3, n = 3;
    realize_cmd->add_option("--r", r, "r >= 2")->required();
    realize_cmd->add_option("--N", n, "N >= 1, r + N >= 5")->required();
    realize_cmd->add_option("--out", ideal_out, "Write the ideal here");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    SuiteOptions sopts;
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(names));
    verify->add_option("--s", sopts.s, "Range of s, e.g. 3..5");
    verify->add_option("--ell", sopts.ell, "Range of ell, may use s, e.g. 1..s+1");
    verify->add_option("--trials", sopts.trials, "Instances per (s, ell)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    if (char_opt->count() > 0) g.characteristic = char_flag;

    try {
        apply_characteristic(g);
        ResolutionOptions ropts;
        ropts.degree_bound = g.bound;

        if (*gen_v) {
            const SkewMatrix v = build_V(m, j);
            const Ideal pf = submax_pfaffians(v);
            if (!matrix_out.empty()) {
                std::ofstream f(matrix_out);
                if (!f) throw InputError("cannot write " + matrix_out);
                write_skew(f, v);
            }
            emit_ideal(pf, ideal_out);
            if (g.json()) {
                std::ostringstream mtx;
                write_skew(mtx, v);
                std::cout << json{{"matrix", mtx.str()}, {"ideal", to_json(pf)}}.dump(2) << '\n';
            } else {
                write_skew(std::cout, v);
                std::cout << '\n';
                write_ideal(std::cout, pf);
            }
        } else if (*pfaff) {
            std::ifstream f(matrix_in);
            const SkewMatrix v = read_skew(f);
            if (g.characteristic && *g.characteristic != static_cast<long long>(Scalar::characteristic()))
                throw InputError("--char disagrees with the matrix header");
            const Ideal pf = submax_pfaffians(v);
            emit_ideal(pf, ideal_out);
            if (g.json()) std::cout << to_json(pf).dump(2) << '\n';
            else write_ideal(std::cout, pf);
        } else if (*resolve || *betti) {
            const Ideal i = load_ideal(g, ideal_in);
            const ChainComplex res = minimal_free_resolution(i, ropts);
            const BettiTable b = betti_table(res, true);
            if (g.json()) {
                json out = to_json(b);
                if (*resolve) {
                    json maps = json::array();
                    for (const auto& d : res.differentials()) maps.push_back(render_map(d));
                    out["differentials"] = maps;
                }
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << b.render();
                if (*resolve)
                    for (int k = 1; k <= res.length(); ++k) std::cout << "\nd" << k << ":\n" << render_map(res.differential(k));
            }
        } else if (*trim) {
            const Ideal i = load_ideal(g, ideal_in);
            const Ideal mingens(minimal_generators(i));
            const ChainComplex f = minimal_free_resolution(mingens, ropts);
            const std::vector<int> split = to_zero_based(cut, f.module(1).rank());
            TrimmingData t;
            if (a_files.empty()) {
                t = prepare_trimming(f, split);
            } else {
                if (a_files.size() != cut.size()) throw InputError("give one --a file per cut generator");
                std::vector<Ideal> a;
                for (const auto& path : a_files) a.push_back(load_ideal(g, path));
                t = prepare_trimming(f, split, a);
            }
            const Ideal trimmed = trimmed_ideal(t);
            const BettiTable cone = betti_table(trimming_complex(t));
            const BettiTable formula = trimmed_betti(t);
            const bool agree = cone == formula;
            emit_ideal(trimmed, ideal_out);
            if (g.json()) {
                std::cout << json{{"ideal", to_json(trimmed)},
                                  {"cone", to_json(cone)},
                                  {"formula", to_json(formula)},
                                  {"agree", agree}}
                                 .dump(2)
                          << '\n';
            } else {
                write_ideal(std::cout, trimmed);
                std::cout << "\ncone:\n" << cone.render() << "\nformula:\n" << formula.render() << "\n"
                          << (agree ? "agree" : "DISAGREE") << '\n';
            }
            return agree ? ok : finding;
        } else if (*instance) {
            const RandomInstance inst = random_instance(s, ell, g.seed);
            emit_ideal(inst.ideal, ideal_out);
            if (!gorenstein_out.empty()) write_ideal_file(gorenstein_out, inst.gorenstein);
            const ArtinianProfile p = artinian_profile(inst.ideal, g.bound);
            if (g.json()) {
                std::cout << json{{"ideal", to_json(inst.ideal)},
                                  {"gorenstein", to_json(inst.gorenstein)},
                                  {"profile", profile_json(p)},
                                  {"attempts", inst.attempts}}
                                 .dump(2)
                          << '\n';
            } else {
                write_ideal(std::cout, inst.ideal);
                print_profile(p, "# ");
            }
        } else if (*classify) {
            const Ideal i = load_ideal(g, ideal_in);
            const ArtinianProfile p = artinian_profile(i, g.bound);
            const ClassReport rep = classify_G(i, p, g.bound);
            if (g.json()) {
                json out = report_json(rep);
                out["profile"] = profile_json(p);
                std::cout << out.dump(2) << '\n';
            } else {
                print_profile(p, "");
                print_report(rep);
            }
        } else if (*realize_cmd) {
            const Realization z = realize(r, n);
            emit_ideal(z.ideal, ideal_out);
            if (g.json()) {
                std::cout << json{{"r", z.r},
                                  {"N", z.n},
                                  {"m", z.m},
                                  {"ideal", to_json(z.ideal)},
                                  {"betti", to_json(z.cone_betti)},
                                  {"formula", to_json(z.formula_betti)},
                                  {"expected", to_json(z.expected_betti)},
                                  {"report", report_json(z.report)},
                                  {"matches", z.matches()}}
                                 .dump(2)
                          << '\n';
            } else {
                write_ideal(std::cout, z.ideal);
                std::cout << "\nbetti:\n" << z.cone_betti.render() << "\nexpected:\n" << z.expected_betti.render() << '\n';
                print_report(z.report);
                std::cout << (z.matches() ? "matches" : "MISMATCH") << '\n';
            }
            return z.matches() ? ok : finding;
        } else if (*verify) {
            sopts.seed = g.seed;
            std::vector<std::string> run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool all_ok = true;
            json reports = json::array();
            for (const auto& name : run) {
                const SuiteReport rep = run_suite(name, sopts);
                all_ok = all_ok && rep.ok();
                if (g.json()) {
                    reports.push_back({{"suite", name}, {"passed", rep.passed}, {"failed", rep.failed}, {"lines", rep.lines}});
                } else {
                    for (const auto& line : rep.lines) std::cout << name << ": " << line << '\n';
                    std::cout << name << ": " << rep.passed << " passed, " << rep.failed << " failed\n";
                }
            }
            if (g.json()) std::cout << reports.dump(2) << '\n';
            return all_ok ? ok : finding;
        }
    } catch (const VerificationError& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return finding;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return ok;
}
