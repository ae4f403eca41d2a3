// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "repbasis/certificate_io.hpp"
#include "repbasis/cli.hpp"
#include "repbasis/useq.hpp"
#include "tamper.hpp"

using namespace repbasis;
using namespace repbasis::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::uint64_t abs64(std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

Outcome u_realization() {
    Outcome out;
    const std::uint64_t K = 200;
    for (const auto& [name, f] : target_fixtures()) {
        UStream cursor(f);
        std::map<std::int64_t, std::uint64_t> seen;
        std::uint64_t m_last = 0;
        for (std::uint64_t k = 1; k <= K; ++k) {
            const UTerm t = cursor.next();
            ++seen[t.value];
            m_last = t.m;
            out.require(abs64(t.value) <= u_bound(k, f.delta()), name + ": |u_" + std::to_string(k) + "| too large");
        }
        const std::int64_t reach = static_cast<std::int64_t>(K + f.delta());
        for (std::int64_t n = -reach; n <= reach; ++n) {
            const ExtCount fn = f.eval(n);
            const ExtCount count(seen.contains(n) ? seen[n] : 0);
            out.require(count <= fn, name + ": n=" + std::to_string(n) + " occurs more than f(n) times");
            if (auto last = last_occurrence_position(f, n); last && *last <= m_last) {
                out.require(count == fn, name + ": n=" + std::to_string(n) + " short of f(n)");
            }
        }
    }
    return out;
}

Outcome u_tightness() {
    Outcome out;
    for (std::int64_t delta = 0; delta <= 2; ++delta) {
        const std::pair<TargetFunction, std::vector<std::int64_t>> cases[] = {
            {odd_zero_block(delta), tight_odd_sequence(delta, 100)},
            {even_zero_block(delta), tight_even_sequence(delta, 100)},
        };
        for (const auto& [f, u] : cases) {
            std::map<std::int64_t, std::uint64_t> seen;
            for (std::uint64_t k = 1; k <= u.size(); ++k) {
                const std::string tag = "delta=" + std::to_string(delta) + " Delta=" + std::to_string(f.delta()) +
                                        " k=" + std::to_string(k);
                out.require(abs64(u[k - 1]) == u_bound(k, f.delta()), tag + ": bound not attained");
                out.require(ExtCount(++seen[u[k - 1]]) <= f.eval(u[k - 1]), tag + ": exceeds f");
            }
        }
    }
    return out;
}

std::vector<long long> random_vec(std::mt19937_64& rng, std::size_t max_size, long long lo, long long hi) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<long long> value(lo, hi);
    std::vector<long long> v;
    const std::size_t size = size_dist(rng);
    while (v.size() < size) {
        const long long x = value(rng);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    return v;
}

FiniteSet to_set(const std::vector<long long>& v) { return FiniteSet(std::vector<Int>(v.begin(), v.end())); }

Outcome sidon_adjunction() {
    Outcome out;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> gap(1, 50), sign(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned h = 2 + static_cast<unsigned>(trial % 2);
        FiniteSet a;
        do {
            a = to_set(random_vec(rng, 5, -20, 20));
        } while (!is_sidon(a, h));
        const Int mag = sidon_extension_bound(a, h) + gap(rng);
        const Int c = sign(rng) ? mag : Int(-mag);
        FiniteSet extended = a;
        extended.insert(c);
        out.require(is_sidon(extended, h), "trial " + std::to_string(trial) + ": adjoining " + c.str() + " broke Sidon");
        for (unsigned j = 1; j <= h; ++j) out.require(is_sidon(a, j), "trial " + std::to_string(trial) + ": not closed downward");
    }
    return out;
}

Outcome stage_invariants() {
    Outcome out;
    for (const auto& [fname, f] : target_fixtures()) {
        for (unsigned h : {2u, 3u, 4u}) {
            for (const auto& [pname, phi] : phi_fixtures()) {
                for (const auto& policy : policy_fixtures()) {
                    const BuilderConfig config = make_config(f, h, phi, policy, 10);
                    const BuildResult result = build(config);
                    const Certificate replay = verify(result.set, result.certificate.steps, config);
                    std::string failed;
                    for (const auto& c : replay.checks) {
                        if (!c.passed) failed += " " + c.name + "(" + c.witness + ")";
                    }
                    out.require(replay.passed() && replay.checks.size() == 12,
                                fname + " h=" + std::to_string(h) + " " + pname + " " +
                                    std::string(to_string(policy.mode)) + " seed=" + std::to_string(policy.seed) + ":" +
                                    failed);
                }
            }
        }
    }
    return out;
}

Outcome worked_trace() {
    Outcome out;
    std::map<std::uint64_t, std::map<Int, Count>> golden;
    std::ifstream in(std::string(REPBASIS_GOLDEN_DIR) + "/worked_trace_histograms.tsv");
    out.require(static_cast<bool>(in), "cannot open golden histograms");
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = tab_fields(line);
        golden[std::stoull(f[0])][parse_int(f[1])] = std::stoull(f[2]);
    }
    const std::vector<FiniteSet> expected{{-1, 1}, {-6, -1, 1, 5}, {-25, -6, -1, 1, 5, 26}};
    const BuilderConfig config = make_config(constant(1), 2, generous_phi(), {}, 3);
    BuilderState state = seed_stage(config);
    for (std::uint64_t k = 1; k <= 3; ++k) {
        if (k > 1) step(config, state);
        const std::string tag = "A_" + std::to_string(k);
        out.require(state.set == expected[k - 1], tag + " differs");
        out.require(histogram(state.set, 2).counts == golden[k], tag + " histogram differs from golden");
    }
    return out;
}

Outcome oracle_cross_check() {
    Outcome out;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> shift(-10, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto v = random_vec(rng, 6, -30, 30);
        const unsigned h = 1 + static_cast<unsigned>(trial % 4);
        const FiniteSet a = to_set(v);
        const oracle::Counts expected = oracle::all_counts(v, h);
        const std::string tag = "trial " + std::to_string(trial) + ": ";
        for (const auto& [n, r] : expected.ordered) {
            out.require(count_ordered(a, h, n) == r, tag + "R at n=" + std::to_string(n));
            out.require(count_restricted_ordered(a, h, n) == factorial(h) * count_restricted(a, h, n),
                        tag + "R_hat != h! r_hat at n=" + std::to_string(n));
        }
        const RepHistogram hist = histogram(a, h);
        out.require(hist.total() == multiset_count(a.size(), h), tag + "histogram mass");

        const long long t = shift(rng);
        std::vector<long long> moved;
        for (long long x : v) moved.push_back(x + t);
        const RepHistogram shifted = histogram(to_set(moved), h);
        out.require(shifted.counts.size() == hist.counts.size(), tag + "translation changed the support");
        for (const auto& [n, r] : hist.counts) {
            out.require(shifted.at(n + Int(h) * t) == r, tag + "translation law at n=" + n.str());
        }
    }
    return out;
}

Outcome infinitude_witness() {
    Outcome out;
    for (const auto& [name, f] : target_fixtures()) {
        const auto one = build(make_config(f, 2, phi_fixtures()[0].phi, {CSelectionPolicy::Mode::seeded_random, 1, 1000}, 10));
        const auto two = build(make_config(f, 2, phi_fixtures()[0].phi, {CSelectionPolicy::Mode::seeded_random, 2, 1000}, 10));
        out.require(one.certificate.passed() && two.certificate.passed(), name + ": a seeded build failed");
        out.require(one.set != two.set, name + ": seeds 1 and 2 gave the same set");
    }
    return out;
}

Outcome cli_round_trip() {
    Outcome out;
    const fs::path dir = fs::temp_directory_path() / ("repbasis_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    };
    auto read = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    int index = 0;
    for (const auto& [name, f] : target_fixtures()) {
        const std::string stem = "f" + std::to_string(index++);
        const std::string cfg = write(stem + ".cfg", render_builder_config(make_config(f, 2, phi_fixtures()[0].phi, {}, 10)));
        const std::string cert = (dir / (stem + ".cert")).string();
        std::ostringstream sink, err;
        out.require(cli::main({"build", "--config", cfg, "--out", cert}, sink, err) == 0, name + ": build exit code");
        out.require(cli::main({"verify", cert}, sink, err) == 0, name + ": verify exit code");

        const std::string text = read(cert);
        const std::pair<const char*, std::string> tampered[] = {
            {"extra element", tamper_extra_element(text)},
            {"altered c_k", tamper_c(text)},
            {"deleted step", tamper_delete_step(text)},
        };
        for (const auto& [kind, bad] : tampered) {
            std::ostringstream vout, verr;
            const int code = cli::main({"verify", write(stem + ".bad", bad)}, vout, verr);
            out.require(bad != text, name + ": " + kind + " left the certificate unchanged");
            out.require(code == 1, name + ": " + kind + " gave exit " + std::to_string(code));
            out.require(verr.str().find("failed check: ") != std::string::npos, name + ": " + kind + " named no check");
        }
    }
    fs::remove_all(dir);
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "U sequence realizes f with the growth bound (K=200)", 1.0, u_realization},
        {2, "odd and even tightness sequences attain the bound (k<=100)", 0.1, u_tightness},
        {3, "Sidon property survives adjunction (500 trials)", 5.0, sidon_adjunction},
        {4, "stage invariants over the full build matrix (K=10)", 60.0, stage_invariants},
        {5, "worked trace matches the golden stages", 0.1, worked_trace},
        {6, "counters agree with the brute-force oracle (1000 sets)", 10.0, oracle_cross_check},
        {7, "distinct seeds give distinct passing sets", 60.0, infinitude_witness},
        {8, "CLI build/verify round trip and tamper detection", 5.0, cli_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && seconds > c.limit_seconds) {
            outcome.ok = false;
            outcome.detail = "over the time limit";
        }
        if (!outcome.ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.3f s, limit %.1f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name,
                    seconds, c.limit_seconds, outcome.ok ? "" : " -- ", outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
