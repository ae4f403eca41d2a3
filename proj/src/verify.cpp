#include <algorithm>
#include <set>

#include "repbasis/builder.hpp"

namespace repbasis {

namespace {

// Collects the first failure witness for a named check.
class Check {
public:
    explicit Check(std::string name) : result_{std::move(name), true, {}} {}

    void fail(const std::string& witness) {
        if (result_.passed) {
            result_.passed = false;
            result_.witness = witness;
        }
    }
    bool ok() const { return result_.passed; }
    CheckResult done() && { return std::move(result_); }

private:
    CheckResult result_;
};

std::string stage_tag(std::uint64_t k) { return "k=" + std::to_string(k) + " "; }

Int magnitude(std::int64_t u) { return abs_value(Int(u)); }

}  // namespace

bool Certificate::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Certificate::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

Certificate verify(const FiniteSet& set, const std::vector<StepRecord>& history, const BuilderConfig& config) {
    Certificate cert{config, set, history, {}};
    const unsigned h = config.h;
    const std::uint64_t stages = history.size();

    Check config_check("config");
    try {
        config.validate();
    } catch (const std::exception& e) {
        config_check.fail(e.what());
    }
    const bool config_ok = config_check.ok();
    cert.checks.push_back(std::move(config_check).done());
    if (!config_ok) return cert;

    // Stage sets rebuilt from the recorded additions; the final stage is the
    // claimed set itself so that anything injected there is checked directly.
    Check history_check("history");
    if (stages == 0) history_check.fail("no step records");
    if (stages != config.max_steps) {
        history_check.fail("steps=" + std::to_string(config.max_steps) + " but " + std::to_string(stages) +
                           " step records");
    }
    std::vector<FiniteSet> stage(stages);
    FiniteSet running;
    for (std::uint64_t i = 0; i < stages; ++i) {
        const StepRecord& rec = history[i];
        const std::uint64_t k = i + 1;
        if (rec.k != k) history_check.fail("record " + std::to_string(k) + " numbered " + std::to_string(rec.k));
        const bool adds = rec.decision != Decision::skip;
        if ((k == 1) != (rec.decision == Decision::seed)) {
            history_check.fail(stage_tag(k) + "unexpected decision " + std::string(to_string(rec.decision)));
        }
        if (adds) {
            if (!rec.c || !rec.d_used) {
                history_check.fail(stage_tag(k) + "missing c_k or d_used");
            } else {
                std::vector<Int> expected{-*rec.c, (h - 1) * *rec.c + rec.u};
                if (rec.added != expected) history_check.fail(stage_tag(k) + "added elements do not match c_k");
            }
        } else if (rec.c || rec.d_used || !rec.added.empty()) {
            history_check.fail(stage_tag(k) + "skip step carries an extension");
        }
        for (const auto& a : rec.added) {
            if (!running.insert(a)) history_check.fail(stage_tag(k) + "element " + a.str() + " added twice");
        }
        stage[i] = running;
    }
    if (running != set) history_check.fail("set differs from the union of recorded additions");
    if (stages > 0) stage.back() = set;
    cert.checks.push_back(std::move(history_check).done());
    if (stages == 0) return cert;

    // U stream and its growth bound.
    const std::vector<std::int64_t> u = u_stream(config.f, stages);
    Check ustream_check("ustream");
    Check bound_check("u_growth");
    const std::uint64_t delta = config.f.delta();
    for (std::uint64_t i = 0; i < stages; ++i) {
        if (history[i].u != u[i]) {
            ustream_check.fail(stage_tag(i + 1) + "u=" + std::to_string(history[i].u) + " expected " +
                               std::to_string(u[i]));
        }
        if (magnitude(history[i].u) > u_bound(i + 1, delta)) {
            bound_check.fail(stage_tag(i + 1) + "|u|=" + magnitude(history[i].u).str() + " > " +
                             std::to_string(u_bound(i + 1, delta)));
        }
    }
    if (!u_bound_check(config.f, stages)) bound_check.fail("regenerated stream exceeds floor((k+delta)/2)");
    cert.checks.push_back(std::move(ustream_check).done());
    cert.checks.push_back(std::move(bound_check).done());

    Check selection_check("selection");
    Check growth_check("growth");
    Check cond_i("cond_i");
    Check cond_ii("cond_ii");
    Check cond_iii("cond_iii");
    Check cond_iv("cond_iv");
    Check increment("increment_replay");
    Check sparsity("sparsity");

    std::set<Int> probes{Int(0), set.max_abs()};
    for (const auto& rec : history) {
        if (!rec.c) continue;
        const Int mag = abs_value(*rec.c);
        probes.insert({mag - 1, mag, mag + 1});
    }

    std::map<std::int64_t, std::uint64_t> seen;
    RepHistogram previous;
    for (std::uint64_t i = 0; i < stages; ++i) {
        const StepRecord& rec = history[i];
        const std::uint64_t k = i + 1;
        const std::string tag = stage_tag(k);
        const FiniteSet& current = stage[i];
        const std::uint64_t need = ++seen[rec.u];

        if (k > 1) {
            const Count have = count_unordered(stage[i - 1], h, rec.u);
            const bool should_skip = have >= need;
            if (should_skip != (rec.decision == Decision::skip)) {
                selection_check.fail(tag + "r(u)=" + std::to_string(have) + " need=" + std::to_string(need) +
                                     " decision=" + std::string(to_string(rec.decision)));
            } else if (!should_skip && have + 1 != need) {
                selection_check.fail(tag + "extension with r(u)=" + std::to_string(have) + " need=" +
                                     std::to_string(need));
            }
        }

        const Int w = sparsity_threshold(config.phi, k);
        if (rec.w != w) growth_check.fail(tag + "w=" + rec.w.str() + " expected " + w.str());
        if (rec.c && rec.d_used) {
            const Int& c = *rec.c;
            const Int mag = abs_value(c);
            const Int d = k == 1 ? Int(config.f.d0()) : std::max(stage[i - 1].max_abs(), magnitude(rec.u));
            if (*rec.d_used != d) growth_check.fail(tag + "d_used=" + rec.d_used->str() + " expected " + d.str());
            if ((rec.u >= 0) != (c > 0)) growth_check.fail(tag + "sign of c=" + c.str() + " vs u=" + std::to_string(rec.u));
            if (mag <= 2 * Int(h) * d) growth_check.fail(tag + "|c|=" + mag.str() + " <= 2hd=" + Int(2 * Int(h) * d).str());
            if (mag < w) growth_check.fail(tag + "|c|=" + mag.str() + " < w=" + w.str());
            const Int other = abs_value((h - 1) * c + rec.u);
            if (std::min(mag, other) <= d) growth_check.fail(tag + "new element inside [-d, d], d=" + d.str());
        }

        const RepHistogram hist = histogram(current, h);
        for (const auto& [n, r] : hist.counts) {
            const ExtCount fn = config.f.eval(n);
            if (ExtCount(r) > fn) {
                cond_i.fail(tag + "n=" + n.str() + " r=" + std::to_string(r) + " > f=" + to_string(fn));
            }
        }
        for (const auto& [n, m] : seen) {
            const Count r = hist.at(n);
            if (r < m) cond_ii.fail(tag + "n=" + std::to_string(n) + " r=" + std::to_string(r) + " < " + std::to_string(m));
        }
        if (current.size() > 2 * k) cond_iii.fail(tag + "|A|=" + std::to_string(current.size()));
        if (auto n = sidon_collision(current, h - 1)) cond_iv.fail(tag + "repeated " + std::to_string(h - 1) + "-fold sum " + n->str());

        if (k == 1) {
            for (const auto& [n, r] : hist.counts) {
                if (r != 1) increment.fail(tag + "seed stage n=" + n.str() + " r=" + std::to_string(r));
            }
        } else if (rec.decision == Decision::extend) {
            const Int uk(rec.u);
            if (hist.at(uk) != previous.at(uk) + 1) {
                increment.fail(tag + "r(u)=" + std::to_string(hist.at(uk)) + " was " + std::to_string(previous.at(uk)));
            }
            for (const auto& [n, r] : previous.counts) {
                if (n != uk && hist.at(n) != r) {
                    increment.fail(tag + "n=" + n.str() + " changed " + std::to_string(r) + "->" + std::to_string(hist.at(n)));
                }
            }
            for (const auto& [n, r] : hist.counts) {
                if (n != uk && !previous.counts.contains(n) && r != 1) {
                    increment.fail(tag + "new sum n=" + n.str() + " r=" + std::to_string(r));
                }
            }
        } else if (current != stage[i - 1]) {
            increment.fail(tag + "skip step changed the set");
        }

        for (const auto& x : probes) {
            if (x < 0) continue;
            const std::size_t count = counting_fn(current, -x, x);
            if (!config.phi.at_least(x, Rational(Int(count)))) {
                sparsity.fail(tag + "A(-x,x)=" + std::to_string(count) + " > phi(x) at x=" + x.str());
            }
        }
        previous = hist;
    }

    for (Check* c : {&selection_check, &growth_check, &cond_i, &cond_ii, &cond_iii, &cond_iv, &increment, &sparsity}) {
        cert.checks.push_back(std::move(*c).done());
    }
    return cert;
}

}  // namespace repbasis
