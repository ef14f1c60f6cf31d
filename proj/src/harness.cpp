#include "oredet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "oredet/cdsk.hpp"

namespace oredet {

InstanceResult check_instance(const OreMatrix& m) {
    InstanceResult r;
    r.matrix = m;
    auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };
    try {
        const OrderValue tord = total_order(m);
        if (m.size() <= 8 && tord != tord_bruteforce(m))
            fail("total_order " + tord.to_string() + " != brute force " + tord_bruteforce(m).to_string());

        const DieudonneDet det = dieudonne_det(m);
        if (det.is_zero()) {
            return r;
        }
        if (!tord.is_finite()) {
            fail("nonzero determinant but tord = -inf");
            return r;
        }

        const Majorant opt = optimal_majorant(m);
        CharTheoremReport rep = check_char_theorem(m, perturbed_majorants(opt));
        r.theorem_checked = true;
        r.dd = rep.dd;
        static const char* names[] = {"dd >= 0", "optimal majorant", "dd >= 1 char det vanishes",
                                      "dd = 0 char det matches"};
        for (std::size_t c = 0; c < 4; ++c)
            if (!rep.clause[c]) fail(std::string("theorem clause failed: ") + names[c]);

        if (rep.dd <= 1 && !det.det1.is_polynomial())
            fail("det_1 = " + det.det1.to_string() + " not in Q[x] at dd = " + std::to_string(rep.dd));

        if (rep.dd == 1 && m.in_subring()) {
            Dd1Certificate cert = cdsk_reduce(m);
            auto problems = verify_certificate(cert);
            for (auto& p : problems) fail("certificate: " + p);
            r.certified = problems.empty();
        }
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    return r;
}

HarnessSummary run_harness(const HarnessConfig& cfg) {
    cfg.generator.validate();
    HarnessSummary s;
    s.instances.resize(cfg.count);

    auto work = [&](std::size_t i) {
        GeneratorConfig g = cfg.generator;
        g.seed = cfg.seed + i;
        g.target = cfg.target ? *cfg.target : static_cast<Target>(i % 3);
        if (!cfg.target && g.target == Target::dd1 && g.n < 2) g.target = Target::dd0;
        InstanceResult r;
        try {
            GeneratedInstance inst = random_matrix(g);
            r = check_instance(inst.matrix);
        } catch (const GenerationFailure& e) {
            r.generation_error = e.what();
        }
        r.index = i;
        r.seed = g.seed;
        r.target = g.target;
        s.instances[i] = std::move(r);
    };

    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(cfg.count, 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < cfg.count;) work(i);
        });
    for (auto& t : pool) t.join();

    for (const auto& r : s.instances) {
        if (!r.generation_error.empty()) ++s.generation_failures;
        if (r.matrix && !r.dd && r.failures.empty() && !r.theorem_checked) ++s.singular;
        if (r.dd) ++s.dd_histogram[*r.dd];
        if (r.theorem_checked) ++s.theorem_checked;
        if (r.certified) ++s.certified;
        if (!r.failures.empty()) ++s.failures;
    }
    return s;
}

}  // namespace oredet
