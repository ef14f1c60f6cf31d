#include "oredet/generator.hpp"

#include <vector>

#include "oredet/dieudonne.hpp"
#include "oredet/majorant.hpp"

namespace oredet {

std::string to_string(Target t) {
    switch (t) {
        case Target::any: return "any";
        case Target::dd0: return "dd0";
        case Target::dd1: return "dd1";
    }
    return "any";
}

Target parse_target(const std::string& s) {
    if (s == "any") return Target::any;
    if (s == "dd0") return Target::dd0;
    if (s == "dd1") return Target::dd1;
    throw InputError("unknown target '" + s + "' (expected any, dd0 or dd1)");
}

void GeneratorConfig::validate() const {
    if (n == 0) throw InputError("generator: n must be at least 1");
    if (max_ord < 0 || max_deg < 0) throw InputError("generator: order and degree bounds must be >= 0");
    if (max_num < 1 || max_den < 1) throw InputError("generator: coefficient bounds must be >= 1");
    if (max_attempts == 0) throw InputError("generator: max_attempts must be positive");
}

namespace {

class InstanceSampler {
public:
    explicit InstanceSampler(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    OreMatrix generic() {
        OreMatrix m(cfg_.n);
        for (std::size_t i = 0; i < cfg_.n; ++i)
            for (std::size_t j = 0; j < cfg_.n; ++j)
                if (chance(0.85)) m(i, j) = entry(uniform(0, cfg_.max_ord));
        return m;
    }

    // Uniform order k with a singular leading matrix, then random row/column
    // shifts by d so that the optimal majorant is not uniform.
    OreMatrix degenerate() {
        const std::size_t n = cfg_.n;
        const std::int64_t k = uniform(1, cfg_.max_ord);
        std::vector<std::vector<Poly>> lead(n, std::vector<Poly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lead[i][j] = chance(0.8) ? poly_nonzero() : Poly();

        const std::size_t dep = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
        std::vector<Poly> mult(n);
        if (chance(0.5)) {
            std::size_t src = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 2));
            if (src >= dep) ++src;
            mult[src] = Poly(rational_nonzero());
        } else {
            for (std::size_t i = 0; i < n; ++i)
                if (i != dep && chance(0.7)) mult[i] = Poly(rational_nonzero());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Poly acc;
            for (std::size_t i = 0; i < n; ++i)
                if (!mult[i].is_zero()) acc += mult[i] * lead[i][j];
            lead[dep][j] = acc;
        }

        OreMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<RatFunc> c(static_cast<std::size_t>(k) + 1);
                c[static_cast<std::size_t>(k)] = lead[i][j];
                for (std::int64_t t = 0; t < k; ++t)
                    if (chance(t == k - 1 ? 0.8 : 0.5)) c[static_cast<std::size_t>(t)] = poly();
                m(i, j) = OreOp(std::move(c));
            }

        const std::int64_t slack = cfg_.max_ord - k;
        for (std::size_t i = 0; i < n; ++i)
            for (std::int64_t r = uniform(0, slack / 2); r > 0; --r)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).d_times();
        for (std::size_t j = 0; j < n; ++j)
            for (std::int64_t r = uniform(0, slack - slack / 2); r > 0; --r)
                for (std::size_t i = 0; i < n; ++i) m(i, j) = m(i, j).times_d();
        return m;
    }

    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

private:
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational() {
        return make_rational(Integer(std::to_string(uniform(-cfg_.max_num, cfg_.max_num))),
                             Integer(std::to_string(uniform(1, cfg_.max_den))));
    }

    Rational rational_nonzero() {
        for (;;) {
            Rational q = rational();
            if (q != 0) return q;
        }
    }

    Poly poly() {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(0, cfg_.max_deg)) + 1);
        for (auto& q : c) q = rational();
        return Poly(std::move(c));
    }

    Poly poly_nonzero() {
        for (;;) {
            Poly p = poly();
            if (!p.is_zero()) return p;
        }
    }

    OreOp entry(std::int64_t ord) {
        std::vector<RatFunc> c(static_cast<std::size_t>(ord) + 1);
        for (std::int64_t t = 0; t < ord; ++t) c[static_cast<std::size_t>(t)] = poly();
        c[static_cast<std::size_t>(ord)] = poly_nonzero();
        return OreOp(std::move(c));
    }

    const GeneratorConfig& cfg_;
    std::mt19937_64 rng_;
};

std::optional<std::int64_t> dd_of(const OreMatrix& m) {
    DieudonneDet det = dieudonne_det(m);
    if (det.is_zero()) return std::nullopt;
    return total_order(m).value() - det.d.value();
}

}  // namespace

GeneratedInstance random_matrix(const GeneratorConfig& cfg) {
    cfg.validate();
    InstanceSampler sampler(cfg);
    if (cfg.target == Target::any) {
        OreMatrix m = sampler.generic();
        auto dd = dd_of(m);
        return {std::move(m), dd, 1};
    }
    const std::int64_t want = cfg.target == Target::dd0 ? 0 : 1;
    for (std::size_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        const bool structured = cfg.target == Target::dd1 && cfg.max_ord >= 1 && cfg.n >= 2 && sampler.chance(0.8);
        OreMatrix m = structured ? sampler.degenerate() : sampler.generic();
        auto dd = dd_of(m);
        if (dd && *dd == want) return {std::move(m), dd, attempt};
    }
    throw GenerationFailure("no " + to_string(cfg.target) + " instance found in " + std::to_string(cfg.max_attempts) +
                            " attempts (n=" + std::to_string(cfg.n) + ", max_ord=" + std::to_string(cfg.max_ord) +
                            ", seed=" + std::to_string(cfg.seed) + ")");
}

}  // namespace oredet
