#include "msrs/generate.hpp"

#include <algorithm>
#include <random>

namespace msrs {

const std::vector<std::string>& generator_profiles() {
    static const std::vector<std::string> names{"uniform", "huge-heavy", "many-light", "adversarial-3/4-boundary"};
    return names;
}

namespace {

struct Draw {
    std::mt19937_64 rng;
    std::int64_t operator()(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

Instance generate(const GeneratorSpec& spec) {
    if (spec.m_min < 1 || spec.m_max < spec.m_min) throw ContractError("generate: bad machine range");
    if (spec.classes_min < 1 || spec.classes_max < spec.classes_min) throw ContractError("generate: bad class range");
    if (spec.class_size_min < 1 || spec.class_size_max < spec.class_size_min)
        throw ContractError("generate: bad class size range");
    if (spec.p_min < 1 || spec.p_max < spec.p_min) throw ContractError("generate: bad job size range");
    if (spec.max_jobs < 1) throw ContractError("generate: max_jobs must be positive");
    const auto& names = generator_profiles();
    if (std::find(names.begin(), names.end(), spec.profile) == names.end())
        throw ContractError("generate: unknown profile '" + spec.profile + "'");

    Draw d{std::mt19937_64(spec.seed)};
    const int m = static_cast<int>(d(spec.m_min, spec.m_max));
    int k = static_cast<int>(d(spec.classes_min, spec.classes_max));
    if (spec.profile == "many-light") k = spec.classes_max;
    std::vector<std::vector<std::int64_t>> classes;
    int budget = spec.max_jobs;
    const std::int64_t lo = spec.p_min, hi = spec.p_max;

    for (int c = 0; c < k && budget > 0; ++c) {
        std::vector<std::int64_t> cls;
        if (spec.profile == "uniform") {
            int n = static_cast<int>(d(spec.class_size_min, spec.class_size_max));
            for (int i = 0; i < n && budget > 0; ++i, --budget) cls.push_back(d(lo, hi));
        } else if (spec.profile == "huge-heavy") {
            if (c % 2 == 0) {
                // one job close to the top of the range
                cls.push_back(d(std::max(lo, (3 * hi + 3) / 4), hi));
                --budget;
            } else {
                int n = static_cast<int>(d(std::max(2, spec.class_size_min), std::max(3, spec.class_size_max)));
                for (int i = 0; i < n && budget > 0; ++i, --budget)
                    cls.push_back(d(std::max(lo, hi / 4), std::max(lo, hi / 2)));
            }
        } else if (spec.profile == "many-light") {
            int n = static_cast<int>(d(1, 2));
            for (int i = 0; i < n && budget > 0; ++i, --budget) cls.push_back(d(lo, std::max(lo, hi / 3)));
        } else {
            // class totals around 3/4 of T0 = 4q, built from jobs near T0/2 and T0/4
            const std::int64_t q = std::max<std::int64_t>(2, hi / 2);
            std::int64_t target = 3 * q + d(-1, 1);
            while (target > 0 && budget > 0) {
                std::int64_t piece = d(0, 1) ? 2 * q + d(-1, 1) : q + d(-1, 1);
                piece = std::clamp<std::int64_t>(std::min(piece, target), lo, hi);
                cls.push_back(piece);
                target -= piece;
                --budget;
            }
        }
        if (!cls.empty()) classes.push_back(cls);
    }
    return Instance::from_sizes(m, classes);
}

std::vector<Instance> generate_batch(const GeneratorSpec& spec, int count) {
    std::vector<Instance> out;
    GeneratorSpec s = spec;
    for (int i = 0; i < count; ++i) {
        s.seed = spec.seed + static_cast<std::uint64_t>(i);
        out.push_back(generate(s));
    }
    return out;
}

}  // namespace msrs
