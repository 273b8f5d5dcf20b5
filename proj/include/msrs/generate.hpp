#pragma once

#include "msrs/instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace msrs {

struct GeneratorSpec {
    std::uint64_t seed = 1;
    int m_min = 2, m_max = 8;
    int classes_min = 1, classes_max = 8;
    int class_size_min = 1, class_size_max = 4;  // jobs per class
    std::int64_t p_min = 1, p_max = 10;
    int max_jobs = 16;
    std::string profile = "uniform";  // uniform, huge-heavy, many-light, adversarial-3/4-boundary
};

// Same spec, same instance.
Instance generate(const GeneratorSpec& spec);
// seeds spec.seed, spec.seed + 1, ...
std::vector<Instance> generate_batch(const GeneratorSpec& spec, int count);

const std::vector<std::string>& generator_profiles();

}  // namespace msrs
