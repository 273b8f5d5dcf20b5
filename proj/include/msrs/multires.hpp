#pragma once

#include "msrs/instance.hpp"

#include <string>
#include <vector>

namespace msrs {

struct MRJob {
    JobId id = 0;
    std::int64_t p = 1;
    std::vector<int> resources;  // indices into MultiResourceInstance::resource_names
    std::string name;
};

// Jobs sharing any resource may not overlap in time.
struct MultiResourceInstance {
    int m = 1;
    std::vector<MRJob> jobs;
    std::vector<std::string> resource_names;

    int resource_id(const std::string& name);  // interns
    std::int64_t total() const;
};

// one resource per class
MultiResourceInstance as_multi_resource(const Instance& inst);

ValidationReport validate(const MultiResourceInstance& inst, const Schedule& s);

}  // namespace msrs
