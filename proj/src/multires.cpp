#include "msrs/multires.hpp"

#include <algorithm>
#include <map>

namespace msrs {

int MultiResourceInstance::resource_id(const std::string& name) {
    auto it = std::find(resource_names.begin(), resource_names.end(), name);
    if (it != resource_names.end()) return static_cast<int>(it - resource_names.begin());
    resource_names.push_back(name);
    return static_cast<int>(resource_names.size()) - 1;
}

std::int64_t MultiResourceInstance::total() const {
    std::int64_t t = 0;
    for (auto& j : jobs) t += j.p;
    return t;
}

MultiResourceInstance as_multi_resource(const Instance& inst) {
    MultiResourceInstance mr;
    mr.m = inst.m;
    for (int c = 0; c < inst.num_classes(); ++c) {
        int r = mr.resource_id("class" + std::to_string(c));
        for (auto& j : inst.classes[c]) mr.jobs.push_back({j.id, j.p, {r}, ""});
    }
    return mr;
}

ValidationReport validate(const MultiResourceInstance& inst, const Schedule& s) {
    std::map<JobId, const MRJob*> by_id;
    for (auto& j : inst.jobs) by_id[j.id] = &j;
    for (auto& [id, pl] : s.entries) {
        if (!by_id.count(id)) throw StructuralError("schedule references unknown job " + std::to_string(id));
        if (pl.start < 0) throw StructuralError("job " + std::to_string(id) + " has negative start");
        if (pl.machine < 0) throw StructuralError("job " + std::to_string(id) + " has negative machine index");
    }
    for (auto& [id, j] : by_id)
        if (!s.contains(id)) throw StructuralError("job " + std::to_string(id) + " missing from schedule");

    ValidationReport rep;
    std::vector<const MRJob*> js;
    for (auto& j : inst.jobs) js.push_back(&j);
    for (auto* j : js) {
        auto& pl = s.at(j->id);
        rep.makespan = std::max(rep.makespan, pl.start + j->p);
        if (pl.machine >= inst.m) rep.violations.push_back({ViolationKind::MachineOutOfRange, j->id, -1});
    }
    for (std::size_t a = 0; a < js.size(); ++a)
        for (std::size_t b = a + 1; b < js.size(); ++b) {
            auto &pa = s.at(js[a]->id), &pb = s.at(js[b]->id);
            if (js[a]->p == 0 || js[b]->p == 0) continue;
            bool overlap = pa.start < pb.start + js[b]->p && pb.start < pa.start + js[a]->p;
            if (!overlap) continue;
            JobId x = std::min(js[a]->id, js[b]->id), y = std::max(js[a]->id, js[b]->id);
            if (pa.machine == pb.machine) rep.violations.push_back({ViolationKind::MachineOverlap, x, y});
            bool share = false;
            for (int r : js[a]->resources)
                if (std::find(js[b]->resources.begin(), js[b]->resources.end(), r) != js[b]->resources.end())
                    share = true;
            if (share) rep.violations.push_back({ViolationKind::ResourceOverlap, x, y});
        }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace msrs
