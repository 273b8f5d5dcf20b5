#include "msrs/layout.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace msrs {

std::int64_t total_of(const std::vector<Job>& jobs) {
    std::int64_t t = 0;
    for (auto& j : jobs) t += j.p;
    return t;
}

std::vector<Job> sorted_desc(std::vector<Job> jobs) {
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.p > b.p; });
    return jobs;
}

Block::Block(int cid, std::vector<Job> js) : class_id(cid), jobs(std::move(js)), len(total_of(jobs)) {}

void MachineState::push_bottom(Block b) {
    load += b.len;
    bottom.push_back(std::move(b));
}

void MachineState::push_front_bottom(Block b) {
    load += b.len;
    bottom.insert(bottom.begin(), std::move(b));
}

void MachineState::push_top(Block b) {
    load += b.len;
    top.push_back(std::move(b));
}

void MachineState::lift() {
    for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) top.push_back(std::move(*it));
    bottom.clear();
}

std::vector<std::pair<Block, Rat>> MachineState::timeline(const Rat& ceiling) const {
    if (!fixed.empty()) return fixed;
    std::vector<std::pair<Block, Rat>> out;
    Rat t = 0;
    for (auto& b : bottom) {
        out.emplace_back(b, t);
        t += b.len;
    }
    std::vector<std::pair<Block, Rat>> tops;
    Rat u = ceiling;
    for (auto& b : top) {
        u -= b.len;
        tops.emplace_back(b, u);
    }
    out.insert(out.end(), tops.rbegin(), tops.rend());
    return out;
}

void emit(const MachineState& ms, const Rat& ceiling, Schedule& out) {
    for (auto& [b, start] : ms.timeline(ceiling)) {
        Rat t = start;
        for (auto& j : b.jobs) {
            out.place(j.id, ms.index, t);
            t += j.p;
        }
    }
}

std::string partial_problem(const std::vector<MachineState>& machines, const Rat& ceiling, const Rat& limit) {
    struct Iv {
        Rat s, e;
        int machine;
        int cls;
        JobId id;
    };
    std::vector<Iv> all;
    for (auto& ms : machines) {
        std::vector<Iv> here;
        for (auto& [b, start] : ms.timeline(ceiling)) {
            Rat t = start;
            for (auto& j : b.jobs) {
                here.push_back({t, t + j.p, ms.index, b.class_id, j.id});
                t += j.p;
            }
        }
        std::sort(here.begin(), here.end(), [](const Iv& a, const Iv& b) { return a.s < b.s; });
        for (std::size_t i = 0; i + 1 < here.size(); ++i)
            if (here[i + 1].s < here[i].e)
                return "machine " + std::to_string(ms.index) + ": jobs " + std::to_string(here[i].id) + " and " +
                       std::to_string(here[i + 1].id) + " overlap";
        for (auto& iv : here) {
            if (iv.s < 0) return "job " + std::to_string(iv.id) + " starts before 0";
            if (iv.e > limit) return "job " + std::to_string(iv.id) + " ends after " + to_string(limit);
        }
        all.insert(all.end(), here.begin(), here.end());
    }
    std::map<int, std::vector<Iv>> by_class;
    for (auto& iv : all) by_class[iv.cls].push_back(iv);
    for (auto& [c, v] : by_class) {
        std::sort(v.begin(), v.end(), [](const Iv& a, const Iv& b) { return a.s < b.s; });
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i + 1].s < v[i].e)
                return "class " + std::to_string(c) + ": jobs " + std::to_string(v[i].id) + " and " +
                       std::to_string(v[i + 1].id) + " overlap";
    }
    return "";
}

bool Trace::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.holds; });
}

std::string Trace::render() const {
    std::ostringstream os;
    for (auto& n : notes) os << "# " << n << "\n";
    for (auto& c : checks) os << (c.holds ? "ok   " : "FAIL ") << c.step << ": " << c.claim << "\n";
    return os.str();
}

bool ClaimSink::active() const {
#ifdef NDEBUG
    return trace_ != nullptr;
#else
    return true;
#endif
}

void ClaimSink::check(const std::string& step, const std::string& claim, const std::function<bool()>& pred) {
    if (!active()) return;
    bool ok = pred();
    if (trace_) trace_->checks.push_back({step, claim, ok});
    if (!ok) throw std::logic_error(step + ": claim violated: " + claim);
}

void ClaimSink::note(const std::string& text) {
    if (trace_) trace_->notes.push_back(text);
}

}  // namespace msrs
