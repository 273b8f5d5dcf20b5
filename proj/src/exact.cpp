#include "msrs/exact.hpp"

#include "msrs/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace msrs {

std::string to_string(ExactStatus s) {
    switch (s) {
        case ExactStatus::Optimal: return "optimal";
        case ExactStatus::InfeasibleAtBound: return "infeasible-at-bound";
        case ExactStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::int64_t n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
    bool test(std::int64_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::int64_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::int64_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
};

// machines get assigned after the fact: a start vector with at most m jobs
// running per unit slot is always m-colorable
Schedule assign_machines(const MultiResourceInstance& inst, const std::vector<std::int64_t>& start) {
    std::vector<int> order(inst.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (start[a] != start[b]) return start[a] < start[b];
        return a < b;
    });
    std::vector<std::int64_t> free_at(inst.m, 0);
    Schedule s;
    for (int k : order) {
        const auto& j = inst.jobs[k];
        int pick = -1;
        for (int i = 0; i < inst.m; ++i)
            if (free_at[i] <= start[k]) {
                pick = i;
                break;
            }
        if (pick < 0) throw std::logic_error("assign_machines: capacity exceeded");
        if (j.p > 0) free_at[pick] = start[k] + j.p;
        s.place(j.id, pick, start[k]);
    }
    return s;
}

class Search {
public:
    Search(const MultiResourceInstance& inst, std::int64_t K, const SearchLimits& lim)
        : inst_(inst), K_(K), lim_(lim), n_(static_cast<int>(inst.jobs.size())) {
        int R = static_cast<int>(inst.resource_names.size());
        for (auto& j : inst.jobs)
            for (int r : j.resources) R = std::max(R, r + 1);
        R_ = R;
        cap_.assign(static_cast<std::size_t>(std::max<std::int64_t>(K, 0)), 0);
        busy_.assign(R_, Bits(K));
        start_.assign(n_, -1);
        res_left_.assign(R_, 0);
        for (auto& j : inst.jobs)
            for (int r : j.resources) res_left_[r] += j.p;
        load_left_ = inst.total();
        // identical jobs (same p, same resource set) are scheduled in index order with nondecreasing starts
        group_.assign(n_, -1);
        prev_in_group_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            auto ra = inst.jobs[a].resources;
            std::sort(ra.begin(), ra.end());
            for (int b = a - 1; b >= 0; --b) {
                auto rb = inst.jobs[b].resources;
                std::sort(rb.begin(), rb.end());
                if (inst.jobs[b].p == inst.jobs[a].p && ra == rb) {
                    prev_in_group_[a] = b;
                    break;
                }
            }
        }
        began_ = Clock::now();
    }

    ExactResult run() {
        ExactResult res;
        for (auto& j : inst_.jobs)
            if (j.p > K_) {
                res.status = ExactStatus::InfeasibleAtBound;
                return res;
            }
        if (K_ < 0) {
            res.status = ExactStatus::InfeasibleAtBound;
            return res;
        }
        for (int r = 0; r < R_; ++r)
            if (res_left_[r] > K_) {
                res.status = ExactStatus::InfeasibleAtBound;
                return res;
            }
        if (load_left_ > K_ * inst_.m) {
            res.status = ExactStatus::InfeasibleAtBound;
            return res;
        }
        bool found = false;
        try {
            found = dfs(0);
        } catch (const Budget&) {
            res.status = ExactStatus::BudgetExhausted;
            res.nodes = nodes_;
            return res;
        }
        res.nodes = nodes_;
        if (!found) {
            res.status = ExactStatus::InfeasibleAtBound;
            return res;
        }
        res.status = ExactStatus::Optimal;
        res.schedule = assign_machines(inst_, start_);
        std::int64_t mk = 0;
        for (int k = 0; k < n_; ++k) mk = std::max(mk, start_[k] + inst_.jobs[k].p);
        res.makespan = mk;
        return res;
    }

private:
    struct Budget {};

    bool fits(int k, std::int64_t s) const {
        const auto& j = inst_.jobs[k];
        for (std::int64_t t = s; t < s + j.p; ++t) {
            if (cap_[t] >= inst_.m) return false;
            for (int r : j.resources)
                if (busy_[r].test(t)) return false;
        }
        return true;
    }

    std::int64_t lowest_start(int k) const {
        int prev = prev_in_group_[k];
        return prev >= 0 ? start_[prev] : 0;
    }

    // eligible: unscheduled and its identical predecessor already placed
    bool eligible(int k) const {
        if (start_[k] >= 0) return false;
        int prev = prev_in_group_[k];
        return prev < 0 || start_[prev] >= 0;
    }

    void apply(int k, std::int64_t s, int d) {
        const auto& j = inst_.jobs[k];
        for (std::int64_t t = s; t < s + j.p; ++t) {
            cap_[t] += d;
            for (int r : j.resources) {
                if (d > 0)
                    busy_[r].set(t);
                else
                    busy_[r].reset(t);
            }
        }
        for (int r : j.resources) res_left_[r] -= d * j.p;
        load_left_ -= d * j.p;
        start_[k] = d > 0 ? s : -1;
    }

    bool bounds_ok() const {
        std::int64_t free_cap = 0;
        for (auto c : cap_) free_cap += inst_.m - c;
        if (load_left_ > free_cap) return false;
        for (int r = 0; r < R_; ++r) {
            if (res_left_[r] == 0) continue;
            std::int64_t free_r = 0;
            for (std::int64_t t = 0; t < K_; ++t)
                if (!busy_[r].test(t) && cap_[t] < inst_.m) ++free_r;
            if (res_left_[r] > free_r) return false;
        }
        return true;
    }

    bool dfs(int placed) {
        if (placed == n_) return true;
        if (++nodes_ > lim_.max_nodes) throw Budget{};
        if (lim_.time_budget.count() > 0 && (nodes_ & 1023) == 0 && Clock::now() - began_ > lim_.time_budget)
            throw Budget{};
        if (!bounds_ok()) return false;

        // most constrained eligible job; ties: larger p, then lower index
        int best = -1;
        std::vector<std::int64_t> best_dom;
        for (int k = 0; k < n_; ++k) {
            if (!eligible(k)) continue;
            std::vector<std::int64_t> dom;
            for (std::int64_t s = lowest_start(k); s + inst_.jobs[k].p <= K_; ++s)
                if (fits(k, s)) dom.push_back(s);
            if (dom.empty()) return false;
            if (best < 0 || dom.size() < best_dom.size() ||
                (dom.size() == best_dom.size() && inst_.jobs[k].p > inst_.jobs[best].p)) {
                best = k;
                best_dom = std::move(dom);
            }
        }
        for (auto s : best_dom) {
            apply(best, s, +1);
            if (dfs(placed + 1)) return true;
            apply(best, s, -1);
        }
        return false;
    }

    const MultiResourceInstance& inst_;
    std::int64_t K_;
    SearchLimits lim_;
    int n_;
    int R_ = 0;
    std::vector<int> cap_;
    std::vector<Bits> busy_;
    std::vector<std::int64_t> start_;
    std::vector<std::int64_t> res_left_;
    std::int64_t load_left_ = 0;
    std::vector<int> group_;
    std::vector<int> prev_in_group_;
    std::int64_t nodes_ = 0;
    Clock::time_point began_;
};

std::int64_t mr_lower_bound(const MultiResourceInstance& inst) {
    std::int64_t lb = (inst.total() + inst.m - 1) / inst.m;
    std::map<int, std::int64_t> per;
    for (auto& j : inst.jobs) {
        lb = std::max(lb, j.p);
        for (int r : j.resources) per[r] += j.p;
    }
    for (auto& [r, v] : per) lb = std::max(lb, v);
    return lb;
}

Schedule to_instance_schedule(const Instance& inst, Schedule s) {
    finalize(inst, s);
    return s;
}

}  // namespace

Schedule list_schedule(const MultiResourceInstance& inst) {
    std::vector<int> order(inst.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inst.jobs[a].p > inst.jobs[b].p; });
    std::vector<std::int64_t> machine_free(inst.m, 0);
    std::map<int, std::vector<std::pair<std::int64_t, std::int64_t>>> busy;
    Schedule s;
    for (int k : order) {
        const auto& j = inst.jobs[k];
        int best_machine = 0;
        std::int64_t best_start = -1;
        for (int i = 0; i < inst.m; ++i) {
            std::int64_t t = machine_free[i];
            bool moved = true;
            while (moved) {
                moved = false;
                for (int r : j.resources)
                    for (auto [a, b] : busy[r])
                        if (t < b && a < t + j.p) {
                            t = b;
                            moved = true;
                        }
            }
            if (best_start < 0 || t < best_start) {
                best_start = t;
                best_machine = i;
            }
        }
        s.place(j.id, best_machine, best_start);
        machine_free[best_machine] = best_start + j.p;
        for (int r : j.resources) busy[r].push_back({best_start, best_start + j.p});
    }
    return s;
}

ExactResult decide_makespan(const MultiResourceInstance& inst, std::int64_t K, const SearchLimits& limits) {
    if (K < 0) throw ContractError("decide_makespan: K must be >= 0");
    Search search(inst, K, limits);
    return search.run();
}

ExactResult decide_makespan(const Instance& inst, std::int64_t K, const SearchLimits& limits) {
    ExactResult r = decide_makespan(as_multi_resource(inst), K, limits);
    if (r.status == ExactStatus::Optimal) r.schedule = to_instance_schedule(inst, r.schedule);
    return r;
}

ExactResult solve_exact(const MultiResourceInstance& inst, const SearchLimits& limits) {
    ExactResult best;
    std::int64_t lo = inst.jobs.empty() ? 0 : mr_lower_bound(inst);
    Schedule ub = list_schedule(inst);
    std::int64_t hi = 0;
    for (auto& j : inst.jobs) hi = std::max<std::int64_t>(hi, to_i64(floor_of(ub.at(j.id).start)) + j.p);
    if (limits.horizon >= 0 && limits.horizon < hi) {
        ExactResult at = decide_makespan(inst, limits.horizon, limits);
        if (at.status != ExactStatus::Optimal) {
            at.lower = lo;
            at.upper = hi;
            return at;
        }
        hi = at.makespan;
        ub = at.schedule;
    }
    best.schedule = ub;
    best.upper = hi;
    std::int64_t nodes = 0;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        ExactResult r = decide_makespan(inst, mid, limits);
        nodes += r.nodes;
        if (r.status == ExactStatus::BudgetExhausted) {
            best.status = ExactStatus::BudgetExhausted;
            best.lower = lo;
            best.upper = hi;
            best.nodes = nodes;
            return best;
        }
        if (r.status == ExactStatus::Optimal) {
            hi = r.makespan;
            best.schedule = r.schedule;
        } else {
            lo = mid + 1;
        }
    }
    best.status = ExactStatus::Optimal;
    best.makespan = hi;
    best.lower = best.upper = hi;
    best.nodes = nodes;
    return best;
}

ExactResult solve_exact(const Instance& inst, const SearchLimits& limits) {
    ExactResult r = solve_exact(as_multi_resource(inst), limits);
    if (r.status == ExactStatus::Optimal) r.schedule = to_instance_schedule(inst, r.schedule);
    return r;
}

}  // namespace msrs
