#include "msrs/eptas.hpp"

#include "msrs/bounds.hpp"
#include "msrs/layout.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace msrs {

std::string to_string(EptasMode mode) { return mode == EptasMode::FixedM ? "fixed-m" : "augmented"; }

EptasMode parse_mode(const std::string& text) {
    if (text == "fixed-m") return EptasMode::FixedM;
    if (text == "augmented") return EptasMode::Augmented;
    throw ContractError("unknown eptas mode '" + text + "' (expected fixed-m or augmented)");
}

namespace {

void require_epsilon(const Rat& eps) {
    if (!(eps > 0 && 2 * eps <= 1)) throw ContractError("epsilon must lie in (0, 1/2]");
}

// mass of the jobs with p <= mu T
Rat small_mass(const std::vector<Job>& jobs, const Rat& muT) {
    Rat s = 0;
    for (auto& j : jobs)
        if (Rat(j.p) <= muT) s += j.p;
    return s;
}

}  // namespace

EptasParams EptasParams::make(const Rat& epsilon, EptasMode mode, const Rat& T, const Rat& delta) {
    require_epsilon(epsilon);
    if (!(T > 0)) throw ContractError("EptasParams: T must be positive");
    EptasParams p;
    p.epsilon = epsilon;
    p.mode = mode;
    p.T = T;
    p.delta = delta;
    p.mu = epsilon * epsilon * delta;
    return p;
}

JobPool pool_of(const Instance& inst) {
    JobPool pool;
    for (int c = 0; c < inst.num_classes(); ++c) pool[c] = inst.classes[c];
    return pool;
}

std::vector<Rat> delta_candidates(const Rat& epsilon, int m, EptasMode mode) {
    require_epsilon(epsilon);
    BigInt K = mode == EptasMode::FixedM ? floor_of(Rat(2 * m) / epsilon) : floor_of(Rat(2) / (epsilon * epsilon));
    std::vector<Rat> out;
    Rat d = epsilon;
    for (BigInt k = 1; k <= K; ++k) {
        out.push_back(d);
        d *= epsilon;
    }
    return out;
}

DeltaSums delta_sums(const Instance& inst, const Rat& epsilon, const Rat& T, const Rat& delta) {
    const Rat dT = delta * T, muT = epsilon * epsilon * delta * T;
    DeltaSums s;
    for (auto& cls : inst.classes) {
        for (auto& j : cls)
            if (Rat(j.p) > muT && Rat(j.p) <= dT) s.medium += j.p;
        Rat ps = small_mass(cls, muT);
        if (ps > muT && ps <= dT) s.light_small += ps;
    }
    return s;
}

Rat choose_delta(const Instance& inst, const Rat& epsilon, const Rat& T, EptasMode mode) {
    const Rat bound = mode == EptasMode::FixedM ? epsilon * T : epsilon * epsilon * Rat(inst.m) * T;
    for (auto& d : delta_candidates(epsilon, inst.m, mode)) {
        DeltaSums s = delta_sums(inst, epsilon, T, d);
        if (s.medium <= bound && s.light_small <= bound) return d;
    }
    throw std::logic_error("choose_delta: no candidate satisfies both mass conditions");
}

std::pair<JobPool, MediumTrace> remove_medium(const Instance& inst, const EptasParams& params) {
    const Rat dT = params.delta * params.T, muT = params.mu * params.T;
    auto is_medium = [&](const Job& j) { return Rat(j.p) > muT && Rat(j.p) <= dT; };
    JobPool pool;
    MediumTrace tr;
    for (int c = 0; c < inst.num_classes(); ++c) {
        const auto& cls = inst.classes[c];
        Rat load = 0;
        for (auto& j : cls)
            if (is_medium(j)) load += j.p;
        if (params.mode == EptasMode::Augmented && load > params.epsilon * params.T) {
            tr.removed_classes[c] = cls;
            tr.class_mass += inst.class_total(c);
            continue;
        }
        std::vector<Job> keep;
        for (auto& j : cls) {
            if (is_medium(j)) {
                tr.medium[c].push_back(j);
                tr.medium_mass += j.p;
            } else {
                keep.push_back(j);
            }
        }
        if (!keep.empty()) pool[c] = keep;
    }
    if (params.mode == EptasMode::Augmented && !tr.removed_classes.empty() &&
        !(Rat(static_cast<std::int64_t>(tr.removed_classes.size())) < params.epsilon * inst.m))
        throw std::logic_error("remove_medium: more than eps*m classes carry medium load above eps*T");
    return {pool, tr};
}

std::pair<JobPool, SmallTrace> remove_small_light(const JobPool& pool, const EptasParams& params) {
    const Rat dT = params.delta * params.T, muT = params.mu * params.T;
    JobPool out;
    SmallTrace tr;
    for (auto& [c, jobs] : pool) {
        Rat ps = small_mass(jobs, muT);
        if (ps == 0 || ps > dT) {
            out[c] = jobs;
            continue;
        }
        std::vector<Job> keep, gone;
        for (auto& j : jobs) (Rat(j.p) <= muT ? gone : keep).push_back(j);
        (ps > muT ? tr.light : tr.tiny)[c] = gone;
        tr.L += ps;
        if (!keep.empty()) out[c] = keep;
    }
    return {out, tr};
}

std::size_t LayeredModel::num_windows() const {
    std::size_t w = 0;
    for (int p : P)
        if (p <= layers) w += static_cast<std::size_t>(layers - p + 1);
    return w;
}

std::uint64_t LayeredModel::count_configurations(std::uint64_t cap) const {
    // f[t]: selections using only layers >= t
    std::vector<std::uint64_t> f(layers + 1, 0);
    f[layers] = 1;
    for (int t = layers - 1; t >= 0; --t) {
        std::uint64_t v = f[t + 1];
        for (int p : P) {
            if (t + p > layers) continue;
            v = (v > cap - std::min(cap, f[t + p])) ? cap : v + f[t + p];
        }
        f[t] = std::min(v, cap);
    }
    return f[0];
}

std::pair<LayeredModel, RoundingTrace> round_and_layer(const JobPool& pool, const EptasParams& params) {
    const Rat T = params.T, eps = params.epsilon;
    const Rat xi = eps * params.delta * T;
    const Rat dT = params.delta * T, muT = params.mu * T;
    const Rat Tp = (1 + 2 * eps) * T;
    LayeredModel model;
    RoundingTrace tr;
    model.xi = xi;
    model.layers = static_cast<int>(to_i64(floor_of(Tp / xi)));
    std::set<int> lens;
    for (auto& [c, jobs] : pool) {
        Rat ps = 0;
        std::vector<Job> smalls;
        for (auto& j : jobs) {
            if (Rat(j.p) > dT) {
                int len = static_cast<int>(to_i64(ceil_of(Rat(j.p) / xi)));
                tr.rounded[j.id] = len;
                tr.big[j.id] = j;
                model.jobs.push_back({c, len, j.id});
                lens.insert(len);
                model.counts[{c, len}]++;
            } else if (Rat(j.p) <= muT) {
                ps += j.p;
                smalls.push_back(j);
            } else {
                throw ContractError("round_and_layer: medium job left in the pool");
            }
        }
        if (smalls.empty()) continue;
        if (!(ps > dT)) throw ContractError("round_and_layer: light small class left in the pool");
        int n = static_cast<int>(to_i64(ceil_of(ps / xi)));
        tr.placeholders[c] = n;
        tr.placeholder_small[c] = smalls;
        for (int i = 0; i < n; ++i) model.jobs.push_back({c, 1, -1});
        model.counts[{c, 1}] += n;
        lens.insert(1);
    }
    model.P.assign(lens.begin(), lens.end());

    // size bounds with explicit constants, valid when every job is at most T
    const Rat inv = 1 / (eps * params.delta);
    bool fits = true;
    for (auto& [c, jobs] : pool)
        for (auto& j : jobs) fits = fits && Rat(j.p) <= T;
    if (fits) {
        if (Rat(static_cast<std::int64_t>(model.P.size())) > ceil_of(inv) + 1)
            throw std::logic_error("round_and_layer: |P| exceeds 1/(eps delta) + 1");
        if (Rat(model.layers) > 2 * inv) throw std::logic_error("round_and_layer: |layers| exceeds 2/(eps delta)");
        if (model.num_windows() > model.P.size() * static_cast<std::size_t>(model.layers))
            throw std::logic_error("round_and_layer: |W| exceeds |layers| |P|");
    }
    return {model, tr};
}

namespace {

struct IpSearch {
    IpSearch(const LayeredModel& md, int machines, std::int64_t budget) : model(md), m(machines), max_nodes(budget) {}

    const LayeredModel& model;
    int m;
    std::int64_t max_nodes;
    std::int64_t nodes = 0;
    std::vector<int> order;            // model job indices
    std::vector<int> dense;            // model job -> dense class
    std::vector<int> cap;              // per layer
    std::vector<std::vector<char>> busy;  // dense class x layer
    std::vector<int> rest_class;       // remaining layer demand per dense class
    std::int64_t rest_total = 0;
    std::int64_t free_total = 0;
    std::vector<int> start;

    bool class_room(int dc) const {
        int room = 0;
        for (int l = 0; l < model.layers; ++l) room += (!busy[dc][l] && cap[l] < m);
        return room >= rest_class[dc];
    }

    bool dfs(std::size_t k) {
        if (k == order.size()) return true;
        if (++nodes > max_nodes) throw SearchBudgetError("layer IP search exceeded its node budget");
        if (rest_total > free_total) return false;
        const int j = order[k];
        const auto& job = model.jobs[j];
        const int dc = dense[j];
        if (!class_room(dc)) return false;
        int from = 0;
        if (k > 0) {
            const int prev = order[k - 1];
            if (dense[prev] == dc && model.jobs[prev].len == job.len) from = start[prev] + 1;
        }
        for (int s = from; s + job.len <= model.layers; ++s) {
            bool ok = true;
            for (int l = s; l < s + job.len && ok; ++l) ok = !busy[dc][l] && cap[l] < m;
            if (!ok) continue;
            for (int l = s; l < s + job.len; ++l) {
                busy[dc][l] = 1;
                ++cap[l];
            }
            rest_class[dc] -= job.len;
            rest_total -= job.len;
            free_total -= job.len;
            start[j] = s;
            if (dfs(k + 1)) return true;
            for (int l = s; l < s + job.len; ++l) {
                busy[dc][l] = 0;
                --cap[l];
            }
            rest_class[dc] += job.len;
            rest_total += job.len;
            free_total += job.len;
        }
        start[j] = -1;
        return false;
    }
};

}  // namespace

LayerIpSolution solve_layer_ip(const LayeredModel& model, int m, std::int64_t max_nodes) {
    if (m < 1) throw ContractError("solve_layer_ip: m must be positive");
    IpSearch s(model, m, max_nodes);
    const std::size_t n = model.jobs.size();
    std::map<int, int> dense_of;
    std::map<int, std::int64_t> class_len;
    for (auto& j : model.jobs) class_len[j.class_id] += j.len;
    for (auto& [c, len] : class_len) dense_of.emplace(c, static_cast<int>(dense_of.size()));
    s.dense.resize(n);
    s.rest_class.assign(dense_of.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        s.dense[i] = dense_of[model.jobs[i].class_id];
        s.rest_class[s.dense[i]] += model.jobs[i].len;
        s.rest_total += model.jobs[i].len;
    }
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    // heaviest classes first, long jobs first inside a class, identical jobs adjacent
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        const auto &ja = model.jobs[a], &jb = model.jobs[b];
        if (ja.class_id != jb.class_id) {
            if (class_len[ja.class_id] != class_len[jb.class_id])
                return class_len[ja.class_id] > class_len[jb.class_id];
            return ja.class_id < jb.class_id;
        }
        return ja.len > jb.len;
    });
    s.cap.assign(model.layers, 0);
    s.busy.assign(dense_of.size(), std::vector<char>(model.layers, 0));
    s.free_total = static_cast<std::int64_t>(model.layers) * m;
    s.start.assign(n, -1);

    LayerIpSolution sol;
    bool ok = true;
    for (auto& [c, len] : class_len) ok = ok && len <= model.layers;
    ok = ok && s.dfs(0);
    sol.nodes = s.nodes;
    if (!ok) return sol;

    sol.feasible = true;
    sol.start = s.start;
    sol.machine.assign(n, -1);
    std::vector<int> by_start(n);
    std::iota(by_start.begin(), by_start.end(), 0);
    std::stable_sort(by_start.begin(), by_start.end(), [&](int a, int b) { return sol.start[a] < sol.start[b]; });
    std::vector<int> end(m, 0);
    std::vector<Configuration> conf(m);
    for (int j : by_start) {
        int pick = -1;
        for (int i = 0; i < m && pick < 0; ++i)
            if (end[i] <= sol.start[j]) pick = i;
        if (pick < 0) throw std::logic_error("solve_layer_ip: interval partition ran out of machines");
        sol.machine[j] = pick;
        end[pick] = sol.start[j] + model.jobs[j].len;
        conf[pick].push_back({sol.start[j], model.jobs[j].len});
        sol.y[{model.jobs[j].class_id, sol.start[j], model.jobs[j].len}]++;
    }
    std::map<Configuration, int> x;
    for (auto& k : conf) x[k]++;
    sol.x.assign(x.begin(), x.end());
    return sol;
}

std::string ip_problem(const LayeredModel& model, int m, const LayerIpSolution& sol) {
    if (!sol.feasible) return "solution is marked infeasible";
    int sum = 0;
    std::map<Window, std::int64_t> from_x, from_y;
    for (auto& [k, cnt] : sol.x) {
        if (cnt < 0) return "negative x_K";
        sum += cnt;
        int last = 0;
        for (auto& w : k) {
            if (w.start < last) return "configuration with overlapping windows";
            if (w.start + w.len > model.layers) return "window beyond the last layer";
            last = w.start + w.len;
            from_x[w] += cnt;
        }
    }
    if (sum != m) return "configuration multiplicities do not sum to m";
    std::map<std::pair<int, int>, int> per_class_len;
    std::map<std::pair<int, int>, int> per_class_layer;
    for (auto& [key, cnt] : sol.y) {
        auto [c, l, p] = key;
        if (cnt < 0) return "negative y";
        from_y[{l, p}] += cnt;
        per_class_len[{c, p}] += cnt;
        for (int t = l; t < l + p; ++t) per_class_layer[{c, t}] += cnt;
    }
    if (from_x != from_y) return "configurations and y cover different windows";
    if (per_class_len != model.counts) return "y does not match the job counts per class and length";
    for (auto& [key, cnt] : per_class_layer)
        if (cnt > 1) return "class uses layer " + std::to_string(key.second) + " twice";
    return "";
}

namespace {

struct Group {
    int class_id;
    std::vector<Job> jobs;
    Rat mass;
};

// Glued groups appended after `from`, decreasing mass, a machine is left once the next
// group would push it beyond `from + limit`. Without a limit everything goes to machine 0.
void append_groups(std::vector<Group> groups, const Rat& from, const std::optional<Rat>& limit, int m,
                   Schedule& out) {
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.mass > b.mass; });
    std::vector<Rat> fill(m, 0);
    int i = 0;
    for (auto& g : groups) {
        if (limit && fill[i] > 0 && fill[i] + g.mass > *limit) {
            if (i + 1 < m)
                ++i;
            else
                i = static_cast<int>(std::min_element(fill.begin(), fill.end()) - fill.begin());
        }
        for (auto& j : g.jobs) {
            out.place(j.id, i, from + fill[i]);
            fill[i] += j.p;
        }
    }
}

}  // namespace

Reinserted reinsert_small(const LayeredModel& model, const LayerIpSolution& sol, const RoundingTrace& rounding,
                          const SmallTrace& small, const EptasParams& params, int m) {
    if (!sol.feasible) throw ContractError("reinsert_small: layered schedule is infeasible");
    const Rat w = model.xi * (1 + params.epsilon);  // stretched layer, xi + mu T
    Reinserted r;
    Schedule& out = r.schedule;

    std::map<int, std::vector<std::pair<int, Rat>>> slots;  // class -> (machine, slot start)
    std::map<int, std::pair<Job, Rat>> sibling;             // class -> (a big job, its start)
    std::vector<std::vector<char>> covered(m, std::vector<char>(model.layers, 0));
    for (std::size_t k = 0; k < model.jobs.size(); ++k) {
        const auto& lj = model.jobs[k];
        const int i = sol.machine[k], s = sol.start[k];
        for (int l = s; l < s + lj.len; ++l) covered[i][l] = 1;
        if (lj.job < 0) {
            slots[lj.class_id].push_back({i, s * w});
            continue;
        }
        const Job& j = rounding.big.at(lj.job);
        out.place(j.id, i, s * w);
        if (!sibling.count(lj.class_id)) sibling.emplace(lj.class_id, std::make_pair(j, s * w));
    }

    // placeholder slots take the class's small jobs greedily
    for (auto& [c, jobs] : rounding.placeholder_small) {
        auto& sl = slots[c];
        std::sort(sl.begin(), sl.end(), [](auto& a, auto& b) { return a.second < b.second; });
        std::size_t at = 0;
        Rat fill = 0;
        for (auto& j : sorted_desc(jobs)) {
            while (at < sl.size() && fill + j.p > w) {
                ++at;
                fill = 0;
            }
            if (at == sl.size()) throw std::logic_error("reinsert_small: placeholder slots too small");
            out.place(j.id, sl[at].first, sl[at].second + fill);
            fill += j.p;
        }
    }

    // tiny classes: behind a big sibling inside its window, else whole class into a free slot
    std::vector<std::pair<Rat, std::pair<int, int>>> free;  // (fill, (machine, layer))
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < model.layers; ++l)
            if (!covered[i][l]) free.push_back({0, {i, l}});
    std::vector<Group> late;
    for (auto& [c, jobs] : small.tiny) {
        auto sib = sibling.find(c);
        if (sib != sibling.end()) {
            Rat t = sib->second.second + sib->second.first.p;
            const int i = out.at(sib->second.first.id).machine;
            for (auto& j : jobs) {
                out.place(j.id, i, t);
                t += j.p;
            }
            continue;
        }
        const Rat mass = total_of(jobs);
        auto slot = std::find_if(free.begin(), free.end(), [&](auto& f) { return f.first + mass <= w; });
        if (slot == free.end()) {
            late.push_back({c, jobs, mass});
            ++r.tiny_fallback;
            continue;
        }
        Rat t = slot->second.second * w + slot->first;
        for (auto& j : jobs) {
            out.place(j.id, slot->second.first, t);
            t += j.p;
        }
        slot->first += mass;
    }
    std::map<JobId, std::int64_t> size;
    for (auto& [id, j] : rounding.big) size[id] = j.p;
    for (auto* side : {&rounding.placeholder_small, &small.tiny})
        for (auto& [c, jobs] : *side)
            for (auto& j : jobs) size[j.id] = j.p;
    Rat end = 0;
    for (auto& [id, pl] : out.entries) end = std::max(end, pl.start + size.at(id));
    r.stretched_end = end;

    // light classes after the stretched schedule
    for (auto& [c, jobs] : small.light) late.push_back({c, jobs, total_of(jobs)});
    std::optional<Rat> limit;
    if (params.mode == EptasMode::Augmented) limit = params.epsilon * params.T;
    append_groups(late, end, limit, m, out);
    return r;
}

namespace {

std::map<JobId, Job> job_index(const Instance& inst) {
    std::map<JobId, Job> idx;
    for (auto& j : inst.jobs()) idx[j.id] = j;
    return idx;
}

Rat end_of(const Schedule& s, const std::map<JobId, Job>& idx) {
    Rat e = 0;
    for (auto& [id, pl] : s.entries) {
        auto it = idx.find(id);
        if (it != idx.end()) e = std::max(e, pl.start + it->second.p);
    }
    return e;
}

EptasResult trivial_result(const Instance& inst, Schedule s, const std::string& why) {
    EptasResult res;
    res.schedule = std::move(s);
    res.report.shortcut = why;
    res.makespan = makespan(inst, res.schedule);
    res.report.T_star = res.makespan;
    res.report.bound = res.makespan;
    res.machines_used = res.schedule.machines_used();
    return res;
}

}  // namespace

std::optional<EptasResult> eptas_attempt(const Instance& inst, const Rat& epsilon, EptasMode mode, const Rat& T,
                                         const EptasOptions& options) {
    require_epsilon(epsilon);
    if (!(T > 0)) throw ContractError("eptas_attempt: T must be positive");
    for (int c = 0; c < inst.num_classes(); ++c)
        if (Rat(inst.class_total(c)) > T) return std::nullopt;
    if (Rat(inst.total()) > T * inst.m) return std::nullopt;

    const Rat delta = choose_delta(inst, epsilon, T, mode);
    const EptasParams params = EptasParams::make(epsilon, mode, T, delta);
    auto [I1, medium] = remove_medium(inst, params);
    auto [I2, small] = remove_small_light(I1, params);
    auto [model, rounding] = round_and_layer(I2, params);

    EptasResult res;
    EptasReport& rep = res.report;
    rep.T_star = T;
    rep.delta = delta;
    rep.mu = params.mu;
    rep.xi = model.xi;
    rep.medium_mass = medium.medium_mass;
    rep.removed_class_mass = medium.class_mass;
    rep.removed_classes = static_cast<int>(medium.removed_classes.size());
    rep.light_small_mass = small.L;
    rep.P = model.P.size();
    rep.layers = model.layers;
    rep.windows = model.num_windows();
    for (auto& [c, n] : rounding.placeholders) rep.placeholders += n;
    rep.bound = (1 + 5 * epsilon + 2 * epsilon * epsilon) * T;

    if (model.layers > options.max_layers)
        throw SizeBudgetError("layered model has " + std::to_string(model.layers) + " layers, above the cap of " +
                              std::to_string(options.max_layers));
    const std::uint64_t cap = options.config_cap == 0 ? UINT64_MAX : options.config_cap;
    rep.configurations = model.count_configurations(cap);
    if (options.config_cap != 0 && rep.configurations >= cap)
        throw SizeBudgetError("configuration count reaches the cap of " + std::to_string(options.config_cap));

    LayerIpSolution sol = solve_layer_ip(model, inst.m, options.ip_node_budget);
    rep.ip_nodes = sol.nodes;
    if (!sol.feasible) return std::nullopt;
    if (auto problem = ip_problem(model, inst.m, sol); !problem.empty())
        throw std::logic_error("solve_layer_ip: " + problem);

    Reinserted ri = reinsert_small(model, sol, rounding, small, params, inst.m);
    rep.tiny_fallback = ri.tiny_fallback;
    Schedule& s = ri.schedule;
    const auto idx = job_index(inst);

    // medium jobs after everything placed so far
    const Rat e2 = end_of(s, idx);
    std::vector<Group> groups;
    if (mode == EptasMode::FixedM) {
        std::vector<Job> all;
        for (auto& [c, jobs] : medium.medium) all.insert(all.end(), jobs.begin(), jobs.end());
        if (!all.empty()) groups.push_back({-1, all, total_of(all)});
        append_groups(groups, e2, std::nullopt, inst.m, s);
    } else {
        for (auto& [c, jobs] : medium.medium) groups.push_back({c, jobs, total_of(jobs)});
        append_groups(groups, e2, epsilon * T, inst.m, s);
    }
    int extra = inst.m;
    for (auto& [c, jobs] : medium.removed_classes) {
        Rat t = 0;
        for (auto& j : jobs) {
            s.place(j.id, extra, t);
            t += j.p;
        }
        ++extra;
    }
    rep.extra_machines = extra - inst.m;

    if (options.compact) compact(inst, s);
    finalize(inst, s);
    res.schedule = std::move(s);
    res.makespan = makespan(inst, res.schedule);
    res.machines_used = res.schedule.machines_used();
    return res;
}

EptasResult eptas_solve(const Instance& inst, const Rat& epsilon, EptasMode mode, const EptasOptions& options) {
    require_epsilon(epsilon);
    if (inst.num_jobs() == 0 || inst.m == 1) return trivial_result(inst, sequential(inst), "single-machine");
    if (inst.num_classes() <= inst.m) return trivial_result(inst, one_class_per_machine(inst), "one-class-per-machine");

    std::int64_t lo = to_i64(ceil_of(lower_bound_basic(inst)));
    std::int64_t hi = inst.total();
    int guesses = 0;
    std::int64_t nodes = 0;
    auto run = [&](std::int64_t T) {
        ++guesses;
        auto r = eptas_attempt(inst, epsilon, mode, Rat(T), options);
        if (r) nodes += r->report.ip_nodes;
        return r;
    };
    std::optional<EptasResult> best = run(hi);
    if (!best) throw std::logic_error("eptas_solve: the pipeline rejects T = sum of p");
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (auto r = run(mid)) {
            best = std::move(r);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    best->report.guesses = guesses;
    best->report.ip_nodes = nodes;
    return *best;
}

void compact(const Instance& inst, Schedule& s) {
    std::vector<Job> jobs;
    for (auto& j : inst.jobs())
        if (s.contains(j.id)) jobs.push_back(j);
    std::stable_sort(jobs.begin(), jobs.end(),
                     [&](const Job& a, const Job& b) { return s.at(a.id).start < s.at(b.id).start; });
    std::vector<Job> done;
    for (auto& j : jobs) {
        const int i = s.at(j.id).machine;
        std::vector<std::pair<Rat, Rat>> busy;
        for (auto& d : done)
            if (s.at(d.id).machine == i || d.class_id == j.class_id)
                busy.push_back({s.at(d.id).start, s.at(d.id).start + d.p});
        std::vector<Rat> cand{0};
        for (auto& b : busy) cand.push_back(b.second);
        std::sort(cand.begin(), cand.end());
        for (auto& t : cand) {
            if (t > s.at(j.id).start) break;
            bool ok = std::none_of(busy.begin(), busy.end(),
                                   [&](auto& b) { return t < b.second && b.first < t + j.p; });
            if (ok) {
                s.place(j.id, i, t);
                break;
            }
        }
        done.push_back(j);
    }
}

}  // namespace msrs
