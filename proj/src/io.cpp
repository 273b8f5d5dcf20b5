#include "msrs/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace msrs {

using nlohmann::json;

ParseError::ParseError(const std::string& msg, int l, int c, std::string w)
    : std::runtime_error(msg), line(l), column(c), where(std::move(w)) {}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto at = msg.find("] "); at != std::string::npos) msg = msg.substr(at + 2);
        if (auto at = msg.find(", column "); at != std::string::npos)
            if (auto colon = msg.find(": ", at); colon != std::string::npos) msg = msg.substr(colon + 2);
        throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg, line, col);
    }
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what, 0, 0, where);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
    return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (d == static_cast<double>(static_cast<std::int64_t>(d))) return static_cast<std::int64_t>(d);
    }
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            std::int64_t r = std::stoll(v.get<std::string>(), &used);
            if (used == v.get<std::string>().size()) return r;
        } catch (const std::exception&) {
        }
    }
    fail(where, "expected an integer");
}

BigInt big_integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return BigInt(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    fail(where, "expected an integer");
}

json big_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

const json& array_of(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text, bool allow_zero) {
    json doc = parse_json(text);
    std::int64_t m = integer(member(doc, "machines", "$"), "machines");
    if (m < 1) fail("machines", "must be at least 1");
    if (m > 1'000'000) fail("machines", "unreasonably large");
    const json& cls = array_of(member(doc, "classes", "$"), "classes");
    std::vector<std::vector<std::int64_t>> sizes;
    for (std::size_t c = 0; c < cls.size(); ++c) {
        std::string wc = "classes[" + std::to_string(c) + "]";
        const json& row = array_of(cls[c], wc);
        if (row.empty()) fail(wc, "empty class");
        std::vector<std::int64_t> r;
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string wj = wc + "[" + std::to_string(k) + "]";
            std::int64_t p = integer(row[k], wj);
            if (p < 0 || (p == 0 && !allow_zero)) fail(wj, "processing time must be positive");
            r.push_back(p);
        }
        sizes.push_back(r);
    }
    try {
        return Instance::from_sizes(static_cast<int>(m), sizes, allow_zero);
    } catch (const ContractError& e) {
        fail("classes", e.what());
    }
}

std::string write_instance(const Instance& inst) {
    json doc;
    doc["machines"] = inst.m;
    doc["classes"] = inst.sizes();
    return doc.dump() + "\n";
}

Schedule parse_schedule(const std::string& text) {
    json doc = parse_json(text);
    const json& rows = array_of(member(doc, "schedule", "$"), "schedule");
    Schedule s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string w = "schedule[" + std::to_string(i) + "]";
        const json& r = rows[i];
        std::int64_t id = integer(member(r, "job", w), w + ".job");
        std::int64_t mach = integer(member(r, "machine", w), w + ".machine");
        BigInt num = big_integer(member(r, "start_num", w), w + ".start_num");
        BigInt den = big_integer(member(r, "start_den", w), w + ".start_den");
        if (den <= 0) fail(w + ".start_den", "denominator must be positive");
        if (mach < 0) fail(w + ".machine", "machine index must be >= 0");
        if (s.contains(static_cast<JobId>(id))) fail(w + ".job", "job listed twice");
        s.place(static_cast<JobId>(id), static_cast<int>(mach), Rat(num, den));
    }
    return s;
}

std::string write_schedule(const Schedule& s) {
    json rows = json::array();
    for (auto& [id, pl] : s.entries) {
        json r;
        r["job"] = id;
        r["machine"] = pl.machine;
        r["start_num"] = big_json(num_of(pl.start));
        r["start_den"] = big_json(den_of(pl.start));
        r["start"] = to_decimal(pl.start);
        rows.push_back(r);
    }
    json doc;
    doc["schedule"] = rows;
    return doc.dump(1) + "\n";
}

Formula322 parse_formula(const std::string& text) {
    json doc = parse_json(text);
    Formula322 f;
    f.vars = static_cast<int>(integer(member(doc, "vars", "$"), "vars"));
    const json& cls = array_of(member(doc, "clauses", "$"), "clauses");
    for (std::size_t c = 0; c < cls.size(); ++c) {
        std::string w = "clauses[" + std::to_string(c) + "]";
        const json& row = array_of(cls[c], w);
        if (row.size() != 3) fail(w, "a clause has exactly 3 literals");
        std::array<int, 3> cl{};
        for (int k = 0; k < 3; ++k) cl[k] = static_cast<int>(integer(row[k], w + "[" + std::to_string(k) + "]"));
        f.clauses.push_back(cl);
    }
    return f;
}

std::string write_formula(const Formula322& f) {
    json doc;
    doc["vars"] = f.vars;
    doc["clauses"] = f.clauses;
    return doc.dump() + "\n";
}

MultiResourceInstance parse_multires(const std::string& text) {
    json doc = parse_json(text);
    MultiResourceInstance inst;
    std::int64_t m = integer(member(doc, "machines", "$"), "machines");
    if (m < 1) fail("machines", "must be at least 1");
    inst.m = static_cast<int>(m);
    const json& jobs = array_of(member(doc, "jobs", "$"), "jobs");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::string w = "jobs[" + std::to_string(i) + "]";
        const json& r = jobs[i];
        MRJob j;
        j.id = static_cast<JobId>(integer(member(r, "id", w), w + ".id"));
        j.p = integer(member(r, "p", w), w + ".p");
        if (j.p <= 0) fail(w + ".p", "processing time must be positive");
        const json& res = array_of(member(r, "resources", w), w + ".resources");
        for (auto& name : res) {
            if (!name.is_string()) fail(w + ".resources", "resource ids are strings");
            j.resources.push_back(inst.resource_id(name.get<std::string>()));
        }
        if (r.contains("name") && r["name"].is_string()) j.name = r["name"].get<std::string>();
        inst.jobs.push_back(j);
    }
    return inst;
}

std::string write_multires(const MultiResourceInstance& inst) {
    json jobs = json::array();
    for (auto& j : inst.jobs) {
        json r;
        r["id"] = j.id;
        r["p"] = j.p;
        json res = json::array();
        for (int k : j.resources) res.push_back(inst.resource_names[k]);
        r["resources"] = res;
        if (!j.name.empty()) r["name"] = j.name;
        jobs.push_back(r);
    }
    json doc;
    doc["machines"] = inst.m;
    doc["jobs"] = jobs;
    return doc.dump(1) + "\n";
}

bool is_multires_text(const std::string& text) {
    json doc = parse_json(text);
    return doc.is_object() && doc.contains("jobs");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace msrs
