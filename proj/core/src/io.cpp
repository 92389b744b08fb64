#include "icsched/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "icsched/errors.hpp"
#include "json.hpp"

namespace ics {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON");
    return doc;
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& what) {
    if (!obj.is_object()) throw ParseError(what + " must be a JSON object");
    for (const char* key : keys)
        if (!obj.contains(key)) throw ParseError(what + " missing field '" + key + "'");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(keys.begin(), keys.end(),
                         [&](const char* k) { return key == k; }) == keys.end())
            throw ParseError(what + " has unknown field '" + key + "'");
    }
}

std::int64_t require_int(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
    return value.get<std::int64_t>();
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    const json doc = parse_document(json_text);
    require_keys(doc, {"machines", "jobs"}, "instance");
    if (!doc["jobs"].is_array()) throw ParseError("'jobs' must be an array");

    Instance instance;
    const std::int64_t machines = require_int(doc["machines"], "'machines'");
    if (machines < INT32_MIN || machines > INT32_MAX)
        throw ParseError("'machines' out of range");
    instance.machines = static_cast<int>(machines);

    for (const auto& entry : doc["jobs"]) {
        require_keys(entry, {"id", "release", "deadline", "processing"}, "job");
        Job j;
        j.id = require_int(entry["id"], "job 'id'");
        j.release = require_int(entry["release"], "job 'release'");
        j.deadline = require_int(entry["deadline"], "job 'deadline'");
        j.processing = require_int(entry["processing"], "job 'processing'");
        instance.jobs.push_back(j);
    }
    return instance;
}

std::string instance_to_json(const Instance& instance, int indent) {
    json jobs = json::array();
    for (const Job& j : instance.jobs)
        jobs.push_back({{"id", j.id},
                        {"release", j.release},
                        {"deadline", j.deadline},
                        {"processing", j.processing}});
    const json doc{{"machines", instance.machines}, {"jobs", jobs}};
    return doc.dump(indent) + "\n";
}

BinPackingInstance parse_bin_packing(const std::string& json_text) {
    const json doc = parse_document(json_text);
    require_keys(doc, {"volume", "items", "bins"}, "bin-packing instance");
    if (!doc["items"].is_array()) throw ParseError("'items' must be an array");

    BinPackingInstance bp;
    bp.volume = require_int(doc["volume"], "'volume'");
    const std::int64_t bins = require_int(doc["bins"], "'bins'");
    if (bins < INT32_MIN || bins > INT32_MAX) throw ParseError("'bins' out of range");
    bp.bins = static_cast<int>(bins);
    for (const auto& item : doc["items"])
        bp.items.push_back(require_int(item, "item"));
    return bp;
}

std::string bin_packing_to_json(const BinPackingInstance& bp, int indent) {
    const json doc{{"volume", bp.volume}, {"items", bp.items}, {"bins", bp.bins}};
    return doc.dump(indent) + "\n";
}

std::string schedule_to_json(const Schedule& schedule, int indent) {
    std::vector<Placement> sorted = schedule.placements;
    std::sort(sorted.begin(), sorted.end(), [](const Placement& a, const Placement& b) {
        if (a.machine != b.machine) return a.machine < b.machine;
        if (a.start != b.start) return a.start < b.start;
        return a.job < b.job;
    });
    json out = json::array();
    for (const Placement& p : sorted)
        out.push_back({{"job", p.job}, {"machine", p.machine}, {"start", p.start}});
    return out.dump(indent) + "\n";
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ParseError("write to '" + path + "' failed");
}

}  // namespace ics
