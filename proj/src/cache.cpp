#include "detmult/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "detmult/errors.hpp"
#include "json.hpp"

namespace detmult {

using nlohmann::json;

std::string ResultRecord::to_json_line() const {
    json j = {{"kind", std::string(to_string(key.kind))},
              {"m", key.m},
              {"n", key.n},
              {"t", key.t},
              {"quantity", key.quantity},
              {"value", value.to_string()},
              {"engine", engine},
              {"timestamp", timestamp},
              {"version", version}};
    return j.dump();
}

ResultRecord ResultRecord::from_json_line(const std::string& line) {
    try {
        const json j = json::parse(line);
        ResultRecord r;
        r.key.kind = parse_kind(j.at("kind").get<std::string>());
        r.key.m = j.at("m").get<int>();
        r.key.n = j.at("n").get<int>();
        r.key.t = j.at("t").get<int>();
        r.key.quantity = j.at("quantity").get<std::string>();
        r.value = Rational::parse(j.at("value").get<std::string>());
        r.engine = j.value("engine", "");
        r.timestamp = j.value("timestamp", "");
        r.version = j.value("version", "");
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad cache record: ") + e.what());
    }
}

ResultCache::ResultCache(std::string path, std::ostream& warn) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    for (long lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        try {
            records_.push_back(ResultRecord::from_json_line(line));
        } catch (const DomainError& e) {
            warn << "warning: " << path_ << ":" << lineno << ": skipping corrupt line (" << e.what() << ")\n";
        }
    }
}

std::optional<ResultRecord> ResultCache::find(const ResultKey& key) const {
    for (auto it = records_.rbegin(); it != records_.rend(); ++it)
        if (it->key == key) return *it;
    return std::nullopt;
}

void ResultCache::store(const ResultRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw DomainError("cannot write cache file " + path_);
    out << rec.to_json_line() << '\n';
    records_.push_back(rec);
}

std::string current_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detmult
