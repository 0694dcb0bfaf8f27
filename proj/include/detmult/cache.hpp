#pragma once

// Append-only JSON-lines store of computed multiplicities.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/problem.hpp"

namespace detmult {

struct ResultKey {
    KindType kind = KindType::generic;
    int m = 0;
    int n = 0;
    int t = 0;
    std::string quantity;  // "j", "eps" or "fiber"

    friend bool operator==(const ResultKey&, const ResultKey&) = default;
};

struct ResultRecord {
    ResultKey key;
    Rational value;
    std::string engine;
    std::string timestamp;
    std::string version;

    std::string to_json_line() const;
    /// Throws DomainError on malformed input.
    static ResultRecord from_json_line(const std::string& line);
};

class ResultCache {
public:
    /// Corrupt lines are skipped; a warning per line goes to `warn`.
    ResultCache(std::string path, std::ostream& warn);

    const std::string& path() const { return path_; }
    /// Latest record with this key.
    std::optional<ResultRecord> find(const ResultKey& key) const;
    /// Appends one whole line to the file and keeps it in memory.
    void store(const ResultRecord& rec);

private:
    std::string path_;
    std::vector<ResultRecord> records_;
};

std::string current_timestamp();

}  // namespace detmult
