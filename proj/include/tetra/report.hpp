#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tetra/mat.hpp"

namespace tetra {

/// One failed identity, pinned to the basis tuple (decoded column index)
/// where it fails, with the offending difference entries.
struct Violation {
    std::string flag;
    std::vector<long> basis;
    std::string detail;
};

struct Report {
    std::vector<std::pair<std::string, bool>> flags;
    std::vector<Violation> violations;
    double elapsed_ms = 0;

    bool pass() const;
    bool flag(const std::string& name) const;
    void set(const std::string& name, bool ok);
    void add_violation(Violation v) { violations.push_back(std::move(v)); }
    void merge(const Report& other, const std::string& prefix = "");
};

/// Records lhs == rhs under `flag`; on mismatch decodes differing columns as
/// mixed-radix tuples over col_dims (at most a handful per flag).
bool report_matrix_eq(Report& rep, const std::string& flag, const Mat& lhs, const Mat& rhs,
                      const std::vector<long>& col_dims);

std::vector<long> decode_index(long idx, const std::vector<long>& dims);

}  // namespace tetra
