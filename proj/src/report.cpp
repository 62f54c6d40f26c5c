#include "tetra/report.hpp"

namespace tetra {

bool Report::pass() const {
    for (const auto& [name, ok] : flags)
        if (!ok) return false;
    return true;
}

bool Report::flag(const std::string& name) const {
    for (const auto& [n, ok] : flags)
        if (n == name) return ok;
    throw InputError("unknown report flag: " + name);
}

void Report::set(const std::string& name, bool ok) {
    for (auto& [n, v] : flags)
        if (n == name) {
            v = v && ok;
            return;
        }
    flags.emplace_back(name, ok);
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& [n, ok] : other.flags) flags.emplace_back(prefix + n, ok);
    for (Violation v : other.violations) {
        v.flag = prefix + v.flag;
        violations.push_back(std::move(v));
    }
}

std::vector<long> decode_index(long idx, const std::vector<long>& dims) {
    std::vector<long> tuple(dims.size());
    for (int i = int(dims.size()) - 1; i >= 0; --i) {
        tuple[i] = idx % dims[i];
        idx /= dims[i];
    }
    return tuple;
}

bool report_matrix_eq(Report& rep, const std::string& flag, const Mat& lhs, const Mat& rhs,
                      const std::vector<long>& col_dims) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.set(flag, false);
        rep.add_violation({flag, {}, "shape mismatch"});
        return false;
    }
    constexpr int kMaxPerFlag = 4;
    int found = 0;
    for (long j = 0; j < lhs.cols() && found < kMaxPerFlag; ++j) {
        std::string diff;
        for (long i = 0; i < lhs.rows(); ++i) {
            if (lhs.at(i, j) == rhs.at(i, j)) continue;
            if (!diff.empty()) diff += ", ";
            diff += "row " + std::to_string(i) + ": " + rat_to_string(lhs.at(i, j) - rhs.at(i, j));
        }
        if (!diff.empty()) {
            rep.add_violation({flag, col_dims.empty() ? std::vector<long>{j} : decode_index(j, col_dims), diff});
            ++found;
        }
    }
    rep.set(flag, found == 0);
    return found == 0;
}

}  // namespace tetra
